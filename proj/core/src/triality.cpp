#include <magicsq/triality.hpp>

#include <map>
#include <memory>
#include <stdexcept>

namespace magicsq {

Triality::Triality(QMatrix a_, QMatrix b_, QMatrix c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

Triality::Triality(int nu) : a(nu, nu), b(nu, nu), c(nu, nu) {}

Triality Triality::operator+(const Triality& rhs) const {
    return {a + rhs.a, b + rhs.b, c + rhs.c};
}

Triality Triality::operator-(const Triality& rhs) const {
    return {a - rhs.a, b - rhs.b, c - rhs.c};
}

Triality Triality::scaled_by(const Rational& s) const {
    return {a.scaled_by(s), b.scaled_by(s), c.scaled_by(s)};
}

bool Triality::operator==(const Triality& rhs) const {
    return a == rhs.a && b == rhs.b && c == rhs.c;
}

bool Triality::is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

QVector Triality::flatten() const {
    QVector out;
    out.reserve(3 * a.rows() * a.cols());
    for (const QMatrix* m : {&a, &b, &c}) {
        QVector f = m->flatten();
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

Triality Triality::from_flat(const QVector& v, int nu) {
    const int sq = nu * nu;
    QVector va(v.begin(), v.begin() + sq);
    QVector vb(v.begin() + sq, v.begin() + 2 * sq);
    QVector vc(v.begin() + 2 * sq, v.begin() + 3 * sq);
    return {QMatrix::from_flat(va, nu, nu), QMatrix::from_flat(vb, nu, nu),
            QMatrix::from_flat(vc, nu, nu)};
}

Triality tri_commutator(const Triality& s, const Triality& t) {
    return {commutator(s.a, t.a), commutator(s.b, t.b), commutator(s.c, t.c)};
}

QMatrix bar_map(const CompositionAlgebra& k, const QMatrix& m) {
    const QMatrix lambda = k.conj_matrix();
    return lambda * m * lambda;
}

namespace {

bool norm_antisymmetric(const CompositionAlgebra& k, const QMatrix& m) {
    const std::vector<int> g = k.metric();
    for (int i = 0; i < k.dim(); ++i)
        for (int j = 0; j < k.dim(); ++j)
            if (Rational(g[i]) * m.at(i, j) + Rational(g[j]) * m.at(j, i) != Rational(0))
                return false;
    return true;
}

}  // namespace

bool is_triality(const CompositionAlgebra& k, const Triality& t) {
    if (!norm_antisymmetric(k, t.a) || !norm_antisymmetric(k, t.b) ||
        !norm_antisymmetric(k, t.c))
        return false;
    for (int x = 0; x < k.dim(); ++x)
        for (int y = 0; y < k.dim(); ++y) {
            const QVector lhs = t.a.apply(k.mul(k.unit(x), k.unit(y)));
            const QVector rhs = vec_add(k.mul(k.unit(x), t.b.column(y)),
                                        k.mul(t.c.column(x), k.unit(y)));
            if (lhs != rhs) return false;
        }
    return true;
}

Triality theta(const CompositionAlgebra& k, const Triality& t) {
    return {bar_map(k, t.b), t.c, bar_map(k, t.a)};
}

Triality t_from_dab(const CompositionAlgebra& k, const QMatrix& d,
                    const QVector& a, const QVector& b) {
    if (!k.is_derivation(d))
        throw std::invalid_argument("first slot of the triple parametrization must be a derivation");
    if (!a[0].is_zero() || !b[0].is_zero())
        throw std::invalid_argument("triple parametrization takes imaginary elements");
    const QMatrix la = k.L_matrix(a), ra = k.R_matrix(a);
    const QMatrix lb = k.L_matrix(b), rb = k.R_matrix(b);
    return {d + la - rb, d - la - lb - rb, d + la + ra + rb};
}

TriDecomposition decompose_tri(const CompositionAlgebra& k, const Triality& t) {
    const QVector b1 = t.b.column(0);
    const QVector c1 = t.c.column(0);
    // B(1) = -a - 2b and C(1) = 2a + b invert to the combinations below.
    QVector a(k.dim()), b(k.dim());
    const Rational third(1, 3);
    for (int i = 0; i < k.dim(); ++i) {
        a[i] = (b1[i] + Rational(2) * c1[i]) * third;
        b[i] = -(Rational(2) * b1[i] + c1[i]) * third;
    }
    const QMatrix d = t.a - k.L_matrix(a) + k.R_matrix(b);
    if (!k.is_derivation(d))
        throw std::runtime_error("triple does not decompose over a derivation; not a valid triality element");
    return {d, std::move(a), std::move(b)};
}

Triality t_xy(const CompositionAlgebra& k, const QVector& x, const QVector& y) {
    const QVector xb = k.conj(x), yb = k.conj(y);
    const QMatrix rx = k.R_matrix(x), ry = k.R_matrix(y);
    const QMatrix rxb = k.R_matrix(xb), ryb = k.R_matrix(yb);
    const QMatrix lx = k.L_matrix(x), ly = k.L_matrix(y);
    const QMatrix lxb = k.L_matrix(xb), lyb = k.L_matrix(yb);
    return {k.S_xy_full(x, y).scaled_by(Rational(4)), ry * rxb - rx * ryb,
            ly * lxb - lx * lyb};
}

QMatrix t_component(const CompositionAlgebra& k, const Triality& t, int i) {
    switch (i) {
        case 0:
            return t.a;
        case 1:
            return bar_map(k, t.b);
        case 2:
            return bar_map(k, t.c);
        default:
            throw std::out_of_range("triality component index");
    }
}

TrialityAlgebra::TrialityAlgebra(const CompositionAlgebra* k)
    : k_(k), solver_(3 * k->dim() * k->dim()) {
    const int nu = k_->dim();
    const int sq = nu * nu;
    const std::vector<int> g = k_->metric();

    // Unknown flat layout [A | B | C].  Antisymmetry equations first, then
    // the triality identity; each identity equation couples one A entry
    // with one B and one C entry because unit products are signed units.
    KernelAccumulator acc(3 * sq);
    {
        std::vector<SparseVec> eqs;
        for (int blk = 0; blk < 3; ++blk)
            for (int i = 0; i < nu; ++i)
                for (int j = i; j < nu; ++j) {
                    SparseVec eq;
                    eq.push_back({blk * sq + i * nu + j, Rational(g[i])});
                    eq.push_back({blk * sq + j * nu + i, Rational(g[j])});
                    eqs.push_back(std::move(eq));
                }
        acc.add_equations(eqs);
    }

    // inv_l[x][s] = r with index(x r) = s; inv_r[y][s] = r with index(r y) = s.
    std::vector<std::vector<int>> inv_l(nu, std::vector<int>(nu));
    std::vector<std::vector<int>> inv_r(nu, std::vector<int>(nu));
    for (int x = 0; x < nu; ++x)
        for (int r = 0; r < nu; ++r) {
            inv_l[x][k_->mul_index(x, r)] = r;
            inv_r[x][k_->mul_index(r, x)] = r;
        }

    for (int x = 0; x < nu; ++x)
        for (int y = 0; y < nu; ++y) {
            const int m = k_->mul_index(x, y);
            const int sgn = k_->mul_sign(x, y);
            std::vector<SparseVec> eqs;
            eqs.reserve(nu);
            for (int s = 0; s < nu; ++s) {
                SparseVec eq;
                eq.push_back({s * nu + m, Rational(sgn)});
                const int rb = inv_l[x][s];
                eq.push_back({sq + rb * nu + y, Rational(-k_->mul_sign(x, rb))});
                const int rc = inv_r[y][s];
                eq.push_back({2 * sq + rc * nu + x, Rational(-k_->mul_sign(rc, y))});
                eqs.push_back(std::move(eq));
            }
            acc.add_equations(eqs);
        }

    for (const QVector& v : acc.dense_basis()) {
        basis_.push_back(Triality::from_flat(v, nu));
        solver_.add(v);
    }
    table_.assign(basis_.size() * basis_.size(), SparseVec{});
    table_done_.assign(basis_.size() * basis_.size(), false);
}

const TrialityAlgebra& TrialityAlgebra::get(AlgName k) {
    static std::map<AlgName, std::unique_ptr<TrialityAlgebra>> cache;
    auto it = cache.find(k);
    if (it == cache.end()) {
        it = cache
                 .emplace(k, std::unique_ptr<TrialityAlgebra>(
                                 new TrialityAlgebra(&CompositionAlgebra::get(k))))
                 .first;
    }
    return *it->second;
}

std::optional<QVector> TrialityAlgebra::try_express(const Triality& t) const {
    return solver_.express(t.flatten());
}

QVector TrialityAlgebra::express(const Triality& t) const {
    auto c = try_express(t);
    if (!c) throw std::invalid_argument("triple lies outside the triality algebra");
    return *c;
}

const SparseVec& TrialityAlgebra::bracket_basis(int i, int j) const {
    const int n = dim();
    const int idx = i * n + j;
    if (!table_done_[idx]) {
        const Triality br = tri_commutator(basis_[i], basis_[j]);
        table_[idx] = to_sparse(express(br));
        table_done_[idx] = true;
    }
    return table_[idx];
}

}  // namespace magicsq
