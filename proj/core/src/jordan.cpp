#include <magicsq/jordan.hpp>

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace magicsq {

KMatrix::KMatrix(const CompositionAlgebra* alg, int n)
    : alg_(alg), n_(n), entries_(n * n, QVector(alg->dim())) {}

KMatrix KMatrix::identity(const CompositionAlgebra* alg, int n) {
    KMatrix m(alg, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = alg->unit(0);
    return m;
}

KMatrix KMatrix::operator+(const KMatrix& rhs) const {
    KMatrix out(alg_, n_);
    for (int i = 0; i < n_ * n_; ++i)
        out.entries_[i] = vec_add(entries_[i], rhs.entries_[i]);
    return out;
}

KMatrix KMatrix::operator-(const KMatrix& rhs) const {
    KMatrix out(alg_, n_);
    for (int i = 0; i < n_ * n_; ++i)
        out.entries_[i] = vec_sub(entries_[i], rhs.entries_[i]);
    return out;
}

KMatrix KMatrix::operator-() const { return scaled_by(Rational(-1)); }

KMatrix KMatrix::operator*(const KMatrix& rhs) const {
    KMatrix out(alg_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) {
            QVector acc(alg_->dim());
            for (int m = 0; m < n_; ++m)
                acc = vec_add(acc, alg_->mul(at(r, m), rhs.at(m, c)));
            out.at(r, c) = std::move(acc);
        }
    return out;
}

KMatrix KMatrix::scaled_by(const Rational& c) const {
    KMatrix out(alg_, n_);
    for (int i = 0; i < n_ * n_; ++i) out.entries_[i] = scaled(entries_[i], c);
    return out;
}

bool KMatrix::operator==(const KMatrix& rhs) const {
    return n_ == rhs.n_ && entries_ == rhs.entries_;
}

KMatrix KMatrix::conj_transpose() const {
    KMatrix out(alg_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) out.at(c, r) = alg_->conj(at(r, c));
    return out;
}

bool KMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!is_zero_vector(e)) return false;
    return true;
}

bool KMatrix::is_hermitian() const { return *this == conj_transpose(); }

bool KMatrix::is_antihermitian() const {
    return (*this + conj_transpose()).is_zero();
}

QVector KMatrix::trace() const {
    QVector acc(alg_->dim());
    for (int i = 0; i < n_; ++i) acc = vec_add(acc, at(i, i));
    return acc;
}

Rational KMatrix::re_trace() const {
    Rational acc;
    for (int i = 0; i < n_; ++i) acc += at(i, i)[0];
    return acc;
}

KMatrix kcommutator(const KMatrix& a, const KMatrix& b) {
    return a * b - b * a;
}

KMatrix kanticommutator(const KMatrix& a, const KMatrix& b) {
    return a * b + b * a;
}

std::vector<KMatrix> antihermitian_basis(const CompositionAlgebra& k, int n,
                                         bool traceless) {
    std::vector<KMatrix> out;
    const int nu = k.dim();
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
            for (int b = 0; b < nu; ++b) {
                KMatrix m(&k, n);
                m.at(r, c) = k.unit(b);
                m.at(c, r) = scaled(k.conj(k.unit(b)), Rational(-1));
                out.push_back(std::move(m));
            }
    if (traceless) {
        for (int d = 1; d < n; ++d)
            for (int b = 1; b < nu; ++b) {
                KMatrix m(&k, n);
                m.at(0, 0) = k.unit(b);
                m.at(d, d) = scaled(k.unit(b), Rational(-1));
                out.push_back(std::move(m));
            }
    } else {
        for (int d = 0; d < n; ++d)
            for (int b = 1; b < nu; ++b) {
                KMatrix m(&k, n);
                m.at(d, d) = k.unit(b);
                out.push_back(std::move(m));
            }
    }
    return out;
}

JordanAlgebra::JordanAlgebra(const CompositionAlgebra* k, int n)
    : k_(k), n_(n), dim_(n + k->dim() * n * (n - 1) / 2) {
    if (n != 2 && n != 3)
        throw std::invalid_argument("hermitian Jordan algebras built only for n = 2, 3");
    build_table();
}

const JordanAlgebra& JordanAlgebra::get(AlgName k, int n) {
    static std::map<std::pair<AlgName, int>, std::unique_ptr<JordanAlgebra>> cache;
    auto key = std::make_pair(k, n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache
                 .emplace(key, std::unique_ptr<JordanAlgebra>(
                                   new JordanAlgebra(&CompositionAlgebra::get(k), n)))
                 .first;
    }
    return *it->second;
}

std::string JordanAlgebra::basis_label(int idx) const {
    const int nu = k_->dim();
    std::ostringstream os;
    if (n_ == 3) {
        if (idx < 3) {
            os << "e" << (idx + 1);
        } else {
            os << "P" << ((idx - 3) / nu + 1) << "(e" << (idx - 3) % nu << ")";
        }
    } else {
        if (idx == 0)
            os << "I";
        else if (idx == 1)
            os << "E";
        else
            os << "P(e" << (idx - 2) << ")";
    }
    return os.str();
}

KMatrix JordanAlgebra::basis_matrix(int idx) const {
    const int nu = k_->dim();
    KMatrix m(k_, n_);
    if (n_ == 3) {
        if (idx < 3) {
            m.at(idx, idx) = k_->unit(0);
        } else {
            const int i = (idx - 3) / nu;
            const int b = (idx - 3) % nu;
            const int j = (i + 1) % 3;
            const int kk = (i + 2) % 3;
            m.at(j, kk) = k_->unit(b);
            m.at(kk, j) = k_->conj(k_->unit(b));
        }
    } else {
        if (idx == 0) {
            m.at(0, 0) = k_->unit(0);
            m.at(1, 1) = k_->unit(0);
        } else if (idx == 1) {
            m.at(0, 0) = k_->unit(0);
            m.at(1, 1) = scaled(k_->unit(0), Rational(-1));
        } else {
            const int b = idx - 2;
            m.at(0, 1) = k_->unit(b);
            m.at(1, 0) = k_->conj(k_->unit(b));
        }
    }
    return m;
}

KMatrix JordanAlgebra::to_matrix(const QVector& coords) const {
    KMatrix m(k_, n_);
    for (int i = 0; i < dim_; ++i) {
        if (coords[i].is_zero()) continue;
        m = m + basis_matrix(i).scaled_by(coords[i]);
    }
    return m;
}

QVector JordanAlgebra::from_matrix(const KMatrix& m) const {
    if (!m.is_hermitian())
        throw std::invalid_argument("matrix is not hermitian over the coefficient algebra");
    const int nu = k_->dim();
    QVector coords(dim_);
    if (n_ == 3) {
        for (int i = 0; i < 3; ++i) coords[i] = m.at(i, i)[0];
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3;
            const int kk = (i + 2) % 3;
            for (int b = 0; b < nu; ++b) coords[3 + i * nu + b] = m.at(j, kk)[b];
        }
    } else {
        const Rational alpha = m.at(0, 0)[0];
        const Rational beta = m.at(1, 1)[0];
        coords[0] = (alpha + beta) / Rational(2);
        coords[1] = (alpha - beta) / Rational(2);
        for (int b = 0; b < nu; ++b) coords[2 + b] = m.at(0, 1)[b];
    }
    return coords;
}

void JordanAlgebra::build_table() {
    table_.assign(dim_ * dim_, SparseVec{});
    std::vector<KMatrix> basis;
    basis.reserve(dim_);
    for (int i = 0; i < dim_; ++i) basis.push_back(basis_matrix(i));
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            SparseVec s = to_sparse(from_matrix(kanticommutator(basis[i], basis[j])));
            table_[i * dim_ + j] = s;
            table_[j * dim_ + i] = std::move(s);
        }
}

QVector JordanAlgebra::product(const QVector& u, const QVector& v) const {
    QVector out(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            const Rational scale = u[i] * v[j];
            for (const auto& [k, c] : table_[i * dim_ + j]) out[k] += scale * c;
        }
    }
    return out;
}

QVector JordanAlgebra::identity_coords() const {
    QVector id(dim_);
    if (n_ == 3) {
        id[0] = id[1] = id[2] = Rational(1);
    } else {
        id[0] = Rational(1);
    }
    return id;
}

Rational JordanAlgebra::trace(const QVector& u) const {
    if (n_ == 3) return u[0] + u[1] + u[2];
    return Rational(2) * u[0];
}

Rational JordanAlgebra::trace_form(const QVector& u, const QVector& v) const {
    return trace(product(u, v));
}

QVector JordanAlgebra::star(const QVector& u, const QVector& v) const {
    QVector p = product(u, v);
    const Rational t = trace(p) / Rational(n_);
    if (n_ == 3) {
        p[0] -= t;
        p[1] -= t;
        p[2] -= t;
    } else {
        p[0] -= t;
    }
    return p;
}

std::vector<QVector> JordanAlgebra::traceless_basis() const {
    std::vector<QVector> out;
    if (n_ == 3) {
        for (int i = 1; i < 3; ++i) {
            QVector v(dim_);
            v[i] = Rational(1);
            v[0] = Rational(-1);
            out.push_back(std::move(v));
        }
        for (int i = 3; i < dim_; ++i) {
            QVector v(dim_);
            v[i] = Rational(1);
            out.push_back(std::move(v));
        }
    } else {
        for (int i = 1; i < dim_; ++i) {
            QVector v(dim_);
            v[i] = Rational(1);
            out.push_back(std::move(v));
        }
    }
    return out;
}

QMatrix JordanAlgebra::L_op(const QVector& u) const {
    QMatrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            for (const auto& [k, c] : table_[i * dim_ + j]) m.at(k, j) += u[i] * c;
    }
    return m;
}

QMatrix JordanAlgebra::L_op_basis(int idx) const {
    QMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (const auto& [k, c] : table_[idx * dim_ + j]) m.at(k, j) = c;
    return m;
}

QMatrix JordanAlgebra::C_op(const KMatrix& a) const {
    if (!a.is_antihermitian())
        throw std::invalid_argument("commutation operator requires an antihermitian matrix");
    QMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        const KMatrix bj = basis_matrix(j);
        const QVector col = from_matrix(a * bj - bj * a);
        for (int k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

KMatrix JordanAlgebra::X_matrix(int i, const QVector& x) const {
    if (n_ != 3) throw std::logic_error("X_matrix is defined for the 3x3 algebra only");
    const int j = (i + 1) % 3;
    const int kk = (i + 2) % 3;
    KMatrix m(k_, 3);
    m.at(j, kk) = scaled(x, Rational(-1));
    m.at(kk, j) = k_->conj(x);
    return m;
}

QMatrix JordanAlgebra::F_op(int i, const QVector& x) const {
    return C_op(X_matrix(i, x));
}

QMatrix JordanAlgebra::elementwise_op(const QMatrix& s_on_k) const {
    QMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        KMatrix bj = basis_matrix(j);
        KMatrix image(k_, n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) image.at(r, c) = s_on_k.apply(bj.at(r, c));
        const QVector col = from_matrix(image);
        for (int k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

bool JordanAlgebra::is_derivation(const QMatrix& d) const {
    // Applies D to the product of basis elements i, j via the table and
    // compares with the Leibniz expansion.
    for (int i = 0; i < dim_; ++i) {
        const QVector di = d.column(i);
        for (int j = i; j < dim_; ++j) {
            const QVector dj = d.column(j);
            QVector lhs(dim_);
            for (const auto& [k, c] : table_[i * dim_ + j])
                add_scaled(lhs, c, d.column(k));
            QVector rhs(dim_);
            for (int r = 0; r < dim_; ++r) {
                if (!di[r].is_zero())
                    for (const auto& [k, c] : table_[r * dim_ + j])
                        rhs[k] += di[r] * c;
                if (!dj[r].is_zero())
                    for (const auto& [k, c] : table_[i * dim_ + r])
                        rhs[k] += dj[r] * c;
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

const std::vector<QMatrix>& JordanAlgebra::derivation_basis() const {
    if (!der_cache_.empty()) return der_cache_;
    // Unknown operator D as a flattened dim x dim matrix; one batch of
    // coordinate equations per basis pair keeps the elimination incremental.
    // prof[j][s] lists the pairs (r, c) with coefficient c of basis element
    // s in the product r.j.
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> prof(
        dim_, std::vector<std::vector<std::pair<int, Rational>>>(dim_));
    for (int r = 0; r < dim_; ++r)
        for (int j = 0; j < dim_; ++j)
            for (const auto& [s, c] : table_[r * dim_ + j])
                prof[j][s].push_back({r, c});

    KernelAccumulator acc(dim_ * dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            std::vector<SparseVec> eqs;
            eqs.reserve(dim_);
            for (int s = 0; s < dim_; ++s) {
                SparseVec eq;
                for (const auto& [k, c] : table_[i * dim_ + j])
                    eq.push_back({s * dim_ + k, c});
                for (const auto& [r, c] : prof[j][s])
                    eq.push_back({r * dim_ + i, -c});
                for (const auto& [r, c] : prof[i][s])
                    eq.push_back({r * dim_ + j, -c});
                if (!eq.empty()) eqs.push_back(std::move(eq));
            }
            acc.add_equations(eqs);
        }

    for (const QVector& v : acc.dense_basis())
        der_cache_.push_back(QMatrix::from_flat(v, dim_, dim_));
    return der_cache_;
}

bool MatrixIdentityReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

// The map z -> sum over matrix slots of the associator [x_ij, y_ji, z],
// as a matrix acting on coefficient-algebra coordinates.
QMatrix slot_associator_map(const CompositionAlgebra& k, const KMatrix& x,
                            const KMatrix& y) {
    const int nu = k.dim();
    QMatrix m(nu, nu);
    for (int c = 0; c < nu; ++c) {
        QVector acc(nu);
        const QVector z = k.unit(c);
        for (int i = 0; i < x.n(); ++i)
            for (int j = 0; j < x.n(); ++j)
                acc = vec_add(acc, k.associator(x.at(i, j), y.at(j, i), z));
        for (int r = 0; r < nu; ++r) m.at(r, c) = acc[r];
    }
    return m;
}

bool is_norm_antisymmetric(const CompositionAlgebra& k, const QMatrix& s) {
    const std::vector<int> g = k.metric();
    const int nu = k.dim();
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nu; ++j)
            if (Rational(g[i]) * s.at(i, j) + Rational(g[j]) * s.at(j, i) !=
                Rational(0))
                return false;
    return true;
}

// Checks M(x, y) == sign * E_J(x, y) across all pairs, resolving the sign
// on the first pair with a nonzero correction term and reporting it.
struct SignResolver {
    std::optional<int> sign;
    bool consistent = true;
    std::string failure;

    bool feed(const QMatrix& diff, const QMatrix& corr, const std::string& where) {
        const QMatrix zero(diff.rows(), diff.cols());
        if (corr == zero) {
            if (!(diff == zero)) {
                consistent = false;
                failure = where + ": nonzero difference with vanishing correction";
                return false;
            }
            return true;
        }
        int s = 0;
        if (diff == corr)
            s = 1;
        else if (diff == -corr)
            s = -1;
        else {
            consistent = false;
            failure = where + ": difference is not +/- the correction term";
            return false;
        }
        if (!sign) {
            sign = s;
        } else if (*sign != s) {
            consistent = false;
            failure = where + ": correction sign flips across pairs";
            return false;
        }
        return true;
    }

    std::string describe() const {
        if (!consistent) return failure;
        if (!sign) return "correction term vanishes identically (associative coefficients)";
        return std::string("correction term enters with sign ") +
               (*sign > 0 ? "+1" : "-1");
    }
};

}  // namespace

MatrixIdentityReport verify_matrix_identities(AlgName kname) {
    const CompositionAlgebra& K = CompositionAlgebra::get(kname);
    const JordanAlgebra& J3 = JordanAlgebra::get(kname, 3);
    const JordanAlgebra& J2 = JordanAlgebra::get(kname, 2);
    MatrixIdentityReport rep;
    rep.k = kname;

    const std::vector<KMatrix> a3t = antihermitian_basis(K, 3, true);
    std::vector<QMatrix> c_ops;
    c_ops.reserve(a3t.size());
    for (const KMatrix& x : a3t) c_ops.push_back(J3.C_op(x));

    {
        IdentityCheck c{"traceless antihermitian commutation derives the 3x3 product",
                        true, ""};
        for (std::size_t i = 0; i < a3t.size(); ++i)
            if (!J3.is_derivation(c_ops[i])) {
                c.passed = false;
                c.detail = "fails for generator " + std::to_string(i);
                break;
            }
        rep.checks.push_back(std::move(c));
    }

    {
        IdentityCheck c{"slot associator correction is norm-antisymmetric", true, ""};
        for (std::size_t i = 0; i < a3t.size() && c.passed; ++i)
            for (std::size_t j = i + 1; j < a3t.size(); ++j) {
                if (!is_norm_antisymmetric(K, slot_associator_map(K, a3t[i], a3t[j]))) {
                    c.passed = false;
                    c.detail = "fails for generator pair (" + std::to_string(i) + ", " +
                               std::to_string(j) + ")";
                    break;
                }
            }
        rep.checks.push_back(std::move(c));
    }

    {
        IdentityCheck c{"second-order commutation rule (3x3)", true, ""};
        SignResolver res;
        try {
            for (std::size_t i = 0; i < a3t.size() && res.consistent; ++i)
                for (std::size_t j = i + 1; j < a3t.size(); ++j) {
                    const QMatrix diff = commutator(c_ops[i], c_ops[j]) -
                                         J3.C_op(kcommutator(a3t[i], a3t[j]));
                    const QMatrix corr =
                        J3.elementwise_op(slot_associator_map(K, a3t[i], a3t[j]));
                    if (!res.feed(diff, corr,
                                  "pair (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")"))
                        break;
                }
            c.passed = res.consistent;
            c.detail = res.describe();
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = e.what();
        }
        rep.checks.push_back(std::move(c));
    }

    {
        IdentityCheck c{"multiplication-operator commutator rule (3x3)", true, ""};
        SignResolver res;
        std::vector<QMatrix> l_ops;
        l_ops.reserve(J3.dim());
        for (int i = 0; i < J3.dim(); ++i) l_ops.push_back(J3.L_op_basis(i));
        std::vector<KMatrix> h_basis;
        h_basis.reserve(J3.dim());
        for (int i = 0; i < J3.dim(); ++i) h_basis.push_back(J3.basis_matrix(i));
        try {
            for (int i = 0; i < J3.dim() && res.consistent; ++i)
                for (int j = i + 1; j < J3.dim(); ++j) {
                    const QMatrix diff = commutator(l_ops[i], l_ops[j]) -
                                         J3.C_op(kcommutator(h_basis[i], h_basis[j]));
                    const QMatrix corr = J3.elementwise_op(
                        slot_associator_map(K, h_basis[i], h_basis[j]));
                    if (!res.feed(diff, corr,
                                  "pair (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")"))
                        break;
                }
            c.passed = res.consistent;
            c.detail = res.describe();
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = e.what();
        }
        rep.checks.push_back(std::move(c));
    }

    const std::vector<KMatrix> a2full = antihermitian_basis(K, 2, false);

    {
        IdentityCheck c{"any antihermitian commutation derives the 2x2 product", true, ""};
        for (std::size_t i = 0; i < a2full.size(); ++i)
            if (!J2.is_derivation(J2.C_op(a2full[i]))) {
                c.passed = false;
                c.detail = "fails for generator " + std::to_string(i);
                break;
            }
        rep.checks.push_back(std::move(c));
    }

    {
        IdentityCheck c{"bordered 3x3 embedding reproduces the 2x2 rule", true, ""};
        std::vector<KMatrix> h2;
        for (int i = 0; i < J2.dim(); ++i) h2.push_back(J2.basis_matrix(i));
        for (std::size_t ai = 0; ai < a2full.size() && c.passed; ++ai) {
            KMatrix ab(&K, 3);
            for (int r = 0; r < 2; ++r)
                for (int s = 0; s < 2; ++s) ab.at(r, s) = a2full[ai].at(r, s);
            ab.at(2, 2) = scaled(a2full[ai].trace(), Rational(-1));
            for (std::size_t xi = 0; xi < h2.size() && c.passed; ++xi)
                for (std::size_t yi = xi; yi < h2.size(); ++yi) {
                    auto border_h = [&](const KMatrix& h) {
                        KMatrix out(&K, 3);
                        for (int r = 0; r < 2; ++r)
                            for (int s = 0; s < 2; ++s) out.at(r, s) = h.at(r, s);
                        out.at(2, 2) = K.unit(0);
                        return out;
                    };
                    const KMatrix xb = border_h(h2[xi]);
                    const KMatrix yb = border_h(h2[yi]);
                    const KMatrix lhs = kcommutator(ab, kanticommutator(xb, yb));
                    const KMatrix rhs = kanticommutator(kcommutator(ab, xb), yb) +
                                        kanticommutator(xb, kcommutator(ab, yb));
                    if (!(lhs == rhs)) {
                        c.passed = false;
                        c.detail = "fails for generator " + std::to_string(ai) +
                                   " on pair (" + std::to_string(xi) + ", " +
                                   std::to_string(yi) + ")";
                        break;
                    }
                }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        IdentityCheck c{"trace-zero requirement at 3x3", true, ""};
        const std::vector<KMatrix> a3full = antihermitian_basis(K, 3, false);
        bool violation = false;
        for (const KMatrix& a : a3full) {
            if (is_zero_vector(a.trace())) continue;
            if (!J3.is_derivation(J3.C_op(a))) {
                violation = true;
                break;
            }
        }
        const bool associative = (kname != AlgName::O && kname != AlgName::Os);
        if (associative) {
            c.passed = !violation;
            c.detail = violation
                           ? "unexpected failure for a traceful matrix"
                           : "rule extends to traceful matrices (associative coefficients)";
        } else {
            c.passed = violation;
            c.detail = violation
                           ? "traceful counterexample found, as required"
                           : "no traceful counterexample found; obstruction missing";
        }
        rep.checks.push_back(std::move(c));
    }

    return rep;
}

}  // namespace magicsq
