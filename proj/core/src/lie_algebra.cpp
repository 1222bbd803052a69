#include "magicsq/lie_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace magicsq {

const SparseVec LieAlgebra::empty_{};

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), sc_(static_cast<size_t>(dim) * dim) {
    if (dim < 0) throw std::invalid_argument("LieAlgebra: negative dimension");
    if (static_cast<int>(labels_.size()) != dim)
        throw std::invalid_argument("LieAlgebra: label count does not match dimension");
}

LieAlgebra::LieAlgebra(int dim) : LieAlgebra(dim, [dim] {
        std::vector<std::string> ls(dim);
        for (int i = 0; i < dim; ++i) ls[i] = "e" + std::to_string(i);
        return ls;
    }()) {}

void LieAlgebra::set_bracket(int i, int j, SparseVec v) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || i >= j)
        throw std::invalid_argument("LieAlgebra::set_bracket: need 0 <= i < j < dim");
    SparseVec clean;
    for (auto& [k, c] : v) {
        if (k < 0 || k >= dim_) throw std::invalid_argument("LieAlgebra::set_bracket: index out of range");
        if (!c.is_zero()) clean.emplace_back(k, std::move(c));
    }
    std::sort(clean.begin(), clean.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t t = 1; t < clean.size(); ++t)
        if (clean[t].first == clean[t - 1].first)
            throw std::invalid_argument("LieAlgebra::set_bracket: duplicate basis index");
    sc_[static_cast<size_t>(i) * dim_ + j] = std::move(clean);
}

const SparseVec& LieAlgebra::bracket_upper(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || i >= j)
        throw std::invalid_argument("LieAlgebra::bracket_upper: need 0 <= i < j < dim");
    return sc_[static_cast<size_t>(i) * dim_ + j];
}

QVector LieAlgebra::bracket_basis(int i, int j) const {
    QVector out(dim_);
    if (i == j) return out;
    if (i < j) {
        for (const auto& [k, c] : bracket_upper(i, j)) out[k] = c;
    } else {
        for (const auto& [k, c] : bracket_upper(j, i)) out[k] = -c;
    }
    return out;
}

QVector LieAlgebra::bracket_sparse(const SparseVec& x, const SparseVec& y) const {
    QVector out(dim_);
    for (const auto& [i, xi] : x) {
        for (const auto& [j, yj] : y) {
            if (i == j) continue;
            Rational c = xi * yj;
            if (i < j) {
                for (const auto& [k, v] : sc_[static_cast<size_t>(i) * dim_ + j]) out[k] += c * v;
            } else {
                for (const auto& [k, v] : sc_[static_cast<size_t>(j) * dim_ + i]) out[k] -= c * v;
            }
        }
    }
    return out;
}

QVector LieAlgebra::bracket(const QVector& x, const QVector& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw std::invalid_argument("LieAlgebra::bracket: wrong vector size");
    return bracket_sparse(to_sparse(x), to_sparse(y));
}

QMatrix LieAlgebra::ad_basis(int i) const {
    QMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        if (i == j) continue;
        if (i < j) {
            for (const auto& [k, c] : sc_[static_cast<size_t>(i) * dim_ + j]) m.at(k, j) = c;
        } else {
            for (const auto& [k, c] : sc_[static_cast<size_t>(j) * dim_ + i]) m.at(k, j) = -c;
        }
    }
    return m;
}

QMatrix LieAlgebra::ad(const QVector& x) const {
    QMatrix m(dim_, dim_);
    SparseVec sx = to_sparse(x);
    for (int j = 0; j < dim_; ++j) {
        for (const auto& [i, xi] : sx) {
            if (i == j) continue;
            if (i < j) {
                for (const auto& [k, c] : sc_[static_cast<size_t>(i) * dim_ + j]) m.at(k, j) += xi * c;
            } else {
                for (const auto& [k, c] : sc_[static_cast<size_t>(j) * dim_ + i]) m.at(k, j) -= xi * c;
            }
        }
    }
    return m;
}

namespace {

// Structure constants rescaled to 64-bit integers over a common denominator,
// stored for both orientations of each basis pair.  Usable only when every
// rescaled value stays small enough that a triple-sum of pairwise products
// provably fits in 128-bit accumulators.
struct ScaledTable {
    bool ok = false;
    long long denom = 1;
    std::vector<std::vector<std::pair<int, long long>>> rows;  // index i*dim + j, ordered pair
};

constexpr long long kMaxDenom = 1000000000000000LL;  // 1e15
constexpr long long kMaxScaled = 1LL << 30;

ScaledTable build_scaled(const LieAlgebra& L) {
    ScaledTable t;
    const int dim = L.dim();
    long long denom = 1;
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            for (const auto& [k, c] : L.bracket_upper(i, j)) {
                (void)k;
                if (!c.den().fits_slong_p()) return t;
                long long d = c.den().get_si();
                long long g = std::gcd(denom, d);
                if (denom / g > kMaxDenom / d) return t;
                denom = denom / g * d;
            }
        }
    }
    t.rows.resize(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            for (const auto& [k, c] : L.bracket_upper(i, j)) {
                if (!c.num().fits_slong_p()) return t;
                long long num = c.num().get_si();
                long long d = c.den().get_si();
                long long factor = denom / d;
                if (factor != 0 && (num > kMaxScaled / factor || num < -kMaxScaled / factor)) return t;
                long long v = num * factor;
                t.rows[static_cast<size_t>(i) * dim + j].emplace_back(k, v);
                t.rows[static_cast<size_t>(j) * dim + i].emplace_back(k, -v);
            }
        }
    }
    t.denom = denom;
    t.ok = true;
    return t;
}

mpz_class mpz_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class r(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += mpz_class(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    return neg ? mpz_class(-r) : r;
}

}  // namespace

LieAlgebra::JacobiReport LieAlgebra::jacobi_violations() const {
    JacobiReport rep;
    const int n = dim_;
    rep.triples = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;

    ScaledTable st = build_scaled(*this);
    if (st.ok) {
        std::vector<__int128> acc(n, 0);
        std::vector<char> dirty(n, 0);
        std::vector<int> touched;
        touched.reserve(n);
        auto add_term = [&](int a, const std::vector<std::pair<int, long long>>& v) {
            for (const auto& [m, c] : v) {
                if (a == m) continue;
                for (const auto& [k, d] : st.rows[static_cast<size_t>(a) * n + m]) {
                    acc[k] += static_cast<__int128>(c) * d;
                    if (!dirty[k]) {
                        dirty[k] = 1;
                        touched.push_back(k);
                    }
                }
            }
        };
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const auto& rij = st.rows[static_cast<size_t>(i) * n + j];
                for (int k = j + 1; k < n; ++k) {
                    add_term(i, st.rows[static_cast<size_t>(j) * n + k]);
                    add_term(j, st.rows[static_cast<size_t>(k) * n + i]);
                    add_term(k, rij);
                    bool bad = false;
                    for (int t : touched) {
                        if (acc[t] != 0) bad = true;
                        acc[t] = 0;
                        dirty[t] = 0;
                    }
                    touched.clear();
                    if (bad) {
                        ++rep.violations;
                        if (rep.first_witness[0] < 0) rep.first_witness = {i, j, k};
                    }
                }
            }
        }
        return rep;
    }

    rep.exact_fallback = true;
    QVector acc(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                std::fill(acc.begin(), acc.end(), Rational(0));
                auto add_term = [&](int a, int b, int c, int sign) {
                    // sign * [basis_a, bracket_upper(b, c)] with b < c
                    for (const auto& [m, v] : bracket_upper(b, c)) {
                        if (a == m) continue;
                        Rational coef = (sign > 0) ? v : -v;
                        if (a < m) {
                            for (const auto& [t, w] : bracket_upper(a, m)) acc[t] += coef * w;
                        } else {
                            for (const auto& [t, w] : bracket_upper(m, a)) acc[t] -= coef * w;
                        }
                    }
                };
                add_term(i, j, k, +1);
                add_term(j, i, k, -1);
                add_term(k, i, j, +1);
                if (!is_zero_vector(acc)) {
                    ++rep.violations;
                    if (rep.first_witness[0] < 0) rep.first_witness = {i, j, k};
                }
            }
        }
    }
    return rep;
}

QMatrix LieAlgebra::killing_matrix() const {
    const int n = dim_;
    QMatrix K(n, n);
    ScaledTable st = build_scaled(*this);
    if (st.ok) {
        mpz_class den2 = mpz_class(static_cast<long>(st.denom)) * mpz_class(static_cast<long>(st.denom));
        std::vector<long long> dense(static_cast<size_t>(n) * n);
        for (int j = 0; j < n; ++j) {
            std::fill(dense.begin(), dense.end(), 0);
            // dense[p*n + q] = rescaled coefficient of basis_p in [basis_j, basis_q]
            for (int q = 0; q < n; ++q)
                for (const auto& [p, c] : st.rows[static_cast<size_t>(j) * n + q])
                    dense[static_cast<size_t>(p) * n + q] = c;
            for (int i = 0; i <= j; ++i) {
                __int128 acc = 0;
                for (int m = 0; m < n; ++m)
                    for (const auto& [k, c] : st.rows[static_cast<size_t>(i) * n + m])
                        acc += static_cast<__int128>(c) * dense[static_cast<size_t>(m) * n + k];
                if (acc != 0) {
                    Rational val(mpq_class(mpz_from_i128(acc), den2));
                    K.at(i, j) = val;
                    K.at(j, i) = val;
                }
            }
        }
        return K;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Rational acc;
            for (int m = 0; m < n; ++m) {
                if (i == m) continue;
                auto walk = [&](const SparseVec& row, int sign_im) {
                    for (const auto& [k, c] : row) {
                        if (j == k) continue;
                        // coefficient of basis_m in [basis_j, basis_k]
                        const SparseVec& back = (j < k) ? bracket_upper(j, k) : bracket_upper(k, j);
                        int sign_jk = (j < k) ? 1 : -1;
                        for (const auto& [t, w] : back) {
                            if (t != m) continue;
                            Rational term = c * w;
                            if (sign_im * sign_jk < 0)
                                acc -= term;
                            else
                                acc += term;
                        }
                    }
                };
                if (i < m)
                    walk(bracket_upper(i, m), 1);
                else
                    walk(bracket_upper(m, i), -1);
            }
            K.at(i, j) = acc;
            K.at(j, i) = acc;
        }
    }
    return K;
}

Signature LieAlgebra::killing_signature() const { return symmetric_signature(killing_matrix()); }

int LieAlgebra::center_dim() const {
    if (dim_ == 0) return 0;
    // Kernel of the stacked ad maps: z is central iff for every j, k the
    // coordinate sum_i z_i c_{ij}^k vanishes.
    std::vector<SparseVec> eqs(static_cast<size_t>(dim_) * dim_);
    for (int a = 0; a < dim_; ++a) {
        for (int b = a + 1; b < dim_; ++b) {
            for (const auto& [k, c] : sc_[static_cast<size_t>(a) * dim_ + b]) {
                eqs[static_cast<size_t>(b) * dim_ + k].emplace_back(a, c);
                eqs[static_cast<size_t>(a) * dim_ + k].emplace_back(b, -c);
            }
        }
    }
    KernelAccumulator acc(dim_);
    std::vector<SparseVec> batch;
    for (auto& e : eqs) {
        if (e.empty()) continue;
        batch.push_back(std::move(e));
        if (static_cast<int>(batch.size()) == dim_) {
            acc.add_equations(batch);
            batch.clear();
            if (acc.dim() == 0) return 0;
        }
    }
    if (!batch.empty()) acc.add_equations(batch);
    return acc.dim();
}

int LieAlgebra::derived_dim() const {
    SpanSolver s(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j) {
            const SparseVec& v = sc_[static_cast<size_t>(i) * dim_ + j];
            if (!v.empty()) s.add(to_dense(v, dim_));
        }
    return s.rank();
}

int LieAlgebra::span_closure_dim(const std::vector<QVector>& generators) const {
    SpanSolver s(dim_);
    std::vector<QVector> basis;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != dim_)
            throw std::invalid_argument("span_closure_dim: wrong vector size");
        int before = s.rank();
        s.add(g);
        if (s.rank() > before) basis.push_back(g);
    }
    for (size_t a = 1; a < basis.size(); ++a) {
        for (size_t b = 0; b < a; ++b) {
            QVector v = bracket(basis[a], basis[b]);
            if (is_zero_vector(v)) continue;
            int before = s.rank();
            s.add(v);
            if (s.rank() > before) basis.push_back(std::move(v));
        }
    }
    return s.rank();
}

int LieAlgebra::span_closure_dim(const std::vector<int>& basis_indices) const {
    std::vector<QVector> gens;
    for (int i : basis_indices) {
        if (i < 0 || i >= dim_) throw std::invalid_argument("span_closure_dim: index out of range");
        QVector v(dim_);
        v[i] = 1;
        gens.push_back(std::move(v));
    }
    return span_closure_dim(gens);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    std::vector<std::string> labels;
    labels.reserve(a.dim() + b.dim());
    for (int i = 0; i < a.dim(); ++i) labels.push_back(a.label(i));
    for (int i = 0; i < b.dim(); ++i) labels.push_back(b.label(i));
    LieAlgebra s(a.dim() + b.dim(), std::move(labels));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            const SparseVec& v = a.bracket_upper(i, j);
            if (!v.empty()) s.set_bracket(i, j, v);
        }
    const int off = a.dim();
    for (int i = 0; i < b.dim(); ++i)
        for (int j = i + 1; j < b.dim(); ++j) {
            SparseVec v = b.bracket_upper(i, j);
            if (v.empty()) continue;
            for (auto& [k, c] : v) k += off;
            s.set_bracket(i + off, j + off, std::move(v));
        }
    return s;
}

MorphismReport check_morphism(const LieMorphism& f) {
    if (!f.source || !f.target) throw std::invalid_argument("check_morphism: null algebra");
    const LieAlgebra& S = *f.source;
    const LieAlgebra& T = *f.target;
    if (f.matrix.rows() != T.dim() || f.matrix.cols() != S.dim())
        throw std::invalid_argument("check_morphism: matrix shape must be target.dim x source.dim");

    MorphismReport rep;
    std::vector<SparseVec> fcol(S.dim());
    for (int i = 0; i < S.dim(); ++i) fcol[i] = to_sparse(f.matrix.column(i));

    rep.brackets_preserved = true;
    for (int i = 0; i < S.dim() && rep.brackets_preserved; ++i) {
        for (int j = i + 1; j < S.dim(); ++j) {
            QVector lhs(T.dim());
            for (const auto& [m, c] : S.bracket_upper(i, j))
                for (const auto& [k, w] : fcol[m]) lhs[k] += c * w;
            QVector rhs = T.bracket_sparse(fcol[i], fcol[j]);
            if (lhs != rhs) {
                rep.brackets_preserved = false;
                rep.witness = {i, j};
                break;
            }
        }
    }
    rep.bijective = (S.dim() == T.dim()) && (rank(f.matrix) == S.dim());
    return rep;
}

}  // namespace magicsq
