#include <magicsq/real_forms.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magicsq {
namespace {

std::string bracket_label(const LieAlgebra& L, int i, int j) {
    return "[" + L.label(i) + ", " + L.label(j) + "]";
}

QMatrix submatrix(const QMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    QMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) out.at(static_cast<int>(r), static_cast<int>(c)) = m.at(rows[r], cols[c]);
    return out;
}

std::vector<int> range_indices(const SummandRange& r) {
    std::vector<int> out;
    out.reserve(r.size());
    for (int i = r.begin; i < r.end; ++i) out.push_back(i);
    return out;
}

// Indices of the H'3(K1) x K2' summand whose K2 unit is one of the given
// imaginary units (1-based unit slots).
std::vector<int> mid_unit_indices(const MagicSquareEntry& e, const std::vector<int>& units) {
    const SummandRange& mid = e.summand("HprimeK2");
    const int m = alg_dim(e.k2) - 1;
    const int a_count = mid.size() / m;
    std::vector<int> out;
    out.reserve(static_cast<size_t>(a_count) * units.size());
    for (int a = 0; a < a_count; ++a)
        for (int u : units) out.push_back(mid.begin + a * m + (u - 1));
    return out;
}

MaximalCompactRow make_row(std::string pair, const LieAlgebra& L, const std::vector<int>& f) {
    MaximalCompactRow row;
    row.pair = std::move(pair);
    row.dim = L.dim();
    row.dim_f = static_cast<int>(f.size());
    row.dim_p = row.dim - row.dim_f;
    row.character = row.dim_p - row.dim_f;
    CartanCheckResult chk = cartan_check(L, f);
    row.grading_ok = chk.ok;
    row.failure = std::move(chk.failure);
    row.decomposition = std::move(chk.decomposition);
    return row;
}

struct GTerm {
    int sign;
    int i;
    int j;
};
using GPair = std::array<GTerm, 2>;

// The two-rotation presentation of each derivation generator: g_k is a
// signed sum of two metric-antisymmetric unit rotations s_ij of the
// imaginary part.
const std::array<GPair, 14>& g_list_terms() {
    static const std::array<GPair, 14> list = {{
        {{{+1, 2, 3}, {-1, 4, 5}}},
        {{{+1, 4, 5}, {+1, 6, 7}}},
        {{{+1, 2, 5}, {-1, 3, 4}}},
        {{{-1, 2, 7}, {-1, 3, 6}}},
        {{{-1, 4, 7}, {-1, 5, 6}}},
        {{{-1, 2, 4}, {-1, 3, 5}}},
        {{{-1, 2, 6}, {+1, 3, 7}}},
        {{{-1, 4, 6}, {+1, 5, 7}}},
        {{{-1, 1, 2}, {+1, 4, 7}}},
        {{{+1, 1, 3}, {+1, 5, 7}}},
        {{{+1, 1, 4}, {+1, 2, 7}}},
        {{{-1, 1, 5}, {+1, 3, 7}}},
        {{{+1, 1, 6}, {+1, 2, 5}}},
        {{{-1, 1, 7}, {+1, 2, 4}}},
    }};
    return list;
}

// s_ij = g_i E_ji - g_j E_ij on unit slots, the whole-algebra embedding of
// the metric-antisymmetric rotation e_i -> g_i e_j.
QMatrix s_unit(const CompositionAlgebra& K, int i, int j) {
    const std::vector<int> g = K.metric();
    QMatrix m(K.dim(), K.dim());
    m.at(j, i) = g[i];
    m.at(i, j) = -g[j];
    return m;
}

std::string g_term_str(int sign, int i, int j, bool first) {
    std::string s = "s" + std::to_string(i) + std::to_string(j);
    if (first) return sign < 0 ? "-" + s : s;
    return (sign < 0 ? " - " : " + ") + s;
}

}  // namespace

CartanCheckResult cartan_check(const LieAlgebra& L, const std::vector<int>& f_indices) {
    const int n = L.dim();
    std::vector<char> in_f(static_cast<size_t>(n), 0);
    for (int i : f_indices) {
        if (i < 0 || i >= n) throw std::invalid_argument("cartan_check: basis index out of range");
        if (in_f[i]) throw std::invalid_argument("cartan_check: duplicate basis index " + std::to_string(i));
        in_f[i] = 1;
    }

    CartanCheckResult res;
    res.decomposition.algebra = L;
    std::vector<int>& f = res.decomposition.f_indices;
    std::vector<int>& p = res.decomposition.p_indices;
    for (int i = 0; i < n; ++i) (in_f[i] ? f : p).push_back(i);

    // Grading: same-block brackets land in f, mixed brackets in p.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const char want_f = (in_f[i] == in_f[j]) ? 1 : 0;
            for (const auto& [k, c] : L.bracket_upper(i, j)) {
                (void)c;
                if (in_f[k] != want_f) {
                    res.failure = bracket_label(L, i, j) + " has a component on " + L.label(k) +
                                  " outside the " + (want_f ? "f" : "p") + " block";
                    return res;
                }
            }
        }
    }

    const QMatrix K = L.killing_matrix();
    for (int i : f) {
        for (int j : p) {
            if (K.at(i, j) != 0) {
                res.failure = "Killing form couples " + L.label(i) + " to " + L.label(j);
                return res;
            }
        }
    }
    if (!f.empty()) {
        const Signature sf = symmetric_signature(submatrix(K, f, f));
        if (sf.n_neg != static_cast<int>(f.size())) {
            res.failure = "Killing form on the f block has signature " + sf.str() + ", expected negative definite";
            return res;
        }
    }
    if (!p.empty()) {
        const Signature sp = symmetric_signature(submatrix(K, p, p));
        if (sp.n_pos != static_cast<int>(p.size())) {
            res.failure = "Killing form on the p block has signature " + sp.str() + ", expected positive definite";
            return res;
        }
    }
    res.ok = true;
    return res;
}

LieAlgebra weyl_trick(const CartanDecomposition& d) {
    const LieAlgebra& L = d.algebra;
    const int n = L.dim();
    std::vector<char> in_p(static_cast<size_t>(n), 0);
    for (int i : d.p_indices) in_p[i] = 1;

    LieAlgebra out(n, L.labels());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            SparseVec v = L.bracket_upper(i, j);
            if (v.empty()) continue;
            if (in_p[i] && in_p[j])
                for (auto& [k, c] : v) {
                    (void)k;
                    c = -c;
                }
            out.set_bracket(i, j, std::move(v));
        }
    }
    return out;
}

LieAlgebra with_last_summand_basis(const MagicSquareEntry& e, const std::vector<QMatrix>& ops,
                                   const std::vector<std::string>& labels) {
    if (e.kind != SquareKind::L3) throw std::invalid_argument("with_last_summand_basis: entry is not an L3 assembly");
    const SummandRange& last = e.summands.back();
    if (last.name != "DerK2") throw std::invalid_argument("with_last_summand_basis: final summand is not Der K2");
    const int base = last.begin;
    const int bd = last.size();
    if (static_cast<int>(ops.size()) != bd || static_cast<int>(labels.size()) != bd)
        throw std::invalid_argument("with_last_summand_basis: need exactly one operator and label per block slot");

    const CompositionAlgebra& K2 = CompositionAlgebra::get(e.k2);
    const std::vector<QMatrix>& der = K2.derivation_basis();
    SpanSolver solver(K2.dim() * K2.dim());
    for (const QMatrix& d : der) solver.add(d.flatten());

    // Q's columns express the new block basis over the defining one.
    QMatrix Q(bd, bd);
    for (int t = 0; t < bd; ++t) {
        auto c = solver.express(ops[t].flatten());
        if (!c)
            throw std::invalid_argument("with_last_summand_basis: operator " + labels[t] +
                                        " is not a derivation of the coefficient algebra");
        for (int s = 0; s < bd; ++s) Q.at(s, t) = (*c)[s];
    }
    const QMatrix Qinv = inverse(Q);

    const LieAlgebra& L = e.algebra;
    const int n = L.dim();
    std::vector<std::string> lbl = L.labels();
    for (int t = 0; t < bd; ++t) lbl[base + t] = labels[t];
    LieAlgebra out(n, std::move(lbl));

    // Rewrites the block components of a bracket value through the inverse
    // substitution; components below the block pass through unchanged.
    auto transform_out = [&](const SparseVec& v) {
        SparseVec head;
        QVector blk(bd);
        bool has_blk = false;
        for (const auto& [k, c] : v) {
            if (k < base) {
                head.emplace_back(k, c);
            } else {
                blk[k - base] = c;
                has_blk = true;
            }
        }
        if (has_blk) {
            const QVector nb = Qinv.apply(blk);
            for (int s = 0; s < bd; ++s)
                if (nb[s] != 0) head.emplace_back(base + s, nb[s]);
        }
        return head;
    };
    auto to_sparse_acc = [](const std::map<int, Rational>& acc) {
        SparseVec v;
        for (const auto& [k, c] : acc)
            if (c != 0) v.emplace_back(k, c);
        return v;
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j < base) {
                const SparseVec& v = L.bracket_upper(i, j);
                if (!v.empty()) out.set_bracket(i, j, transform_out(v));
            } else if (i < base) {
                const int tj = j - base;
                std::map<int, Rational> acc;
                for (int s = 0; s < bd; ++s) {
                    const Rational& q = Q.at(s, tj);
                    if (q == 0) continue;
                    for (const auto& [k, c] : L.bracket_upper(i, base + s)) acc[k] += q * c;
                }
                out.set_bracket(i, j, transform_out(to_sparse_acc(acc)));
            } else {
                const int ti = i - base;
                const int tj = j - base;
                std::map<int, Rational> acc;
                for (int s = 0; s < bd; ++s) {
                    for (int u = s + 1; u < bd; ++u) {
                        const Rational coef = Q.at(s, ti) * Q.at(u, tj) - Q.at(u, ti) * Q.at(s, tj);
                        if (coef == 0) continue;
                        for (const auto& [k, c] : L.bracket_upper(base + s, base + u)) acc[k] += coef * c;
                    }
                }
                out.set_bracket(i, j, transform_out(to_sparse_acc(acc)));
            }
        }
    }
    return out;
}

G2Basis der_O_basis_g(bool split) {
    const CompositionAlgebra& K = CompositionAlgebra::get(split ? AlgName::Os : AlgName::O);
    G2Basis out;
    out.split = split;
    out.printed_signs_valid = true;

    SpanSolver span(K.dim() * K.dim());
    const auto& list = g_list_terms();
    for (int gi = 0; gi < 14; ++gi) {
        const GTerm& t1 = list[gi][0];
        const GTerm& t2 = list[gi][1];
        const QMatrix s1 = s_unit(K, t1.i, t1.j);
        const QMatrix s2 = s_unit(K, t2.i, t2.j);

        // Try the tabulated relative sign first; a flipped second term is
        // the only recalibration that changes the operator's line.
        QMatrix gen;
        int sign2 = 0;
        for (int flip = 0; flip < 2 && sign2 == 0; ++flip) {
            const int b = flip ? -t2.sign : t2.sign;
            QMatrix m = s1.scaled_by(t1.sign) + s2.scaled_by(b);
            if (K.is_derivation(m)) {
                gen = std::move(m);
                sign2 = b;
            }
        }
        if (sign2 == 0)
            throw std::runtime_error("derivation generator g" + std::to_string(gi + 1) +
                                     " fails the derivation law under both relative signs");
        if (sign2 != t2.sign) out.printed_signs_valid = false;

        span.add(gen.flatten());
        out.generators.push_back(std::move(gen));
        out.dictionary.push_back("g" + std::to_string(gi + 1) + " = " + g_term_str(t1.sign, t1.i, t1.j, true) +
                                 g_term_str(sign2, t2.i, t2.j, false));
    }
    if (span.rank() != 14)
        throw std::runtime_error("derivation generators span rank " + std::to_string(span.rank()) +
                                 ", expected 14");
    return out;
}

std::vector<int> m_g2_positions() { return {0, 8, 9, 1, 4, 7}; }

namespace {

// Exact square root of a nonnegative rational; nullopt when not a square.
std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const mpz_class num = x.num();
    const mpz_class den = x.den();
    const mpz_class sn = sqrt(num);
    const mpz_class sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(mpq_class(sn, sd));
}

}  // namespace

std::pair<std::vector<QVector>, std::vector<QVector>> so3_pair_ideals(const LieAlgebra& M) {
    const int n = M.dim();
    std::vector<QMatrix> ads;
    ads.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ads.push_back(M.ad_basis(i));

    // Maps commuting with the adjoint action, as a kernel over the n*n
    // entries of the unknown map (variable phi(x,y) at index x*n + y).
    KernelAccumulator acc(n * n);
    for (const QMatrix& A : ads) {
        std::vector<SparseVec> eqs;
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                std::map<int, Rational> eq;
                for (int k = 0; k < n; ++k) {
                    if (A.at(r, k) != 0) eq[k * n + c] += A.at(r, k);
                    if (A.at(k, c) != 0) eq[r * n + k] -= A.at(k, c);
                }
                SparseVec sv;
                for (const auto& [idx, coef] : eq)
                    if (coef != 0) sv.emplace_back(idx, coef);
                if (!sv.empty()) eqs.push_back(std::move(sv));
            }
        }
        acc.add_equations(eqs);
    }
    if (acc.dim() != 2)
        throw std::runtime_error("so3_pair_ideals: adjoint commutant has dimension " + std::to_string(acc.dim()) +
                                 ", expected 2");

    const std::vector<QVector> comm = acc.dense_basis();
    const QMatrix I = QMatrix::identity(n);
    QMatrix phi = QMatrix::from_flat(comm[0], n, n);
    if (phi - I.scaled_by(phi.at(0, 0)) == QMatrix(n, n)) phi = QMatrix::from_flat(comm[1], n, n);

    // phi = alpha e1 + beta e2 for the two projections, so its minimal
    // polynomial is quadratic with rational roots.
    SpanSolver sp(n * n);
    sp.add(I.flatten());
    sp.add(phi.flatten());
    auto c = sp.express((phi * phi).flatten());
    if (!c) throw std::runtime_error("so3_pair_ideals: commutant is not closed under composition");
    const Rational b = (*c)[0];
    const Rational a = (*c)[1];
    const auto root = rational_sqrt(a * a + 4 * b);
    if (!root || *root == 0) throw std::runtime_error("so3_pair_ideals: projection eigenvalues are not distinct rationals");
    const Rational alpha = (a + *root) / 2;
    const Rational beta = (a - *root) / 2;

    const QMatrix e1 = (phi - I.scaled_by(beta)).scaled_by((alpha - beta).inv());
    const QMatrix e2 = I - e1;
    auto image_basis = [n](const QMatrix& e) {
        SpanSolver s(n);
        std::vector<QVector> basis;
        for (int col = 0; col < n; ++col) {
            QVector v = e.column(col);
            if (is_zero_vector(v)) continue;
            int before = s.rank();
            s.add(v);
            if (s.rank() > before) basis.push_back(std::move(v));
        }
        return basis;
    };
    return {image_basis(e1), image_basis(e2)};
}

std::optional<QMatrix> solve_last_block_morphism(const LieAlgebra& source, const LieAlgebra& target, int base) {
    const int n = source.dim();
    if (target.dim() != n || base < 0 || base > n) throw std::invalid_argument("solve_last_block_morphism: layout mismatch");
    const int bd = n - base;
    if (bd == 0) {
        const QMatrix full = QMatrix::identity(n);
        LieMorphism f{&source, &target, full};
        if (!check_morphism(f).is_isomorphism()) return std::nullopt;
        return full;
    }

    // A bracket value split at the block boundary.
    auto split_at_base = [&](const SparseVec& v) {
        std::pair<SparseVec, QVector> out{{}, QVector(bd)};
        for (const auto& [k, c] : v) {
            if (k < base)
                out.first.emplace_back(k, c);
            else
                out.second[k - base] = c;
        }
        return out;
    };

    // The block map must send each source cell's block component to the
    // target's, while the head components already agree.
    SpanSolver defined(bd);
    std::vector<QVector> def_in, def_out;
    for (int i = 0; i < base; ++i) {
        for (int j = i + 1; j < base; ++j) {
            auto [sh, sb] = split_at_base(source.bracket_upper(i, j));
            auto [th, tb] = split_at_base(target.bracket_upper(i, j));
            if (sh != th) return std::nullopt;
            const bool sz = is_zero_vector(sb);
            const bool tz = is_zero_vector(tb);
            if (sz && tz) continue;
            if (sz != tz) return std::nullopt;
            const int before = defined.rank();
            defined.add(sb);
            if (defined.rank() > before) {
                def_in.push_back(std::move(sb));
                def_out.push_back(std::move(tb));
            }
        }
    }
    // Complete an underdetermined solve with fixed directions; the final
    // verification decides whether any completion works.
    for (int s = 0; s < bd && defined.rank() < bd; ++s) {
        QVector u(bd);
        u[s] = 1;
        const int before = defined.rank();
        defined.add(u);
        if (defined.rank() > before) {
            def_in.push_back(u);
            def_out.push_back(u);
        }
    }

    QMatrix U(bd, bd), W(bd, bd);
    for (int t = 0; t < bd; ++t) {
        for (int s = 0; s < bd; ++s) {
            U.at(s, t) = def_in[t][s];
            W.at(s, t) = def_out[t][s];
        }
    }
    const QMatrix T = W * inverse(U);

    QMatrix full = QMatrix::identity(n);
    for (int r = 0; r < bd; ++r)
        for (int col = 0; col < bd; ++col) full.at(base + r, base + col) = T.at(r, col);

    LieMorphism f{&source, &target, full};
    if (!check_morphism(f).is_isomorphism()) return std::nullopt;
    return full;
}

std::vector<MaximalCompactRow> maximal_compact_report() {
    std::vector<MaximalCompactRow> rows;

    {
        // Split complex row: the compact block is all of Der H3(O).
        const MagicSquareEntry& e = build_L3(AlgName::O, AlgName::Cs);
        rows.push_back(make_row("l3(O,Cs)", e.algebra, range_indices(e.summand("DerH3"))));
    }
    {
        // Split quaternion row: rewrite Der K2 on the inner basis C_u =
        // L_{e_u} - R_{e_u}; the compact block adds the tensors over the
        // compact unit e_1 and the operator C_1.
        const MagicSquareEntry& e = build_L3(AlgName::O, AlgName::Hs);
        const CompositionAlgebra& K2 = CompositionAlgebra::get(AlgName::Hs);
        std::vector<QMatrix> ops;
        std::vector<std::string> lbls;
        for (int u = 1; u <= 3; ++u) {
            ops.push_back(K2.L_matrix(K2.unit(u)) - K2.R_matrix(K2.unit(u)));
            lbls.push_back("C" + std::to_string(u));
        }
        const LieAlgebra L = with_last_summand_basis(e, ops, lbls);
        std::vector<int> f = range_indices(e.summand("DerH3"));
        const std::vector<int> mid = mid_unit_indices(e, {1});
        f.insert(f.end(), mid.begin(), mid.end());
        f.push_back(e.summands.back().begin);
        rows.push_back(make_row("l3(O,Hs)", L, f));
    }
    // Split octonion rows: rewrite Der K2 on the g-list; the compact block
    // adds the tensors over the compact quaternion units e_1..e_3 and the
    // maximal compact subalgebra of the derivations.
    for (AlgName k1 : {AlgName::O, AlgName::C, AlgName::H}) {
        const MagicSquareEntry& e = build_L3(k1, AlgName::Os);
        const G2Basis g = der_O_basis_g(true);
        std::vector<std::string> lbls;
        for (int t = 1; t <= 14; ++t) lbls.push_back("g" + std::to_string(t));
        const LieAlgebra L = with_last_summand_basis(e, g.generators, lbls);
        std::vector<int> f = range_indices(e.summand("DerH3"));
        const std::vector<int> mid = mid_unit_indices(e, {1, 2, 3});
        f.insert(f.end(), mid.begin(), mid.end());
        const int base = e.summands.back().begin;
        for (int q : m_g2_positions()) f.push_back(base + q);
        rows.push_back(make_row("l3(" + to_string(k1) + ",Os)", L, f));
    }
    return rows;
}

std::vector<WeylMatchRow> weyl_compact_match() {
    struct Pair {
        AlgName k1, k2_split, k2_div;
    };
    static const std::array<Pair, 5> pairs = {{
        {AlgName::O, AlgName::Cs, AlgName::C},
        {AlgName::O, AlgName::Hs, AlgName::H},
        {AlgName::O, AlgName::Os, AlgName::O},
        {AlgName::C, AlgName::Os, AlgName::O},
        {AlgName::H, AlgName::Os, AlgName::O},
    }};

    const std::vector<MaximalCompactRow> rows = maximal_compact_report();
    std::vector<WeylMatchRow> out;
    for (size_t r = 0; r < pairs.size(); ++r) {
        const Pair& pr = pairs[r];
        WeylMatchRow row;
        row.pair = rows[r].pair;
        row.target = "l3(" + to_string(pr.k1) + "," + to_string(pr.k2_div) + ")";
        if (!rows[r].grading_ok) {
            out.push_back(std::move(row));
            continue;
        }

        // The compact entry, with its final summand rewritten on the same
        // operator basis the decomposition uses on the split side.
        const MagicSquareEntry& e = build_L3(pr.k1, pr.k2_div);
        const int base = e.summands.back().begin;
        LieAlgebra target{0};
        if (pr.k2_split == AlgName::Hs) {
            const CompositionAlgebra& K2 = CompositionAlgebra::get(AlgName::H);
            std::vector<QMatrix> ops;
            std::vector<std::string> lbls;
            for (int u = 1; u <= 3; ++u) {
                ops.push_back(K2.L_matrix(K2.unit(u)) - K2.R_matrix(K2.unit(u)));
                lbls.push_back("C" + std::to_string(u));
            }
            target = with_last_summand_basis(e, ops, lbls);
        } else if (pr.k2_split == AlgName::Os) {
            const G2Basis g = der_O_basis_g(false);
            std::vector<std::string> lbls;
            for (int t = 1; t <= 14; ++t) lbls.push_back("g" + std::to_string(t));
            target = with_last_summand_basis(e, g.generators, lbls);
        } else {
            target = e.algebra;
        }

        const LieAlgebra compactified = weyl_trick(rows[r].decomposition);
        if (auto m = solve_last_block_morphism(compactified, target, base)) {
            row.morphism_ok = true;
            row.matrix = std::move(*m);
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace magicsq
