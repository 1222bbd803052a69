#include "magicsq/tits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace magicsq {

std::string to_string(SquareKind k) {
    switch (k) {
        case SquareKind::L2: return "l2";
        case SquareKind::L3: return "l3";
        case SquareKind::L3sym: return "l3sym";
    }
    throw std::logic_error("bad SquareKind");
}

const SummandRange& MagicSquareEntry::summand(const std::string& name) const {
    for (const auto& s : summands)
        if (s.name == name) return s;
    throw std::invalid_argument("no summand named " + name);
}

namespace {

SpanSolver matrix_span(const std::vector<QMatrix>& mats, int flat_dim) {
    SpanSolver s(flat_dim);
    for (const auto& m : mats) s.add(m.flatten());
    return s;
}

QVector express_or_throw(const SpanSolver& solver, const QVector& target, const std::string& what) {
    auto c = solver.express(target);
    if (!c) throw std::runtime_error("re-expression failed: " + what + " is outside its summand");
    return *c;
}

// Labels "x" default unit names e0, e1, ... of a composition algebra.
std::string unit_label(int b) { return "e" + std::to_string(b); }

struct MixedTermTable {
    // Per traceless-basis pair (a, c), a <= c stored at a*hdim+c.
    std::vector<Rational> trace_form;        // <A_a, A_c>
    std::vector<SparseVec> star;             // A_a * A_c in traceless coords (3x3 only)
    std::vector<QVector> ll;                 // [L_a, L_c] in Der coords, a < c
};

// Diagnostic sweep: scalar rescalings of the three mixed-bracket terms.
// Only used after a Jacobi failure, to localize a transcription error.
std::string rescale_diagnostic(AlgName k1, AlgName k2, SquareKind kind,
                               const std::function<LieAlgebra(const Rational&, const Rational&, const Rational&)>& rebuild) {
    const std::vector<Rational> knob = {Rational(1),     Rational(-1),    Rational(2),
                                        Rational(-2),    Rational(1, 2),  Rational(-1, 2),
                                        Rational(3),     Rational(-3),    Rational(1, 3),
                                        Rational(-1, 3), Rational(6),     Rational(-6),
                                        Rational(1, 6),  Rational(-1, 6)};
    std::ostringstream hits;
    int found = 0;
    for (const auto& c1 : knob)
        for (const auto& c2 : knob)
            for (const auto& c3 : knob) {
                LieAlgebra cand = rebuild(c1, c2, c3);
                if (cand.jacobi_violations().violations == 0) {
                    if (found++) hits << "; ";
                    hits << "(" << c1.str() << ", " << c2.str() << ", " << c3.str() << ")";
                    if (found >= 8) goto done;
                }
            }
done:
    std::ostringstream msg;
    msg << to_string(kind) << "(" << to_string(k1) << "," << to_string(k2)
        << "): structure constants fail the Jacobi identity.";
    if (found)
        msg << " Rescalings (coefficient of the orthogonal-generator term, the tensor term, "
            << "the multiplication-operator term) that close: " << hits.str();
    else
        msg << " No scalar rescaling of the three mixed-bracket terms closes it.";
    return msg.str();
}

// Assembles L3 (n = 3) or L2 (n = 2).  The three formula knobs scale the
// mixed bracket's three terms and are (1,1,1) for the real build.
LieAlgebra assemble_tits(AlgName k1n, AlgName k2n, int n, const Rational& knob_d,
                         const Rational& knob_mid, const Rational& knob_ll,
                         std::vector<SummandRange>* summands_out) {
    const JordanAlgebra& J = JordanAlgebra::get(k1n, n);
    const CompositionAlgebra& K2 = CompositionAlgebra::get(k2n);
    const int dimJ = J.dim();
    const int m = K2.dim() - 1;  // imaginary units of K2

    const std::vector<QMatrix>& derj = J.derivation_basis();
    const int d1 = static_cast<int>(derj.size());
    const std::vector<QVector> hb = J.traceless_basis();
    const int hdim = static_cast<int>(hb.size());

    // Last summand: Der K2 acting on all of K2 (3x3 case) or so(K2')
    // acting on the imaginary part (2x2 case).
    std::vector<QMatrix> last;
    int act_dim;  // size of the matrices in `last`
    if (n == 3) {
        last = K2.derivation_basis();
        act_dim = K2.dim();
    } else {
        last = CompositionAlgebra::so_basis(K2.imaginary_metric());
        act_dim = m;
    }
    const int d2 = static_cast<int>(last.size());
    const int dim = d1 + hdim * m + d2;

    std::vector<std::string> labels(dim);
    for (int i = 0; i < d1; ++i) labels[i] = "D" + std::to_string(i);
    auto h_label = [&](int a) -> std::string {
        if (n == 3) {
            if (a < 2) return "(e" + std::to_string(a + 1) + "-e0)";
            return J.basis_label(3 + (a - 2));
        }
        return a == 0 ? "E" : J.basis_label(2 + (a - 1));
    };
    auto mid_index = [&](int a, int b) { return d1 + a * m + b; };
    for (int a = 0; a < hdim; ++a)
        for (int b = 0; b < m; ++b)
            labels[mid_index(a, b)] = h_label(a) + "(x)" + unit_label(b + 1);
    for (int g = 0; g < d2; ++g)
        labels[d1 + hdim * m + g] = (n == 3 ? "G" : "S") + std::to_string(g);

    LieAlgebra L(dim, std::move(labels));

    // Solvers for expressing computed operators back in the chosen bases.
    SpanSolver derj_solver = matrix_span(derj, dimJ * dimJ);
    SpanSolver last_solver = matrix_span(last, act_dim * act_dim);
    SpanSolver h_solver(dimJ);
    for (const auto& v : hb) h_solver.add(v);

    // Der x Der
    for (int i = 0; i < d1; ++i)
        for (int j = i + 1; j < d1; ++j) {
            QVector c = express_or_throw(derj_solver, commutator(derj[i], derj[j]).flatten(),
                                         "derivation commutator");
            L.set_bracket(i, j, to_sparse(c));
        }

    // Der x (H' tensor K2'):  [D, A(x)u] = D(A)(x)u
    for (int i = 0; i < d1; ++i)
        for (int a = 0; a < hdim; ++a) {
            QVector da = derj[i].apply(hb[a]);
            if (is_zero_vector(da)) continue;
            QVector coords = express_or_throw(h_solver, da, "derivation image of a traceless element");
            for (int b = 0; b < m; ++b) {
                SparseVec v;
                for (int ap = 0; ap < hdim; ++ap)
                    if (!coords[ap].is_zero()) v.emplace_back(mid_index(ap, b), coords[ap]);
                L.set_bracket(i, mid_index(a, b), std::move(v));
            }
        }

    // (H' tensor K2') x last:  [A(x)u, E] = -A(x)E(u)
    for (int a = 0; a < hdim; ++a)
        for (int b = 0; b < m; ++b)
            for (int g = 0; g < d2; ++g) {
                SparseVec v;
                if (n == 3) {
                    // derivation matrix on all of K2; real row stays zero
                    for (int c = 1; c < K2.dim(); ++c) {
                        const Rational& w = last[g].at(c, b + 1);
                        if (!w.is_zero()) v.emplace_back(mid_index(a, c - 1), -w);
                    }
                } else {
                    for (int c = 0; c < m; ++c) {
                        const Rational& w = last[g].at(c, b);
                        if (!w.is_zero()) v.emplace_back(mid_index(a, c), -w);
                    }
                }
                if (!v.empty()) L.set_bracket(mid_index(a, b), d1 + hdim * m + g, std::move(v));
            }

    // last x last
    for (int g = 0; g < d2; ++g)
        for (int h = g + 1; h < d2; ++h) {
            QVector c = express_or_throw(last_solver, commutator(last[g], last[h]).flatten(),
                                         "orthogonal-generator commutator");
            SparseVec v;
            for (int t = 0; t < d2; ++t)
                if (!c[t].is_zero()) v.emplace_back(d1 + hdim * m + t, c[t]);
            L.set_bracket(d1 + hdim * m + g, d1 + hdim * m + h, std::move(v));
        }

    // Precompute the (a, c) data of the mixed bracket.
    MixedTermTable tab;
    tab.trace_form.resize(static_cast<size_t>(hdim) * hdim);
    tab.star.resize(static_cast<size_t>(hdim) * hdim);
    tab.ll.resize(static_cast<size_t>(hdim) * hdim);
    std::vector<QMatrix> lops;
    lops.reserve(hdim);
    for (int a = 0; a < hdim; ++a) lops.push_back(J.L_op(hb[a]));
    for (int a = 0; a < hdim; ++a)
        for (int c = a; c < hdim; ++c) {
            tab.trace_form[a * hdim + c] = J.trace_form(hb[a], hb[c]);
            if (n == 3) {
                QVector st = J.star(hb[a], hb[c]);
                tab.star[a * hdim + c] = to_sparse(express_or_throw(h_solver, st, "traceless product part"));
            } else {
                // rank-2 traceless products are multiples of the identity
                if (!is_zero_vector(J.star(hb[a], hb[c])))
                    throw std::logic_error("2x2 traceless product has a traceless part");
            }
            if (c > a)
                tab.ll[a * hdim + c] =
                    express_or_throw(derj_solver, commutator(lops[a], lops[c]).flatten(),
                                     "multiplication-operator commutator");
        }

    // Per imaginary-unit pair data.
    struct UnitPair {
        QVector last_coords;  // D_{x,y} (3x3) or 2 S_{x,y} (2x2) in `last` coords
        SparseVec half_comm;  // (1/2)[x,y] in imaginary-unit coords (3x3 only)
        Rational bil;         // <x, y>
    };
    std::vector<UnitPair> up(static_cast<size_t>(m) * m);
    for (int b = 0; b < m; ++b)
        for (int d = b + 1; d < m; ++d) {
            UnitPair& u = up[b * m + d];
            QVector x = K2.unit(b + 1), y = K2.unit(d + 1);
            QMatrix op = (n == 3) ? K2.D_xy(x, y) : K2.S_xy(x, y);
            u.last_coords = express_or_throw(last_solver, op.flatten(), "orthogonal generator of a unit pair");
            if (n == 3) {
                QVector hc = scaled(K2.commutator(x, y), Rational(1, 2));
                if (!hc[0].is_zero())
                    throw std::runtime_error("unit commutator has a real part");
                for (int c = 1; c < K2.dim(); ++c)
                    if (!hc[c].is_zero()) u.half_comm.emplace_back(c - 1, hc[c]);
            }
            u.bil = K2.bilinear(x, y);
        }
    for (int b = 0; b < m; ++b) {
        UnitPair& u = up[b * m + b];
        u.bil = K2.bilinear(K2.unit(b + 1), K2.unit(b + 1));
    }

    // Mixed x mixed
    for (int p = 0; p < hdim * m; ++p) {
        const int a = p / m, b = p % m;
        for (int q = p + 1; q < hdim * m; ++q) {
            const int c = q / m, d = q % m;
            SparseVec v;
            const int lo = std::min(a, c), hi = std::max(a, c);
            const Rational& tf = tab.trace_form[lo * hdim + hi];
            // orthogonal-generator term
            if (b != d && !tf.is_zero()) {
                const Rational coef = (n == 3) ? knob_d * tf * Rational(1, 6) : knob_d * tf;
                const UnitPair& u = up[std::min(b, d) * m + std::max(b, d)];
                const Rational sgn = (b < d) ? coef : -coef;
                for (int t = 0; t < d2; ++t)
                    if (!u.last_coords[t].is_zero())
                        v.emplace_back(d1 + hdim * m + t, sgn * u.last_coords[t]);
            }
            // tensor term (3x3 only; vanishes identically for 2x2)
            if (n == 3 && b != d) {
                const SparseVec& st = tab.star[lo * hdim + hi];
                const UnitPair& u = up[std::min(b, d) * m + std::max(b, d)];
                const Rational flip = (b < d) ? knob_mid : -knob_mid;
                for (const auto& [ap, sc] : st)
                    for (const auto& [cp, hc] : u.half_comm)
                        v.emplace_back(mid_index(ap, cp), flip * sc * hc);
            }
            // multiplication-operator term
            if (b == d && a != c) {
                const Rational& bil = up[b * m + b].bil;
                if (!bil.is_zero()) {
                    const QVector& ll = tab.ll[lo * hdim + hi];
                    const Rational coef = (a < c) ? -knob_ll * bil : knob_ll * bil;
                    for (int t = 0; t < d1; ++t)
                        if (!ll[t].is_zero()) v.emplace_back(t, coef * ll[t]);
                }
            }
            if (!v.empty()) L.set_bracket(mid_index(a, b), mid_index(c, d), std::move(v));
        }
    }

    if (summands_out) {
        summands_out->clear();
        summands_out->push_back({n == 3 ? "DerH3" : "DerH2", 0, d1});
        summands_out->push_back({"HprimeK2", d1, d1 + hdim * m});
        summands_out->push_back({n == 3 ? "DerK2" : "soK2", d1 + hdim * m, dim});
    }
    return L;
}

// Shared memoization for all three kinds.
const MagicSquareEntry& memo_build(AlgName k1, AlgName k2, SquareKind kind);

MagicSquareEntry build_tits_entry(AlgName k1, AlgName k2, SquareKind kind) {
    const int n = (kind == SquareKind::L2) ? 2 : 3;
    std::vector<SummandRange> ranges;
    LieAlgebra alg =
        assemble_tits(k1, k2, n, Rational(1), Rational(1), Rational(1), &ranges);
    auto rep = alg.jacobi_violations();
    if (rep.violations != 0) {
        std::string msg;
        if (alg.dim() <= 60) {
            msg = rescale_diagnostic(k1, k2, kind, [&](const Rational& c1, const Rational& c2, const Rational& c3) {
                return assemble_tits(k1, k2, n, c1, c2, c3, nullptr);
            });
        } else {
            std::ostringstream os;
            os << to_string(kind) << "(" << to_string(k1) << "," << to_string(k2)
               << "): structure constants fail the Jacobi identity at triple (" << rep.first_witness[0]
               << "," << rep.first_witness[1] << "," << rep.first_witness[2] << ")";
            msg = os.str();
        }
        throw std::runtime_error(msg);
    }
    return MagicSquareEntry{k1, k2, kind, std::move(alg), std::move(ranges)};
}

int theta_power(int i) {
    // twist applied to the f-block diagonal bracket: identity on the first
    // block, squared rotation on the second, single rotation on the third
    return (3 - i) % 3;
}

Triality theta_pow(const CompositionAlgebra& k, Triality t, int p) {
    for (int q = 0; q < p; ++q) t = theta(k, t);
    return t;
}

MagicSquareEntry build_sym_entry(AlgName k1n, AlgName k2n) {
    const CompositionAlgebra& K1 = CompositionAlgebra::get(k1n);
    const CompositionAlgebra& K2 = CompositionAlgebra::get(k2n);
    const TrialityAlgebra& T1 = TrialityAlgebra::get(k1n);
    const TrialityAlgebra& T2 = TrialityAlgebra::get(k2n);
    const int t1 = T1.dim(), t2 = T2.dim();
    const int nu1 = K1.dim(), nu2 = K2.dim();
    const int fblock = nu1 * nu2;
    const int dim = t1 + t2 + 3 * fblock;

    std::vector<std::string> labels(dim);
    for (int i = 0; i < t1; ++i) labels[i] = "T1." + std::to_string(i);
    for (int i = 0; i < t2; ++i) labels[t1 + i] = "T2." + std::to_string(i);
    auto f_index = [&](int i, int a, int b) { return t1 + t2 + i * fblock + a * nu2 + b; };
    for (int i = 0; i < 3; ++i)
        for (int a = 0; a < nu1; ++a)
            for (int b = 0; b < nu2; ++b)
                labels[f_index(i, a, b)] =
                    "F" + std::to_string(i + 1) + "(" + unit_label(a) + "(x)" + unit_label(b) + ")";
    LieAlgebra L(dim, std::move(labels));

    // Tri x Tri (componentwise commutators within each factor)
    for (int i = 0; i < t1; ++i)
        for (int j = i + 1; j < t1; ++j) {
            SparseVec v = T1.bracket_basis(i, j);
            if (!v.empty()) L.set_bracket(i, j, std::move(v));
        }
    for (int i = 0; i < t2; ++i)
        for (int j = i + 1; j < t2; ++j) {
            SparseVec v = T2.bracket_basis(i, j);
            for (auto& [k, c] : v) k += t1;
            if (!v.empty()) L.set_bracket(t1 + i, t1 + j, std::move(v));
        }

    // Tri x F: componentwise action on the matching tensor factor
    for (int al = 0; al < t1; ++al) {
        for (int i = 0; i < 3; ++i) {
            QMatrix ti = t_component(K1, T1.basis(al), i);
            for (int a = 0; a < nu1; ++a) {
                QVector img = ti.column(a);
                if (is_zero_vector(img)) continue;
                for (int b = 0; b < nu2; ++b) {
                    SparseVec v;
                    for (int u = 0; u < nu1; ++u)
                        if (!img[u].is_zero()) v.emplace_back(f_index(i, u, b), img[u]);
                    L.set_bracket(al, f_index(i, a, b), std::move(v));
                }
            }
        }
    }
    for (int al = 0; al < t2; ++al) {
        for (int i = 0; i < 3; ++i) {
            QMatrix ti = t_component(K2, T2.basis(al), i);
            for (int b = 0; b < nu2; ++b) {
                QVector img = ti.column(b);
                if (is_zero_vector(img)) continue;
                for (int a = 0; a < nu1; ++a) {
                    SparseVec v;
                    for (int u = 0; u < nu2; ++u)
                        if (!img[u].is_zero()) v.emplace_back(f_index(i, a, u), img[u]);
                    L.set_bracket(t1 + al, f_index(i, a, b), std::move(v));
                }
            }
        }
    }

    // Diagonal F-block data: theta-twisted generator pairs.
    // tw1[i][a*nu1+c] = coords in T1 of theta^{theta_power(i)} T_{e_a, e_c}
    std::vector<std::vector<QVector>> tw1(3), tw2(3);
    for (int i = 0; i < 3; ++i) {
        tw1[i].resize(static_cast<size_t>(nu1) * nu1);
        tw2[i].resize(static_cast<size_t>(nu2) * nu2);
        for (int a = 0; a < nu1; ++a)
            for (int c = a + 1; c < nu1; ++c) {
                Triality t = theta_pow(K1, t_xy(K1, K1.unit(a), K1.unit(c)), theta_power(i));
                tw1[i][a * nu1 + c] = T1.express(t);
            }
        for (int b = 0; b < nu2; ++b)
            for (int d = b + 1; d < nu2; ++d) {
                Triality t = theta_pow(K2, t_xy(K2, K2.unit(b), K2.unit(d)), theta_power(i));
                tw2[i][b * nu2 + d] = T2.express(t);
            }
    }

    const std::vector<int> g1 = K1.metric(), g2 = K2.metric();

    // F x F
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            for (int a = 0; a < nu1; ++a)
                for (int b = 0; b < nu2; ++b)
                    for (int c = 0; c < nu1; ++c)
                        for (int d = 0; d < nu2; ++d) {
                            int p = f_index(i, a, b), q = f_index(j, c, d);
                            if (p >= q) continue;
                            SparseVec v;
                            if (i == j) {
                                if (b == d && a != c) {
                                    Rational w2(g2[b]);
                                    const QVector& co = tw1[i][std::min(a, c) * nu1 + std::max(a, c)];
                                    Rational s = (a < c) ? w2 : -w2;
                                    for (int t = 0; t < t1; ++t)
                                        if (!co[t].is_zero()) v.emplace_back(t, s * co[t]);
                                }
                                if (a == c && b != d) {
                                    Rational w1(g1[a]);
                                    const QVector& co = tw2[i][std::min(b, d) * nu2 + std::max(b, d)];
                                    Rational s = (b < d) ? w1 : -w1;
                                    for (int t = 0; t < t2; ++t)
                                        if (!co[t].is_zero()) v.emplace_back(t1 + t, s * co[t]);
                                }
                            } else {
                                // cyclic when j = i+1, anticyclic when j = i+2
                                bool cyc = (j == (i + 1) % 3);
                                int k = 3 - i - j;
                                QVector z1 = cyc ? K1.mul(K1.conj(K1.unit(c)), K1.conj(K1.unit(a)))
                                                 : K1.mul(K1.conj(K1.unit(a)), K1.conj(K1.unit(c)));
                                QVector z2 = cyc ? K2.mul(K2.conj(K2.unit(d)), K2.conj(K2.unit(b)))
                                                 : K2.mul(K2.conj(K2.unit(b)), K2.conj(K2.unit(d)));
                                Rational sign = cyc ? Rational(1) : Rational(-1);
                                for (int u = 0; u < nu1; ++u)
                                    for (int w = 0; w < nu2; ++w) {
                                        Rational coef = sign * z1[u] * z2[w];
                                        if (!coef.is_zero()) v.emplace_back(f_index(k, u, w), coef);
                                    }
                            }
                            if (!v.empty()) L.set_bracket(p, q, std::move(v));
                        }
        }
    }

    auto rep = L.jacobi_violations();
    if (rep.violations != 0) {
        std::ostringstream os;
        os << "l3sym(" << to_string(k1n) << "," << to_string(k2n)
           << "): structure constants fail the Jacobi identity at triple (" << rep.first_witness[0] << ","
           << rep.first_witness[1] << "," << rep.first_witness[2] << "), " << rep.violations
           << " violations";
        throw std::runtime_error(os.str());
    }

    std::vector<SummandRange> ranges{{"TriK1", 0, t1},
                                     {"TriK2", t1, t1 + t2},
                                     {"F1", t1 + t2, t1 + t2 + fblock},
                                     {"F2", t1 + t2 + fblock, t1 + t2 + 2 * fblock},
                                     {"F3", t1 + t2 + 2 * fblock, t1 + t2 + 3 * fblock}};
    return MagicSquareEntry{k1n, k2n, SquareKind::L3sym, LieAlgebra(std::move(L)), std::move(ranges)};
}

const MagicSquareEntry& memo_build(AlgName k1, AlgName k2, SquareKind kind) {
    using Key = std::tuple<AlgName, AlgName, SquareKind>;
    static std::map<Key, std::unique_ptr<MagicSquareEntry>> cache;
    Key key{k1, k2, kind};
    auto it = cache.find(key);
    if (it == cache.end()) {
        MagicSquareEntry e = (kind == SquareKind::L3sym) ? build_sym_entry(k1, k2)
                                                         : build_tits_entry(k1, k2, kind);
        it = cache.emplace(key, std::make_unique<MagicSquareEntry>(std::move(e))).first;
    }
    return *it->second;
}

}  // namespace

const MagicSquareEntry& build_L3(AlgName k1, AlgName k2) { return memo_build(k1, k2, SquareKind::L3); }
const MagicSquareEntry& build_L2(AlgName k1, AlgName k2) { return memo_build(k1, k2, SquareKind::L2); }
const MagicSquareEntry& build_L3_sym(AlgName k1, AlgName k2) {
    return memo_build(k1, k2, SquareKind::L3sym);
}

LieMorphism l3sym_swap_morphism(AlgName k1, AlgName k2) {
    const MagicSquareEntry& src = build_L3_sym(k1, k2);
    const MagicSquareEntry& dst = build_L3_sym(k2, k1);
    const int t1 = src.summand("TriK1").size();
    const int t2 = src.summand("TriK2").size();
    const int nu1 = alg_dim(k1), nu2 = alg_dim(k2);
    QMatrix M(dst.algebra.dim(), src.algebra.dim());
    for (int i = 0; i < t1; ++i) M.at(t2 + i, i) = 1;  // Tri K1 -> second factor
    for (int i = 0; i < t2; ++i) M.at(i, t1 + i) = 1;  // Tri K2 -> first factor
    for (int i = 0; i < 3; ++i)
        for (int a = 0; a < nu1; ++a)
            for (int b = 0; b < nu2; ++b)
                M.at(t1 + t2 + i * nu1 * nu2 + b * nu1 + a, t1 + t2 + i * nu1 * nu2 + a * nu2 + b) = 1;
    return LieMorphism{&src.algebra, &dst.algebra, std::move(M)};
}

LieMorphism l3_dictionary_morphism(AlgName k1n, AlgName k2n) {
    const MagicSquareEntry& src = build_L3(k1n, k2n);
    const MagicSquareEntry& dst = build_L3_sym(k1n, k2n);
    const CompositionAlgebra& K1 = CompositionAlgebra::get(k1n);
    const CompositionAlgebra& K2 = CompositionAlgebra::get(k2n);
    const TrialityAlgebra& T1 = TrialityAlgebra::get(k1n);
    const TrialityAlgebra& T2 = TrialityAlgebra::get(k2n);
    const JordanAlgebra& J = JordanAlgebra::get(k1n, 3);
    const int nu1 = K1.dim(), nu2 = K2.dim();
    const int t1 = T1.dim(), t2 = T2.dim();
    const int dimJ = J.dim();
    auto f_index = [&](int i, int a, int b) { return t1 + t2 + i * nu1 * nu2 + a * nu2 + b; };

    // Derivations of H3(K1) split into a triality part and three F parts.
    auto tri_to_der = [&](const Triality& t) {
        QMatrix d(dimJ, dimJ);
        for (int i = 0; i < 3; ++i) {
            QMatrix ti = t_component(K1, t, i);
            for (int r = 0; r < nu1; ++r)
                for (int c = 0; c < nu1; ++c)
                    if (!ti.at(r, c).is_zero()) d.at(3 + i * nu1 + r, 3 + i * nu1 + c) = ti.at(r, c);
        }
        return d;
    };
    SpanSolver banana(dimJ * dimJ);
    for (int al = 0; al < t1; ++al) banana.add(tri_to_der(T1.basis(al)).flatten());
    for (int i = 0; i < 3; ++i)
        for (int u = 0; u < nu1; ++u) banana.add(J.F_op(i, K1.unit(u)).flatten());

    const std::vector<QMatrix>& derj = J.derivation_basis();
    const int d1 = static_cast<int>(derj.size());
    const int hdim = 2 + 3 * nu1;
    const int m = nu2 - 1;

    QMatrix M(dst.algebra.dim(), src.algebra.dim());
    for (int i = 0; i < d1; ++i) {
        QVector co = express_or_throw(banana, derj[i].flatten(),
                                      "derivation in triality-plus-F coordinates");
        for (int al = 0; al < t1; ++al)
            if (!co[al].is_zero()) M.at(al, i) = co[al];
        for (int fi = 0; fi < 3; ++fi)
            for (int u = 0; u < nu1; ++u) {
                const Rational& c = co[t1 + fi * nu1 + u];
                if (!c.is_zero()) M.at(f_index(fi, u, 0), i) = c;
            }
    }
    // Diagonal traceless tensors become trialities of K2.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < m; ++b) {
            QVector x = K2.unit(b + 1);
            // a = 0: diag(-x, x, 0); a = 1: diag(-x, 0, x)
            QVector a1 = scaled(x, Rational(-1));
            QVector a2 = (a == 0) ? x : K2.zero();
            QVector a3 = (a == 0) ? K2.zero() : x;
            Triality t(K2.L_matrix(a2) - K2.R_matrix(a3), K2.L_matrix(a1) - K2.R_matrix(a3),
                       K2.L_matrix(a2) - K2.R_matrix(a1));
            QVector co = T2.express(t);
            for (int al = 0; al < t2; ++al)
                if (!co[al].is_zero()) M.at(t1 + al, d1 + a * m + b) = co[al];
        }
    // P_i(x) tensor a maps to F_i(x tensor conj(a)); conjugation negates
    // the imaginary units the tensor legs run over.
    for (int i = 0; i < 3; ++i)
        for (int u = 0; u < nu1; ++u)
            for (int b = 0; b < m; ++b)
                M.at(f_index(i, u, b + 1), d1 + (2 + i * nu1 + u) * m + b) = -1;
    // Derivations of K2 are constant trialities.
    const std::vector<QMatrix>& derk = K2.derivation_basis();
    for (size_t g = 0; g < derk.size(); ++g) {
        Triality t(derk[g], derk[g], derk[g]);
        QVector co = T2.express(t);
        for (int al = 0; al < t2; ++al)
            if (!co[al].is_zero()) M.at(t1 + al, d1 + hdim * m + static_cast<int>(g)) = co[al];
    }
    return LieMorphism{&src.algebra, &dst.algebra, std::move(M)};
}

namespace {

struct CatalogEntry {
    int dim, neg, pos, center;
    const char* name;
};

// Real forms occurring in the two magic squares, keyed by dimension,
// Killing signature, and center dimension.  Consulted before the generic
// so(p,q) solver so that coincidences of the key (e.g. sp(3) vs so(7))
// resolve to the form that actually occurs.
const CatalogEntry kCatalog[] = {
    {1, 0, 0, 1, "so(2)"},
    {8, 8, 0, 0, "su(3)"},
    {16, 16, 0, 0, "su(3)+su(3)"},
    {21, 21, 0, 0, "sp(3)"},
    {35, 35, 0, 0, "su(6)"},
    {52, 52, 0, 0, "f4"},
    {78, 78, 0, 0, "e6"},
    {133, 133, 0, 0, "e7"},
    {248, 248, 0, 0, "e8"},
    {8, 3, 5, 0, "sl(3,R)"},
    {16, 8, 8, 0, "sl(3,C)"},
    {35, 21, 14, 0, "sl(3,H)"},
    {78, 52, 26, 0, "e6(-26)"},
    {21, 9, 12, 0, "sp(6,R)"},
    {35, 17, 18, 0, "su(3,3)"},
    {66, 36, 30, 0, "so*(12)"},
    {133, 79, 54, 0, "e7(-25)"},
    {52, 24, 28, 0, "f4(4)"},
    {78, 38, 40, 0, "e6(2)"},
    {133, 69, 64, 0, "e7(-5)"},
    {248, 136, 112, 0, "e8(-24)"},
    {14, 14, 0, 0, "g2"},
    {14, 6, 8, 0, "g2(2)"},
};

}  // namespace

std::string real_form_label(int dim, const Signature& sig, int center) {
    if (sig.n_zero != 0 && !(dim == 1 && center == 1)) return "";
    for (const auto& e : kCatalog)
        if (e.dim == dim && e.neg == sig.n_neg && e.pos == sig.n_pos && e.center == center)
            return e.name;
    // so(p, q): dim = n(n-1)/2, negative part C(p,2)+C(q,2), positive pq
    for (int n = 2; n <= 40; ++n) {
        if (n * (n - 1) / 2 != dim) continue;
        for (int q = 0; 2 * q <= n; ++q) {
            int p = n - q;
            int neg = p * (p - 1) / 2 + q * (q - 1) / 2;
            int pos = p * q;
            if (neg == sig.n_neg && pos == sig.n_pos) {
                if (q == 0) return "so(" + std::to_string(p) + ")";
                return "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
            }
        }
    }
    return "";
}

std::vector<std::vector<TableCell>> magic_square_table(SquareKind kind, bool split) {
    if (kind == SquareKind::L3sym) throw std::invalid_argument("tables are built for the l2/l3 kinds");
    const std::vector<AlgName> cols{AlgName::R, AlgName::C, AlgName::H, AlgName::O};
    const std::vector<AlgName> rows =
        split ? std::vector<AlgName>{AlgName::R, AlgName::Cs, AlgName::Hs, AlgName::Os} : cols;
    std::vector<std::vector<TableCell>> out;
    for (AlgName k2 : rows) {
        std::vector<TableCell> row;
        for (AlgName k1 : cols) {
            const MagicSquareEntry& e =
                (kind == SquareKind::L2) ? build_L2(k1, k2) : build_L3(k1, k2);
            TableCell cell;
            cell.k1 = k1;
            cell.k2 = k2;
            cell.dim = e.algebra.dim();
            cell.sig = e.algebra.killing_signature();
            cell.name = real_form_label(cell.dim, cell.sig, e.algebra.center_dim());
            row.push_back(std::move(cell));
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace magicsq
