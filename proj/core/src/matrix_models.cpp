#include "magicsq/matrix_models.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace magicsq {
namespace {

QVector flatten_km(const KMatrix& m) {
    const int n = m.n(), nu = m.algebra()->dim();
    QVector out(static_cast<size_t>(n) * n * nu);
    int pos = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            for (int b = 0; b < nu; ++b) out[pos++] = m.at(r, c)[b];
    return out;
}

KMatrix unflatten_km(const CompositionAlgebra* alg, int n, const QVector& v) {
    KMatrix m(alg, n);
    const int nu = alg->dim();
    int pos = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            for (int b = 0; b < nu; ++b) m.at(r, c)[b] = v[pos++];
    return m;
}

SpanSolver km_span(const std::vector<KMatrix>& mats, int flat_dim) {
    SpanSolver s(flat_dim);
    for (const auto& m : mats) s.add(flatten_km(m));
    return s;
}

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

// Structure constants from raw matrix commutators in the given basis.
LieAlgebra algebra_from_km_basis(const std::vector<KMatrix>& basis, std::vector<std::string> labels,
                                 const std::string& what) {
    const int dim = static_cast<int>(basis.size());
    LieAlgebra L(dim, std::move(labels));
    if (dim == 0) return L;
    const int flat = basis[0].n() * basis[0].n() * basis[0].algebra()->dim();
    SpanSolver span = km_span(basis, flat);
    if (span.rank() != dim) throw std::logic_error(what + ": basis is not linearly independent");
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            QVector c = express_or_throw(span, flatten_km(kcommutator(basis[i], basis[j])),
                                         what + " commutator");
            L.set_bracket(i, j, to_sparse(c));
        }
    return L;
}

// Basis of the solution space of a linear matrix relation, with optional
// vanishing of chosen trace components on top.
std::vector<KMatrix> relation_kernel(const CompositionAlgebra& k, int n,
                                     const std::function<KMatrix(const KMatrix&)>& rel,
                                     const std::vector<int>& zero_trace_units) {
    const int nu = k.dim();
    const int vars = n * n * nu;
    const int extra = static_cast<int>(zero_trace_units.size());
    QMatrix constraints(vars + extra, vars);
    for (int u = 0; u < vars; ++u) {
        QVector e(vars);
        e[u] = 1;
        QVector img = flatten_km(rel(unflatten_km(&k, n, e)));
        for (int r = 0; r < vars; ++r) constraints.at(r, u) = img[r];
    }
    for (int t = 0; t < extra; ++t) {
        const int b = zero_trace_units[t];
        for (int i = 0; i < n; ++i) constraints.at(vars + t, (i * n + i) * nu + b) = 1;
    }
    std::vector<KMatrix> out;
    for (const auto& v : kernel_basis(constraints)) out.push_back(unflatten_km(&k, n, v));
    return out;
}

std::vector<std::string> generic_labels(const std::string& prefix, int count) {
    std::vector<std::string> labels(count);
    for (int i = 0; i < count; ++i) labels[i] = prefix + std::to_string(i);
    return labels;
}

MatrixLieAlgebra from_kernel(AlgName kn, int n, std::string relation,
                             const std::function<KMatrix(const KMatrix&)>& rel,
                             const std::vector<int>& zero_trace_units, const std::string& what) {
    const CompositionAlgebra& k = CompositionAlgebra::get(kn);
    MatrixLieAlgebra out;
    out.k = kn;
    out.n = n;
    out.relation = std::move(relation);
    out.basis = relation_kernel(k, n, rel, zero_trace_units);
    out.algebra = algebra_from_km_basis(out.basis, generic_labels("b", static_cast<int>(out.basis.size())), what);
    return out;
}

std::string metric_str(const std::vector<int>& gsigns) {
    std::string s = "diag(";
    for (size_t i = 0; i < gsigns.size(); ++i) {
        if (i) s += ",";
        s += (gsigns[i] > 0 ? "+1" : "-1");
    }
    return s + ")";
}

// Q-matrix acting on K entry coordinates that applies an so-generator to
// the imaginary part; kills the real unit.
QMatrix embed_imaginary(const QMatrix& s, int nu) {
    QMatrix op(nu, nu);
    for (int r = 0; r < nu - 1; ++r)
        for (int c = 0; c < nu - 1; ++c) op.at(r + 1, c + 1) = s.at(r, c);
    return op;
}

// Decomposition of Der H_n(K) over the span of commutator maps C_A for
// antihermitian traceless A and of entrywise so/derivation actions on K.
struct DerDecomposition {
    std::vector<KMatrix> amats;     // the A generators, basis order
    std::vector<QMatrix> entry_ops; // the entrywise K-operators
    SpanSolver solver;              // over flattened Jordan operators
    int a_count = 0;

    DerDecomposition(const JordanAlgebra& J, std::vector<KMatrix> amats_in,
                     std::vector<QMatrix> entry_in)
        : amats(std::move(amats_in)), entry_ops(std::move(entry_in)), solver(J.dim() * J.dim()) {
        a_count = static_cast<int>(amats.size());
        for (const auto& a : amats) solver.add(J.C_op(a).flatten());
        for (const auto& e : entry_ops) solver.add(J.elementwise_op(e).flatten());
        if (solver.rank() != a_count + static_cast<int>(entry_ops.size()))
            throw std::logic_error("derivation generators are not independent");
    }

    QVector coords_of(const QMatrix& der_op, const std::string& what) const {
        return express_or_throw(solver, der_op.flatten(), what);
    }
};

void add_block(QMatrix& m, int row0, int col0, const QMatrix& b, const Rational& scale) {
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
            if (!b.at(r, c).is_zero()) m.at(row0 + r, col0 + c) += scale * b.at(r, c);
}

// K-matrix block write: target (r0..r0+k, c0..c0+k) += scale * b.
void add_km_block(KMatrix& m, int row0, int col0, const KMatrix& b, const Rational& scale) {
    for (int r = 0; r < b.n(); ++r)
        for (int c = 0; c < b.n(); ++c)
            for (int bb = 0; bb < b.algebra()->dim(); ++bb)
                m.at(row0 + r, col0 + c)[bb] += scale * b.at(r, c)[bb];
}

IsoCheck checked(std::string name, const LieAlgebra& src, const LieAlgebra& dst, QMatrix m) {
    LieMorphism f{&src, &dst, std::move(m)};
    MorphismReport rep = check_morphism(f);
    return IsoCheck{std::move(name), std::move(f.matrix), rep};
}

}  // namespace

MatrixLieAlgebra build_so_metric(const std::vector<int>& gsigns) {
    const CompositionAlgebra& R = CompositionAlgebra::get(AlgName::R);
    const int n = static_cast<int>(gsigns.size());
    MatrixLieAlgebra out;
    out.k = AlgName::R;
    out.n = n;
    out.relation = "A^T G + G A = 0, G = " + metric_str(gsigns);
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            labels.push_back("s" + std::to_string(a) + "," + std::to_string(b));
    for (const auto& q : CompositionAlgebra::so_basis(gsigns)) {
        KMatrix m(&R, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c)[0] = q.at(r, c);
        out.basis.push_back(std::move(m));
    }
    out.algebra = algebra_from_km_basis(out.basis, std::move(labels), "so" + metric_str(gsigns));
    return out;
}

MatrixLieAlgebra build_so(int p, int q) {
    std::vector<int> g(p, 1);
    g.insert(g.end(), q, -1);
    return build_so_metric(g);
}

MatrixLieAlgebra build_su(int p, int q) {
    const int n = p + q;
    const CompositionAlgebra& C = CompositionAlgebra::get(AlgName::C);
    KMatrix G(&C, n);
    for (int i = 0; i < n; ++i) G.at(i, i)[0] = (i < p) ? 1 : -1;
    auto rel = [G](const KMatrix& a) { return a.conj_transpose() * G + G * a; };
    return from_kernel(AlgName::C, n, "A^+ G + G A = 0, tr A = 0, G = diag(+1 x " +
                       std::to_string(p) + ", -1 x " + std::to_string(q) + ")",
                       rel, {0, 1},
                       "su(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

MatrixLieAlgebra build_sq(int n) {
    auto rel = [](const KMatrix& a) { return a.conj_transpose() + a; };
    return from_kernel(AlgName::H, n, "A^+ + A = 0", rel, {}, "sq(" + std::to_string(n) + ")");
}

MatrixLieAlgebra build_sp2n(AlgName kn, int n) {
    if (kn != AlgName::R && kn != AlgName::C && kn != AlgName::H)
        throw std::invalid_argument("sp(2n, K) needs associative division K");
    const CompositionAlgebra& k = CompositionAlgebra::get(kn);
    KMatrix J(&k, 2 * n);
    for (int i = 0; i < n; ++i) {
        J.at(i, n + i)[0] = 1;
        J.at(n + i, i)[0] = -1;
    }
    auto rel = [J](const KMatrix& a) { return a.conj_transpose() * J + J * a; };
    // The relation forces a real trace; over C the imaginary trace spans a
    // central line and is removed, over R and H nothing remains to remove.
    std::vector<int> zt;
    if (kn == AlgName::C) zt.push_back(1);
    return from_kernel(kn, 2 * n, "A^+ J + J A = 0, J = [[0,I],[-I,0]]", rel, zt,
                       "sp(" + std::to_string(2 * n) + "," + to_string(kn) + ")");
}

MatrixLieAlgebra build_sl(AlgName kn, int n) {
    if (kn != AlgName::R && kn != AlgName::C && kn != AlgName::H)
        throw std::invalid_argument("sl(n, K) needs associative division K");
    const CompositionAlgebra& k = CompositionAlgebra::get(kn);
    auto rel = [&k, n](const KMatrix&) { return KMatrix(&k, n); };
    std::vector<int> zt{0};
    if (kn == AlgName::C) zt.push_back(1);  // commutative: imaginary trace is central
    return from_kernel(kn, n, kn == AlgName::H ? "Re tr A = 0" : "tr A = 0", rel, zt,
                       "sl(" + std::to_string(n) + "," + to_string(kn) + ")");
}

AntihermitianModel build_sa3(AlgName kn) {
    const CompositionAlgebra& k = CompositionAlgebra::get(kn);
    const int nu = k.dim();
    const std::vector<QMatrix>& derk = k.derivation_basis();
    const int d = static_cast<int>(derk.size());
    std::vector<KMatrix> a3 = antihermitian_basis(k, 3, true);
    const int adim = static_cast<int>(a3.size());
    const int dim = d + adim;

    std::vector<std::string> labels(dim);
    for (int i = 0; i < d; ++i) labels[i] = "D" + std::to_string(i);
    {
        int idx = d;
        for (int r = 0; r < 3; ++r)
            for (int c = r + 1; c < 3; ++c)
                for (int b = 0; b < nu; ++b)
                    labels[idx++] = "a" + std::to_string(r) + std::to_string(c) + ".e" + std::to_string(b);
        for (int dd = 1; dd < 3; ++dd)
            for (int b = 1; b < nu; ++b)
                labels[idx++] = "d" + std::to_string(dd) + ".e" + std::to_string(b);
    }

    LieAlgebra L(dim, std::move(labels));
    SpanSolver der_solver = matrix_span(derk, nu * nu);
    SpanSolver a_solver = km_span(a3, 9 * nu);

    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            QVector c = express_or_throw(der_solver, commutator(derk[i], derk[j]).flatten(),
                                         "coefficient-derivation commutator");
            L.set_bracket(i, j, to_sparse(c));
        }
    for (int i = 0; i < d; ++i)
        for (int q = 0; q < adim; ++q) {
            KMatrix img(&k, 3);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) img.at(r, c) = derk[i].apply(a3[q].at(r, c));
            QVector coords = express_or_throw(a_solver, flatten_km(img), "entrywise derivative");
            SparseVec v;
            for (int t = 0; t < adim; ++t)
                if (!coords[t].is_zero()) v.emplace_back(d + t, coords[t]);
            L.set_bracket(i, d + q, std::move(v));
        }
    for (int p = 0; p < adim; ++p)
        for (int q = p + 1; q < adim; ++q) {
            KMatrix m = kcommutator(a3[p], a3[q]);
            QVector tr = m.trace();
            KMatrix traceless = m;
            for (int i = 0; i < 3; ++i)
                for (int b = 0; b < nu; ++b) traceless.at(i, i)[b] -= tr[b] / Rational(3);
            SparseVec v;
            QVector acoords = express_or_throw(a_solver, flatten_km(traceless), "traceless commutator part");
            for (int t = 0; t < adim; ++t)
                if (!acoords[t].is_zero()) v.emplace_back(d + t, acoords[t]);
            QMatrix dsum(nu, nu);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) dsum = dsum + k.D_xy(a3[p].at(i, j), a3[q].at(j, i));
            if (!dsum.is_zero()) {
                QVector dcoords = express_or_throw(der_solver, dsum.scaled_by(Rational(1, 3)).flatten(),
                                                   "derivation part of a commutator");
                for (int t = 0; t < d; ++t)
                    if (!dcoords[t].is_zero()) v.emplace_back(t, dcoords[t]);
            }
            L.set_bracket(d + p, d + q, std::move(v));
        }

    auto jr = L.jacobi_violations();
    if (jr.violations != 0) {
        std::ostringstream msg;
        msg << "antihermitian model over " << to_string(kn) << " fails Jacobi at ("
            << L.label(jr.first_witness[0]) << ", " << L.label(jr.first_witness[1]) << ", "
            << L.label(jr.first_witness[2]) << ")";
        throw std::runtime_error(msg.str());
    }

    AntihermitianModel out;
    out.k = kn;
    out.der_dim = d;
    out.matrices = std::move(a3);
    out.algebra = std::move(L);
    return out;
}

ConformalAlgebra build_str_con(AlgName kn, int n) {
    const JordanAlgebra& J = JordanAlgebra::get(kn, n);
    const int jdim = J.dim();
    const std::vector<QMatrix>& derb = J.derivation_basis();
    const std::vector<QVector> hb = J.traceless_basis();
    const int d = static_cast<int>(derb.size());
    const int h = static_cast<int>(hb.size());
    const int r0 = d + h;
    const int jx0 = r0 + 1, jy0 = jx0 + jdim;
    const int dim = jy0 + jdim;

    // Jordan product normalized to unit identity: X o Y = (1/2)(XY + YX).
    // The operator summand coordinates mean: H-coordinate a = the operator
    // L(hb[a]) of the normalized product, r0 = the identity operator.
    const Rational s(1, 2);

    std::vector<std::string> labels(dim);
    for (int i = 0; i < d; ++i) labels[i] = "D" + std::to_string(i);
    for (int a = 0; a < h; ++a) labels[d + a] = "H" + std::to_string(a);
    labels[r0] = "r0";
    for (int p = 0; p < jdim; ++p) labels[jx0 + p] = "X[" + J.basis_label(p) + "]";
    for (int p = 0; p < jdim; ++p) labels[jy0 + p] = "Y[" + J.basis_label(p) + "]";

    LieAlgebra L(dim, labels);
    SpanSolver der_solver = matrix_span(derb, jdim * jdim);
    SpanSolver h_solver(jdim);
    for (const auto& v : hb) h_solver.add(v);
    std::vector<QMatrix> lops;
    lops.reserve(h);
    for (int a = 0; a < h; ++a) lops.push_back(J.L_op(hb[a]).scaled_by(s));

    // derivations among themselves and on the operator summand
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j)
            L.set_bracket(i, j, to_sparse(express_or_throw(
                                    der_solver, commutator(derb[i], derb[j]).flatten(),
                                    "derivation commutator")));
        for (int a = 0; a < h; ++a) {
            QVector da = derb[i].apply(hb[a]);
            if (is_zero_vector(da)) continue;
            QVector coords = express_or_throw(h_solver, da, "derivative of a traceless element");
            SparseVec v;
            for (int ap = 0; ap < h; ++ap)
                if (!coords[ap].is_zero()) v.emplace_back(d + ap, coords[ap]);
            L.set_bracket(i, d + a, std::move(v));
        }
    }

    // [L_A, L_B] is a derivation; with the (1/2)-normalized product the
    // coefficient is exactly the operator commutator of the halved L's.
    std::vector<QVector> hh(static_cast<size_t>(h) * h);
    for (int a = 0; a < h; ++a)
        for (int c = a + 1; c < h; ++c) {
            hh[a * h + c] = express_or_throw(der_solver, commutator(lops[a], lops[c]).flatten(),
                                             "multiplication-operator commutator");
            SparseVec v;
            for (int t = 0; t < d; ++t)
                if (!hh[a * h + c][t].is_zero()) v.emplace_back(t, hh[a * h + c][t]);
            L.set_bracket(d + a, d + c, std::move(v));
        }

    // operator summand acting on the two Jordan copies
    for (int i = 0; i < d; ++i)
        for (int p = 0; p < jdim; ++p) {
            QVector col = derb[i].column(p);
            SparseVec vx, vy;
            for (int q = 0; q < jdim; ++q) {
                if (col[q].is_zero()) continue;
                vx.emplace_back(jx0 + q, col[q]);
                vy.emplace_back(jy0 + q, col[q]);
            }
            if (!vx.empty()) L.set_bracket(i, jx0 + p, std::move(vx));
            if (!vy.empty()) L.set_bracket(i, jy0 + p, std::move(vy));
        }
    for (int a = 0; a < h; ++a)
        for (int p = 0; p < jdim; ++p) {
            QVector col = lops[a].column(p);
            SparseVec vx, vy;
            for (int q = 0; q < jdim; ++q) {
                if (col[q].is_zero()) continue;
                vx.emplace_back(jx0 + q, col[q]);
                vy.emplace_back(jy0 + q, -col[q]);
            }
            if (!vx.empty()) L.set_bracket(d + a, jx0 + p, std::move(vx));
            if (!vy.empty()) L.set_bracket(d + a, jy0 + p, std::move(vy));
        }
    for (int p = 0; p < jdim; ++p) {
        L.set_bracket(r0, jx0 + p, SparseVec{{jx0 + p, Rational(1)}});
        L.set_bracket(r0, jy0 + p, SparseVec{{jy0 + p, Rational(-1)}});
    }

    // the mixed bracket of the two Jordan copies
    std::vector<QMatrix> lbasis;
    std::vector<QVector> units;
    lbasis.reserve(jdim);
    for (int p = 0; p < jdim; ++p) {
        lbasis.push_back(J.L_op_basis(p).scaled_by(s));
        QVector e(jdim);
        e[p] = 1;
        units.push_back(std::move(e));
    }
    for (int p = 0; p < jdim; ++p)
        for (int q = 0; q < jdim; ++q) {
            SparseVec v;
            QVector dpart = express_or_throw(
                der_solver, commutator(lbasis[p], lbasis[q]).scaled_by(Rational(2)).flatten(),
                "derivation part of a mixed bracket");
            for (int t = 0; t < d; ++t)
                if (!dpart[t].is_zero()) v.emplace_back(t, dpart[t]);
            QVector st = J.star(units[p], units[q]);
            if (!is_zero_vector(st)) {
                QVector hpart = express_or_throw(h_solver, st, "traceless part of a mixed bracket");
                for (int t = 0; t < h; ++t)
                    if (!hpart[t].is_zero()) v.emplace_back(d + t, hpart[t]);
            }
            Rational rpart = J.trace_form(units[p], units[q]) / Rational(n);
            if (!rpart.is_zero()) v.emplace_back(r0, rpart);
            if (!v.empty()) L.set_bracket(jx0 + p, jy0 + q, std::move(v));
        }

    auto jr = L.jacobi_violations();
    if (jr.violations != 0) {
        std::ostringstream msg;
        msg << "conformal algebra of H_" << n << "(" << to_string(kn) << ") fails Jacobi at ("
            << L.label(jr.first_witness[0]) << ", " << L.label(jr.first_witness[1]) << ", "
            << L.label(jr.first_witness[2]) << ")";
        throw std::runtime_error(msg.str());
    }

    // the reduced structure algebra and the plain derivation algebra reuse
    // the leading blocks of the constants
    LieAlgebra der_alg(d), str_alg(d + h);
    for (int i = 0; i < d; ++i) der_alg.set_label(i, labels[i]);
    for (int i = 0; i < d + h; ++i) str_alg.set_label(i, labels[i]);
    for (int i = 0; i < d + h; ++i)
        for (int j = i + 1; j < d + h; ++j) {
            SparseVec v = L.bracket_upper(i, j);
            if (i < d && j < d) der_alg.set_bracket(i, j, v);
            str_alg.set_bracket(i, j, std::move(v));
        }

    ConformalAlgebra out;
    out.k = kn;
    out.n = n;
    out.product_scale = s;
    out.der = std::move(der_alg);
    out.str_prime = std::move(str_alg);
    out.con = std::move(L);
    out.summands = {SummandRange{"der", 0, d}, SummandRange{"h", d, d + h},
                    SummandRange{"r0", r0, r0 + 1}, SummandRange{"jx", jx0, jx0 + jdim},
                    SummandRange{"jy", jy0, jy0 + jdim}};
    return out;
}

L2SoIso iso_L2_so(AlgName k1n, AlgName k2n) {
    if (is_split(k1n)) throw std::invalid_argument("first algebra must be a division algebra");
    const MagicSquareEntry& src = build_L2(k1n, k2n);
    const CompositionAlgebra& K1 = CompositionAlgebra::get(k1n);
    const CompositionAlgebra& K2 = CompositionAlgebra::get(k2n);
    const JordanAlgebra& J = JordanAlgebra::get(k1n, 2);
    const int nu1 = K1.dim(), nu2 = K2.dim();
    const int m2 = nu2 - 1;
    const std::vector<int> g2 = K2.imaginary_metric();

    std::vector<int> gsigns = g2;
    gsigns.push_back(1);
    gsigns.push_back(1);
    for (int s : K1.imaginary_metric()) gsigns.push_back(s);
    MatrixLieAlgebra target = build_so_metric(gsigns);
    const int N = nu1 + nu2;
    const int o2 = m2, o3 = m2 + 1, oK1 = m2 + 2;

    // Generator images.  The quadratic space is K2' + R^2 + K1'; rotations
    // in the two distinguished real directions and the K1' directions come
    // from Der H_2(K1), rotations mixing in K2' come from the tensor
    // summand, and the K2'-block rotations from the last summand.
    auto pair_image = [&](int row, int col, const Rational& upper, const Rational& lower) {
        QMatrix m(N, N);
        m.at(row, col) = upper;
        m.at(col, row) = lower;
        return m;
    };

    const std::vector<QMatrix> so1 = CompositionAlgebra::so_basis(K1.imaginary_metric());
    std::vector<KMatrix> ahb = antihermitian_basis(K1, 2, true);
    std::vector<QMatrix> entry_ops;
    for (const auto& s : so1) entry_ops.push_back(embed_imaginary(s, nu1));
    DerDecomposition dd(J, std::move(ahb), std::move(entry_ops));

    std::vector<QMatrix> gen_images;  // aligned with dd's generator order
    gen_images.push_back(pair_image(o2, o3, Rational(2), Rational(-2)));  // J
    for (int u = 1; u < nu1; ++u)
        gen_images.push_back(pair_image(o2, oK1 + u - 1, Rational(2), Rational(-2)));  // A2(e_u)
    for (int u = 1; u < nu1; ++u)
        gen_images.push_back(pair_image(oK1 + u - 1, o3, Rational(2), Rational(-2)));  // A1(e_u)
    for (const auto& s : so1) {
        QMatrix m(N, N);
        add_block(m, oK1, oK1, s, Rational(1));
        gen_images.push_back(std::move(m));
    }

    SpanSolver tgt_solver(N * N);
    for (const auto& b : target.basis) tgt_solver.add(flatten_km(b));

    QMatrix M(target.algebra.dim(), src.algebra.dim());
    auto set_image = [&](int col, const QMatrix& img) {
        QVector coords = express_or_throw(tgt_solver, img.flatten(), "image of a generator");
        for (int r = 0; r < target.algebra.dim(); ++r) M.at(r, col) = coords[r];
    };

    const SummandRange& der_rng = src.summand("DerH2");
    const std::vector<QMatrix>& derb = J.derivation_basis();
    for (int i = 0; i < der_rng.size(); ++i) {
        QVector coeff = dd.coords_of(derb[i], "a 2x2 hermitian derivation");
        QMatrix img(N, N);
        for (size_t t = 0; t < gen_images.size(); ++t)
            if (!coeff[t].is_zero()) img = img + gen_images[t].scaled_by(coeff[t]);
        set_image(der_rng.begin + i, img);
    }

    const SummandRange& mid = src.summand("HprimeK2");
    const int hdim = 1 + nu1;
    for (int a = 0; a < hdim; ++a)
        for (int b = 0; b < m2; ++b) {
            int col_slot;  // which of the R^2 + K1' directions pairs with e_{b+1}
            if (a == 0) col_slot = o2;
            else if (a == 1) col_slot = o3;
            else col_slot = oK1 + (a - 2);
            QMatrix img = pair_image(b, col_slot, Rational(2), Rational(-2) * Rational(g2[b]));
            set_image(mid.begin + a * m2 + b, img);
        }

    const SummandRange& last = src.summand("soK2");
    const std::vector<QMatrix> so2 = CompositionAlgebra::so_basis(g2);
    for (int g = 0; g < last.size(); ++g) {
        QMatrix img(N, N);
        add_block(img, 0, 0, so2[g], Rational(1));
        set_image(last.begin + g, img);
    }

    L2SoIso out;
    out.iso = checked("l2(" + to_string(k1n) + "," + to_string(k2n) + ") -> so" + metric_str(gsigns),
                      src.algebra, target.algebra, std::move(M));
    out.target = std::move(target);
    return out;
}

ConIso iso_conformal(AlgName kn, int n) {
    ConformalAlgebra target = build_str_con(kn, n);
    const JordanAlgebra& J = JordanAlgebra::get(kn, n);
    const int jdim = J.dim();
    const std::vector<QVector> hb = J.traceless_basis();
    const int h = static_cast<int>(hb.size());
    const int d = target.der.dim();
    const int r0 = d + h, jx0 = r0 + 1, jy0 = jx0 + jdim;
    const QVector id = J.identity_coords();

    auto entry = [&](AlgName k2) -> const MagicSquareEntry& {
        return n == 3 ? build_L3(kn, k2) : build_L2(kn, k2);
    };

    // conformal: the split-quaternion row
    const MagicSquareEntry& csrc = entry(AlgName::Hs);
    QMatrix CM(target.con.dim(), csrc.algebra.dim());
    for (int i = 0; i < d; ++i) CM.at(i, i) = 1;
    const SummandRange& cmid = csrc.summand("HprimeK2");
    for (int a = 0; a < h; ++a) {
        // unit order in the tensor summand: e1, e2, e3 of the split quaternions
        const int col1 = cmid.begin + a * 3 + 0;
        const int col2 = cmid.begin + a * 3 + 1;
        const int col3 = cmid.begin + a * 3 + 2;
        CM.at(d + a, col2) = 2;
        for (int p = 0; p < jdim; ++p) {
            if (hb[a][p].is_zero()) continue;
            CM.at(jx0 + p, col3) = hb[a][p];
            CM.at(jy0 + p, col3) = hb[a][p];
            CM.at(jx0 + p, col1) = -hb[a][p];
            CM.at(jy0 + p, col1) = hb[a][p];
        }
    }
    const SummandRange& clast = csrc.summand(n == 3 ? "DerK2" : "soK2");
    if (n == 2) {
        // so(K2') generators in pair order (e1,e2), (e1,e3), (e2,e3)
        for (int p = 0; p < jdim; ++p) {
            if (id[p].is_zero()) continue;
            const Rational half = id[p] * Rational(1, 2);
            CM.at(jx0 + p, clast.begin + 0) = half;
            CM.at(jy0 + p, clast.begin + 0) = half;
            CM.at(jx0 + p, clast.begin + 2) = half;
            CM.at(jy0 + p, clast.begin + 2) = -half;
        }
        CM.at(r0, clast.begin + 1) = -1;
    } else {
        const CompositionAlgebra& Hs = CompositionAlgebra::get(AlgName::Hs);
        SpanSolver ad_span(Hs.dim() * Hs.dim());
        for (int u = 1; u < Hs.dim(); ++u)
            ad_span.add((Hs.L_matrix(Hs.unit(u)) - Hs.R_matrix(Hs.unit(u))).flatten());
        const std::vector<QMatrix>& derk = Hs.derivation_basis();
        for (int g = 0; g < clast.size(); ++g) {
            QVector c = express_or_throw(ad_span, derk[g].flatten(),
                                         "split-quaternion derivation over inner generators");
            const int col = clast.begin + g;
            for (int p = 0; p < jdim; ++p) {
                if (id[p].is_zero()) continue;
                CM.at(jx0 + p, col) = (c[2] - c[0]) * id[p];
                CM.at(jy0 + p, col) = (c[2] + c[0]) * id[p];
            }
            CM.at(r0, col) = Rational(2) * c[1];
        }
    }

    // reduced structure: the split-complex row
    const MagicSquareEntry& ssrc = entry(AlgName::Cs);
    QMatrix SM(target.str_prime.dim(), ssrc.algebra.dim());
    for (int i = 0; i < d; ++i) SM.at(i, i) = 1;
    const SummandRange& smid = ssrc.summand("HprimeK2");
    for (int a = 0; a < h; ++a) SM.at(d + a, smid.begin + a) = 2;

    // derivations: the real row
    const MagicSquareEntry& dsrc = entry(AlgName::R);
    QMatrix DM = QMatrix::identity(d);

    const std::string tag = "H_" + std::to_string(n) + "(" + to_string(kn) + ")";
    ConIso out;
    out.con = checked((n == 3 ? "l3(" : "l2(") + to_string(kn) + ",Hs) -> con " + tag, csrc.algebra,
                      target.con, std::move(CM));
    out.str = checked((n == 3 ? "l3(" : "l2(") + to_string(kn) + ",Cs) -> str' " + tag, ssrc.algebra,
                      target.str_prime, std::move(SM));
    out.der = checked((n == 3 ? "l3(" : "l2(") + to_string(kn) + ",R) -> der " + tag, dsrc.algebra,
                      target.der, std::move(DM));
    out.target = std::move(target);
    return out;
}

MatrixModelIsos iso_matrix_models(AlgName kn) {
    if (is_split(kn)) throw std::invalid_argument("matrix models need a division algebra");
    const CompositionAlgebra& k = CompositionAlgebra::get(kn);
    const JordanAlgebra& J = JordanAlgebra::get(kn, 3);
    const int nu = k.dim();

    MatrixModelIsos out;
    out.sa3 = build_sa3(kn);
    const MagicSquareEntry& rsrc = build_L3(kn, AlgName::R);

    // commutator-map identification with the derivation algebra
    {
        const int sdim = out.sa3.algebra.dim();
        QMatrix M(rsrc.algebra.dim(), sdim);
        SpanSolver der_solver = matrix_span(J.derivation_basis(), J.dim() * J.dim());
        for (int i = 0; i < out.sa3.der_dim; ++i) {
            QVector c = express_or_throw(der_solver,
                                         J.elementwise_op(k.derivation_basis()[i]).flatten(),
                                         "entrywise derivation inside Der H_3");
            for (int r = 0; r < rsrc.algebra.dim(); ++r) M.at(r, i) = c[r];
        }
        for (size_t q = 0; q < out.sa3.matrices.size(); ++q) {
            QVector c = express_or_throw(der_solver, J.C_op(out.sa3.matrices[q]).flatten(),
                                         "commutator map inside Der H_3");
            for (int r = 0; r < rsrc.algebra.dim(); ++r)
                M.at(r, out.sa3.der_dim + static_cast<int>(q)) = c[r];
        }
        out.from_sa3 = checked("antihermitian model -> l3(" + to_string(kn) + ",R)",
                               out.sa3.algebra, rsrc.algebra, M);
        out.to_sa3 = checked("l3(" + to_string(kn) + ",R) -> antihermitian model", rsrc.algebra,
                             out.sa3.algebra, inverse(M));
    }

    if (kn == AlgName::O) return out;
    out.has_sl_sp = true;

    // Inner coefficient derivations ad_q for imaginary units q; trivial in
    // the commutative case.
    std::vector<QMatrix> inner;
    std::vector<int> inner_units;
    for (int u = 1; u < nu; ++u) {
        QMatrix ad = k.L_matrix(k.unit(u)) - k.R_matrix(k.unit(u));
        if (ad.is_zero()) continue;
        inner.push_back(std::move(ad));
        inner_units.push_back(u);
    }

    // special linear: the split-complex row
    out.sl = build_sl(kn, 3);
    {
        const MagicSquareEntry& src = build_L3(kn, AlgName::Cs);
        DerDecomposition dd(J, antihermitian_basis(k, 3, true), inner);

        SpanSolver tgt(9 * nu);
        for (const auto& b : out.sl.basis) tgt.add(flatten_km(b));
        QMatrix M(out.sl.algebra.dim(), src.algebra.dim());
        auto set_image = [&](int col, const KMatrix& img) {
            QVector c = express_or_throw(tgt, flatten_km(img), "special-linear image");
            for (int r = 0; r < out.sl.algebra.dim(); ++r) M.at(r, col) = c[r];
        };

        const SummandRange& der_rng = src.summand("DerH3");
        for (int i = 0; i < der_rng.size(); ++i) {
            QVector c = dd.coords_of(J.derivation_basis()[i], "a 3x3 hermitian derivation");
            KMatrix img(&k, 3);
            for (int t = 0; t < dd.a_count; ++t)
                if (!c[t].is_zero()) add_km_block(img, 0, 0, dd.amats[t], c[t]);
            for (size_t t = 0; t < inner_units.size(); ++t) {
                const Rational& q = c[dd.a_count + static_cast<int>(t)];
                if (q.is_zero()) continue;
                for (int i3 = 0; i3 < 3; ++i3) img.at(i3, i3)[inner_units[t]] += q;
            }
            set_image(der_rng.begin + i, img);
        }
        const SummandRange& mid = src.summand("HprimeK2");
        const std::vector<QVector> hb = J.traceless_basis();
        for (size_t a = 0; a < hb.size(); ++a)
            set_image(mid.begin + static_cast<int>(a), J.to_matrix(hb[a]));
        out.to_sl = checked("l3(" + to_string(kn) + ",Cs) -> sl(3," + to_string(kn) + ")",
                            src.algebra, out.sl.algebra, std::move(M));
    }

    // symplectic: the split-quaternion row
    out.sp = build_sp2n(kn, 3);
    {
        const MagicSquareEntry& src = build_L3(kn, AlgName::Hs);
        DerDecomposition dd(J, antihermitian_basis(k, 3, true), inner);

        SpanSolver tgt(36 * nu);
        for (const auto& b : out.sp.basis) tgt.add(flatten_km(b));
        QMatrix M(out.sp.algebra.dim(), src.algebra.dim());
        auto set_image = [&](int col, const KMatrix& img) {
            QVector c = express_or_throw(tgt, flatten_km(img), "symplectic image");
            for (int r = 0; r < out.sp.algebra.dim(); ++r) M.at(r, col) = c[r];
        };
        const KMatrix I3 = KMatrix::identity(&k, 3);

        const SummandRange& der_rng = src.summand("DerH3");
        for (int i = 0; i < der_rng.size(); ++i) {
            QVector c = dd.coords_of(J.derivation_basis()[i], "a 3x3 hermitian derivation");
            KMatrix img(&k, 6);
            for (int t = 0; t < dd.a_count; ++t) {
                if (c[t].is_zero()) continue;
                add_km_block(img, 0, 0, dd.amats[t], c[t]);
                add_km_block(img, 3, 3, dd.amats[t], c[t]);
            }
            for (size_t t = 0; t < inner_units.size(); ++t) {
                const Rational& q = c[dd.a_count + static_cast<int>(t)];
                if (q.is_zero()) continue;
                for (int i6 = 0; i6 < 6; ++i6) img.at(i6, i6)[inner_units[t]] += q;
            }
            set_image(der_rng.begin + i, img);
        }
        const SummandRange& mid = src.summand("HprimeK2");
        const std::vector<QVector> hb = J.traceless_basis();
        for (size_t a = 0; a < hb.size(); ++a) {
            const KMatrix hm = J.to_matrix(hb[a]);
            KMatrix img1(&k, 6), img2(&k, 6), img3(&k, 6);
            add_km_block(img2, 0, 0, hm, Rational(1));
            add_km_block(img2, 3, 3, hm, Rational(-1));
            add_km_block(img3, 0, 3, hm, Rational(1));
            add_km_block(img3, 3, 0, hm, Rational(1));
            add_km_block(img1, 0, 3, hm, Rational(-1));
            add_km_block(img1, 3, 0, hm, Rational(1));
            set_image(mid.begin + static_cast<int>(a) * 3 + 0, img1);
            set_image(mid.begin + static_cast<int>(a) * 3 + 1, img2);
            set_image(mid.begin + static_cast<int>(a) * 3 + 2, img3);
        }
        const SummandRange& last = src.summand("DerK2");
        const CompositionAlgebra& Hs = CompositionAlgebra::get(AlgName::Hs);
        SpanSolver ad_span(16);
        for (int u = 1; u < 4; ++u)
            ad_span.add((Hs.L_matrix(Hs.unit(u)) - Hs.R_matrix(Hs.unit(u))).flatten());
        for (int g = 0; g < last.size(); ++g) {
            QVector c = express_or_throw(ad_span, Hs.derivation_basis()[g].flatten(),
                                         "split-quaternion derivation over inner generators");
            KMatrix img(&k, 6);
            add_km_block(img, 0, 3, I3, -c[0]);
            add_km_block(img, 3, 0, I3, c[0]);
            add_km_block(img, 0, 0, I3, c[1]);
            add_km_block(img, 3, 3, I3, -c[1]);
            add_km_block(img, 0, 3, I3, c[2]);
            add_km_block(img, 3, 0, I3, c[2]);
            set_image(last.begin + g, img);
        }
        out.to_sp = checked("l3(" + to_string(kn) + ",Hs) -> sp(6," + to_string(kn) + ")",
                            src.algebra, out.sp.algebra, std::move(M));
    }

    return out;
}

}  // namespace magicsq
