#include <doctest.h>

#include <magicsq/composition.hpp>
#include <magicsq/jordan.hpp>

#include <vector>

using namespace magicsq;

namespace {

const std::vector<AlgName>& division_algebras() {
    static const std::vector<AlgName> v{AlgName::R, AlgName::C, AlgName::H, AlgName::O};
    return v;
}

// Basis coordinate vector e_a.
QVector unit_vec(int dim, int a) {
    QVector v(dim);
    v[a] = Rational(1);
    return v;
}

// acc += c * (e_i . e_j) using the sparse product table.
void add_scaled_product(const JordanAlgebra& j, const Rational& c, int i, int k, QVector& acc) {
    for (const auto& [idx, coef] : j.product_basis(i, k)) acc[idx] += c * coef;
}

// acc += c * (e_i . v) for dense v.
void add_unit_times(const JordanAlgebra& j, const Rational& c, int i, const QVector& v, QVector& acc) {
    for (int k = 0; k < j.dim(); ++k)
        if (!v[k].is_zero()) add_scaled_product(j, c * v[k], i, k, acc);
}

}  // namespace

TEST_CASE("hermitian matrix algebra dimensions") {
    const int h2[] = {3, 4, 6, 10};
    const int h3[] = {6, 9, 15, 27};
    for (size_t i = 0; i < 4; ++i) {
        CHECK(JordanAlgebra::get(division_algebras()[i], 2).dim() == h2[i]);
        CHECK(JordanAlgebra::get(division_algebras()[i], 3).dim() == h3[i]);
    }
}

TEST_CASE("product is commutative and the identity acts by 2") {
    // With the product X.Y = XY + YX the identity matrix satisfies
    // I.X = 2X, so its multiplication operator is twice the identity map.
    for (AlgName k : division_algebras())
        for (int n : {2, 3}) {
            const auto& j = JordanAlgebra::get(k, n);
            for (int a = 0; a < j.dim(); ++a)
                for (int b = 0; b < j.dim(); ++b)
                    CHECK(j.product(unit_vec(j.dim(), a), unit_vec(j.dim(), b)) ==
                          j.product(unit_vec(j.dim(), b), unit_vec(j.dim(), a)));
            CHECK(j.L_op(j.identity_coords()) == QMatrix::identity(j.dim()).scaled_by(2));
        }
}

TEST_CASE("fully linearized Jordan identity on basis tuples") {
    // The Jordan identity (x.y).x^2 = x.(y.x^2) linearizes to
    //   sum over cyclic (u,v,w) of [L_{u.v}, L_w] z = 0,
    // which is multilinear, so checking it on basis quadruples proves it
    // for all elements.  The summand set is invariant under permuting
    // (u, v, w), so ordered representatives suffice.
    for (AlgName k : division_algebras())
        for (int n : {2, 3}) {
            const auto& j = JordanAlgebra::get(k, n);
            const int d = j.dim();
            long long bad = 0;
            for (int u = 0; u < d; ++u)
                for (int v = u; v < d; ++v)
                    for (int w = v; w < d; ++w)
                        for (int z = 0; z < d; ++z) {
                            QVector acc(d);
                            const int cyc[3][3] = {{u, v, w}, {v, w, u}, {w, u, v}};
                            for (const auto& t : cyc) {
                                // + (t0.t1).(t2.z)
                                for (const auto& [i, ci] : j.product_basis(t[0], t[1]))
                                    for (const auto& [m, cm] : j.product_basis(t[2], z))
                                        add_scaled_product(j, ci * cm, i, m, acc);
                                // - t2.((t0.t1).z)
                                QVector inner(d);
                                for (const auto& [i, ci] : j.product_basis(t[0], t[1]))
                                    add_scaled_product(j, ci, i, z, inner);
                                add_unit_times(j, Rational(-1), t[2], inner, acc);
                            }
                            if (!is_zero_vector(acc)) ++bad;
                        }
            CHECK(bad == 0);
        }
}

TEST_CASE("trace form is symmetric and associative") {
    for (AlgName k : division_algebras())
        for (int n : {2, 3}) {
            const auto& j = JordanAlgebra::get(k, n);
            const int d = j.dim();
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    CHECK(j.trace_form(unit_vec(j.dim(), a), unit_vec(j.dim(), b)) ==
                          j.trace_form(unit_vec(j.dim(), b), unit_vec(j.dim(), a)));
                    for (int c = 0; c < d; ++c)
                        CHECK(j.trace_form(j.product(unit_vec(j.dim(), a), unit_vec(j.dim(), b)), unit_vec(j.dim(), c)) ==
                              j.trace_form(unit_vec(j.dim(), a), j.product(unit_vec(j.dim(), b), unit_vec(j.dim(), c))));
                }
        }
}

TEST_CASE("matrix coordinates roundtrip") {
    for (AlgName k : division_algebras())
        for (int n : {2, 3}) {
            const auto& j = JordanAlgebra::get(k, n);
            for (int a = 0; a < j.dim(); ++a) {
                const KMatrix m = j.basis_matrix(a);
                CHECK(m.is_hermitian());
                CHECK(j.from_matrix(m) == unit_vec(j.dim(), a));
            }
        }
    const auto& j3 = JordanAlgebra::get(AlgName::H, 3);
    KMatrix skew(&j3.coeff(), 3);
    skew.at(0, 1) = j3.coeff().unit(1);  // not hermitian: missing conjugate mirror
    CHECK_THROWS(j3.from_matrix(skew));
}

TEST_CASE("multiplication operators match the product") {
    const auto& j = JordanAlgebra::get(AlgName::O, 3);
    for (int a = 0; a < j.dim(); ++a) {
        const QMatrix l = j.L_op_basis(a);
        for (int b = 0; b < j.dim(); ++b)
            CHECK(l.apply(unit_vec(j.dim(), b)) == j.product(unit_vec(j.dim(), a), unit_vec(j.dim(), b)));
    }
}

TEST_CASE("traceless basis spans the trace kernel") {
    for (AlgName k : division_algebras()) {
        const auto& j = JordanAlgebra::get(k, 3);
        const auto basis = j.traceless_basis();
        CHECK(static_cast<int>(basis.size()) == j.dim() - 1);
        for (const auto& v : basis) CHECK(j.trace(v).is_zero());
    }
}

TEST_CASE("commutation with traceless antihermitian matrices derives the product") {
    for (AlgName k : {AlgName::H, AlgName::O}) {
        const auto& j = JordanAlgebra::get(k, 3);
        for (const KMatrix& a : antihermitian_basis(j.coeff(), 3, /*traceless=*/true))
            CHECK(j.is_derivation(j.C_op(a)));
    }
}

TEST_CASE("off-diagonal commutation generators match their matrices") {
    const auto& j = JordanAlgebra::get(AlgName::O, 3);
    for (int i = 0; i < 3; ++i)
        for (int b = 0; b < 8; ++b) {
            const QVector x = j.coeff().unit(b);
            CHECK(j.F_op(i, x) == j.C_op(j.X_matrix(i, x)));
        }
}

TEST_CASE("coefficient derivations act entrywise as derivations") {
    for (AlgName k : {AlgName::H, AlgName::O}) {
        const auto& j = JordanAlgebra::get(k, 3);
        for (const QMatrix& d : j.coeff().derivation_basis())
            CHECK(j.is_derivation(j.elementwise_op(d)));
    }
    const auto& j = JordanAlgebra::get(AlgName::O, 3);
    QMatrix bad(8, 8);
    bad.at(0, 0) = 1;  // keeps the real unit alive, not entrywise-admissible
    CHECK_THROWS(j.elementwise_op(bad));
}

TEST_CASE("derivation algebra dimensions of the hermitian algebras") {
    const int der_h2[] = {1, 3, 10, 36};
    const int der_h3[] = {3, 8, 21, 52};
    for (size_t i = 0; i < 4; ++i) {
        CHECK(JordanAlgebra::get(division_algebras()[i], 2).derivation_basis().size() ==
              static_cast<size_t>(der_h2[i]));
        CHECK(JordanAlgebra::get(division_algebras()[i], 3).derivation_basis().size() ==
              static_cast<size_t>(der_h3[i]));
    }
}
