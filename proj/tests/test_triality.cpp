#include <doctest.h>

#include <magicsq/composition.hpp>
#include <magicsq/triality.hpp>

#include <vector>

using namespace magicsq;

TEST_CASE("triality algebra dimensions") {
    CHECK(TrialityAlgebra::get(AlgName::R).dim() == 0);
    CHECK(TrialityAlgebra::get(AlgName::C).dim() == 2);
    CHECK(TrialityAlgebra::get(AlgName::H).dim() == 9);
    CHECK(TrialityAlgebra::get(AlgName::O).dim() == 28);
    CHECK(TrialityAlgebra::get(AlgName::Cs).dim() == 2);
    CHECK(TrialityAlgebra::get(AlgName::Hs).dim() == 9);
    CHECK(TrialityAlgebra::get(AlgName::Os).dim() == 28);
}

TEST_CASE("basis elements satisfy the defining relation") {
    for (AlgName name : {AlgName::C, AlgName::H, AlgName::O, AlgName::Os}) {
        const auto& tri = TrialityAlgebra::get(name);
        const auto& k = tri.coeff();
        for (int i = 0; i < tri.dim(); ++i) {
            const Triality& t = tri.basis(i);
            CHECK(is_triality(k, t));
            // Spelled out: A(xy) = x (B y) + (C x) y on unit pairs.
            for (int a = 0; a < k.dim(); ++a)
                for (int b = 0; b < k.dim(); ++b) {
                    const QVector lhs = t.a.apply(k.mul(k.unit(a), k.unit(b)));
                    const QVector rhs = vec_add(k.mul(k.unit(a), t.b.apply(k.unit(b))),
                                                k.mul(t.c.apply(k.unit(a)), k.unit(b)));
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("componentwise bracket closes and matches the table") {
    for (AlgName name : {AlgName::H, AlgName::O}) {
        const auto& tri = TrialityAlgebra::get(name);
        for (int i = 0; i < tri.dim(); ++i)
            for (int j = 0; j < tri.dim(); ++j) {
                const Triality c = tri_commutator(tri.basis(i), tri.basis(j));
                CHECK(is_triality(tri.coeff(), c));
                Triality sum(tri.coeff().dim());
                for (const auto& [idx, coef] : tri.bracket_basis(i, j))
                    sum = sum + tri.basis(idx).scaled_by(coef);
                CHECK(c == sum);
            }
    }
}

TEST_CASE("cyclic twist is an order-3 bracket automorphism") {
    for (AlgName name : {AlgName::C, AlgName::H, AlgName::O, AlgName::Hs, AlgName::Os}) {
        const auto& tri = TrialityAlgebra::get(name);
        const auto& k = tri.coeff();
        for (int i = 0; i < tri.dim(); ++i) {
            const Triality& t = tri.basis(i);
            const Triality t1 = theta(k, t);
            CHECK(is_triality(k, t1));
            CHECK(theta(k, theta(k, t1)) == t);  // theta^3 = id
        }
        // theta[s, t] = [theta s, theta t] on basis pairs.
        for (int i = 0; i < tri.dim(); ++i)
            for (int j = 0; j < tri.dim(); ++j) {
                const Triality lhs = theta(k, tri_commutator(tri.basis(i), tri.basis(j)));
                const Triality rhs = tri_commutator(theta(k, tri.basis(i)), theta(k, tri.basis(j)));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("triples decompose as derivation plus two imaginary multipliers") {
    for (AlgName name : {AlgName::C, AlgName::H, AlgName::O, AlgName::Os}) {
        const auto& tri = TrialityAlgebra::get(name);
        const auto& k = tri.coeff();
        for (int i = 0; i < tri.dim(); ++i) {
            const TriDecomposition d = decompose_tri(k, tri.basis(i));
            CHECK(k.is_derivation(d.d));
            CHECK(d.a[0].is_zero());
            CHECK(d.b[0].is_zero());
            CHECK(t_from_dab(k, d.d, d.a, d.b) == tri.basis(i));
        }
        // Dimension count: Der K plus two copies of the imaginary part.
        CHECK(tri.dim() == static_cast<int>(k.derivation_basis().size()) + 2 * (k.dim() - 1));
    }
}

TEST_CASE("norm-pair triples span the triality algebra") {
    for (AlgName name : {AlgName::C, AlgName::H, AlgName::O}) {
        const auto& tri = TrialityAlgebra::get(name);
        const auto& k = tri.coeff();
        SpanSolver span(3 * k.dim() * k.dim());
        for (int a = 0; a < k.dim(); ++a)
            for (int b = 0; b < k.dim(); ++b) {
                const Triality t = t_xy(k, k.unit(a), k.unit(b));
                CHECK(is_triality(k, t));
                span.add(t.flatten());
            }
        CHECK(span.rank() == tri.dim());
    }
}

TEST_CASE("first component of a norm-pair triple doubles the rotation generator") {
    const auto& k = CompositionAlgebra::get(AlgName::O);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const Triality t = t_xy(k, k.unit(a), k.unit(b));
            CHECK(t.a == k.S_xy_full(k.unit(a), k.unit(b)).scaled_by(4));
        }
}
