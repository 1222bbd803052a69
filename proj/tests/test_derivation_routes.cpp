#include <doctest.h>

#include <magicsq/jordan.hpp>
#include <magicsq/lie_algebra.hpp>
#include <magicsq/matrix_models.hpp>
#include <magicsq/tits.hpp>
#include <magicsq/triality.hpp>

#include <vector>

using namespace magicsq;

namespace {

const std::vector<AlgName>& division_algebras() {
    static const std::vector<AlgName> v{AlgName::R, AlgName::C, AlgName::H, AlgName::O};
    return v;
}

}  // namespace

// The derivation algebra of the hermitian 3x3 algebra is computed once by
// solving the derivation constraints (the oracle), and then identified
// with two independent structured assemblies: trialities plus three copies
// of the coefficient algebra, and coefficient derivations plus traceless
// antihermitian matrices.  Each identification is an explicit checked
// isomorphism, so all three descriptions carry the same structure
// constants.

TEST_CASE("solved derivation algebra has the expected dimension and brackets") {
    const int expected[] = {3, 8, 21, 52};
    for (size_t i = 0; i < 4; ++i) {
        const AlgName k = division_algebras()[i];
        const auto& entry = build_L3(k, AlgName::R);
        CHECK(entry.algebra.dim() == expected[i]);
        CHECK(entry.summand("DerH3").size() == expected[i]);
        CHECK(entry.summand("HprimeK2").size() == 0);
        CHECK(entry.summand("DerK2").size() == 0);
        CHECK(entry.algebra.jacobi_violations().violations == 0);

        const auto& j = JordanAlgebra::get(k, 3);
        CHECK(static_cast<int>(j.derivation_basis().size()) == expected[i]);
        for (const QMatrix& d : j.derivation_basis()) CHECK(j.is_derivation(d));
    }
}

TEST_CASE("structure constants match operator commutators of the solved basis") {
    for (AlgName k : {AlgName::C, AlgName::H}) {
        const auto& entry = build_L3(k, AlgName::R);
        const auto& ders = JordanAlgebra::get(k, 3).derivation_basis();
        const int flat = ders[0].rows() * ders[0].cols();
        SpanSolver span(flat);
        for (const auto& d : ders) span.add(d.flatten());
        REQUIRE(span.rank() == static_cast<int>(ders.size()));
        for (size_t a = 0; a < ders.size(); ++a)
            for (size_t b = a + 1; b < ders.size(); ++b) {
                const auto c = span.express(commutator(ders[a], ders[b]).flatten());
                REQUIRE(c.has_value());
                QVector table = entry.algebra.bracket_basis(static_cast<int>(a), static_cast<int>(b));
                CHECK(*c == table);
            }
    }
}

TEST_CASE("first route: trialities plus three coefficient copies") {
    for (size_t i = 0; i < 4; ++i) {
        const AlgName k = division_algebras()[i];
        const int nu = CompositionAlgebra::get(k).dim();
        const auto& sym = build_L3_sym(k, AlgName::R);
        CHECK(sym.algebra.dim() == TrialityAlgebra::get(k).dim() + 3 * nu);
        CHECK(sym.summand("TriK2").size() == 0);

        const LieMorphism m = l3_dictionary_morphism(k, AlgName::R);
        CHECK(m.source->dim() == build_L3(k, AlgName::R).algebra.dim());
        CHECK(check_morphism(m).is_isomorphism());
    }
}

TEST_CASE("second route: coefficient derivations plus antihermitian matrices") {
    for (size_t i = 0; i < 4; ++i) {
        const AlgName k = division_algebras()[i];
        const int nu = CompositionAlgebra::get(k).dim();
        const int der_k = static_cast<int>(CompositionAlgebra::get(k).derivation_basis().size());

        const MatrixModelIsos mm = iso_matrix_models(k);
        // Traceless antihermitian part: 3 off-diagonal slots of dimension
        // nu plus two independent imaginary diagonal differences.
        CHECK(mm.sa3.algebra.dim() == der_k + 3 * nu + 2 * (nu - 1));
        CHECK(mm.sa3.der_dim == der_k);
        CHECK(mm.sa3.algebra.dim() == build_L3(k, AlgName::R).algebra.dim());
        CHECK(mm.from_sa3.report.is_isomorphism());
        CHECK(mm.to_sa3.report.is_isomorphism());
        // The two directions invert each other.
        CHECK(mm.from_sa3.matrix * mm.to_sa3.matrix ==
              QMatrix::identity(mm.sa3.algebra.dim()));
    }
}
