#include <doctest.h>

#include <magicsq/lie_algebra.hpp>
#include <magicsq/serialize.hpp>

#include <vector>

using namespace magicsq;

namespace {

// so(3): [e0,e1] = e2, [e1,e2] = e0, [e2,e0] = e1.
LieAlgebra make_so3() {
    LieAlgebra l(3, {"x", "y", "z"});
    l.set_bracket(0, 1, {{2, Rational(1)}});
    l.set_bracket(1, 2, {{0, Rational(1)}});
    l.set_bracket(0, 2, {{1, Rational(-1)}});
    return l;
}

// Heisenberg: [e0,e1] = e2 central.
LieAlgebra make_heisenberg() {
    LieAlgebra l(3);
    l.set_bracket(0, 1, {{2, Rational(1)}});
    return l;
}

}  // namespace

TEST_CASE("brackets are antisymmetric by construction") {
    const LieAlgebra l = make_so3();
    CHECK(l.bracket_basis(0, 1) == QVector{Rational(0), Rational(0), Rational(1)});
    CHECK(l.bracket_basis(1, 0) == QVector{Rational(0), Rational(0), Rational(-1)});
    CHECK(is_zero_vector(l.bracket_basis(1, 1)));
    const QVector v{Rational(1), Rational(2), Rational(0)};
    CHECK(l.bracket(v, v) == QVector(3));
}

TEST_CASE("jacobi sweep counts triples and finds witnesses") {
    const LieAlgebra good = make_so3();
    auto rep = good.jacobi_violations();
    CHECK(rep.triples == 1);
    CHECK(rep.violations == 0);

    // A genuinely broken table: so(3) with one extra coupling that ruins
    // the cyclic sum.
    LieAlgebra bad(4);
    bad.set_bracket(0, 1, {{2, Rational(1)}});
    bad.set_bracket(1, 2, {{0, Rational(1)}});
    bad.set_bracket(0, 2, {{1, Rational(-1)}});
    bad.set_bracket(0, 3, {{2, Rational(1)}});
    auto brep = bad.jacobi_violations();
    CHECK(brep.triples == 4);
    CHECK(brep.violations > 0);
    CHECK(brep.first_witness[0] >= 0);
    // The witness triple really does violate the identity.
    const auto& w = brep.first_witness;
    QVector sum(4);
    for (int r = 0; r < 3; ++r) {
        const int x = w[r], y = w[(r + 1) % 3], z = w[(r + 2) % 3];
        QVector ez(4);
        ez[z] = Rational(1);
        sum = vec_add(sum, bad.bracket(bad.bracket_basis(x, y), ez));
    }
    CHECK_FALSE(is_zero_vector(sum));
}

TEST_CASE("killing form of so(3) is negative definite") {
    const LieAlgebra l = make_so3();
    const QMatrix k = l.killing_matrix();
    for (int i = 0; i < 3; ++i) CHECK(k.at(i, i) == Rational(-2));
    CHECK(l.killing_signature() == Signature{3, 0, 0});
    CHECK(l.center_dim() == 0);
    CHECK(l.derived_dim() == 3);
}

TEST_CASE("degenerate killing form and center of the heisenberg algebra") {
    const LieAlgebra l = make_heisenberg();
    CHECK(l.killing_signature() == Signature{0, 3, 0});
    CHECK(l.center_dim() == 1);
    CHECK(l.derived_dim() == 1);
}

TEST_CASE("span closure grows subalgebras") {
    const LieAlgebra l = make_so3();
    CHECK(l.span_closure_dim(std::vector<int>{0}) == 1);
    CHECK(l.span_closure_dim(std::vector<int>{0, 1}) == 3);
    const LieAlgebra h = make_heisenberg();
    CHECK(h.span_closure_dim(std::vector<int>{0, 1}) == 3);
    CHECK(h.span_closure_dim(std::vector<int>{0, 2}) == 2);
}

TEST_CASE("direct sums bracket blockwise") {
    const LieAlgebra s = direct_sum(make_so3(), make_heisenberg());
    CHECK(s.dim() == 6);
    CHECK(s.killing_signature() == Signature{3, 3, 0});
    // Cross blocks commute.
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) CHECK(is_zero_vector(s.bracket_basis(i, j)));
    CHECK(s.jacobi_violations().violations == 0);
}

TEST_CASE("morphism checker accepts the identity and rejects a scaling") {
    LieAlgebra a = make_so3();
    LieAlgebra b = make_so3();
    LieMorphism id{&a, &b, QMatrix::identity(3)};
    CHECK(check_morphism(id).is_isomorphism());

    // x -> 2x does not preserve quadratic brackets.
    LieMorphism twice{&a, &b, QMatrix::identity(3).scaled_by(2)};
    const auto rep = check_morphism(twice);
    CHECK_FALSE(rep.brackets_preserved);
    CHECK(rep.witness.first >= 0);

    // Rank-deficient maps are flagged as non-bijective.
    QMatrix zero(3, 3);
    LieMorphism collapse{&a, &b, zero};
    CHECK_FALSE(check_morphism(collapse).bijective);
}

TEST_CASE("structure constants roundtrip through json") {
    const LieAlgebra l = make_so3();
    const std::string j = lie_to_json(l);
    const LieAlgebra back = lie_from_json(j);
    CHECK(back.dim() == l.dim());
    CHECK(back.labels() == l.labels());
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) CHECK(back.bracket_basis(i, k) == l.bracket_basis(i, k));
    // Serialization is deterministic.
    CHECK(lie_to_json(back) == j);
}
