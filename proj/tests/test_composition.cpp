#include <doctest.h>

#include <magicsq/composition.hpp>

#include <vector>

using namespace magicsq;

namespace {

const std::vector<AlgName>& every_algebra() {
    static const std::vector<AlgName> v{AlgName::R,  AlgName::C,  AlgName::H, AlgName::O,
                                        AlgName::Cs, AlgName::Hs, AlgName::Os};
    return v;
}

}  // namespace

TEST_CASE("algebra names parse and print consistently") {
    for (AlgName n : every_algebra()) CHECK(alg_name_from_string(to_string(n)) == n);
    CHECK_THROWS(alg_name_from_string("bogus"));
    CHECK(is_split(AlgName::Hs));
    CHECK_FALSE(is_split(AlgName::H));
}

TEST_CASE("dimensions and unit squares") {
    CHECK(CompositionAlgebra::get(AlgName::R).dim() == 1);
    CHECK(CompositionAlgebra::get(AlgName::C).dim() == 2);
    CHECK(CompositionAlgebra::get(AlgName::H).dim() == 4);
    CHECK(CompositionAlgebra::get(AlgName::O).dim() == 8);
    CHECK(CompositionAlgebra::get(AlgName::Cs).dim() == 2);
    CHECK(CompositionAlgebra::get(AlgName::Hs).dim() == 4);
    CHECK(CompositionAlgebra::get(AlgName::Os).dim() == 8);

    for (AlgName n : {AlgName::C, AlgName::H, AlgName::O}) {
        const auto& k = CompositionAlgebra::get(n);
        for (int b = 1; b < k.dim(); ++b) CHECK(k.unit_square_sign(b) == -1);
    }
    const auto& cs = CompositionAlgebra::get(AlgName::Cs);
    CHECK(cs.unit_square_sign(1) == 1);
    const auto& hs = CompositionAlgebra::get(AlgName::Hs);
    CHECK(hs.unit_square_sign(1) == -1);
    CHECK(hs.unit_square_sign(2) == 1);
    CHECK(hs.unit_square_sign(3) == 1);
    const auto& os = CompositionAlgebra::get(AlgName::Os);
    for (int b = 1; b <= 3; ++b) CHECK(os.unit_square_sign(b) == -1);
    for (int b = 4; b <= 7; ++b) CHECK(os.unit_square_sign(b) == 1);
}

TEST_CASE("quaternion table spot checks") {
    const auto& h = CompositionAlgebra::get(AlgName::H);
    CHECK(h.mul(h.unit(1), h.unit(2)) == h.unit(3));
    CHECK(h.mul(h.unit(2), h.unit(1)) == scaled(h.unit(3), Rational(-1)));
    CHECK(h.mul(h.unit(2), h.unit(3)) == h.unit(1));
}

TEST_CASE("two-sided unit and conjugation involution") {
    for (AlgName n : every_algebra()) {
        const auto& k = CompositionAlgebra::get(n);
        for (int a = 0; a < k.dim(); ++a) {
            CHECK(k.mul(k.unit(0), k.unit(a)) == k.unit(a));
            CHECK(k.mul(k.unit(a), k.unit(0)) == k.unit(a));
            CHECK(k.conj(k.conj(k.unit(a))) == k.unit(a));
        }
    }
}

TEST_CASE("norm composes with multiplication") {
    // The norm is quadratic, so the fully polarized four-linear identity
    // <xu, yv> + <xv, yu> = 2 <x,y> <u,v> on basis tuples proves the
    // composition law norm(xy) = norm(x) norm(y) for all elements.
    for (AlgName n : every_algebra()) {
        const auto& k = CompositionAlgebra::get(n);
        const int nu = k.dim();
        for (int x = 0; x < nu; ++x)
            for (int y = 0; y < nu; ++y) {
                CHECK(k.norm(k.mul(k.unit(x), k.unit(y))) == k.norm(k.unit(x)) * k.norm(k.unit(y)));
                for (int u = 0; u < nu; ++u)
                    for (int v = 0; v < nu; ++v) {
                        const Rational lhs =
                            k.bilinear(k.mul(k.unit(x), k.unit(u)), k.mul(k.unit(y), k.unit(v))) +
                            k.bilinear(k.mul(k.unit(x), k.unit(v)), k.mul(k.unit(y), k.unit(u)));
                        CHECK(lhs == 2 * k.bilinear(k.unit(x), k.unit(y)) * k.bilinear(k.unit(u), k.unit(v)));
                    }
            }
    }
}

TEST_CASE("conjugation reverses products") {
    for (AlgName n : every_algebra()) {
        const auto& k = CompositionAlgebra::get(n);
        for (int a = 0; a < k.dim(); ++a)
            for (int b = 0; b < k.dim(); ++b)
                CHECK(k.conj(k.mul(k.unit(a), k.unit(b))) == k.mul(k.conj(k.unit(b)), k.conj(k.unit(a))));
    }
}

TEST_CASE("associator is alternating") {
    for (AlgName n : every_algebra()) {
        const auto& k = CompositionAlgebra::get(n);
        const int nu = k.dim();
        for (int a = 0; a < nu; ++a)
            for (int b = 0; b < nu; ++b)
                for (int c = 0; c < nu; ++c) {
                    const QVector abc = k.associator(k.unit(a), k.unit(b), k.unit(c));
                    CHECK(is_zero_vector(vec_add(abc, k.associator(k.unit(b), k.unit(a), k.unit(c)))));
                    CHECK(is_zero_vector(vec_add(abc, k.associator(k.unit(a), k.unit(c), k.unit(b)))));
                }
    }
}

TEST_CASE("bilinear form matches the diagonal metric") {
    for (AlgName n : every_algebra()) {
        const auto& k = CompositionAlgebra::get(n);
        const auto g = k.metric();
        REQUIRE(static_cast<int>(g.size()) == k.dim());
        CHECK(g[0] == 1);
        for (int a = 0; a < k.dim(); ++a) {
            if (a > 0) CHECK(g[a] == -k.unit_square_sign(a));
            for (int b = 0; b < k.dim(); ++b)
                CHECK(k.bilinear(k.unit(a), k.unit(b)) == Rational(a == b ? g[a] : 0));
        }
    }
}

TEST_CASE("inner maps are derivations and satisfy the associator formula") {
    for (AlgName n : every_algebra()) {
        const auto& k = CompositionAlgebra::get(n);
        const int nu = k.dim();
        for (int a = 0; a < nu; ++a)
            for (int b = 0; b < nu; ++b) {
                const QMatrix d = k.D_xy(k.unit(a), k.unit(b));
                CHECK(k.is_derivation(d));
                for (int c = 0; c < nu; ++c) {
                    const QVector comm = k.commutator(k.commutator(k.unit(a), k.unit(b)), k.unit(c));
                    const QVector assoc = k.associator(k.unit(a), k.unit(b), k.unit(c));
                    CHECK(d.apply(k.unit(c)) == vec_sub(comm, scaled(assoc, 3)));
                }
            }
    }
}

TEST_CASE("derivation algebra dimensions") {
    CHECK(CompositionAlgebra::get(AlgName::R).derivation_basis().empty());
    CHECK(CompositionAlgebra::get(AlgName::C).derivation_basis().empty());
    CHECK(CompositionAlgebra::get(AlgName::Cs).derivation_basis().empty());
    CHECK(CompositionAlgebra::get(AlgName::H).derivation_basis().size() == 3);
    CHECK(CompositionAlgebra::get(AlgName::Hs).derivation_basis().size() == 3);
    CHECK(CompositionAlgebra::get(AlgName::O).derivation_basis().size() == 14);
    CHECK(CompositionAlgebra::get(AlgName::Os).derivation_basis().size() == 14);
}

TEST_CASE("is_derivation rejects a non-derivation") {
    const auto& h = CompositionAlgebra::get(AlgName::H);
    QMatrix bad(4, 4);
    bad.at(0, 1) = 1;  // moves the real line, cannot be a derivation
    CHECK_FALSE(h.is_derivation(bad));
}

TEST_CASE("norm-pair generators are rotation equivariant") {
    // [T, S_{x,y}] = S_{Tx,y} + S_{x,Ty} for any T antisymmetric with
    // respect to the norm form; this is the bracket table that makes the
    // two-algebra construction close.
    for (AlgName n : {AlgName::O, AlgName::Os}) {
        const auto& k = CompositionAlgebra::get(n);
        const auto gens = CompositionAlgebra::so_basis(k.metric());
        for (const QMatrix& t : gens)
            for (int a = 0; a < k.dim(); ++a)
                for (int b = 0; b < k.dim(); ++b) {
                    const QMatrix lhs = commutator(t, k.S_xy_full(k.unit(a), k.unit(b)));
                    const QMatrix rhs = k.S_xy_full(t.apply(k.unit(a)), k.unit(b)) +
                                        k.S_xy_full(k.unit(a), t.apply(k.unit(b)));
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("antisymmetric basis of a diagonal metric") {
    const auto gens = CompositionAlgebra::so_basis({1, 1, -1});
    CHECK(gens.size() == 3);
    QMatrix g(3, 3);
    g.at(0, 0) = 1;
    g.at(1, 1) = 1;
    g.at(2, 2) = -1;
    for (const auto& m : gens) CHECK((m.transposed() * g + g * m).is_zero());
}
