#include <doctest.h>

#include <magicsq/qmatrix.hpp>
#include <magicsq/rational.hpp>

using namespace magicsq;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(7).is_integer());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(3, 7) * Rational(7, 3) == Rational(1));
    CHECK(Rational(5, 2).inv() == Rational(2, 5));
    CHECK(Rational::from_string("-22/4") == Rational(-11, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(0).inv());
}

TEST_CASE("rref, rank, determinant, inverse") {
    QMatrix m(3, 3);
    // Vandermonde on 1, 2, 3: determinant (2-1)(3-1)(3-2) = 2.
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Rational v(1);
            for (int k = 0; k < c; ++k) v *= Rational(r + 1);
            m.at(r, c) = v;
        }
    CHECK(det_bareiss(m) == Rational(2));
    CHECK(rank(m) == 3);
    CHECK(inverse(m) * m == QMatrix::identity(3));

    QMatrix s(2, 3);
    s.at(0, 0) = 1;
    s.at(0, 1) = 2;
    s.at(0, 2) = 3;
    s.at(1, 0) = 2;
    s.at(1, 1) = 4;
    s.at(1, 2) = 6;
    CHECK(rank(s) == 1);
    const auto ker = kernel_basis(s);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) CHECK(is_zero_vector(s.apply(v)));
}

TEST_CASE("symmetric signature by exact congruence") {
    QMatrix d(3, 3);
    d.at(0, 0) = Rational(4);
    d.at(1, 1) = Rational(-9, 2);
    CHECK(symmetric_signature(d) == Signature{1, 1, 1});

    // Hyperbolic plane: zero diagonal, off-diagonal coupling.
    QMatrix h(2, 2);
    h.at(0, 1) = 1;
    h.at(1, 0) = 1;
    CHECK(symmetric_signature(h) == Signature{1, 0, 1});
}

TEST_CASE("span solver expresses vectors in generator order") {
    SpanSolver s(3);
    s.add({Rational(1), Rational(1), Rational(0)});
    s.add({Rational(2), Rational(2), Rational(0)});  // dependent
    s.add({Rational(0), Rational(0), Rational(1)});
    CHECK(s.generator_count() == 3);
    CHECK(s.rank() == 2);

    const QVector target{Rational(3), Rational(3), Rational(-5)};
    CHECK(s.contains(target));
    const auto c = s.express(target);
    REQUIRE(c.has_value());
    REQUIRE(c->size() == 3);
    // Reassemble from the reported coefficients.
    CHECK((*c)[0] * Rational(1) + (*c)[1] * Rational(2) == Rational(3));
    CHECK((*c)[2] == Rational(-5));
    CHECK_FALSE(s.contains({Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("solve_in_span finds exact coefficients") {
    const std::vector<QVector> gens{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}};
    const auto c = solve_in_span(gens, {Rational(2), Rational(1)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Rational(2));
    CHECK((*c)[1] == Rational(-3));
}

TEST_CASE("kernel accumulator narrows with incoming equations") {
    KernelAccumulator acc(4);
    CHECK(acc.dim() == 4);
    acc.add_equation({{0, Rational(1)}, {1, Rational(-1)}});
    CHECK(acc.dim() == 3);
    acc.add_equation({{2, Rational(1)}});
    CHECK(acc.dim() == 2);
    for (const auto& v : acc.dense_basis()) {
        CHECK(v[0] == v[1]);
        CHECK(v[2].is_zero());
    }
}

TEST_CASE("matrix flatten roundtrip and commutator") {
    QMatrix a(2, 2), b(2, 2);
    a.at(0, 1) = 1;
    b.at(1, 0) = 1;
    const QMatrix c = commutator(a, b);  // diag(1, -1)
    CHECK(c.at(0, 0) == Rational(1));
    CHECK(c.at(1, 1) == Rational(-1));
    CHECK(QMatrix::from_flat(c.flatten(), 2, 2) == c);
}
