#include <doctest.h>

#include <magicsq/composition.hpp>
#include <magicsq/lie_algebra.hpp>
#include <magicsq/qmatrix.hpp>
#include <magicsq/real_forms.hpp>

#include <string>
#include <vector>

using namespace magicsq;

namespace {

// Assemble the Lie algebra spanned by commuting operator generators,
// expressed over the generator basis.
LieAlgebra algebra_of_ops(const std::vector<QMatrix>& ops) {
    const int flat = ops.empty() ? 0 : ops[0].rows() * ops[0].cols();
    SpanSolver span(flat);
    for (const auto& m : ops) span.add(m.flatten());
    REQUIRE(span.rank() == static_cast<int>(ops.size()));
    LieAlgebra l(static_cast<int>(ops.size()));
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j) {
            const auto c = span.express(commutator(ops[i], ops[j]).flatten());
            REQUIRE(c.has_value());
            SparseVec sv;
            for (size_t k = 0; k < c->size(); ++k)
                if (!(*c)[k].is_zero()) sv.emplace_back(static_cast<int>(k), (*c)[k]);
            l.set_bracket(static_cast<int>(i), static_cast<int>(j), std::move(sv));
        }
    return l;
}

// sl(2): [u,h] = -2v, [u,v] = 2h, [h,v] = 2u splits as f = {u}, p = {h,v}.
LieAlgebra make_sl2() {
    LieAlgebra l(3, {"u", "h", "v"});
    l.set_bracket(0, 1, {{2, Rational(-2)}});
    l.set_bracket(0, 2, {{1, Rational(2)}});
    l.set_bracket(1, 2, {{0, Rational(2)}});
    return l;
}

}  // namespace

TEST_CASE("cartan splitting check on a rank-one example") {
    const LieAlgebra sl2 = make_sl2();
    CHECK(sl2.killing_signature() == Signature{1, 0, 2});

    const auto good = cartan_check(sl2, {0});
    REQUIRE(good.ok);
    CHECK(good.decomposition.p_indices == std::vector<int>{1, 2});

    const LieAlgebra compact = weyl_trick(good.decomposition);
    CHECK(compact.jacobi_violations().violations == 0);
    CHECK(compact.killing_signature() == Signature{3, 0, 0});

    // Repeating the sign flip restores the original table.
    const auto again = cartan_check(compact, {0});
    REQUIRE(again.ok);
    const LieAlgebra back = weyl_trick(again.decomposition);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(back.bracket_basis(i, j) == sl2.bracket_basis(i, j));

    // A block with indefinite Killing restriction is rejected with a
    // message naming the failed condition.
    const auto bad = cartan_check(sl2, {1});
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure.find("negative definite") != std::string::npos);
}

TEST_CASE("derivation generators of the octonions in the rotation basis") {
    for (bool split : {false, true}) {
        const G2Basis g = der_O_basis_g(split);
        const auto& k = CompositionAlgebra::get(split ? AlgName::Os : AlgName::O);
        REQUIRE(g.generators.size() == 14);
        CHECK(g.dictionary.size() == 14);
        CHECK(g.printed_signs_valid == !split);

        // Each generator is a derivation, kills the real unit, and is
        // antisymmetric for the norm form, i.e. lies in the rotation
        // algebra of the 7-dimensional imaginary part.
        QMatrix metric(8, 8);
        const auto gm = k.metric();
        for (int i = 0; i < 8; ++i) metric.at(i, i) = gm[i];
        for (const QMatrix& m : g.generators) {
            CHECK(k.is_derivation(m));
            CHECK(is_zero_vector(m.column(0)));
            CHECK(is_zero_vector(m.row(0)));
            CHECK((m.transposed() * metric + metric * m).is_zero());
        }

        const LieAlgebra der = algebra_of_ops(g.generators);
        CHECK(der.dim() == 14);
        CHECK(der.jacobi_violations().violations == 0);
        CHECK(der.killing_signature() == (split ? Signature{6, 0, 8} : Signature{14, 0, 0}));
        // Closure: brackets stay inside the span, which algebra_of_ops
        // already enforced via REQUIRE(express).
    }
}

TEST_CASE("maximal compact subalgebra of the split derivation algebra") {
    const G2Basis g = der_O_basis_g(true);
    const LieAlgebra der = algebra_of_ops(g.generators);

    const std::vector<int> pos = m_g2_positions();
    REQUIRE(pos.size() == 6);
    CHECK(der.span_closure_dim(pos) == 6);

    const auto check = cartan_check(der, pos);
    REQUIRE(check.ok);

    std::vector<QMatrix> six;
    for (int p : pos) six.push_back(g.generators[p]);
    const LieAlgebra m = algebra_of_ops(six);
    CHECK(m.dim() == 6);
    CHECK(m.killing_signature() == Signature{6, 0, 0});
    CHECK(m.jacobi_violations().violations == 0);

    // It decomposes into two commuting 3-dimensional ideals.
    const auto [one, two] = so3_pair_ideals(m);
    REQUIRE(one.size() == 3);
    REQUIRE(two.size() == 3);
    SpanSolver span(6);
    for (const auto& v : one) span.add(v);
    for (const auto& v : two) span.add(v);
    CHECK(span.rank() == 6);
    for (const auto& a : one)
        for (const auto& b : two) CHECK(is_zero_vector(m.bracket(a, b)));

    // Each factor is an ideal-closed 3-dimensional subalgebra with
    // negative definite Killing restriction, i.e. a copy of so(3).
    for (const auto& part : {one, two}) {
        CHECK(m.span_closure_dim(part) == 3);
        SpanSolver ps(6);
        for (const auto& v : part) ps.add(v);
        for (const auto& v : part)
            for (int i = 0; i < 6; ++i) {
                QVector ei(6);
                ei[i] = Rational(1);
                CHECK(ps.contains(m.bracket(v, ei)));  // absorbs all of m
            }
    }
}

TEST_CASE("compact subalgebras of the five split exceptional entries") {
    struct Expected {
        const char* pair;
        int dim, dim_f, dim_p, character;
    };
    const Expected expected[] = {
        {"l3(O,Cs)", 78, 52, 26, -26},   {"l3(O,Hs)", 133, 79, 54, -25},
        {"l3(O,Os)", 248, 136, 112, -24}, {"l3(C,Os)", 78, 38, 40, 2},
        {"l3(H,Os)", 133, 69, 64, -5},
    };
    const auto rows = maximal_compact_report();
    REQUIRE(rows.size() == 5);
    for (size_t i = 0; i < 5; ++i) {
        INFO(rows[i].pair << ": " << rows[i].failure);
        CHECK(rows[i].pair == expected[i].pair);
        CHECK(rows[i].grading_ok);
        CHECK(rows[i].dim == expected[i].dim);
        CHECK(rows[i].dim_f == expected[i].dim_f);
        CHECK(rows[i].dim_p == expected[i].dim_p);
        CHECK(rows[i].character == expected[i].character);
    }
}

TEST_CASE("sign flip on the odd block compactifies the split entries") {
    for (const MaximalCompactRow& row : maximal_compact_report()) {
        REQUIRE(row.grading_ok);
        const LieAlgebra compact = weyl_trick(row.decomposition);
        CHECK(compact.dim() == row.dim);
        CHECK(compact.jacobi_violations().violations == 0);
        CHECK(compact.killing_signature() == Signature{compact.dim(), 0, 0});
    }
}

TEST_CASE("compactified split entries match the compact square") {
    const auto rows = weyl_compact_match();
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
        INFO(row.pair << " -> " << row.target);
        CHECK(row.morphism_ok);
        CHECK(row.matrix.rows() == row.matrix.cols());
    }
    CHECK(rows[0].target == "l3(O,C)");
    CHECK(rows[4].target == "l3(H,O)");
}
