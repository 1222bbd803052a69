#include <doctest.h>

#include <magicsq/lie_algebra.hpp>
#include <magicsq/tits.hpp>

#include <string>
#include <vector>

using namespace magicsq;

namespace {

const std::vector<AlgName>& division_algebras() {
    static const std::vector<AlgName> v{AlgName::R, AlgName::C, AlgName::H, AlgName::O};
    return v;
}

}  // namespace

TEST_CASE("three-point square dimensions") {
    const int expected[4][4] = {
        {3, 8, 21, 52}, {8, 16, 35, 78}, {21, 35, 66, 133}, {52, 78, 133, 248}};
    const auto table = magic_square_table(SquareKind::L3, false);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            CHECK(table[r][c].dim == expected[r][c]);
            CHECK(table[r][c].dim == table[c][r].dim);  // symmetric
        }
    // The symmetric assembly lands on the same dimensions.
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(build_L3_sym(division_algebras()[c], division_algebras()[r]).algebra.dim() ==
                  expected[r][c]);
}

TEST_CASE("two-point square dimensions are orthogonal algebras") {
    const int expected[4][4] = {
        {1, 3, 10, 36}, {3, 6, 15, 45}, {10, 15, 28, 66}, {36, 45, 66, 120}};
    const auto table = magic_square_table(SquareKind::L2, false);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(table[r][c].dim == expected[r][c]);
    CHECK(table[3][3].name == "so(16)");
    CHECK(table[1][2].name == "so(6)");
}

TEST_CASE("compact entries have negative definite killing form") {
    for (SquareKind kind : {SquareKind::L2, SquareKind::L3}) {
        const auto table = magic_square_table(kind, false);
        for (const auto& row : table)
            for (const auto& cell : row) {
                if (cell.dim == 1) {
                    CHECK(cell.sig == Signature{0, 1, 0});  // abelian, form vanishes
                } else {
                    CHECK(cell.sig == Signature{cell.dim, 0, 0});
                }
            }
    }
}

TEST_CASE("the 66-dimensional diagonal entry is the even orthogonal algebra") {
    const auto& e = build_L3(AlgName::H, AlgName::H);
    CHECK(e.algebra.dim() == 66);
    CHECK(real_form_label(66, e.algebra.killing_signature(), e.algebra.center_dim()) == "so(12)");
    // An odd-orthogonal label in this size class would be so(13), which
    // has dimension 78, not 66.
    CHECK(magic_square_table(SquareKind::L3, false)[2][2].name == "so(12)");
}

TEST_CASE("split rows carry the expected killing characters") {
    const int character[4][4] = {
        {-3, -8, -21, -52},  // second algebra R: compact
        {2, 0, -7, -26},     // split C row
        {3, 1, -6, -25},     // split H row
        {4, 2, -5, -24},     // split O row
    };
    const auto table = magic_square_table(SquareKind::L3, true);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            CHECK(table[r][c].sig.n_zero == 0);
            CHECK(table[r][c].sig.n_pos - table[r][c].sig.n_neg == character[r][c]);
        }
    CHECK(table[1][3].name == "e6(-26)");
    CHECK(table[2][3].name == "e7(-25)");
    CHECK(table[3][3].name == "e8(-24)");
    CHECK(table[3][0].name == "f4(4)");
    CHECK(table[1][0].name == "sl(3,R)");
    CHECK(table[2][1].name == "su(3,3)");
}

TEST_CASE("split two-point entries are the indefinite orthogonal algebras") {
    const char* expected[4][4] = {
        {"so(2)", "so(3)", "so(5)", "so(9)"},
        {"so(2,1)", "so(3,1)", "so(5,1)", "so(9,1)"},
        {"so(3,2)", "so(4,2)", "so(6,2)", "so(10,2)"},
        {"so(5,4)", "so(6,4)", "so(8,4)", "so(12,4)"},
    };
    const auto table = magic_square_table(SquareKind::L2, true);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(table[r][c].name == expected[r][c]);
}

TEST_CASE("summand layout covers the basis exactly") {
    const auto& e = build_L3(AlgName::O, AlgName::C);
    REQUIRE(e.summands.size() == 3);
    CHECK(e.summand("DerH3").size() == 52);
    CHECK(e.summand("HprimeK2").size() == 26);
    CHECK(e.summand("DerK2").size() == 0);
    int covered = 0;
    for (const auto& s : e.summands) {
        CHECK(s.begin == covered);
        covered = s.end;
    }
    CHECK(covered == e.algebra.dim());
    CHECK_THROWS(e.summand("nonexistent"));
}

TEST_CASE("jacobi holds on representative square entries") {
    for (auto [k1, k2] : std::vector<std::pair<AlgName, AlgName>>{
             {AlgName::O, AlgName::Os}, {AlgName::H, AlgName::Hs}, {AlgName::O, AlgName::C}}) {
        const auto& e = build_L3(k1, k2);
        const auto rep = e.algebra.jacobi_violations();
        CHECK(rep.violations == 0);
        const long long d = e.algebra.dim();
        CHECK(rep.triples == d * (d - 1) * (d - 2) / 6);
    }
    CHECK(build_L2(AlgName::O, AlgName::Os).algebra.jacobi_violations().violations == 0);
    CHECK(build_L3_sym(AlgName::C, AlgName::Hs).algebra.jacobi_violations().violations == 0);
}

TEST_CASE("swapping the two algebras is an isomorphism of the symmetric assembly") {
    for (auto [k1, k2] : std::vector<std::pair<AlgName, AlgName>>{
             {AlgName::R, AlgName::O}, {AlgName::C, AlgName::H}, {AlgName::H, AlgName::O}}) {
        const LieMorphism m = l3sym_swap_morphism(k1, k2);
        CHECK(check_morphism(m).is_isomorphism());
    }
}

TEST_CASE("the assembly dictionary identifies both three-point presentations") {
    for (auto [k1, k2] : std::vector<std::pair<AlgName, AlgName>>{
             {AlgName::R, AlgName::R}, {AlgName::O, AlgName::C}, {AlgName::H, AlgName::O}}) {
        const LieMorphism m = l3_dictionary_morphism(k1, k2);
        CHECK(check_morphism(m).is_isomorphism());
    }
}

TEST_CASE("catalog lookup distinguishes real forms by signature") {
    CHECK(real_form_label(14, Signature{14, 0, 0}, 0) == "g2");
    CHECK(real_form_label(14, Signature{6, 0, 8}, 0) == "g2(2)");
    CHECK(real_form_label(3, Signature{3, 0, 0}, 0) == "so(3)");
    CHECK(real_form_label(3, Signature{1, 0, 2}, 0) == "so(2,1)");
    CHECK(real_form_label(248, Signature{136, 0, 112}, 0) == "e8(-24)");
    CHECK(real_form_label(7, Signature{0, 7, 0}, 7).empty());
}
