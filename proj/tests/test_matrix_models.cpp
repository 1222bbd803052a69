#include <doctest.h>

#include <magicsq/matrix_models.hpp>

#include <string>
#include <vector>

using namespace magicsq;

TEST_CASE("classical matrix families have the expected dimensions") {
    CHECK(build_so(7, 0).algebra.dim() == 21);
    CHECK(build_so(9, 1).algebra.dim() == 45);
    CHECK(build_so(9, 1).algebra.killing_signature() == Signature{36, 0, 9});
    CHECK(build_su(3, 0).algebra.dim() == 8);
    CHECK(build_su(2, 1).algebra.dim() == 8);
    CHECK(build_su(2, 1).algebra.killing_signature() == Signature{4, 0, 4});
    CHECK(build_sq(3).algebra.dim() == 21);
    CHECK(build_sq(3).algebra.killing_signature() == Signature{21, 0, 0});
    CHECK(build_sl(AlgName::R, 3).algebra.dim() == 8);
    CHECK(build_sl(AlgName::C, 3).algebra.dim() == 16);
    CHECK(build_sl(AlgName::H, 3).algebra.dim() == 35);
    CHECK(build_sp2n(AlgName::R, 3).algebra.dim() == 21);
    CHECK(build_sp2n(AlgName::C, 3).algebra.dim() == 35);
    CHECK(build_sp2n(AlgName::H, 3).algebra.dim() == 66);
}

TEST_CASE("matrix families close under commutators and satisfy jacobi") {
    for (const MatrixLieAlgebra& m :
         {build_so(5, 4), build_su(3, 3), build_sl(AlgName::H, 3), build_sp2n(AlgName::C, 3)}) {
        CHECK(m.algebra.jacobi_violations().violations == 0);
        CHECK(static_cast<int>(m.basis.size()) == m.algebra.dim());
    }
}

TEST_CASE("two-point entries are isomorphic to orthogonal algebras") {
    // Division column: compact targets.
    {
        const L2SoIso r = iso_L2_so(AlgName::O, AlgName::H);
        CHECK(r.iso.report.is_isomorphism());
        CHECK(r.target.algebra.dim() == 66);  // so(12)
    }
    // Split column: the indefinite forms with the split part of the metric
    // coming from the positive-square units.
    {
        const L2SoIso r = iso_L2_so(AlgName::O, AlgName::Cs);
        CHECK(r.iso.report.is_isomorphism());
        CHECK(r.target.algebra.killing_signature() == Signature{36, 0, 9});  // so(9,1)
    }
    {
        const L2SoIso r = iso_L2_so(AlgName::O, AlgName::Os);
        CHECK(r.iso.report.is_isomorphism());
        CHECK(r.target.algebra.killing_signature() == Signature{72, 0, 48});  // so(12,4)
    }
    {
        const L2SoIso r = iso_L2_so(AlgName::R, AlgName::R);
        CHECK(r.iso.report.is_isomorphism());
        CHECK(r.target.algebra.dim() == 1);
    }
}

TEST_CASE("structure and conformal algebras of the hermitian 3x3 algebra") {
    const ConformalAlgebra c = build_str_con(AlgName::O, 3);
    CHECK(c.product_scale == Rational(1, 2));
    CHECK(c.der.dim() == 52);
    CHECK(c.str_prime.dim() == 78);   // 52 + 26
    CHECK(c.con.dim() == 133);        // 78 + 1 + 2*27
    CHECK(c.con.jacobi_violations().violations == 0);
    // Summands: der, traceless hermitian part, grading element, two
    // abelian copies of the Jordan algebra.
    int total = 0;
    for (const auto& s : c.summands) total += s.size();
    CHECK(total == c.con.dim());
}

TEST_CASE("three-point rows map onto derivation, structure, conformal") {
    for (AlgName k : {AlgName::C, AlgName::O}) {
        const ConIso r = iso_conformal(k, 3);
        CHECK(r.der.report.is_isomorphism());
        CHECK(r.str.report.is_isomorphism());
        CHECK(r.con.report.is_isomorphism());
    }
    const ConIso r2 = iso_conformal(AlgName::H, 2);
    CHECK(r2.der.report.is_isomorphism());
    CHECK(r2.str.report.is_isomorphism());
    CHECK(r2.con.report.is_isomorphism());
}

TEST_CASE("antihermitian model and the associative matrix identifications") {
    const MatrixModelIsos mo = iso_matrix_models(AlgName::O);
    CHECK(mo.sa3.algebra.dim() == 52);
    CHECK(mo.sa3.der_dim == 14);
    CHECK(mo.from_sa3.report.is_isomorphism());
    CHECK(mo.to_sa3.report.is_isomorphism());
    CHECK_FALSE(mo.has_sl_sp);

    const MatrixModelIsos mh = iso_matrix_models(AlgName::H);
    CHECK(mh.from_sa3.report.is_isomorphism());
    CHECK(mh.to_sa3.report.is_isomorphism());
    REQUIRE(mh.has_sl_sp);
    CHECK(mh.sl.algebra.dim() == 35);
    CHECK(mh.to_sl.report.is_isomorphism());
    CHECK(mh.sp.algebra.dim() == 66);
    CHECK(mh.to_sp.report.is_isomorphism());
}

TEST_CASE("hermitian matrix identities verify with the resolved signs") {
    for (AlgName k : {AlgName::R, AlgName::C, AlgName::H, AlgName::O}) {
        const MatrixIdentityReport rep = verify_matrix_identities(k);
        CHECK(rep.all_passed());
        CHECK(rep.checks.size() == 7);
        for (const auto& c : rep.checks) {
            INFO(to_string(k) << ": " << c.name << " -- " << c.detail);
            CHECK(c.passed);
        }
    }
    // The correction term is genuinely present (with a minus sign) only
    // for non-associative coefficients.
    const auto octo = verify_matrix_identities(AlgName::O);
    CHECK(octo.checks[2].detail.find("sign -1") != std::string::npos);
    const auto real = verify_matrix_identities(AlgName::R);
    CHECK(real.checks[2].detail.find("vanishes") != std::string::npos);
}
