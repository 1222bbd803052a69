#include <magicsq/discrepancies.hpp>

namespace magicsq {

const std::vector<std::string>& discrepancy_notes() {
    static const std::vector<std::string> notes = {
        "D01 dimension-table label: the compact three-point entry at (H,H) computes to dimension 66 with "
        "Killing signature (66,0,0) and identifies as so(12) (even orthogonal family); the odd-orthogonal "
        "family label quoted for that cell would require dimension 78.",
        "D02 two-point hermitian table: with the Jordan product X.Y = XY + YX (no 1/2), the diagonal "
        "traceless unit satisfies E.E = 2I, not the quoted I; consistent with P(x).P(y) = 2<x,y>I from the "
        "same table.",
        "D03 commutator-correction sign: the matrix identities [C_X,C_Y] = C_[X,Y] - E(X,Y) and [L_H,L_K] = "
        "C_[H,K] - E(H,K) hold with minus E as defined entrywise; the plus-E print fails exhaustively for "
        "octonion coefficients (the term vanishes for associative ones).",
        "D04 triality triple of a unit pair: the component order that satisfies A(xy) = x(By) + (Cx)y is "
        "(4S_xy, R_yR_xbar - R_xR_ybar, L_yL_xbar - L_xL_ybar); the quoted order transposes the last two "
        "components, and the companion formula's first component reads 2L_a + R_a where 2L_a + 2R_a is the "
        "one that verifies.",
        "D05 two-point mixed bracket: the derivation-part coefficient that closes Jacobi is <A,B>S_xy; the "
        "quoted (1/4)<A,B>D_xy agrees on associative coefficients via D|imaginary = 4S but fails "
        "rotation-equivariance for octonions.",
        "D06 two-triality dictionary: the tensor images require a conjugated second leg, P_i(x) tensor a -> "
        "F_i(x tensor conj(a)); the unconjugated print only works for commutative second algebras.",
        "D07 two-point split targets: the split entries verify as so(nu1 + nu2/2, nu2/2) by explicit "
        "isomorphism -- so(9,1), so(10,2), so(12,4) across the octonion row; generator images place the "
        "metric on the lower off-diagonal block only.",
        "D08 symplectic unit images: the quoted sign pattern for the split-quaternion unit images fails the "
        "bracket check; the solved images (written by `iso --which models --out`) pass every pair.",
        "D09 conformal normalization: the conformal algebra closes at product scale 1/2 (structure summand "
        "acts by L_x/2); the unscaled reading satisfies Jacobi but admits none of the stated isomorphisms.",
        "D10 split derivation basis: three of the fourteen tabulated generators need a relative sign flip to "
        "satisfy the derivation law in this basis (g1 = s23 + s45, g9 = -s12 - s47, g10 = s13 - s57); the "
        "builder reports the calibrated dictionary.",
        "D11 maximal compact of the split derivation algebra: the tabulated six elements span it, but the "
        "printed triples {g1,g9,g10}/{g2,g5,g8} are not both ideals under the calibrated signs -- the "
        "intrinsic commuting pair is {g2,g5,g8} and {g1 - g2/2, g9 - g5/2, g10 + g8/2}.",
        "D12 maximal-compact table labels: the running text names two compact subalgebras with noncompact "
        "real-form labels while the theorem table uses compact ones; the compact reading is the one that "
        "verifies (all five rows pass the grading and definiteness checks).",
        "D13 maximal-compact table extra row: one quoted row references an entry absent from the split "
        "square, so no construction exists to check it against; unresolvable.",
        "D14 doubling-sign print: the quoted doubling product (ac - eps conj(d)b, da + b conj(c)) with eps = "
        "-1 for division forms contradicts its own examples; the sign convention that matches them is (ac + "
        "eps conj(d)b, da + b conj(c)) with the new unit squaring to eps.",
        "D15 three-point sweep count: the 248-dimensional Jacobi sweep has C(248,3) = 2,511,496 unordered "
        "triples; a quoted figure of 2,529,476 does not equal any C(n,3) near this size.",
        "D16 corrupted-table example: a 3-dimensional antisymmetric table with [e_i,e_j] proportional to the "
        "third unit satisfies Jacobi for every sign pattern, so a single flipped sign cannot produce a "
        "violation there; the violation-witness path is exercised with genuinely broken tables instead.",
    };
    return notes;
}

}  // namespace magicsq
