#pragma once

#include <magicsq/composition.hpp>
#include <magicsq/jordan.hpp>
#include <magicsq/lie_algebra.hpp>
#include <magicsq/tits.hpp>

#include <string>
#include <vector>

namespace magicsq {

// Matrix realizations of the classical families over the ground algebras,
// the 3x3 antihermitian-plus-derivations model, the structure and
// conformal algebras of the hermitian Jordan algebras, and explicitly
// checked isomorphisms from the two-algebra Lie constructions onto them.

// A Lie algebra with a faithful matrix realization over one ground
// algebra; the structure constants are raw matrix commutators expressed
// in the recorded basis.
struct MatrixLieAlgebra {
    AlgName k = AlgName::R;
    int n = 0;                  // matrix size
    std::string relation;       // defining relation, human readable
    std::vector<KMatrix> basis;
    LieAlgebra algebra{0};
};

// Real antisymmetric family for a diagonal metric: A^T G + G A = 0.
MatrixLieAlgebra build_so_metric(const std::vector<int>& gsigns);
// Metric (+1 x p, -1 x q).
MatrixLieAlgebra build_so(int p, int q);
// Complex antihermitian family with zero trace: A^+ G + G A = 0, tr A = 0.
MatrixLieAlgebra build_su(int p, int q);
// Quaternionic antihermitian family: A^+ + A = 0 (no trace condition).
MatrixLieAlgebra build_sq(int n);
// 2n x 2n over K in {R, C, H}: A^+ J + J A = 0 with J = [[0,I],[-I,0]];
// over C the central imaginary trace direction is removed.
MatrixLieAlgebra build_sp2n(AlgName k, int n);
// n x n over K in {R, C, H} with vanishing real trace; over commutative K
// the full trace is removed (the imaginary trace spans a central line).
MatrixLieAlgebra build_sl(AlgName k, int n);

// Traceless antihermitian 3x3 matrices over K extended by Der K with
//   [A,B] = (AB - BA)' + (1/3) sum_{i,j} D_{a_ij, b_ji},
// bracket-closed for every K and equal to raw matrix commutators when K
// is associative (the trace part re-expressed through inner derivations).
struct AntihermitianModel {
    AlgName k = AlgName::R;
    int der_dim = 0;                // Der K summand comes first
    std::vector<KMatrix> matrices;  // antihermitian summand, in basis order
    LieAlgebra algebra{0};
};
AntihermitianModel build_sa3(AlgName k);

// Structure and conformal algebras of H_n(K), n in {2, 3}:
//   der       = Der H_n(K)
//   str_prime = der -+ H'_n(K)          [H,H'] = [L_H, L_H']
//   con       = str_prime -+ R -+ J^2   with the grading element r0.
// The Jordan product is normalized so that L_I = id (product_scale 1/2);
// the doubled anticommutator reading also closes but admits none of the
// standard isomorphisms (the scale equations have no solution), so the
// halved reading is the one constructed.
struct ConformalAlgebra {
    AlgName k = AlgName::R;
    int n = 0;
    Rational product_scale;
    LieAlgebra der{0};
    LieAlgebra str_prime{0};
    LieAlgebra con{0};
    std::vector<SummandRange> summands;  // der, h, r0, jx, jy inside con
};
ConformalAlgebra build_str_con(AlgName k, int n);

// One checked isomorphism: the target-by-source matrix plus the machine
// verification of bracket preservation and bijectivity.
struct IsoCheck {
    std::string name;
    QMatrix matrix;
    MorphismReport report;
};

// L2(k1,k2) onto the antisymmetric matrices of the combined quadratic
// space K2' + R^2 + K1'; k1 must be a division algebra.
struct L2SoIso {
    MatrixLieAlgebra target;
    IsoCheck iso;
};
L2SoIso iso_L2_so(AlgName k1, AlgName k2);

// L_n(k, Hs) -> con, L_n(k, Cs) -> str_prime, L_n(k, R) -> der for the
// 2x2 (n = 2, from L2) and 3x3 (n = 3, from L3) hermitian algebras.
struct ConIso {
    ConformalAlgebra target;
    IsoCheck con;
    IsoCheck str;
    IsoCheck der;
};
ConIso iso_conformal(AlgName k, int n);

// L3(k,R) -> the antihermitian model (all division k), and for
// associative k also L3(k,Cs) -> sl(3,k) and L3(k,Hs) -> sp(6,k).
struct MatrixModelIsos {
    AntihermitianModel sa3;
    IsoCheck from_sa3;  // antihermitian model -> L3(k,R)
    IsoCheck to_sa3;    // inverse direction
    bool has_sl_sp = false;
    MatrixLieAlgebra sl;
    IsoCheck to_sl;
    MatrixLieAlgebra sp;
    IsoCheck to_sp;
};
MatrixModelIsos iso_matrix_models(AlgName k);

}  // namespace magicsq
