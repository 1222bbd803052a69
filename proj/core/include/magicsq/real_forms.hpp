#pragma once

#include <magicsq/composition.hpp>
#include <magicsq/lie_algebra.hpp>
#include <magicsq/qmatrix.hpp>
#include <magicsq/tits.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace magicsq {

// Cartan decompositions, Weyl-trick compactification, the explicit
// 14-generator derivation basis of the octonions, and the verified
// maximal-compact table of the exceptional entries.

// A verified splitting L = f -+ p: brackets graded ([f,f] and [p,p] in f,
// [f,p] in p), Killing negative definite on f, positive definite on p,
// and the two blocks Killing-orthogonal.
struct CartanDecomposition {
    LieAlgebra algebra{0};
    std::vector<int> f_indices;
    std::vector<int> p_indices;
};

struct CartanCheckResult {
    bool ok = false;
    std::string failure;  // first violated condition with witnesses
    CartanDecomposition decomposition;
};
CartanCheckResult cartan_check(const LieAlgebra& L, const std::vector<int>& f_indices);

// New algebra with the [p,p] brackets negated and everything else kept;
// on a valid decomposition the result is a compact form of the input.
LieAlgebra weyl_trick(const CartanDecomposition& d);

// The 14 derivation generators of O (split: of the split octonions),
// each a sum of two signed elementary rotations s_ij of the imaginary
// part.  When the printed sign pattern of a generator fails the
// derivation law under this library's multiplication convention, the
// signs are recalibrated and the change is recorded in `dictionary`.
struct G2Basis {
    bool split = false;
    std::vector<QMatrix> generators;      // 14 operators on all 8 unit slots
    std::vector<std::string> dictionary;  // "g1 = s23 - s45" per generator
    bool printed_signs_valid = false;     // the list worked without changes
};
G2Basis der_O_basis_g(bool split);

// Positions inside the g-list of the six generators spanning the maximal
// compact subalgebra of the split-octonion derivation algebra.
std::vector<int> m_g2_positions();

// The two commuting simple ideals of an algebra isomorphic to
// so(3) + so(3), each returned as a coordinate basis over the input basis.
// Found by splitting the adjoint module's two-dimensional endomorphism
// algebra into its eigenprojections; throws when the input does not have
// exactly two absolutely irreducible adjoint summands or the projection
// eigenvalues are irrational.
std::pair<std::vector<QVector>, std::vector<QVector>> so3_pair_ideals(const LieAlgebra& M);

// Attempts to extend the identity on basis indices [0, base) to an
// isomorphism source -> target by solving for the final-block map from the
// bracket cells that land in the block, then verifying every bracket.
// Returns the full morphism matrix, or nullopt when no such extension
// exists.
std::optional<QMatrix> solve_last_block_morphism(const LieAlgebra& source, const LieAlgebra& target,
                                                 int base);

// A magic-square entry re-expressed with its final summand in a chosen
// operator basis (each operator given in the same representation as the
// summand's defining one, e.g. 8x8 unit-coordinate matrices for Der K2).
LieAlgebra with_last_summand_basis(const MagicSquareEntry& e, const std::vector<QMatrix>& ops,
                                   const std::vector<std::string>& labels);

struct MaximalCompactRow {
    std::string pair;       // which split entry, e.g. "l3(O,Cs)"
    int dim = 0;
    int dim_f = 0;
    int dim_p = 0;
    int character = 0;      // dim p - dim f
    bool grading_ok = false;
    std::string failure;    // empty when grading_ok
    CartanDecomposition decomposition;  // valid when grading_ok
};

// The five rows of the maximal-compact theorem: the compact subalgebra is
// assembled from the stated summands inside the corresponding split
// magic-square entry and verified by cartan_check.
std::vector<MaximalCompactRow> maximal_compact_report();

struct WeylMatchRow {
    std::string pair;    // split entry, e.g. "l3(O,Hs)"
    std::string target;  // compact entry it lands on, e.g. "l3(O,H)"
    bool morphism_ok = false;
    QMatrix matrix;  // verified isomorphism when morphism_ok
};

// Applies weyl_trick to each verified maximal-compact row and produces an
// explicit isomorphism onto the corresponding compact entry (identity on
// Der + tensor summands, final block solved from bracket cells).
std::vector<WeylMatchRow> weyl_compact_match();

}  // namespace magicsq
