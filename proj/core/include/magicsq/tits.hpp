#pragma once

#include <magicsq/composition.hpp>
#include <magicsq/jordan.hpp>
#include <magicsq/lie_algebra.hpp>
#include <magicsq/triality.hpp>

#include <string>
#include <vector>

namespace magicsq {

enum class SquareKind { L2, L3, L3sym };

std::string to_string(SquareKind k);

// Contiguous block of basis indices belonging to one named summand.
struct SummandRange {
    std::string name;
    int begin = 0;  // inclusive
    int end = 0;    // exclusive
    int size() const { return end - begin; }
};

struct MagicSquareEntry {
    AlgName k1, k2;
    SquareKind kind;
    LieAlgebra algebra;
    std::vector<SummandRange> summands;

    const SummandRange& summand(const std::string& name) const;
};

// Memoized builders; references stay valid for the process lifetime.
// Basis order for L3: Der H3(K1) | H'3(K1) x K'2 (traceless-basis-major,
// imaginary-unit-minor) | Der K2.  For L2 the last summand is so(K'2).
// For L3sym: Tri K1 | Tri K2 | F_1 block | F_2 block | F_3 block, each
// F block ordered by (K1 unit, K2 unit).
const MagicSquareEntry& build_L3(AlgName k1, AlgName k2);
const MagicSquareEntry& build_L2(AlgName k1, AlgName k2);
const MagicSquareEntry& build_L3_sym(AlgName k1, AlgName k2);

// The identification used to prove that the Tits assembly and the
// two-triality presentation agree: Der H3(K1) splits into trialities and
// F_i parts, diagonal traceless tensors turn into K2 trialities, and
// P_i(x) tensor a maps to F_i(x tensor a).
LieMorphism l3_dictionary_morphism(AlgName k1, AlgName k2);

// x tensor y -> y tensor x swap, an isomorphism L3sym(K1,K2) ->
// L3sym(K2,K1).
LieMorphism l3sym_swap_morphism(AlgName k1, AlgName k2);

struct TableCell {
    AlgName k1, k2;
    int dim = 0;
    Signature sig;
    std::string name;
};

// 4x4 table; rows indexed by K2 (division algebras, or their split forms
// with first row R when split is set), columns by division K1.
std::vector<std::vector<TableCell>> magic_square_table(SquareKind kind, bool split);

// Catalog lookup from the invariants (dimension, Killing signature,
// center dimension); empty string when no catalog entry matches.
std::string real_form_label(int dim, const Signature& sig, int center);

}  // namespace magicsq
