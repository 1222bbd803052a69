#pragma once

#include <magicsq/composition.hpp>
#include <magicsq/jordan.hpp>
#include <magicsq/lie_algebra.hpp>

#include <string>

namespace magicsq {

// Lie algebra as JSON:
//   { "dim": n, "labels": [...], "brackets": [[i, j, [[k, "p/q"], ...]], ...] }
// with pairs listed for i < j only and coefficients as exact rational
// literals. The writer is deterministic: pairs ascend lexicographically and
// basis indices ascend within each bracket.
std::string lie_to_json(const LieAlgebra& alg);
LieAlgebra lie_from_json(const std::string& text);

// Multiplication table of a composition algebra: rows of signed unit
// indices, entry (i,j) holding s*(k+1) with e_i e_j = s e_k.
std::string composition_table_to_json(const CompositionAlgebra& k);

// Jordan product table keyed by basis-label pairs.
std::string jordan_table_to_json(const JordanAlgebra& j);

// Matrix as JSON: { "rows": r, "cols": c, "entries": [["p/q", ...], ...] }.
std::string matrix_to_json(const QMatrix& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace magicsq
