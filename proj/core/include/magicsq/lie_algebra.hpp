#pragma once

#include <magicsq/qmatrix.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace magicsq {

// Finite-dimensional Lie algebra over the rationals: a labeled basis plus
// sparse structure constants stored for i < j only; the opposite
// orientation is derived by sign flip.
class LieAlgebra {
public:
    LieAlgebra(int dim, std::vector<std::string> labels);
    explicit LieAlgebra(int dim);

    int dim() const { return dim_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(int i, std::string s) { labels_[i] = std::move(s); }

    // Building interface; requires i < j.  Entries with zero coefficients
    // are dropped and k-indices kept sorted.
    void set_bracket(int i, int j, SparseVec v);
    const SparseVec& bracket_upper(int i, int j) const;

    QVector bracket_basis(int i, int j) const;
    QVector bracket(const QVector& x, const QVector& y) const;
    QVector bracket_sparse(const SparseVec& x, const SparseVec& y) const;

    QMatrix ad_basis(int i) const;
    QMatrix ad(const QVector& x) const;

    struct JacobiReport {
        long long triples = 0;
        long long violations = 0;
        std::array<int, 3> first_witness{-1, -1, -1};
        bool exact_fallback = false;
    };
    // Sweeps all unordered basis triples; scaled 64-bit arithmetic with a
    // proven bound, falling back to rationals when coefficients are large.
    JacobiReport jacobi_violations() const;

    QMatrix killing_matrix() const;
    Signature killing_signature() const;

    int center_dim() const;
    int derived_dim() const;

    // Dimension of the smallest bracket-closed subspace containing the
    // given generators.
    int span_closure_dim(const std::vector<int>& basis_indices) const;
    int span_closure_dim(const std::vector<QVector>& generators) const;

private:
    int dim_;
    std::vector<std::string> labels_;
    std::vector<SparseVec> sc_;  // index i * dim + j, populated for i < j
    static const SparseVec empty_;
};

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

struct LieMorphism {
    const LieAlgebra* source = nullptr;
    const LieAlgebra* target = nullptr;
    QMatrix matrix;  // target.dim x source.dim
};

struct MorphismReport {
    bool brackets_preserved = false;
    bool bijective = false;
    std::pair<int, int> witness{-1, -1};

    bool is_isomorphism() const { return brackets_preserved && bijective; }
};

MorphismReport check_morphism(const LieMorphism& f);

}  // namespace magicsq
