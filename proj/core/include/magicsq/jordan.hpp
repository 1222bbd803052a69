#pragma once

#include <magicsq/composition.hpp>
#include <magicsq/qmatrix.hpp>

#include <string>
#include <vector>

namespace magicsq {

// Dense n-by-n matrix whose entries are elements of a fixed composition
// algebra, each stored as a coordinate vector in the unit basis.
class KMatrix {
public:
    KMatrix(const CompositionAlgebra* alg, int n);
    static KMatrix identity(const CompositionAlgebra* alg, int n);

    const CompositionAlgebra* algebra() const { return alg_; }
    int n() const { return n_; }

    QVector& at(int r, int c) { return entries_[r * n_ + c]; }
    const QVector& at(int r, int c) const { return entries_[r * n_ + c]; }

    KMatrix operator+(const KMatrix& rhs) const;
    KMatrix operator-(const KMatrix& rhs) const;
    KMatrix operator-() const;
    KMatrix operator*(const KMatrix& rhs) const;
    KMatrix scaled_by(const Rational& c) const;
    bool operator==(const KMatrix& rhs) const;

    KMatrix conj_transpose() const;
    bool is_zero() const;
    bool is_hermitian() const;
    bool is_antihermitian() const;

    // Sum of diagonal entries as an element of the coefficient algebra.
    QVector trace() const;
    Rational re_trace() const;

private:
    const CompositionAlgebra* alg_;
    int n_;
    std::vector<QVector> entries_;
};

KMatrix kcommutator(const KMatrix& a, const KMatrix& b);
KMatrix kanticommutator(const KMatrix& a, const KMatrix& b);

// Basis of the antihermitian n-by-n matrices over K, optionally restricted
// to trace zero.  Off-diagonal generators place a unit at (r,c) and minus
// its conjugate at (c,r); diagonal generators are imaginary units, paired
// as (slot 0, -slot d) in the traceless case.
std::vector<KMatrix> antihermitian_basis(const CompositionAlgebra& k, int n,
                                         bool traceless);

// The Jordan algebra of hermitian n-by-n matrices over a composition
// algebra, n in {2,3}, with product X.Y = XY + YX (no 1/2 factor).
//
// Basis for n = 3: diagonal units e_0,e_1,e_2 at indices 0..2, then
// P_i(e_b) at index 3 + i*dimK + b, where P_i(x) carries x at position
// (i+1, i+2) mod 3 and conj(x) transposed.
// Basis for n = 2: the identity I at 0, E = diag(1,-1) at 1, then P(e_b)
// at 2 + b, where P(x) is off-diagonal (x, conj(x)).
class JordanAlgebra {
public:
    static const JordanAlgebra& get(AlgName k, int n);

    const CompositionAlgebra& coeff() const { return *k_; }
    int n() const { return n_; }
    int dim() const { return dim_; }

    std::string basis_label(int idx) const;

    const SparseVec& product_basis(int i, int j) const {
        return table_[i * dim_ + j];
    }
    QVector product(const QVector& u, const QVector& v) const;

    QVector identity_coords() const;
    Rational trace(const QVector& u) const;
    Rational trace_form(const QVector& u, const QVector& v) const;
    // Traceless part of the product: u.v - (tr(u.v)/n) I.
    QVector star(const QVector& u, const QVector& v) const;

    // Basis of the traceless subspace H'_n.
    std::vector<QVector> traceless_basis() const;

    KMatrix basis_matrix(int idx) const;
    KMatrix to_matrix(const QVector& coords) const;
    // Inverse of to_matrix; throws std::invalid_argument when the matrix
    // is not hermitian over K.
    QVector from_matrix(const KMatrix& m) const;

    // Left Jordan multiplication operator X -> u.X in basis coordinates.
    QMatrix L_op(const QVector& u) const;
    QMatrix L_op_basis(int idx) const;

    // Commutation X -> AX - XA with an antihermitian matrix A, expressed
    // in basis coordinates.
    QMatrix C_op(const KMatrix& a) const;

    // The antihermitian matrix with -x at position (i+1, i+2) mod 3 and
    // conj(x) at the transposed slot; commutation with it is F_i(x).
    KMatrix X_matrix(int i, const QVector& x) const;
    QMatrix F_op(int i, const QVector& x) const;

    // Apply a linear map on the coefficient algebra entrywise.  The map
    // must kill the real unit and preserve the imaginary part, otherwise
    // hermitian matrices are not preserved and this throws.
    QMatrix elementwise_op(const QMatrix& s_on_k) const;

    bool is_derivation(const QMatrix& d) const;
    // Basis of the full derivation algebra, found by solving the
    // derivation constraints D(x.y) = D(x).y + x.D(y) over basis pairs.
    const std::vector<QMatrix>& derivation_basis() const;

private:
    JordanAlgebra(const CompositionAlgebra* k, int n);
    void build_table();

    const CompositionAlgebra* k_;
    int n_;
    int dim_;
    std::vector<SparseVec> table_;
    mutable std::vector<QMatrix> der_cache_;
};

// One verified identity: name, outcome, and either the resolved convention
// (e.g. the sign on the associator correction term) or the first
// counterexample found.
struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct MatrixIdentityReport {
    AlgName k;
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
};

// Exhaustive checks of the hermitian/antihermitian matrix identities that
// drive the derivation theory: the commutation-derivation rule for
// traceless antihermitian 3x3 matrices, the second-order commutation rule
// and the multiplication-operator commutator rule (both with their
// associator correction term, whose sign is determined empirically and
// reported), the full-antihermitian 2x2 rule together with its bordered
// 3x3 embedding, and the trace obstruction at 3x3 over non-associative
// coefficients.
MatrixIdentityReport verify_matrix_identities(AlgName k);

}  // namespace magicsq
