#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magicsq/rational.hpp"

namespace magicsq {

// Dense matrix over Q, row major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static QMatrix identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix from_columns(const std::vector<QVector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  QVector row(int r) const;
  QVector column(int c) const;
  QMatrix transposed() const;
  bool is_zero() const;

  QVector apply(const QVector& v) const;  // this * v
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator-() const;
  QMatrix scaled_by(const Rational& c) const;
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  // Row-major flattening, used to treat operators as vectors.
  QVector flatten() const { return a_; }
  static QMatrix from_flat(const QVector& v, int rows, int cols);

  std::string str() const;  // human-readable, for diagnostics

 private:
  int rows_ = 0, cols_ = 0;
  QVector a_;
};

inline QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

// Reduced row echelon form in place; returns pivot column per reduced row.
std::vector<int> rref_inplace(QMatrix& m);

int rank(QMatrix m);

// Basis of the right kernel {v : m v = 0}.
std::vector<QVector> kernel_basis(const QMatrix& m);

// Exact determinant (fraction-free Bareiss elimination with pivoting).
Rational det_bareiss(QMatrix m);

// Inverse; throws if singular.
QMatrix inverse(const QMatrix& m);

// Coefficients c with target = sum c_i gens_i, or nullopt if target is
// outside the span.
std::optional<QVector> solve_in_span(const std::vector<QVector>& gens, const QVector& target);

struct Signature {
  int n_neg = 0;
  int n_zero = 0;
  int n_pos = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.n_neg == b.n_neg && a.n_zero == b.n_zero && a.n_pos == b.n_pos;
  }
  std::string str() const {
    return "(" + std::to_string(n_neg) + "," + std::to_string(n_zero) + "," + std::to_string(n_pos) + ")";
  }
};

// Signature of a symmetric matrix, computed by exact symmetric congruence
// reduction (diagonal pivots, symmetric swaps, and a hyperbolic split when
// the remaining diagonal vanishes). Throws if the input is not symmetric.
Signature symmetric_signature(QMatrix m);

// Incremental echelon solver over a fixed ambient dimension. Generators are
// added once; express() then writes any vector of the span as an exact
// combination of the generators in the order added.
class SpanSolver {
 public:
  explicit SpanSolver(int dim) : dim_(dim) {}

  // Returns the index of the added generator.
  int add(const QVector& v);
  void add_all(const std::vector<QVector>& vs) {
    for (const auto& v : vs) add(v);
  }

  int generator_count() const { return n_gens_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool contains(const QVector& target) const;

  // Coefficient vector of length generator_count(), or nullopt.
  std::optional<QVector> express(const QVector& target) const;

 private:
  int dim_;
  int n_gens_ = 0;
  struct Row {
    QVector v;       // echelonized vector, pivot normalized to 1
    QVector coeffs;  // expression of v in the original generators
    int pivot;
  };
  std::vector<Row> rows_;
};

// Incremental kernel of a growing system of sparse linear equations over
// Q^n. Starts as the full space and shrinks as equation blocks arrive.
class KernelAccumulator {
 public:
  explicit KernelAccumulator(int n) : n_(n) {}

  void add_equation(const SparseVec& eq) { add_equations({eq}); }
  void add_equations(const std::vector<SparseVec>& eqs);

  int dim() const { return identity_ ? n_ : static_cast<int>(cols_.size()); }
  std::vector<QVector> dense_basis() const;

 private:
  int n_;
  bool identity_ = true;
  std::vector<SparseVec> cols_;  // kernel basis vectors, sparse
};

}  // namespace magicsq
