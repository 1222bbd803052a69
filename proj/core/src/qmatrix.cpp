#include "magicsq/qmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace magicsq {

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return QMatrix(0, 0);
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (rows[r].size() != static_cast<size_t>(m.cols()))
      throw std::invalid_argument("from_rows: ragged input");
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
  if (cols.empty()) return QMatrix(0, 0);
  QMatrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (cols[c].size() != static_cast<size_t>(m.rows()))
      throw std::invalid_argument("from_columns: ragged input");
    for (int r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

QVector QMatrix::row(int r) const {
  QVector v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

QVector QMatrix::column(int c) const {
  QVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != static_cast<size_t>(cols_)) throw std::invalid_argument("apply: size mismatch");
  QVector r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational acc;
    for (int j = 0; j < cols_; ++j) {
      const Rational& m = at(i, j);
      if (!m.is_zero() && !v[j].is_zero()) acc += m * v[j];
    }
    r[i] = acc;
  }
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: size mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& m = at(i, k);
      if (m.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& n = o.at(k, j);
        if (!n.is_zero()) r.at(i, j) += m * n;
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMatrix QMatrix::operator-() const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

QMatrix QMatrix::scaled_by(const Rational& c) const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

QMatrix QMatrix::from_flat(const QVector& v, int rows, int cols) {
  if (v.size() != static_cast<size_t>(rows) * cols) throw std::invalid_argument("from_flat: size mismatch");
  QMatrix m(rows, cols);
  m.a_ = v;
  return m;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ") << "[";
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).str();
    os << "]" << (r + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

std::vector<int> rref_inplace(QMatrix& m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int piv = -1;
    for (int r = lead; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int c = col; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(lead, c));
    Rational inv = m.at(lead, col).inv();
    for (int c = col; c < m.cols(); ++c)
      if (!m.at(lead, c).is_zero()) m.at(lead, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      Rational f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int c = col; c < m.cols(); ++c)
        if (!m.at(lead, c).is_zero()) m.at(r, c) -= f * m.at(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref_inplace(m).size()); }

std::vector<QVector> kernel_basis(const QMatrix& m_in) {
  QMatrix m = m_in;
  std::vector<int> pivots = rref_inplace(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det_bareiss(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  const int n = m.rows();
  if (n == 0) return Rational(1);
  // Fraction-free elimination; over Q every division is exact anyway, but
  // the Bareiss update keeps intermediate entries small.
  Rational prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m.at(r, k).is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return Rational(0);
      for (int c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(k, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  Rational d = m.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  std::vector<int> pivots = rref_inplace(aug);
  if (static_cast<int>(pivots.size()) != n) throw std::domain_error("inverse: singular matrix");
  QMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

std::optional<QVector> solve_in_span(const std::vector<QVector>& gens, const QVector& target) {
  SpanSolver solver(static_cast<int>(target.size()));
  solver.add_all(gens);
  return solver.express(target);
}

namespace {

// Rescales row/column i of a symmetric matrix by a positive rational that
// clears denominators and common factors, leaving the signature unchanged.
void normalize_symmetric_row(QMatrix& m, int i, int from) {
  const int n = m.rows();
  mpz_class num_gcd(0), den_lcm(1);
  for (int j = from; j < n; ++j) {
    const Rational& x = m.at(i, j);
    if (x.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
  }
  if (num_gcd == 0) return;
  Rational t{mpq_class(den_lcm) / mpq_class(num_gcd)};
  if (t == Rational(1)) return;
  for (int j = from; j < n; ++j) {
    if (j == i) {
      m.at(i, i) *= t * t;
    } else {
      m.at(i, j) *= t;
      m.at(j, i) = m.at(i, j);
    }
  }
}

}  // namespace

Signature symmetric_signature(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("symmetric_signature: not square");
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("symmetric_signature: not symmetric");

  auto swap_sym = [&m, n](int a, int b) {
    if (a == b) return;
    for (int c = 0; c < n; ++c) std::swap(m.at(a, c), m.at(b, c));
    for (int r = 0; r < n; ++r) std::swap(m.at(r, a), m.at(r, b));
  };

  Signature sig;
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k).is_zero()) {
      int diag = -1;
      for (int j = k + 1; j < n; ++j)
        if (!m.at(j, j).is_zero()) {
          diag = j;
          break;
        }
      if (diag >= 0) {
        swap_sym(k, diag);
      } else {
        int oi = -1, oj = -1;
        for (int i = k; i < n && oi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (!m.at(i, j).is_zero()) {
              oi = i;
              oj = j;
              break;
            }
        if (oi < 0) {
          sig.n_zero += n - k;
          return sig;
        }
        // Hyperbolic pair: after adding row/column oj into oi the (oi,oi)
        // entry becomes 2 m(oi,oj) != 0.
        for (int c = 0; c < n; ++c) m.at(oi, c) += m.at(oj, c);
        for (int r = 0; r < n; ++r) m.at(r, oi) += m.at(r, oj);
        swap_sym(k, oi);
      }
    }
    const Rational p = m.at(k, k);
    if (p.sign() > 0)
      ++sig.n_pos;
    else
      ++sig.n_neg;
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      Rational f = m.at(i, k) / p;
      for (int j = k; j < n; ++j)
        if (!m.at(k, j).is_zero()) m.at(i, j) -= f * m.at(k, j);
      for (int j = k; j < n; ++j) m.at(j, i) = m.at(i, j);
    }
    for (int i = k + 1; i < n; ++i) normalize_symmetric_row(m, i, k + 1);
  }
  return sig;
}

int SpanSolver::add(const QVector& v) {
  if (v.size() != static_cast<size_t>(dim_)) throw std::invalid_argument("SpanSolver: size mismatch");
  const int gen_index = n_gens_++;
  QVector r = v;
  QVector coeffs(n_gens_);
  coeffs[gen_index] = 1;
  for (auto& row : rows_) row.coeffs.resize(n_gens_);
  for (const auto& row : rows_) {
    const Rational c = r[row.pivot];
    if (c.is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      if (!row.v[j].is_zero()) r[j] -= c * row.v[j];
    for (int j = 0; j < n_gens_; ++j)
      if (!row.coeffs[j].is_zero()) coeffs[j] -= c * row.coeffs[j];
  }
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (!r[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return gen_index;  // dependent generator
  const Rational inv = r[pivot].inv();
  for (auto& x : r) x *= inv;
  for (auto& x : coeffs) x *= inv;
  // Keep existing rows reduced against the new pivot.
  for (auto& row : rows_) {
    const Rational c = row.v[pivot];
    if (c.is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      if (!r[j].is_zero()) row.v[j] -= c * r[j];
    for (int j = 0; j < n_gens_; ++j)
      if (!coeffs[j].is_zero()) row.coeffs[j] -= c * coeffs[j];
  }
  rows_.push_back(Row{std::move(r), std::move(coeffs), pivot});
  return gen_index;
}

bool SpanSolver::contains(const QVector& target) const {
  QVector r = target;
  for (const auto& row : rows_) {
    const Rational c = r[row.pivot];
    if (c.is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      if (!row.v[j].is_zero()) r[j] -= c * row.v[j];
  }
  return is_zero_vector(r);
}

std::optional<QVector> SpanSolver::express(const QVector& target) const {
  if (target.size() != static_cast<size_t>(dim_)) throw std::invalid_argument("SpanSolver: size mismatch");
  QVector r = target;
  QVector coeffs(n_gens_);
  for (const auto& row : rows_) {
    const Rational c = r[row.pivot];
    if (c.is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      if (!row.v[j].is_zero()) r[j] -= c * row.v[j];
    for (size_t j = 0; j < row.coeffs.size(); ++j)
      if (!row.coeffs[j].is_zero()) coeffs[j] += c * row.coeffs[j];
  }
  if (!is_zero_vector(r)) return std::nullopt;
  return coeffs;
}

void KernelAccumulator::add_equations(const std::vector<SparseVec>& eqs) {
  if (eqs.empty()) return;
  if (identity_) {
    QMatrix m(static_cast<int>(eqs.size()), n_);
    for (size_t e = 0; e < eqs.size(); ++e)
      for (const auto& [i, c] : eqs[e]) m.at(static_cast<int>(e), i) += c;
    cols_.clear();
    for (auto& v : kernel_basis(m)) cols_.push_back(to_sparse(v));
    identity_ = false;
    return;
  }
  const int d = static_cast<int>(cols_.size());
  if (d == 0) return;
  QMatrix m(static_cast<int>(eqs.size()), d);
  bool any = false;
  for (size_t e = 0; e < eqs.size(); ++e) {
    for (const auto& [i, c] : eqs[e]) {
      for (int col = 0; col < d; ++col) {
        // binary search for coordinate i in the sparse column
        const SparseVec& sc = cols_[col];
        auto it = std::lower_bound(sc.begin(), sc.end(), i,
                                   [](const std::pair<int, Rational>& p, int key) { return p.first < key; });
        if (it != sc.end() && it->first == i) {
          m.at(static_cast<int>(e), col) += c * it->second;
          any = true;
        }
      }
    }
  }
  if (!any) return;
  std::vector<QVector> k = kernel_basis(m);
  std::vector<SparseVec> next;
  next.reserve(k.size());
  QVector tmp(n_);
  for (const auto& kv : k) {
    for (auto& x : tmp) x = Rational(0);
    for (int c = 0; c < d; ++c) {
      if (kv[c].is_zero()) continue;
      for (const auto& [i, val] : cols_[c]) tmp[i] += kv[c] * val;
    }
    next.push_back(to_sparse(tmp));
  }
  cols_ = std::move(next);
}

std::vector<QVector> KernelAccumulator::dense_basis() const {
  std::vector<QVector> b;
  if (identity_) {
    for (int i = 0; i < n_; ++i) {
      QVector v(n_);
      v[i] = 1;
      b.push_back(std::move(v));
    }
    return b;
  }
  b.reserve(cols_.size());
  for (const auto& c : cols_) b.push_back(to_dense(c, n_));
  return b;
}

}  // namespace magicsq
