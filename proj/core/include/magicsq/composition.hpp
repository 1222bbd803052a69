#pragma once

#include <string>
#include <vector>

#include "magicsq/qmatrix.hpp"

namespace magicsq {

// The eight ground algebras: the division forms R, C, H, O and the split
// forms Cs, Hs, Os.
enum class AlgName { R, C, H, O, Cs, Hs, Os };

AlgName alg_name_from_string(const std::string& s);
std::string to_string(AlgName n);
bool is_split(AlgName n);
int alg_dim(AlgName n);

// A composition algebra with a fixed orthogonal basis e_0..e_{dim-1},
// e_0 the unit. Products of basis units are signed basis units, so the
// whole multiplication is stored as a sign table plus an index table.
class CompositionAlgebra {
 public:
  // Cached instance for one of the eight named algebras.
  static const CompositionAlgebra& get(AlgName name);

  static CompositionAlgebra real_algebra();

  // Doubling step: basis (a, b) with product
  //   (a,b)(c,d) = (a c + eps \bar d b, d a + b \bar c),
  // so the new unit e_dim satisfies e_dim^2 = eps * e_0. eps = -1 extends
  // the division chain, eps = +1 produces the split form.
  static CompositionAlgebra cayley_dickson(const CompositionAlgebra& base, int eps);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  bool split() const { return split_; }

  // e_a e_b = mul_sign(a,b) * e_{mul_index(a,b)}
  int mul_sign(int a, int b) const { return sign_[a * dim_ + b]; }
  int mul_index(int a, int b) const { return index_[a * dim_ + b]; }
  // s with e_b^2 = s e_0; +1 for b = 0.
  int unit_square_sign(int b) const { return b == 0 ? 1 : mul_sign(b, b); }

  QVector unit(int a) const;
  QVector zero() const { return QVector(dim_); }

  QVector mul(const QVector& x, const QVector& y) const;
  QVector conj(const QVector& x) const;
  Rational re(const QVector& x) const { return x[0]; }
  QVector im(const QVector& x) const;
  // <x,y> = Re(x \bar y); the norm is <x,x>.
  Rational bilinear(const QVector& x, const QVector& y) const;
  Rational norm(const QVector& x) const { return bilinear(x, x); }
  QVector commutator(const QVector& x, const QVector& y) const;
  QVector associator(const QVector& x, const QVector& y, const QVector& z) const;

  QMatrix L_matrix(const QVector& x) const;  // left multiplication
  QMatrix R_matrix(const QVector& x) const;  // right multiplication
  QMatrix conj_matrix() const;               // z -> \bar z

  // D_{x,y} = [L_x,L_y] + [L_x,R_y] + [R_x,R_y], a derivation.
  QMatrix D_xy(const QVector& x, const QVector& y) const;
  // S_{x,y} z = <x,z> y - <y,z> x on the whole algebra.
  QMatrix S_xy_full(const QVector& x, const QVector& y) const;
  // Restriction of S_{x,y} to the imaginary part (x, y imaginary).
  QMatrix S_xy(const QVector& x, const QVector& y) const;

  // Diagonal of the norm form: <e_a,e_a>. Entry 0 is +1; imaginary entries
  // are -unit_square_sign(b).
  std::vector<int> metric() const;
  std::vector<int> imaginary_metric() const;

  // Basis of maps antisymmetric with respect to a diagonal metric g:
  // s_{ab} = g_a E_{ba} - g_b E_{ab} for a < b (so s_{ab} e_a = g_a e_b).
  static std::vector<QMatrix> so_basis(const std::vector<int>& metric);

  // Derivation algebra Der K as matrices on the whole algebra; cached.
  const std::vector<QMatrix>& derivation_basis() const;
  bool is_derivation(const QMatrix& d) const;

 private:
  CompositionAlgebra() = default;

  std::string name_;
  int dim_ = 0;
  bool split_ = false;
  std::vector<int> sign_;   // dim*dim
  std::vector<int> index_;  // dim*dim
  mutable std::vector<QMatrix> der_basis_;
  mutable bool der_ready_ = false;
};

}  // namespace magicsq
