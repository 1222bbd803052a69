#include "magicsq/composition.hpp"

#include <array>
#include <map>
#include <memory>
#include <stdexcept>

namespace magicsq {

AlgName alg_name_from_string(const std::string& s) {
  static const std::map<std::string, AlgName> names = {
      {"R", AlgName::R},   {"C", AlgName::C},   {"H", AlgName::H},  {"O", AlgName::O},
      {"Cs", AlgName::Cs}, {"Hs", AlgName::Hs}, {"Os", AlgName::Os}};
  auto it = names.find(s);
  if (it == names.end()) throw std::invalid_argument("unknown algebra name '" + s + "'");
  return it->second;
}

std::string to_string(AlgName n) {
  switch (n) {
    case AlgName::R: return "R";
    case AlgName::C: return "C";
    case AlgName::H: return "H";
    case AlgName::O: return "O";
    case AlgName::Cs: return "Cs";
    case AlgName::Hs: return "Hs";
    case AlgName::Os: return "Os";
  }
  throw std::logic_error("bad AlgName");
}

bool is_split(AlgName n) { return n == AlgName::Cs || n == AlgName::Hs || n == AlgName::Os; }

int alg_dim(AlgName n) {
  switch (n) {
    case AlgName::R: return 1;
    case AlgName::C:
    case AlgName::Cs: return 2;
    case AlgName::H:
    case AlgName::Hs: return 4;
    case AlgName::O:
    case AlgName::Os: return 8;
  }
  throw std::logic_error("bad AlgName");
}

CompositionAlgebra CompositionAlgebra::real_algebra() {
  CompositionAlgebra a;
  a.name_ = "R";
  a.dim_ = 1;
  a.split_ = false;
  a.sign_ = {1};
  a.index_ = {0};
  return a;
}

CompositionAlgebra CompositionAlgebra::cayley_dickson(const CompositionAlgebra& base, int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("cayley_dickson: eps must be +1 or -1");
  const int v = base.dim_;
  CompositionAlgebra a;
  a.dim_ = 2 * v;
  a.split_ = base.split_ || eps == 1;
  a.sign_.assign(a.dim_ * a.dim_, 0);
  a.index_.assign(a.dim_ * a.dim_, 0);
  auto conj_sign = [](int u) { return u == 0 ? 1 : -1; };
  auto set = [&a](int x, int y, int s, int i) {
    a.sign_[x * a.dim_ + y] = s;
    a.index_[x * a.dim_ + y] = i;
  };
  for (int x = 0; x < v; ++x)
    for (int y = 0; y < v; ++y) {
      // (e_x, 0)(e_y, 0) = (e_x e_y, 0)
      set(x, y, base.mul_sign(x, y), base.mul_index(x, y));
      // (e_x, 0)(0, e_y) = (0, e_y e_x)
      set(x, v + y, base.mul_sign(y, x), v + base.mul_index(y, x));
      // (0, e_x)(e_y, 0) = (0, e_x \bar e_y)
      set(v + x, y, base.mul_sign(x, y) * conj_sign(y), v + base.mul_index(x, y));
      // (0, e_x)(0, e_y) = (eps \bar e_y e_x, 0)
      set(v + x, v + y, eps * base.mul_sign(y, x) * conj_sign(y), base.mul_index(y, x));
    }
  return a;
}

const CompositionAlgebra& CompositionAlgebra::get(AlgName name) {
  using Cache = std::map<AlgName, std::unique_ptr<CompositionAlgebra>>;
  static const Cache& cache = []() -> const Cache& {
    auto* m = new Cache;
    CompositionAlgebra r = real_algebra();
    CompositionAlgebra c = cayley_dickson(r, -1);
    CompositionAlgebra h = cayley_dickson(c, -1);
    CompositionAlgebra o = cayley_dickson(h, -1);
    CompositionAlgebra cs = cayley_dickson(r, 1);
    CompositionAlgebra hs = cayley_dickson(c, 1);
    CompositionAlgebra os = cayley_dickson(h, 1);
    c.name_ = "C";
    h.name_ = "H";
    o.name_ = "O";
    cs.name_ = "Cs";
    hs.name_ = "Hs";
    os.name_ = "Os";
    auto put = [m](AlgName key, CompositionAlgebra&& alg) {
      (*m)[key] =
          std::unique_ptr<CompositionAlgebra>(new CompositionAlgebra(std::move(alg)));
    };
    put(AlgName::R, std::move(r));
    put(AlgName::C, std::move(c));
    put(AlgName::H, std::move(h));
    put(AlgName::O, std::move(o));
    put(AlgName::Cs, std::move(cs));
    put(AlgName::Hs, std::move(hs));
    put(AlgName::Os, std::move(os));
    return *m;
  }();
  return *cache.at(name);
}

QVector CompositionAlgebra::unit(int a) const {
  QVector v(dim_);
  v.at(a) = 1;
  return v;
}

QVector CompositionAlgebra::mul(const QVector& x, const QVector& y) const {
  QVector r(dim_);
  for (int a = 0; a < dim_; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim_; ++b) {
      if (y[b].is_zero()) continue;
      Rational t = x[a] * y[b];
      if (mul_sign(a, b) < 0)
        r[mul_index(a, b)] -= t;
      else
        r[mul_index(a, b)] += t;
    }
  }
  return r;
}

QVector CompositionAlgebra::conj(const QVector& x) const {
  QVector r(dim_);
  r[0] = x[0];
  for (int a = 1; a < dim_; ++a) r[a] = -x[a];
  return r;
}

QVector CompositionAlgebra::im(const QVector& x) const {
  QVector r = x;
  r[0] = Rational(0);
  return r;
}

Rational CompositionAlgebra::bilinear(const QVector& x, const QVector& y) const {
  Rational acc;
  const std::vector<int> g = metric();
  for (int a = 0; a < dim_; ++a) {
    if (x[a].is_zero() || y[a].is_zero()) continue;
    Rational t = x[a] * y[a];
    if (g[a] < 0)
      acc -= t;
    else
      acc += t;
  }
  return acc;
}

QVector CompositionAlgebra::commutator(const QVector& x, const QVector& y) const {
  return vec_sub(mul(x, y), mul(y, x));
}

QVector CompositionAlgebra::associator(const QVector& x, const QVector& y, const QVector& z) const {
  return vec_sub(mul(mul(x, y), z), mul(x, mul(y, z)));
}

QMatrix CompositionAlgebra::L_matrix(const QVector& x) const {
  QMatrix m(dim_, dim_);
  for (int a = 0; a < dim_; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim_; ++b) {
      if (mul_sign(a, b) < 0)
        m.at(mul_index(a, b), b) -= x[a];
      else
        m.at(mul_index(a, b), b) += x[a];
    }
  }
  return m;
}

QMatrix CompositionAlgebra::R_matrix(const QVector& x) const {
  QMatrix m(dim_, dim_);
  for (int a = 0; a < dim_; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim_; ++b) {
      if (mul_sign(b, a) < 0)
        m.at(mul_index(b, a), b) -= x[a];
      else
        m.at(mul_index(b, a), b) += x[a];
    }
  }
  return m;
}

QMatrix CompositionAlgebra::conj_matrix() const {
  QMatrix m(dim_, dim_);
  m.at(0, 0) = 1;
  for (int a = 1; a < dim_; ++a) m.at(a, a) = -1;
  return m;
}

QMatrix CompositionAlgebra::D_xy(const QVector& x, const QVector& y) const {
  QMatrix lx = L_matrix(x), ly = L_matrix(y), rx = R_matrix(x), ry = R_matrix(y);
  return magicsq::commutator(lx, ly) + magicsq::commutator(lx, ry) +
         magicsq::commutator(rx, ry);
}

QMatrix CompositionAlgebra::S_xy_full(const QVector& x, const QVector& y) const {
  const std::vector<int> g = metric();
  QMatrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Rational t = y[i] * x[j] - x[i] * y[j];
      if (t.is_zero()) continue;
      m.at(i, j) = g[j] < 0 ? -t : t;
    }
  return m;
}

QMatrix CompositionAlgebra::S_xy(const QVector& x, const QVector& y) const {
  QMatrix full = S_xy_full(x, y);
  QMatrix m(dim_ - 1, dim_ - 1);
  for (int i = 1; i < dim_; ++i)
    for (int j = 1; j < dim_; ++j) m.at(i - 1, j - 1) = full.at(i, j);
  return m;
}

std::vector<int> CompositionAlgebra::metric() const {
  std::vector<int> g(dim_);
  g[0] = 1;
  for (int b = 1; b < dim_; ++b) g[b] = -unit_square_sign(b);
  return g;
}

std::vector<int> CompositionAlgebra::imaginary_metric() const {
  std::vector<int> g = metric();
  return std::vector<int>(g.begin() + 1, g.end());
}

std::vector<QMatrix> CompositionAlgebra::so_basis(const std::vector<int>& metric) {
  const int n = static_cast<int>(metric.size());
  std::vector<QMatrix> basis;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      QMatrix s(n, n);
      s.at(b, a) = metric[a];
      s.at(a, b) = -metric[b];
      basis.push_back(std::move(s));
    }
  return basis;
}

const std::vector<QMatrix>& CompositionAlgebra::derivation_basis() const {
  if (der_ready_) return der_basis_;
  // Unknowns: the dim x dim entries of D (row major). A derivation must
  // satisfy D(e_a e_b) = D(e_a) e_b + e_a D(e_b) for all pairs; each
  // component of each pair gives one sparse equation with three terms,
  // using that left/right multiplication by a basis unit permutes units.
  KernelAccumulator acc(dim_ * dim_);
  // inv_l[a][m]: the r with mul_index(a, r) = m; inv_r[b][m]: mul_index(r, b) = m
  std::vector<std::vector<int>> inv_l(dim_, std::vector<int>(dim_)), inv_r(dim_, std::vector<int>(dim_));
  for (int a = 0; a < dim_; ++a)
    for (int r = 0; r < dim_; ++r) {
      inv_l[a][mul_index(a, r)] = r;
      inv_r[a][mul_index(r, a)] = r;
    }
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      std::vector<SparseVec> block;
      const int c = mul_index(a, b), s = mul_sign(a, b);
      for (int m = 0; m < dim_; ++m) {
        SparseVec eq;
        eq.emplace_back(m * dim_ + c, Rational(s));
        const int r1 = inv_r[b][m];  // D(e_a) e_b contribution
        eq.emplace_back(r1 * dim_ + a, Rational(-mul_sign(r1, b)));
        const int r2 = inv_l[a][m];  // e_a D(e_b) contribution
        eq.emplace_back(r2 * dim_ + b, Rational(-mul_sign(a, r2)));
        block.push_back(std::move(eq));
      }
      acc.add_equations(block);
    }
  der_basis_.clear();
  for (const auto& v : acc.dense_basis()) der_basis_.push_back(QMatrix::from_flat(v, dim_, dim_));
  der_ready_ = true;
  return der_basis_;
}

bool CompositionAlgebra::is_derivation(const QMatrix& d) const {
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      QVector lhs = d.apply(mul(unit(a), unit(b)));
      QVector rhs = vec_add(mul(d.column(a), unit(b)), mul(unit(a), d.column(b)));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace magicsq
