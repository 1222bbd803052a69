#pragma once

#include <magicsq/composition.hpp>
#include <magicsq/qmatrix.hpp>

#include <optional>
#include <vector>

namespace magicsq {

// A triple of linear maps (A, B, C) on a composition algebra, intended to
// satisfy A(xy) = x(By) + (Cx)y with each component antisymmetric with
// respect to the norm form.
struct Triality {
    QMatrix a, b, c;

    Triality(QMatrix a_, QMatrix b_, QMatrix c_);
    explicit Triality(int nu);

    Triality operator+(const Triality& rhs) const;
    Triality operator-(const Triality& rhs) const;
    Triality scaled_by(const Rational& s) const;
    bool operator==(const Triality& rhs) const;
    bool is_zero() const;

    QVector flatten() const;
    static Triality from_flat(const QVector& v, int nu);
};

Triality tri_commutator(const Triality& s, const Triality& t);

// Conjugation twist M -> conj . M . conj on maps of K.
QMatrix bar_map(const CompositionAlgebra& k, const QMatrix& m);

bool is_triality(const CompositionAlgebra& k, const Triality& t);

// theta(A, B, C) = (bar B, C, bar A); an order-3 automorphism.
Triality theta(const CompositionAlgebra& k, const Triality& t);

// T(D, a, b) = (D + L_a - R_b, D - L_a - L_b - R_b, D + L_a + R_a + R_b)
// for a derivation D and imaginary a, b; rejects other inputs.
Triality t_from_dab(const CompositionAlgebra& k, const QMatrix& d,
                    const QVector& a, const QVector& b);

struct TriDecomposition {
    QMatrix d;
    QVector a;
    QVector b;
};

// Inverse of t_from_dab: reads a and b off B(1) = -a - 2b, C(1) = 2a + b,
// then D = A - L_a + R_b.  Throws when the recovered D fails the
// derivation law, which means the input was not a valid triple.
TriDecomposition decompose_tri(const CompositionAlgebra& k, const Triality& t);

// T_{x,y} = (4 S_{x,y}, R_y R_xbar - R_x R_ybar, L_y L_xbar - L_x L_ybar).
Triality t_xy(const CompositionAlgebra& k, const QVector& x, const QVector& y);

// Component aliases (T_1, T_2, T_3) = (A, bar B, bar C), i in {0, 1, 2}.
QMatrix t_component(const CompositionAlgebra& k, const Triality& t, int i);

class TrialityAlgebra {
public:
    static const TrialityAlgebra& get(AlgName k);

    const CompositionAlgebra& coeff() const { return *k_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const Triality& basis(int i) const { return basis_[i]; }

    std::optional<QVector> try_express(const Triality& t) const;
    QVector express(const Triality& t) const;

    // Structure constants of the componentwise bracket in this basis.
    const SparseVec& bracket_basis(int i, int j) const;

private:
    explicit TrialityAlgebra(const CompositionAlgebra* k);

    const CompositionAlgebra* k_;
    std::vector<Triality> basis_;
    SpanSolver solver_;
    mutable std::vector<SparseVec> table_;
    mutable std::vector<bool> table_done_;
};

}  // namespace magicsq
