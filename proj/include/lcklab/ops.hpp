#pragma once

#include "lcklab/fields.hpp"

namespace lck {

// -- Exterior calculus on C^n \ {0} viewed as R^{2n} ------------------------
//
// All operations are pure; results capture their operands by value and can
// be evaluated concurrently. Jet depth bookkeeping: exterior_d and
// lie_derivative consume one derivative level, d_c consumes one (its two
// I's are algebraic), dd^c of a scalar consumes two.

/// Alternating product; graded-commutative, bilinear.
KForm wedge(const KForm& a, const KForm& b);

/// Coordinate-formula exterior derivative from exact jet derivatives.
KForm exterior_d(const KForm& a);

/// (I a)(X_1,...,X_k) = (-1)^k a(I X_1,...,I X_k).
KForm apply_I(const KForm& a);

/// d^c = Conventions::DC_SIGN * I d I.
KForm d_c(const KForm& a);

/// dd^c of a scalar field, as a 2-form.
KForm dd_c(const ScalarField& f);

/// Contraction in the first slot.
KForm interior_product(const VectorField& X, const KForm& a);

/// Cartan formula d(i_X a) + i_X (d a); for 0-forms i_X(d a).
KForm lie_derivative(const VectorField& X, const KForm& a);

/// Evaluate a k-form on k tangent vectors at a point (values only).
double evaluate_form(const KForm& a, const Point& p,
                     const std::vector<Eigen::VectorXd>& vectors);

/// Sup of |coefficients| at a point.
double sup_coeff(const KForm& a, const Point& p);

/// Full antisymmetric component matrix of a 2-form at a point (values).
Eigen::MatrixXd form2_matrix(const KForm& a, const Point& p);

/// Symmetric matrix g_ab = w(e_a, I e_b) of a (1,1)-form at a point; positive
/// definite exactly when w tames the complex structure.
Eigen::MatrixXd hermitian_matrix(const KForm& w, const Point& p);

/// Jet-valued component matrix of a 2-form at a point.
std::vector<std::vector<Jet>> form2_matrix_jets(const KForm& a, const Point& p);

/// Scalar field p -> w(X, Y)(p) for a 2-form w, with full jet composition.
ScalarField pair_form2(const KForm& w, const VectorField& X,
                       const VectorField& Y);

/// Pointwise I on a vector field (components rotated by the I matrix).
VectorField apply_I_vec(const VectorField& X);

}  // namespace lck
