// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/SparseCore>

#include "pqlab/fe_function.hpp"
#include "pqlab/problem.hpp"

namespace pqlab {

/// ||grad u||_r, exact for P1 fields (gradients are constant per element).
double grad_seminorm(const FeFunction& u, double r);

/// ||u||_r via per-element Gauss quadrature of degree ceil(r)+2.
double lebesgue_norm(const FeFunction& u, double r);

/// Phi_alpha(u) = alpha ||grad u||_p^p + ||grad u||_q^q.
double phi_alpha(const FeFunction& u, double alpha, double p, double q);

/// The energy whose critical points are the weak solutions:
/// I(u) = (1/p)||grad u||_p^p + (1/q)||grad u||_q^q
///        - (ell_inf/q)||u||_q^q - int F(x,u).
double energy_I(const FeFunction& u, const ProblemSpec& prob);

/// Weak-form residual, one dual entry per interior nodal basis function:
///   entry_j = int (|grad u|^{p-2}+|grad u|^{q-2}) grad u . grad psi_j
///             - ell_inf int |u|^{q-2} u psi_j - int f(x,u) psi_j.
/// Vanishes at discrete weak solutions and equals the derivative of energy_I
/// (exactly so for p, q >= 2; regularized below-2 exponents differ by
/// O(eps_reg)).
Eigen::VectorXd residual(const FeFunction& u, const ProblemSpec& prob);

/// Derivative of the residual, assembled sparse on interior dofs.
Eigen::SparseMatrix<double> residual_jacobian(const FeFunction& u, const ProblemSpec& prob);

/// <A u, v> = int (|grad u|^{p-2} + |grad u|^{q-2}) grad u . grad v.
double apply_A(const FeFunction& u, const FeFunction& v, double p, double q);

} // namespace pqlab
