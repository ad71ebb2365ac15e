// SPDX-License-Identifier: Apache-2.0
#include "pqlab/energy.hpp"

#include <cmath>

#include "pqlab/errors.hpp"
#include "pqlab/kernels.hpp"

namespace pqlab {

namespace {

void require_same_mesh(const FeFunction& u, const Mesh* mesh, const char* who) {
    if (&u.mesh() != mesh) throw std::invalid_argument(std::string(who) + ": mesh mismatch");
}

QuadratureRule rule_for(const Mesh& mesh, double r) {
    return QuadratureRule::for_degree(mesh.dim(), QuadratureRule::degree_for_power(r));
}

} // namespace

double grad_seminorm(const FeFunction& u, double r) {
    if (!(r > 1.0)) throw std::invalid_argument("grad_seminorm: r must be > 1");
    const double s = kernels::grad_power_sum(u.mesh(), u.nodal_values(), r);
    return std::pow(s, 1.0 / r);
}

double lebesgue_norm(const FeFunction& u, double r) {
    if (!(r >= 1.0)) throw std::invalid_argument("lebesgue_norm: r must be >= 1");
    const QuadratureRule rule = rule_for(u.mesh(), r);
    const double s = kernels::integral(u.mesh(), u.nodal_values(), rule,
                                       [r](const Point&, double t) { return std::pow(std::abs(t), r); });
    return std::pow(s, 1.0 / r);
}

double phi_alpha(const FeFunction& u, double alpha, double p, double q) {
    if (!(p > 1.0) || !(q > p)) throw std::invalid_argument("phi_alpha: need 1 < p < q");
    if (!(alpha >= 0.0)) throw std::invalid_argument("phi_alpha: alpha must be >= 0");
    const auto s = kernels::grad_power_sum2(u.mesh(), u.nodal_values(), p, q);
    return alpha * s[0] + s[1];
}

double energy_I(const FeFunction& u, const ProblemSpec& prob) {
    prob.validate();
    require_same_mesh(u, prob.mesh, "energy_I");
    const Eigen::VectorXd nodal = u.nodal_values();
    const auto s = kernels::grad_power_sum2(*prob.mesh, nodal, prob.p, prob.q);
    const QuadratureRule rule = rule_for(*prob.mesh, prob.q);
    // the ell_inf term and F share one quadrature pass so the residual is the
    // exact derivative of this evaluation
    const double li = prob.ell_inf;
    const double q = prob.q;
    const auto& f = prob.f;
    const double lower = kernels::integral(
        *prob.mesh, nodal, rule, [&](const Point& x, double t) {
            return li / q * std::pow(std::abs(t), q) + eval_F(f, x, t, q);
        });
    return s[0] / prob.p + s[1] / prob.q - lower;
}

Eigen::VectorXd residual(const FeFunction& u, const ProblemSpec& prob) {
    prob.validate();
    require_same_mesh(u, prob.mesh, "residual");
    const Eigen::VectorXd nodal = u.nodal_values();
    kernels::FluxCoeffs flux{1.0, prob.p, 1.0, prob.q, prob.eps_reg * prob.eps_reg};
    Eigen::VectorXd r = kernels::flux_vector(*prob.mesh, nodal, flux);
    const QuadratureRule rule = rule_for(*prob.mesh, prob.q);
    const double li = prob.ell_inf;
    const double q = prob.q;
    const auto& f = prob.f;
    r -= kernels::mass_vector(*prob.mesh, nodal, rule, [&](const Point& x, double t) {
        const double at = std::abs(t);
        const double qp = t == 0.0 ? 0.0 : (t > 0 ? 1.0 : -1.0) * std::pow(at, q - 1.0);
        return li * qp + eval_f(f, x, t, q);
    });
    return r;
}

Eigen::SparseMatrix<double> residual_jacobian(const FeFunction& u, const ProblemSpec& prob) {
    prob.validate();
    require_same_mesh(u, prob.mesh, "residual_jacobian");
    const Eigen::VectorXd nodal = u.nodal_values();
    kernels::FluxCoeffs flux{1.0, prob.p, 1.0, prob.q, prob.eps_reg * prob.eps_reg};
    std::vector<kernels::Triplet> trips;
    trips.reserve(static_cast<std::size_t>(prob.mesh->n_elements()) * 9);
    kernels::flux_jacobian(*prob.mesh, nodal, flux, trips);
    const QuadratureRule rule = rule_for(*prob.mesh, prob.q);
    const double li = prob.ell_inf;
    const double q = prob.q;
    const auto& f = prob.f;
    kernels::mass_jacobian(
        *prob.mesh, nodal, rule,
        [&](const Point& x, double t) {
            const double at = std::max(std::abs(t), 1e-300);
            const double fp = eval_fprime(f, x, t, q);
            return -(li * (q - 1.0) * std::pow(at, q - 2.0) + (std::isfinite(fp) ? fp : 0.0));
        },
        trips);
    Eigen::SparseMatrix<double> J(prob.mesh->n_interior(), prob.mesh->n_interior());
    J.setFromTriplets(trips.begin(), trips.end());
    return J;
}

double apply_A(const FeFunction& u, const FeFunction& v, double p, double q) {
    if (!(p > 1.0) || !(q > p)) throw std::invalid_argument("apply_A: need 1 < p < q");
    if (!u.same_mesh(v)) throw std::invalid_argument("apply_A: mesh mismatch");
    kernels::FluxCoeffs flux{1.0, p, 1.0, q, 0.0};
    return kernels::flux_pairing(u.mesh(), u.nodal_values(), v.nodal_values(), flux);
}

} // namespace pqlab
