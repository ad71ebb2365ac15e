// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <cmath>
#include <vector>

#include "pqlab/mesh.hpp"
#include "pqlab/quadrature.hpp"

namespace pqlab::kernels {

/// Number of threads the parallel kernels will use (0 = OpenMP default).
void set_num_threads(int n);
int max_threads();

using Triplet = Eigen::Triplet<double>;

/// Coefficients of the two-exponent flux  m(G) = (c_p |G|^{p-2} + c_q |G|^{q-2}) G.
/// Exponents below 2 are regularized as (|G|^2 + eps2)^{(r-2)/2}.
struct FluxCoeffs {
    double c_p = 1.0;
    double p = 2.0;
    double c_q = 1.0;
    double q = 2.0;
    double eps2 = 1e-20;

    double scalar(double s2) const {
        return c_p * power_coeff(s2, p, eps2) + c_q * power_coeff(s2, q, eps2);
    }
    static double power_coeff(double s2, double r, double eps2) {
        if (r == 2.0) return 1.0;
        if (r > 2.0) return std::pow(s2, 0.5 * (r - 2.0));
        return std::pow(s2 + eps2, 0.5 * (r - 2.0));
    }
};

struct ElementView {
    int npe;
    std::array<int, 3> nodes;
    std::array<double, 3> values;
    std::array<std::array<double, 2>, 3> grads;
    double vol;

    std::array<double, 2> gradient() const {
        std::array<double, 2> g{0.0, 0.0};
        for (int v = 0; v < npe; ++v) {
            g[0] += values[v] * grads[v][0];
            g[1] += values[v] * grads[v][1];
        }
        return g;
    }
};

inline ElementView element_view(const Mesh& mesh, const Eigen::VectorXd& nodal, int e) {
    ElementView ev;
    ev.npe = mesh.nodes_per_element();
    ev.nodes = mesh.element(e);
    for (int v = 0; v < ev.npe; ++v) ev.values[v] = nodal[ev.nodes[v]];
    for (int v = 0; v < ev.npe; ++v) ev.grads[v] = mesh.basis_grad(e, v);
    ev.vol = mesh.volume(e);
    return ev;
}

// The parallel kernels fill one slot per element and reduce in fixed element
// order, so results are bit-identical for any thread count.

template <class PerElement>
double element_sum(const Mesh& mesh, PerElement f) {
    const int ne = mesh.n_elements();
    std::vector<double> partial(ne);
#pragma omp parallel for schedule(static)
    for (int e = 0; e < ne; ++e) partial[e] = f(e);
    double s = 0.0;
    for (int e = 0; e < ne; ++e) s += partial[e];
    return s;
}

template <class PerElement>
Eigen::VectorXd element_scatter(const Mesh& mesh, PerElement f) {
    const int ne = mesh.n_elements();
    const int npe = mesh.nodes_per_element();
    std::vector<std::array<double, 3>> local(ne);
#pragma omp parallel for schedule(static)
    for (int e = 0; e < ne; ++e) f(e, local[e]);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(mesh.n_interior());
    for (int e = 0; e < ne; ++e) {
        const auto& el = mesh.element(e);
        for (int v = 0; v < npe; ++v) {
            const int dof = mesh.interior_index(el[v]);
            if (dof >= 0) out[dof] += local[e][v];
        }
    }
    return out;
}

/// sum_e vol_e |grad u|^r (exact for P1 fields).
double grad_power_sum(const Mesh& mesh, const Eigen::VectorXd& nodal, double r);

/// Both exponent sums of the flux in one sweep: (sum |grad u|^p, sum |grad u|^q).
std::array<double, 2> grad_power_sum2(const Mesh& mesh, const Eigen::VectorXd& nodal,
                                      double p, double q);

/// integral of g(x, u(x)) over the mesh with the given rule.
template <class G>
double integral(const Mesh& mesh, const Eigen::VectorXd& nodal,
                const QuadratureRule& rule, G g) {
    return element_sum(mesh, [&](int e) {
        const ElementView ev = element_view(mesh, nodal, e);
        double acc = 0.0;
        for (std::size_t k = 0; k < rule.size(); ++k) {
            const auto& lam = rule.points[k];
            double u = 0.0;
            Point x{0.0, 0.0};
            for (int v = 0; v < ev.npe; ++v) {
                u += lam[v] * ev.values[v];
                x[0] += lam[v] * mesh.node(ev.nodes[v])[0];
                x[1] += lam[v] * mesh.node(ev.nodes[v])[1];
            }
            acc += rule.weights[k] * g(x, u);
        }
        return ev.vol * acc;
    });
}

/// Dual vector  j -> integral of g(x, u) psi_j  over interior dofs.
template <class G>
Eigen::VectorXd mass_vector(const Mesh& mesh, const Eigen::VectorXd& nodal,
                            const QuadratureRule& rule, G g) {
    return element_scatter(mesh, [&](int e, std::array<double, 3>& loc) {
        const ElementView ev = element_view(mesh, nodal, e);
        loc = {0.0, 0.0, 0.0};
        for (std::size_t k = 0; k < rule.size(); ++k) {
            const auto& lam = rule.points[k];
            double u = 0.0;
            Point x{0.0, 0.0};
            for (int v = 0; v < ev.npe; ++v) {
                u += lam[v] * ev.values[v];
                x[0] += lam[v] * mesh.node(ev.nodes[v])[0];
                x[1] += lam[v] * mesh.node(ev.nodes[v])[1];
            }
            const double gw = ev.vol * rule.weights[k] * g(x, u);
            for (int v = 0; v < ev.npe; ++v) loc[v] += gw * lam[v];
        }
    });
}

/// Triplets of the mass-type Jacobian  integral of gp(x,u) psi_i psi_j.
template <class Gp>
void mass_jacobian(const Mesh& mesh, const Eigen::VectorXd& nodal,
                   const QuadratureRule& rule, Gp gp, std::vector<Triplet>& out) {
    const int ne = mesh.n_elements();
    const int npe = mesh.nodes_per_element();
    std::vector<std::array<double, 9>> local(ne);
#pragma omp parallel for schedule(static)
    for (int e = 0; e < ne; ++e) {
        const ElementView ev = element_view(mesh, nodal, e);
        local[e].fill(0.0);
        for (std::size_t k = 0; k < rule.size(); ++k) {
            const auto& lam = rule.points[k];
            double u = 0.0;
            Point x{0.0, 0.0};
            for (int v = 0; v < npe; ++v) {
                u += lam[v] * ev.values[v];
                x[0] += lam[v] * mesh.node(ev.nodes[v])[0];
                x[1] += lam[v] * mesh.node(ev.nodes[v])[1];
            }
            const double gw = ev.vol * rule.weights[k] * gp(x, u);
            for (int a = 0; a < npe; ++a)
                for (int b = 0; b < npe; ++b) local[e][a * 3 + b] += gw * lam[a] * lam[b];
        }
    }
    for (int e = 0; e < ne; ++e) {
        const auto& el = mesh.element(e);
        for (int a = 0; a < npe; ++a) {
            const int i = mesh.interior_index(el[a]);
            if (i < 0) continue;
            for (int b = 0; b < npe; ++b) {
                const int j = mesh.interior_index(el[b]);
                if (j >= 0) out.emplace_back(i, j, local[e][a * 3 + b]);
            }
        }
    }
}

/// sum_e vol m(grad u) grad u . grad v  for the two-exponent flux.
double flux_pairing(const Mesh& mesh, const Eigen::VectorXd& nodal_u,
                    const Eigen::VectorXd& nodal_v, const FluxCoeffs& c);

/// Dual vector  j -> sum_e vol m(grad u) grad u . grad psi_j.
Eigen::VectorXd flux_vector(const Mesh& mesh, const Eigen::VectorXd& nodal_u,
                            const FluxCoeffs& c);

/// Triplets of the flux Jacobian, d/du of flux_vector.
void flux_jacobian(const Mesh& mesh, const Eigen::VectorXd& nodal_u,
                   const FluxCoeffs& c, std::vector<Triplet>& out);

// Plain single-threaded reference implementations, used by the test suite
// and by the kernel benchmark as the comparison baseline.
namespace serial {

double grad_power_sum(const Mesh& mesh, const Eigen::VectorXd& nodal, double r);
double flux_pairing(const Mesh& mesh, const Eigen::VectorXd& nodal_u,
                    const Eigen::VectorXd& nodal_v, const FluxCoeffs& c);
Eigen::VectorXd flux_vector(const Mesh& mesh, const Eigen::VectorXd& nodal_u,
                            const FluxCoeffs& c);

template <class G>
double integral(const Mesh& mesh, const Eigen::VectorXd& nodal,
                const QuadratureRule& rule, G g) {
    double s = 0.0;
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const ElementView ev = element_view(mesh, nodal, e);
        double acc = 0.0;
        for (std::size_t k = 0; k < rule.size(); ++k) {
            const auto& lam = rule.points[k];
            double u = 0.0;
            Point x{0.0, 0.0};
            for (int v = 0; v < ev.npe; ++v) {
                u += lam[v] * ev.values[v];
                x[0] += lam[v] * mesh.node(ev.nodes[v])[0];
                x[1] += lam[v] * mesh.node(ev.nodes[v])[1];
            }
            acc += rule.weights[k] * g(x, u);
        }
        s += ev.vol * acc;
    }
    return s;
}

template <class G>
Eigen::VectorXd mass_vector(const Mesh& mesh, const Eigen::VectorXd& nodal,
                            const QuadratureRule& rule, G g) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(mesh.n_interior());
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const ElementView ev = element_view(mesh, nodal, e);
        for (std::size_t k = 0; k < rule.size(); ++k) {
            const auto& lam = rule.points[k];
            double u = 0.0;
            Point x{0.0, 0.0};
            for (int v = 0; v < ev.npe; ++v) {
                u += lam[v] * ev.values[v];
                x[0] += lam[v] * mesh.node(ev.nodes[v])[0];
                x[1] += lam[v] * mesh.node(ev.nodes[v])[1];
            }
            const double gw = ev.vol * rule.weights[k] * g(x, u);
            for (int v = 0; v < ev.npe; ++v) {
                const int dof = mesh.interior_index(ev.nodes[v]);
                if (dof >= 0) out[dof] += gw * lam[v];
            }
        }
    }
    return out;
}

} // namespace serial

} // namespace pqlab::kernels
