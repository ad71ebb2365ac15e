// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

namespace pqlab {

/// Quadrature rule on the reference simplex, stored in barycentric form.
///
/// Weights are normalized so they sum to 1; an integral over a physical
/// element is vol(E) * sum_k w_k g(x(lambda_k)). A rule of degree d
/// integrates polynomials of total degree <= d exactly.
struct QuadratureRule {
    int dim = 1;
    int degree = 1;
    std::vector<std::array<double, 3>> points; // barycentric coordinates
    std::vector<double> weights;               // positive, sum to 1

    std::size_t size() const { return weights.size(); }

    /// Rule exact for total degree `degree` on the dim-simplex.
    static QuadratureRule for_degree(int dim, int degree);

    /// Degree needed for integrands |u|^r with piecewise-linear u.
    static int degree_for_power(double r);
};

/// Gauss-Legendre nodes/weights on [0,1]; weights sum to 1.
void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace pqlab
