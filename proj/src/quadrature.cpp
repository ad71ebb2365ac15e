// SPDX-License-Identifier: Apache-2.0
#include "pqlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace pqlab {

void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_01: n must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const double pi = 3.14159265358979323846264338327950288;
    // Newton iteration on P_n over [-1,1], then map to [0,1].
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nodes[i] = 0.5 * (1.0 - x); // descending roots map to ascending points
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[n - 1 - i] = 0.5 * w;
    }
}

int QuadratureRule::degree_for_power(double r) {
    return static_cast<int>(std::ceil(r)) + 2;
}

QuadratureRule QuadratureRule::for_degree(int dim, int degree) {
    if (degree < 1) degree = 1;
    QuadratureRule rule;
    rule.dim = dim;
    rule.degree = degree;
    std::vector<double> gx, gw;
    if (dim == 1) {
        const int n = (degree + 2) / 2; // 2n-1 >= degree
        gauss_legendre_01(n, gx, gw);
        rule.points.reserve(n);
        rule.weights.reserve(n);
        for (int i = 0; i < n; ++i) {
            rule.points.push_back({1.0 - gx[i], gx[i], 0.0});
            rule.weights.push_back(gw[i]);
        }
        return rule;
    }
    if (dim != 2) throw std::invalid_argument("QuadratureRule: dim must be 1 or 2");
    // Duffy map of a tensor Gauss rule: x = s, y = t(1-s), Jacobian (1-s).
    // A total-degree-d polynomial becomes degree d+1 in s, so n = d/2+1
    // points per axis keep the rule exact.
    const int n = degree / 2 + 1 + (degree % 2 ? 1 : 0);
    gauss_legendre_01(n, gx, gw);
    rule.points.reserve(static_cast<std::size_t>(n) * n);
    rule.weights.reserve(static_cast<std::size_t>(n) * n);
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double s = gx[i];
            const double t = gx[j] * (1.0 - s);
            rule.points.push_back({1.0 - s - t, s, t});
            const double w = gw[i] * gw[j] * (1.0 - s);
            rule.weights.push_back(w);
            wsum += w;
        }
    }
    for (double& w : rule.weights) w /= wsum; // exact sum is 1/2; normalize to 1
    return rule;
}

} // namespace pqlab
