// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <limits>
#include <string>

#include "pqlab/mesh.hpp"

namespace pqlab {

/// Lower-order term f of the right-hand side, split off from the
/// asymptotic q-power part. Built-in families are odd in t and autonomous;
/// the `custom` family accepts coordinate-dependent callables.
///
/// Families (q is supplied at evaluation time):
///   rational_decay : f(t) = ell0 |t|^{q-2} t / (1 + |t|^s),      s > 0
///   gaussian_decay : f(t) = ell0 |t|^{q-2} t exp(-t^2)
///   power_resonant : f(t) = -mu |t|^{r-2} t,                     1 < r < q
///   zero           : f = 0
/// Primitives F(t) = int_0^t f are evaluated in closed form (special
/// functions, never quadrature in t).
struct NonlinearitySpec {
    enum class Family { RationalDecay, GaussianDecay, PowerResonant, Zero, Custom };

    Family family = Family::Zero;
    double ell0 = 0.0; // declared limit of f(t)/(|t|^{q-2}t) at 0; +-inf allowed
    double s = 2.0;    // decay exponent (rational_decay)
    double mu = 1.0;   // strength (power_resonant)
    double r = 2.0;    // low exponent (power_resonant)

    // custom family: declared limits plus callables in (x, t)
    std::function<double(const Point&, double)> custom_f;
    std::function<double(const Point&, double)> custom_F;
    std::function<double(const Point&, double)> custom_fprime;

    static NonlinearitySpec zero() { return {}; }
    static NonlinearitySpec rational_decay(double ell0, double s);
    static NonlinearitySpec gaussian_decay(double ell0);
    static NonlinearitySpec power_resonant(double mu, double r);

    bool is_zero() const { return family == Family::Zero; }
    std::string family_name() const;
    static Family family_from_name(const std::string& name);

    void validate(double q) const;
};

double eval_f(const NonlinearitySpec& spec, double t, double q);
double eval_F(const NonlinearitySpec& spec, double t, double q);
double eval_fprime(const NonlinearitySpec& spec, double t, double q);

// coordinate-aware overloads; built-ins ignore x
double eval_f(const NonlinearitySpec& spec, const Point& x, double t, double q);
double eval_F(const NonlinearitySpec& spec, const Point& x, double t, double q);
double eval_fprime(const NonlinearitySpec& spec, const Point& x, double t, double q);

/// Smallest constant A such that |f(t)| <= eps |t|^{q-1} + A on the grid
/// (log-spaced over [t_min, t_max], symmetric in sign).
double growth_bound_constant(const NonlinearitySpec& spec, double q, double eps,
                             double t_min = 1e-6, double t_max = 1e6, int n_grid = 400);

/// Regularized-free lower incomplete gamma  int_0^x y^{a-1} e^{-y} dy.
double lower_incomplete_gamma(double a, double x);

/// int_0^x y^{a-1} / (1+y) dy for a > 0 (the rational-decay primitive core).
double rational_primitive_core(double a, double x);

} // namespace pqlab
