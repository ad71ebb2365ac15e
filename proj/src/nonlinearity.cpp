// SPDX-License-Identifier: Apache-2.0
#include "pqlab/nonlinearity.hpp"

#include <cmath>
#include <stdexcept>

#include "pqlab/errors.hpp"

namespace pqlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sgn(double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); }

/// |t|^{q-2} t, continuous at 0 for q > 1.
double qpower(double t, double q) {
    if (t == 0.0) return 0.0;
    return sgn(t) * std::pow(std::abs(t), q - 1.0);
}

// --- lower incomplete gamma: series for x < a+1, continued fraction above ---

double gamma_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x));
}

double upper_gamma_cf(double a, double x) {
    // modified Lentz on Gamma(a,x) = e^{-x} x^a * CF
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x)) * h;
}

} // namespace

double lower_incomplete_gamma(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("lower_incomplete_gamma: need a>0, x>=0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_series(a, x);
    return std::tgamma(a) - upper_gamma_cf(a, x);
}

// --- int_0^x y^{a-1}/(1+y) dy ----------------------------------------------
//
// Reduced to a in (0,1] by  G_a(x) = x^{a-1}/(a-1) - G_{a-1}(x).  The base
// interval uses the substitution w = y/(1+y), giving the geometric series
// sum_k (a)_k/k! * z^{a+k}/(a+k) at z = x/(1+x); for x > 2 the tail
// int_2^x is expanded in inverse powers with an expm1-stable leading term.

namespace {

double core_base_small(double a, double x) {
    // z-series, valid for any x but geometric only when z is away from 1
    const double z = x / (1.0 + x);
    double coeff = 1.0; // (a)_k / k!
    double zk = std::pow(z, a);
    double sum = 0.0;
    for (int k = 0; k < 4000; ++k) {
        const double term = coeff * zk / (a + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16 + 1e-300) break;
        coeff *= (a + k) / (k + 1.0);
        zk *= z;
    }
    return sum;
}

double core_base(double a, double x) {
    if (a == 1.0) return std::log1p(x);
    if (x <= 2.0) return core_base_small(a, x);
    // int_2^x y^{a-2-k} expansion; c = a-1 in (-1, 0)
    const double c = a - 1.0;
    double sum = core_base_small(a, 2.0);
    // k = 0 term, written so the a -> 1 limit ln(x/2) is exact
    const double w = c * std::log(x / 2.0);
    sum += std::pow(2.0, c) * (std::abs(c) > 1e-12 ? std::expm1(w) / c : std::log(x / 2.0) * (1.0 + 0.5 * w));
    double sign = -1.0;
    for (int k = 1; k < 200; ++k) {
        const double den = c - k;
        const double term = sign * (std::pow(x, den) - std::pow(2.0, den)) / den;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16 + 1e-300) break;
        sign = -sign;
    }
    return sum;
}

} // namespace

double rational_primitive_core(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("rational_primitive_core: need a>0, x>=0");
    if (x == 0.0) return 0.0;
    double acc = 0.0;
    double sign = 1.0;
    while (a > 1.0) {
        acc += sign * std::pow(x, a - 1.0) / (a - 1.0);
        sign = -sign;
        a -= 1.0;
    }
    return acc + sign * core_base(a, x);
}

NonlinearitySpec NonlinearitySpec::rational_decay(double ell0, double s) {
    NonlinearitySpec spec;
    spec.family = Family::RationalDecay;
    spec.ell0 = ell0;
    spec.s = s;
    return spec;
}

NonlinearitySpec NonlinearitySpec::gaussian_decay(double ell0) {
    NonlinearitySpec spec;
    spec.family = Family::GaussianDecay;
    spec.ell0 = ell0;
    return spec;
}

NonlinearitySpec NonlinearitySpec::power_resonant(double mu, double r) {
    NonlinearitySpec spec;
    spec.family = Family::PowerResonant;
    spec.mu = mu;
    spec.r = r;
    spec.ell0 = -kInf;
    return spec;
}

std::string NonlinearitySpec::family_name() const {
    switch (family) {
        case Family::RationalDecay: return "rational_decay";
        case Family::GaussianDecay: return "gaussian_decay";
        case Family::PowerResonant: return "power_resonant";
        case Family::Zero: return "zero";
        case Family::Custom: return "custom";
    }
    return "zero";
}

NonlinearitySpec::Family NonlinearitySpec::family_from_name(const std::string& name) {
    if (name == "rational_decay") return Family::RationalDecay;
    if (name == "gaussian_decay") return Family::GaussianDecay;
    if (name == "power_resonant") return Family::PowerResonant;
    if (name == "zero") return Family::Zero;
    if (name == "custom") return Family::Custom;
    throw std::invalid_argument("unknown nonlinearity family: " + name);
}

void NonlinearitySpec::validate(double q) const {
    if (!(q > 1.0)) throw std::invalid_argument("nonlinearity: q must be > 1");
    switch (family) {
        case Family::RationalDecay:
            if (!(s > 0.0)) throw std::invalid_argument("rational_decay: s must be > 0");
            if (!std::isfinite(ell0)) throw std::invalid_argument("rational_decay: ell0 must be finite");
            break;
        case Family::GaussianDecay:
            if (!std::isfinite(ell0)) throw std::invalid_argument("gaussian_decay: ell0 must be finite");
            break;
        case Family::PowerResonant:
            if (!(mu > 0.0)) throw std::invalid_argument("power_resonant: mu must be > 0");
            if (!(r > 1.0 && r < q)) throw std::invalid_argument("power_resonant: need 1 < r < q");
            break;
        case Family::Zero:
            break;
        case Family::Custom:
            if (!custom_f || !custom_F) throw std::invalid_argument("custom nonlinearity: f and F required");
            break;
    }
}

double eval_f(const NonlinearitySpec& spec, double t, double q) {
    switch (spec.family) {
        case NonlinearitySpec::Family::Zero: return 0.0;
        case NonlinearitySpec::Family::RationalDecay:
            return spec.ell0 * qpower(t, q) / (1.0 + std::pow(std::abs(t), spec.s));
        case NonlinearitySpec::Family::GaussianDecay:
            return spec.ell0 * qpower(t, q) * std::exp(-t * t);
        case NonlinearitySpec::Family::PowerResonant:
            return -spec.mu * qpower(t, spec.r);
        case NonlinearitySpec::Family::Custom:
            return spec.custom_f(Point{0.0, 0.0}, t);
    }
    return 0.0;
}

double eval_F(const NonlinearitySpec& spec, double t, double q) {
    const double a = std::abs(t);
    switch (spec.family) {
        case NonlinearitySpec::Family::Zero: return 0.0;
        case NonlinearitySpec::Family::RationalDecay:
            // int_0^|t| s^{q-1}/(1+s^sigma) ds = (1/sigma) G_{q/sigma}(|t|^sigma)
            if (a == 0.0) return 0.0;
            return spec.ell0 / spec.s *
                   rational_primitive_core(q / spec.s, std::pow(a, spec.s));
        case NonlinearitySpec::Family::GaussianDecay:
            // int_0^|t| s^{q-1} e^{-s^2} ds = gamma(q/2, t^2) / 2
            return 0.5 * spec.ell0 * lower_incomplete_gamma(0.5 * q, t * t);
        case NonlinearitySpec::Family::PowerResonant:
            return -spec.mu * std::pow(a, spec.r) / spec.r;
        case NonlinearitySpec::Family::Custom:
            return spec.custom_F(Point{0.0, 0.0}, t);
    }
    return 0.0;
}

double eval_fprime(const NonlinearitySpec& spec, double t, double q) {
    const double a = std::abs(t);
    switch (spec.family) {
        case NonlinearitySpec::Family::Zero: return 0.0;
        case NonlinearitySpec::Family::RationalDecay: {
            if (a == 0.0) return q > 2.0 ? 0.0 : (q == 2.0 ? spec.ell0 : kInf);
            const double as = std::pow(a, spec.s);
            const double den = 1.0 + as;
            return spec.ell0 * std::pow(a, q - 2.0) *
                   ((q - 1.0) * den - spec.s * as) / (den * den);
        }
        case NonlinearitySpec::Family::GaussianDecay: {
            if (a == 0.0) return q > 2.0 ? 0.0 : (q == 2.0 ? spec.ell0 : kInf);
            return spec.ell0 * std::exp(-t * t) * std::pow(a, q - 2.0) *
                   ((q - 1.0) - 2.0 * t * t);
        }
        case NonlinearitySpec::Family::PowerResonant:
            if (a == 0.0) return spec.r > 2.0 ? 0.0 : (spec.r == 2.0 ? -spec.mu : -kInf);
            return -spec.mu * (spec.r - 1.0) * std::pow(a, spec.r - 2.0);
        case NonlinearitySpec::Family::Custom:
            if (!spec.custom_fprime) throw std::invalid_argument("custom nonlinearity: fprime not set");
            return spec.custom_fprime(Point{0.0, 0.0}, t);
    }
    return 0.0;
}

double eval_f(const NonlinearitySpec& spec, const Point& x, double t, double q) {
    if (spec.family == NonlinearitySpec::Family::Custom) return spec.custom_f(x, t);
    return eval_f(spec, t, q);
}

double eval_F(const NonlinearitySpec& spec, const Point& x, double t, double q) {
    if (spec.family == NonlinearitySpec::Family::Custom) return spec.custom_F(x, t);
    return eval_F(spec, t, q);
}

double eval_fprime(const NonlinearitySpec& spec, const Point& x, double t, double q) {
    if (spec.family == NonlinearitySpec::Family::Custom) {
        if (!spec.custom_fprime) throw std::invalid_argument("custom nonlinearity: fprime not set");
        return spec.custom_fprime(x, t);
    }
    return eval_fprime(spec, t, q);
}

double growth_bound_constant(const NonlinearitySpec& spec, double q, double eps,
                             double t_min, double t_max, int n_grid) {
    if (!(eps > 0.0)) throw std::invalid_argument("growth_bound_constant: eps must be > 0");
    double A = 0.0;
    const double lr = std::log(t_max / t_min);
    for (int i = 0; i < n_grid; ++i) {
        const double t = t_min * std::exp(lr * i / (n_grid - 1));
        const double excess = std::abs(eval_f(spec, t, q)) - eps * std::pow(t, q - 1.0);
        if (excess > A) A = excess;
    }
    return A * (1.0 + 1e-12);
}

} // namespace pqlab
