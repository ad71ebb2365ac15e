// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

#include "pqlab/mesh.hpp"
#include "pqlab/nonlinearity.hpp"

namespace pqlab {

/// The boundary-value problem: exponents 1 < p < q, asymptotic coefficient
/// ell_inf, lower-order term f, and the mesh carrying the domain.
struct ProblemSpec {
    double p = 2.0;
    double q = 4.0;
    double ell_inf = 0.0;
    NonlinearitySpec f;
    const Mesh* mesh = nullptr;
    double eps_reg = 1e-10; // gradient regularization for exponents < 2

    ProblemSpec() = default;
    ProblemSpec(const Mesh& m, double p_, double q_, double ell_inf_, NonlinearitySpec f_)
        : p(p_), q(q_), ell_inf(ell_inf_), f(std::move(f_)), mesh(&m) {
        validate();
    }

    void validate() const {
        if (mesh == nullptr) throw std::invalid_argument("ProblemSpec: mesh not set");
        if (!(p > 1.0) || !(q > p)) throw std::invalid_argument("ProblemSpec: need 1 < p < q");
        if (mesh->dim() != 1 && mesh->dim() != 2)
            throw std::invalid_argument("ProblemSpec: mesh dimension must be 1 or 2");
        f.validate(q);
    }
};

} // namespace pqlab
