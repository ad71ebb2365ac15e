// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <functional>
#include <stdexcept>

#include "pqlab/mesh.hpp"

namespace pqlab {

/// Piecewise-linear field on a mesh, identically zero on the boundary.
/// Stores one coefficient per interior dof; boundary values are implicit.
class FeFunction {
public:
    explicit FeFunction(const Mesh& mesh)
        : mesh_(&mesh), coeffs_(Eigen::VectorXd::Zero(mesh.n_interior())) {}

    FeFunction(const Mesh& mesh, Eigen::VectorXd coeffs)
        : mesh_(&mesh), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != mesh.n_interior())
            throw std::invalid_argument("FeFunction: coefficient count != interior dofs");
    }

    const Mesh& mesh() const { return *mesh_; }
    const Eigen::VectorXd& coeffs() const { return coeffs_; }
    Eigen::VectorXd& coeffs() { return coeffs_; }

    /// Values at every node, zero at boundary nodes.
    Eigen::VectorXd nodal_values() const {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(mesh_->n_nodes());
        for (int d = 0; d < coeffs_.size(); ++d) v[mesh_->interior_node(d)] = coeffs_[d];
        return v;
    }

    bool same_mesh(const FeFunction& other) const { return mesh_ == &other.mesh(); }

    FeFunction operator-() const { return FeFunction(*mesh_, -coeffs_); }

private:
    const Mesh* mesh_;
    Eigen::VectorXd coeffs_;
};

/// Nodal interpolant of g; boundary values forced to zero.
/// Throws NumericDomainError if g is non-finite at an interior node.
FeFunction interpolate(const Mesh& mesh, const std::function<double(const Point&)>& g);

} // namespace pqlab
