// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pqlab {

using Point = std::array<double, 2>; // y component unused in 1D

/// Simplicial mesh of a 1D interval or a 2D polygonal domain with
/// homogeneous Dirichlet boundary markers.
///
/// A Mesh is immutable after construction and safe to share across
/// concurrent evaluations. Per-element volumes and P1 basis gradients are
/// precomputed once so assembly kernels never touch geometry twice.
class Mesh {
public:
    /// Uniform mesh of (a,b) with n elements and n-1 interior nodes.
    static Mesh interval(int n, double a, double b);

    /// Structured crossed-triangle mesh of a rectangle: nx-by-ny cells,
    /// each split along an alternating diagonal, 2*nx*ny triangles.
    static Mesh rectangle(int nx, int ny, std::array<double, 4> rect);

    /// Build from raw arrays (used by the text-format reader).
    static Mesh from_arrays(int dim, std::vector<Point> nodes,
                            std::vector<std::array<int, 3>> elements,
                            std::vector<int> boundary_nodes);

    int dim() const { return dim_; }
    int n_nodes() const { return static_cast<int>(nodes_.size()); }
    int n_elements() const { return static_cast<int>(elements_.size()); }
    int n_interior() const { return n_interior_; }
    int nodes_per_element() const { return dim_ + 1; }

    const Point& node(int i) const { return nodes_[i]; }
    const std::array<int, 3>& element(int e) const { return elements_[e]; }
    bool is_boundary(int node) const { return boundary_[node]; }

    /// Dense interior-dof index of a node, or -1 on the boundary.
    int interior_index(int node) const { return interior_index_[node]; }
    /// Node id of an interior dof.
    int interior_node(int dof) const { return interior_nodes_[dof]; }

    double volume(int e) const { return volumes_[e]; }
    /// Gradient of the P1 basis function of local vertex v on element e.
    const std::array<double, 2>& basis_grad(int e, int v) const {
        return basis_grads_[e][v];
    }

    /// Total measure of the domain (sum of element volumes).
    double measure() const { return measure_; }

    /// FNV-1a hash of the geometry, for provenance blocks.
    std::uint64_t hash() const;

private:
    Mesh() = default;
    void finalize(); // builds dof map, volumes, gradients; validates

    int dim_ = 1;
    std::vector<Point> nodes_;
    std::vector<std::array<int, 3>> elements_;
    std::vector<bool> boundary_;
    std::vector<int> interior_index_;
    std::vector<int> interior_nodes_;
    std::vector<double> volumes_;
    std::vector<std::array<std::array<double, 2>, 3>> basis_grads_;
    double measure_ = 0.0;
    int n_interior_ = 0;
};

/// Plain-text mesh format:
///   dim <1|2>
///   nodes <count>      followed by one coordinate tuple per line
///   elements <count>   followed by node-index tuples
///   boundary <count>   followed by node indices
void write_mesh(const Mesh& mesh, const std::string& path);
Mesh read_mesh(const std::string& path);

} // namespace pqlab
