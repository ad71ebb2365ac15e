// SPDX-License-Identifier: Apache-2.0
#include "pqlab/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pqlab {

Mesh Mesh::interval(int n, double a, double b) {
    if (n < 2) throw std::invalid_argument("interval mesh: n must be >= 2");
    if (!(b > a)) throw std::invalid_argument("interval mesh: need b > a");
    Mesh m;
    m.dim_ = 1;
    m.nodes_.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        m.nodes_.push_back({a + t * (b - a), 0.0});
    }
    m.elements_.reserve(n);
    for (int e = 0; e < n; ++e) m.elements_.push_back({e, e + 1, -1});
    m.boundary_.assign(n + 1, false);
    m.boundary_.front() = true;
    m.boundary_.back() = true;
    m.finalize();
    return m;
}

Mesh Mesh::rectangle(int nx, int ny, std::array<double, 4> rect) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("rect mesh: nx, ny must be >= 2");
    const double x0 = rect[0], y0 = rect[1], x1 = rect[2], y1 = rect[3];
    if (!(x1 > x0) || !(y1 > y0)) throw std::invalid_argument("rect mesh: degenerate rectangle");
    Mesh m;
    m.dim_ = 2;
    m.nodes_.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            m.nodes_.push_back({x0 + (x1 - x0) * i / nx, y0 + (y1 - y0) * j / ny});
        }
    }
    auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
    m.elements_.reserve(static_cast<std::size_t>(2) * nx * ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
            if ((i + j) % 2 == 0) { // alternate diagonals for the crossed pattern
                m.elements_.push_back({a, b, c});
                m.elements_.push_back({a, c, d});
            } else {
                m.elements_.push_back({a, b, d});
                m.elements_.push_back({b, c, d});
            }
        }
    }
    m.boundary_.assign(m.nodes_.size(), false);
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            if (i == 0 || j == 0 || i == nx || j == ny) m.boundary_[id(i, j)] = true;
        }
    }
    m.finalize();
    return m;
}

Mesh Mesh::from_arrays(int dim, std::vector<Point> nodes,
                       std::vector<std::array<int, 3>> elements,
                       std::vector<int> boundary_nodes) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("mesh: dim must be 1 or 2");
    Mesh m;
    m.dim_ = dim;
    m.nodes_ = std::move(nodes);
    m.elements_ = std::move(elements);
    m.boundary_.assign(m.nodes_.size(), false);
    for (int b : boundary_nodes) {
        if (b < 0 || b >= m.n_nodes()) throw std::invalid_argument("mesh: boundary index out of range");
        m.boundary_[b] = true;
    }
    m.finalize();
    return m;
}

void Mesh::finalize() {
    const int npe = nodes_per_element();
    volumes_.resize(elements_.size());
    basis_grads_.resize(elements_.size());
    measure_ = 0.0;
    for (std::size_t e = 0; e < elements_.size(); ++e) {
        const auto& el = elements_[e];
        for (int v = 0; v < npe; ++v) {
            if (el[v] < 0 || el[v] >= n_nodes())
                throw std::invalid_argument("mesh: element node index out of range");
        }
        if (dim_ == 1) {
            const double xa = nodes_[el[0]][0], xb = nodes_[el[1]][0];
            const double h = xb - xa;
            if (!(h > 0.0)) throw std::invalid_argument("mesh: degenerate 1D element");
            volumes_[e] = h;
            basis_grads_[e][0] = {-1.0 / h, 0.0};
            basis_grads_[e][1] = {1.0 / h, 0.0};
            basis_grads_[e][2] = {0.0, 0.0};
        } else {
            const Point& pa = nodes_[el[0]];
            const Point& pb = nodes_[el[1]];
            const Point& pc = nodes_[el[2]];
            const double det = (pb[0] - pa[0]) * (pc[1] - pa[1]) - (pc[0] - pa[0]) * (pb[1] - pa[1]);
            if (!(det > 0.0) && !(det < 0.0))
                throw std::invalid_argument("mesh: degenerate triangle");
            volumes_[e] = 0.5 * std::abs(det);
            // grad(lambda_v) from the edge opposite to vertex v
            basis_grads_[e][0] = {(pb[1] - pc[1]) / det, (pc[0] - pb[0]) / det};
            basis_grads_[e][1] = {(pc[1] - pa[1]) / det, (pa[0] - pc[0]) / det};
            basis_grads_[e][2] = {(pa[1] - pb[1]) / det, (pb[0] - pa[0]) / det};
        }
        measure_ += volumes_[e];
    }
    interior_index_.assign(nodes_.size(), -1);
    interior_nodes_.clear();
    for (int i = 0; i < n_nodes(); ++i) {
        if (!boundary_[i]) {
            interior_index_[i] = static_cast<int>(interior_nodes_.size());
            interior_nodes_.push_back(i);
        }
    }
    n_interior_ = static_cast<int>(interior_nodes_.size());
    if (n_interior_ == 0) throw std::invalid_argument("mesh: no interior degrees of freedom");
}

std::uint64_t Mesh::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const void* data, std::size_t len) {
        const auto* b = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= b[i];
            h *= 1099511628211ULL;
        }
    };
    mix(&dim_, sizeof dim_);
    for (const auto& p : nodes_) mix(p.data(), sizeof(double) * 2);
    for (const auto& el : elements_) mix(el.data(), sizeof(int) * 3);
    for (int i = 0; i < n_nodes(); ++i) {
        const char c = boundary_[i] ? 1 : 0;
        mix(&c, 1);
    }
    return h;
}

void write_mesh(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open mesh file for writing: " + path);
    char buf[96];
    out << "dim " << mesh.dim() << "\n";
    out << "nodes " << mesh.n_nodes() << "\n";
    for (int i = 0; i < mesh.n_nodes(); ++i) {
        if (mesh.dim() == 1) {
            std::snprintf(buf, sizeof buf, "%.17g\n", mesh.node(i)[0]);
        } else {
            std::snprintf(buf, sizeof buf, "%.17g %.17g\n", mesh.node(i)[0], mesh.node(i)[1]);
        }
        out << buf;
    }
    out << "elements " << mesh.n_elements() << "\n";
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const auto& el = mesh.element(e);
        out << el[0] << " " << el[1];
        if (mesh.dim() == 2) out << " " << el[2];
        out << "\n";
    }
    int nb = 0;
    for (int i = 0; i < mesh.n_nodes(); ++i) nb += mesh.is_boundary(i) ? 1 : 0;
    out << "boundary " << nb << "\n";
    for (int i = 0; i < mesh.n_nodes(); ++i) {
        if (mesh.is_boundary(i)) out << i << "\n";
    }
}

Mesh read_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open mesh file: " + path);
    std::string key;
    int dim = 0;
    if (!(in >> key >> dim) || key != "dim" || (dim != 1 && dim != 2))
        throw std::runtime_error("mesh file: expected 'dim <1|2>'");
    int n_nodes = 0;
    if (!(in >> key >> n_nodes) || key != "nodes" || n_nodes < 2)
        throw std::runtime_error("mesh file: expected 'nodes <count>'");
    std::vector<Point> nodes(n_nodes, Point{0.0, 0.0});
    for (int i = 0; i < n_nodes; ++i) {
        if (!(in >> nodes[i][0])) throw std::runtime_error("mesh file: bad node line");
        if (dim == 2 && !(in >> nodes[i][1])) throw std::runtime_error("mesh file: bad node line");
    }
    int n_elem = 0;
    if (!(in >> key >> n_elem) || key != "elements" || n_elem < 1)
        throw std::runtime_error("mesh file: expected 'elements <count>'");
    std::vector<std::array<int, 3>> elements(n_elem, {-1, -1, -1});
    for (int e = 0; e < n_elem; ++e) {
        if (!(in >> elements[e][0] >> elements[e][1]))
            throw std::runtime_error("mesh file: bad element line");
        if (dim == 2 && !(in >> elements[e][2]))
            throw std::runtime_error("mesh file: bad element line");
    }
    int n_bdry = 0;
    if (!(in >> key >> n_bdry) || key != "boundary")
        throw std::runtime_error("mesh file: expected 'boundary <count>'");
    std::vector<int> boundary(n_bdry, -1);
    for (int i = 0; i < n_bdry; ++i) {
        if (!(in >> boundary[i])) throw std::runtime_error("mesh file: bad boundary line");
    }
    return Mesh::from_arrays(dim, std::move(nodes), std::move(elements), std::move(boundary));
}

} // namespace pqlab
