#include "spectriples/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spectriples/errors.hpp"

namespace spectriples {

namespace {

int wrap(int p, int r) { return ((p % r) + r) % r; }

}  // namespace

Mesh build_torus_mesh(const TorusSpec& spec, int resolution) {
    if (spec.dim() != 1 && spec.dim() != 2)
        throw UnsupportedError("build_torus_mesh: only 1D and 2D tori are meshed");
    if (resolution < 8)
        throw std::invalid_argument("build_torus_mesh: resolution must be >= 8");

    Mesh mesh(spec);
    mesh.dim_ = spec.dim();
    mesh.resolution_ = resolution;

    const int r = resolution;
    const int n = (mesh.dim_ == 1) ? r : r * r;
    mesh.mass_ = Eigen::VectorXd::Constant(n, spec.volume() / n);

    const double h2 = 1.0 / (static_cast<double>(r) * r);  // h^2, h = 1/R
    std::vector<Eigen::Triplet<double>> trip;

    if (mesh.dim_ == 1) {
        const double g11 = spec.dual_gram()(0, 0);
        trip.reserve(static_cast<std::size_t>(3 * n));
        for (int p = 0; p < r; ++p) {
            trip.emplace_back(p, p, 2.0 * g11 / h2);
            trip.emplace_back(p, wrap(p + 1, r), -g11 / h2);
            trip.emplace_back(p, wrap(p - 1, r), -g11 / h2);
        }
    } else {
        const double g11 = spec.dual_gram()(0, 0);
        const double g22 = spec.dual_gram()(1, 1);
        const double g12 = spec.dual_gram()(0, 1);
        trip.reserve(static_cast<std::size_t>(9 * n));
        auto idx = [r](int p1, int p2) { return wrap(p1, r) * r + wrap(p2, r); };
        for (int p1 = 0; p1 < r; ++p1) {
            for (int p2 = 0; p2 < r; ++p2) {
                const int row = idx(p1, p2);
                trip.emplace_back(row, row, 2.0 * (g11 + g22) / h2);
                trip.emplace_back(row, idx(p1 + 1, p2), -g11 / h2);
                trip.emplace_back(row, idx(p1 - 1, p2), -g11 / h2);
                trip.emplace_back(row, idx(p1, p2 + 1), -g22 / h2);
                trip.emplace_back(row, idx(p1, p2 - 1), -g22 / h2);
                // cross term -2 g12 d1 d2, centered: 4-point corner stencil
                trip.emplace_back(row, idx(p1 + 1, p2 + 1), -g12 / (2.0 * h2));
                trip.emplace_back(row, idx(p1 - 1, p2 - 1), -g12 / (2.0 * h2));
                trip.emplace_back(row, idx(p1 + 1, p2 - 1), g12 / (2.0 * h2));
                trip.emplace_back(row, idx(p1 - 1, p2 + 1), g12 / (2.0 * h2));
            }
        }
    }

    mesh.stiffness_.resize(n, n);
    mesh.stiffness_.setFromTriplets(trip.begin(), trip.end());
    mesh.stiffness_.makeCompressed();
    return mesh;
}

Eigen::VectorXd Mesh::gradient(const Eigen::VectorXd& values, int d) const {
    if (values.size() != vertex_count())
        throw std::invalid_argument("Mesh::gradient: field size mismatch");
    if (d < 0 || d >= dim_)
        throw std::invalid_argument("Mesh::gradient: direction out of range");
    const int r = resolution_;
    const double half_over_h = 0.5 * r;  // 1/(2h)
    Eigen::VectorXd out(values.size());
    if (dim_ == 1) {
        for (int p = 0; p < r; ++p)
            out[p] = (values[wrap(p + 1, r)] - values[wrap(p - 1, r)]) * half_over_h;
        return out;
    }
    auto idx = [r](int p1, int p2) { return wrap(p1, r) * r + wrap(p2, r); };
    for (int p1 = 0; p1 < r; ++p1) {
        for (int p2 = 0; p2 < r; ++p2) {
            const int row = idx(p1, p2);
            out[row] = (d == 0)
                           ? (values[idx(p1 + 1, p2)] - values[idx(p1 - 1, p2)]) * half_over_h
                           : (values[idx(p1, p2 + 1)] - values[idx(p1, p2 - 1)]) * half_over_h;
        }
    }
    return out;
}

Eigen::VectorXd Mesh::gradient_dot(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(vertex_count());
    std::vector<Eigen::VectorXd> du, dv;
    for (int d = 0; d < dim_; ++d) {
        du.push_back(gradient(u, d));
        dv.push_back(gradient(v, d));
    }
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b)
            out += spec_.dual_gram()(a, b) * du[static_cast<std::size_t>(a)]
                       .cwiseProduct(dv[static_cast<std::size_t>(b)]);
    return out;
}

}  // namespace spectriples
