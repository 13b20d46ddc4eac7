#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "spectriples/torus_spec.hpp"

namespace spectriples {

// Uniform periodic grid on the fundamental domain of a 1D or 2D flat torus.
// Vertices sit at A * (p / R), p in {0..R-1}^dim, in row-major order (2D:
// index = p1 * R + p2). `stiffness` is the operator matrix of the nonnegative
// Laplacian -g^{ij} d_i d_j with constant g^{ij} = dual Gram entries (3-point
// stencil in 1D, 9-point with centered cross differences in 2D). `mass` holds
// the lumped quadrature weights vol/R^dim, so mass-weighted dot products are
// the discrete L^2 inner product.
class Mesh {
public:
    int dim() const { return dim_; }
    int resolution() const { return resolution_; }
    int vertex_count() const { return static_cast<int>(mass_.size()); }
    const Eigen::VectorXd& mass() const { return mass_; }
    const Eigen::SparseMatrix<double>& stiffness() const { return stiffness_; }
    const TorusSpec& spec() const { return spec_; }

    // Centered-difference derivative of a vertex field along grid coordinate
    // d (with respect to the unit coordinate x in [0,1)^dim, h = 1/R).
    Eigen::VectorXd gradient(const Eigen::VectorXd& values, int d) const;
    // Pointwise metric gradient product (du . dv) = g^{ab} (d_a u)(d_b v).
    Eigen::VectorXd gradient_dot(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;

private:
    friend Mesh build_torus_mesh(const TorusSpec& spec, int resolution);
    explicit Mesh(TorusSpec spec) : spec_(std::move(spec)) {}

    TorusSpec spec_;
    int dim_ = 0;
    int resolution_ = 0;
    Eigen::VectorXd mass_;
    Eigen::SparseMatrix<double> stiffness_;
};

// resolution >= 8; spec dimension must be 1 or 2.
Mesh build_torus_mesh(const TorusSpec& spec, int resolution);

}  // namespace spectriples
