#pragma once

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spectriples/lattice.hpp"
#include "spectriples/mesh.hpp"
#include "spectriples/torus_spec.hpp"

namespace spectriples {

struct EigensolveOptions {
    // Lanczos window and restart budget; 0 picks defaults from the request.
    int window = 0;
    int max_restarts = 0;
    // locking tolerance, relative to the Gershgorin bound of the stiffness
    double residual_tol = 1e-10;
};

// Ordered orthonormal eigenbasis of the Laplacian, from either torus
// characters (exact) or mesh eigenvectors (mass-orthonormal, real).
class SpectralBasis {
public:
    enum class Source { Exact, Mesh };

    Source source() const { return source_; }
    int size() const { return static_cast<int>(eigenvalues_.size()); }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    double volume() const { return spec_.volume(); }
    const TorusSpec& spec() const { return spec_; }

    bool is_exact() const { return source_ == Source::Exact; }
    const std::vector<Weight>& weights() const;        // exact only
    const Eigen::MatrixXd& vectors() const;            // mesh only, n x k
    const Mesh& mesh() const;                          // mesh only

    // Maximal runs of >= 2 indices whose eigenvalues are (numerically)
    // degenerate, as [begin, end) pairs.
    const std::vector<std::pair<int, int>>& degenerate_clusters() const {
        return clusters_;
    }

    // Complex conjugate of every eigenfunction. Exact characters map to the
    // negated weight; mesh eigenvectors are real and unchanged.
    SpectralBasis conjugated() const;

private:
    SpectralBasis(Source source, TorusSpec spec) : source_(source), spec_(std::move(spec)) {}
    friend SpectralBasis exact_basis(const TorusSpec& spec, int count);
    friend SpectralBasis eigensolve(const Mesh& mesh, int count,
                                    const EigensolveOptions& options);

    Source source_;
    TorusSpec spec_;
    std::vector<double> eigenvalues_;
    std::vector<std::pair<int, int>> clusters_;
    std::vector<Weight> weights_;        // exact path
    std::shared_ptr<const Mesh> mesh_;   // mesh path
    Eigen::MatrixXd vectors_;            // mesh path
};

// Character basis e^i(x) = exp(2 pi i <w_i, x>) / sqrt(vol), ordered like
// enumerate_weights.
SpectralBasis exact_basis(const TorusSpec& spec, int count);

// The `count` lowest eigenpairs of the mesh Laplacian, mass-orthonormal and
// ascending, with a deterministic sign convention (the first entry of largest
// magnitude is positive). Dense solve up to 2000 vertices, thick-restart
// Lanczos with full reorthogonalization above. count <= vertex_count / 2.
SpectralBasis eigensolve(const Mesh& mesh, int count,
                         const EigensolveOptions& options = {});

}  // namespace spectriples
