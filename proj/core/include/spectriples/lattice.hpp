#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "spectriples/torus_spec.hpp"
#include "spectriples/triple_tensor.hpp"

namespace spectriples {

// A point m of Z^n indexing the character exp(2*pi*i <w, x>) of the torus,
// w = (A^{-1})^T m. Laplacian eigenvalue 4*pi^2 * |w|^2.
struct Weight {
    Eigen::VectorXi coords;    // m
    Eigen::VectorXd embedded;  // w
    double norm_sq;            // m^T G^{-1} m
    double eigenvalue;         // 4 pi^2 norm_sq
    // m^T adj(G) m when the spec has an exact dual (norm_sq = exact_norm_num /
    // dual_den), -1 otherwise.
    std::int64_t exact_norm_num = -1;
};

// The first `count` weights under the total order (norm_sq ascending, then
// integer coords lexicographically). The box enumerated is grown until the
// smallest dual-Gram eigenvalue certifies that no shorter weight was missed.
std::vector<Weight> enumerate_weights(const TorusSpec& spec, int count);

// Exact triple tensor of the torus characters at the given cutoff:
// T^{i,j,k} = 1/sqrt(vol) iff m_i + m_j = m_k, else 0.
TripleTensor torus_triple(const TorusSpec& spec, int cutoff);

struct IsospectralPrefix {
    bool equal;
    std::optional<int> first_mismatch;
};

// Compares the first `count` eigenvalues elementwise at relative tolerance
// rtol (rtol must lie in (0, 1e-2]).
IsospectralPrefix isospectral_prefix(const TorusSpec& a, const TorusSpec& b,
                                     int count, double rtol);

// Number of lattice points of the integral quadratic form `gram` per value
// shell, for values 0..max_norm inclusive (m = 0 contributes to shell 0).
std::map<std::int64_t, std::int64_t> theta_shells(const IntMatrix& gram,
                                                  std::int64_t max_norm);

}  // namespace spectriples
