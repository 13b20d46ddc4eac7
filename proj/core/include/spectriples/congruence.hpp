#pragma once

#include <optional>

#include <Eigen/Dense>

#include "spectriples/torus_spec.hpp"

namespace spectriples {

// An orthogonal map carrying the weight lattice of one torus onto the weight
// lattice of another: map * (A_a^{-1})^T Z^n = (A_b^{-1})^T Z^n.
struct Congruence {
    Eigen::MatrixXd map;  // orthogonal, ||B^T B - I|| <= 1e-9
    double det;           // +1 or -1
    // integer coordinates (in b's weight basis) of the images of a's reduced
    // weight basis; |det| = 1 certifies the images generate b's lattice
    IntMatrix change_of_basis;
};

// Backtracking search over norm-matched weight vectors with Gram-matrix
// pruning. Exhaustive for the reduced source basis, so an empty result means
// no congruence exists. Supports dim <= 4 only (UnsupportedError above).
// Orientation-reversing maps are returned too; det is reported so callers can
// tell O(n) from SO(n) evidence.
std::optional<Congruence> lattice_congruent(const TorusSpec& a, const TorusSpec& b);

}  // namespace spectriples
