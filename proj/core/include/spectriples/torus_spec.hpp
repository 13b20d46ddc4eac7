#pragma once

#include <cstdint>
#include <Eigen/Dense>

namespace spectriples {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// A flat torus R^n / A Z^n. The columns of A generate the period lattice;
// the weight (dual) lattice is (A^{-1})^T Z^n with Gram matrix G^{-1},
// G = A^T A. vol(M) = |det A|.
//
// When the Gram matrix is integral (up to 1e-12), the dual Gram is also kept
// exactly as adj(G) / det(G) over int64, so weight norms, eigenvalue ties and
// congruence tests on such tori are decided with integer arithmetic.
class TorusSpec {
public:
    static TorusSpec from_basis(const Eigen::MatrixXd& basis);
    // Accepts a symmetric positive definite Gram matrix; the basis is
    // recovered as the upper Cholesky factor (A = L^T, A^T A = G).
    static TorusSpec from_gram(const Eigen::MatrixXd& gram);

    int dim() const { return static_cast<int>(basis_.rows()); }
    const Eigen::MatrixXd& basis() const { return basis_; }
    const Eigen::MatrixXd& gram() const { return gram_; }
    const Eigen::MatrixXd& dual_gram() const { return dual_gram_; }
    // Columns are the weight-lattice basis (A^{-1})^T e_i.
    const Eigen::MatrixXd& dual_basis() const { return dual_basis_; }
    double volume() const { return volume_; }

    // Exact rational dual Gram: dual_gram == dual_num / dual_den entrywise.
    bool has_exact_dual() const { return exact_; }
    const IntMatrix& dual_num() const { return dual_num_; }
    std::int64_t dual_den() const { return dual_den_; }
    // Integer Gram matrix of the period lattice (valid iff has_exact_dual()).
    const IntMatrix& gram_int() const { return gram_int_; }

private:
    TorusSpec() = default;
    void finish(bool gram_is_authoritative);

    Eigen::MatrixXd basis_;
    Eigen::MatrixXd gram_;
    Eigen::MatrixXd dual_gram_;
    Eigen::MatrixXd dual_basis_;
    double volume_ = 0.0;

    bool exact_ = false;
    IntMatrix gram_int_;
    IntMatrix dual_num_;
    std::int64_t dual_den_ = 0;
};

// Determinant and adjugate of small integer matrices (cofactor expansion;
// intended for n <= 6 desk-scale Gram matrices).
std::int64_t int_det(const IntMatrix& m);
IntMatrix int_adjugate(const IntMatrix& m);

}  // namespace spectriples
