#include "spectriples/torus_spec.hpp"

#include <cmath>
#include <string>

#include "spectriples/errors.hpp"

namespace spectriples {

namespace {

constexpr double kDegenerateDet = 1e-12;
constexpr double kIntegerSnapTol = 1e-12;

bool nearly_integral(const Eigen::MatrixXd& m, IntMatrix& out) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    out.resize(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double r = std::round(m(i, j));
            if (std::abs(m(i, j) - r) > kIntegerSnapTol * scale) return false;
            out(i, j) = static_cast<std::int64_t>(r);
        }
    }
    return true;
}

std::int64_t det_recursive(const IntMatrix& m) {
    const Eigen::Index n = m.rows();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    std::int64_t det = 0;
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        for (Eigen::Index i = 1; i < n; ++i) {
            Eigen::Index jj = 0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        const std::int64_t cof = det_recursive(minor);
        det += ((c % 2 == 0) ? 1 : -1) * m(0, c) * cof;
    }
    return det;
}

}  // namespace

std::int64_t int_det(const IntMatrix& m) { return det_recursive(m); }

IntMatrix int_adjugate(const IntMatrix& m) {
    const Eigen::Index n = m.rows();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            Eigen::Index mi = 0;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (i == r) continue;
                Eigen::Index mj = 0;
                for (Eigen::Index j = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor(mi, mj++) = m(i, j);
                }
                ++mi;
            }
            const std::int64_t cof = det_recursive(minor);
            // adj = cofactor matrix transposed
            adj(c, r) = (((r + c) % 2 == 0) ? 1 : -1) * cof;
        }
    }
    return adj;
}

TorusSpec TorusSpec::from_basis(const Eigen::MatrixXd& basis) {
    if (basis.rows() != basis.cols() || basis.rows() < 1)
        throw InvalidSpecError("torus basis must be a square n x n matrix, n >= 1");
    TorusSpec spec;
    spec.basis_ = basis;
    spec.gram_ = basis.transpose() * basis;
    spec.finish(/*gram_is_authoritative=*/false);
    return spec;
}

TorusSpec TorusSpec::from_gram(const Eigen::MatrixXd& gram) {
    if (gram.rows() != gram.cols() || gram.rows() < 1)
        throw InvalidSpecError("torus Gram matrix must be square, n >= 1");
    if ((gram - gram.transpose()).cwiseAbs().maxCoeff() >
        1e-12 * std::max(1.0, gram.cwiseAbs().maxCoeff()))
        throw InvalidSpecError("torus Gram matrix must be symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success)
        throw InvalidSpecError("torus Gram matrix must be positive definite");
    TorusSpec spec;
    spec.basis_ = llt.matrixL().transpose();  // A = L^T, so A^T A = L L^T = G
    spec.gram_ = gram;
    spec.finish(/*gram_is_authoritative=*/true);
    return spec;
}

void TorusSpec::finish(bool gram_is_authoritative) {
    const double det_basis = basis_.determinant();
    if (std::abs(det_basis) < kDegenerateDet)
        throw InvalidSpecError("degenerate torus basis: |det A| = " +
                               std::to_string(std::abs(det_basis)) + " < 1e-12");
    volume_ = std::abs(det_basis);

    IntMatrix snapped;
    if (nearly_integral(gram_, snapped)) {
        const std::int64_t den = int_det(snapped);
        if (den <= 0)
            throw InvalidSpecError("integral Gram matrix is not positive definite");
        exact_ = true;
        gram_int_ = snapped;
        dual_num_ = int_adjugate(snapped);
        dual_den_ = den;
        gram_ = snapped.cast<double>();
        dual_gram_ = dual_num_.cast<double>() / static_cast<double>(den);
        if (gram_is_authoritative)
            volume_ = std::sqrt(static_cast<double>(den));
    } else {
        dual_gram_ = gram_.inverse();
    }
    dual_basis_ = basis_.inverse().transpose();

    const double id_err =
        (dual_gram_ * gram_ - Eigen::MatrixXd::Identity(dim(), dim()))
            .cwiseAbs()
            .maxCoeff();
    if (id_err > 1e-9)
        throw InvalidSpecError("torus Gram matrix is too ill-conditioned: G^{-1} G deviates from identity by " +
                               std::to_string(id_err));
}

}  // namespace spectriples
