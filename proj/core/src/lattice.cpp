#include "spectriples/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "spectriples/errors.hpp"

namespace spectriples {

namespace {

constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;

// strictly-less on integer coordinate vectors, componentwise
bool lex_less(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
    for (Eigen::Index d = 0; d < a.size(); ++d) {
        if (a[d] != b[d]) return a[d] < b[d];
    }
    return false;
}

// advance m through the box [-r, r]^n; returns false after the last point
bool next_box_point(Eigen::VectorXi& m, int r) {
    for (Eigen::Index d = 0; d < m.size(); ++d) {
        if (m[d] < r) {
            ++m[d];
            return true;
        }
        m[d] = -r;
    }
    return false;
}

Weight make_weight(const TorusSpec& spec, const Eigen::VectorXi& m) {
    Weight w;
    w.coords = m;
    w.embedded = spec.dual_basis() * m.cast<double>();
    if (spec.has_exact_dual()) {
        // __int128 guards the quadratic form accumulation
        __int128 acc = 0;
        for (int a = 0; a < spec.dim(); ++a)
            for (int b = 0; b < spec.dim(); ++b)
                acc += static_cast<__int128>(m[a]) * spec.dual_num()(a, b) * m[b];
        w.exact_norm_num = static_cast<std::int64_t>(acc);
        w.norm_sq = static_cast<double>(w.exact_norm_num) /
                    static_cast<double>(spec.dual_den());
    } else {
        w.norm_sq = m.cast<double>().dot(spec.dual_gram() * m.cast<double>());
    }
    w.eigenvalue = kFourPiSq * w.norm_sq;
    return w;
}

bool weight_order(const Weight& a, const Weight& b) {
    if (a.exact_norm_num >= 0 && b.exact_norm_num >= 0) {
        if (a.exact_norm_num != b.exact_norm_num)
            return a.exact_norm_num < b.exact_norm_num;
        return lex_less(a.coords, b.coords);
    }
    if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
    return lex_less(a.coords, b.coords);
}

struct CoordsHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

std::vector<Weight> enumerate_weights(const TorusSpec& spec, int count) {
    if (count < 1) throw std::invalid_argument("enumerate_weights: count must be >= 1");
    const int n = spec.dim();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(spec.dual_gram());
    const double lambda_min = es.eigenvalues().minCoeff();
    if (lambda_min <= 0.0)
        throw InvalidSpecError("dual Gram matrix is not positive definite");

    // initial radius from the expected ball volume, at least 1
    int r = std::max(1, static_cast<int>(std::ceil(std::pow(
                            static_cast<double>(count), 1.0 / n))));
    for (;;) {
        std::vector<Weight> found;
        found.reserve(static_cast<std::size_t>(std::pow(2.0 * r + 1.0, n)));
        Eigen::VectorXi m = Eigen::VectorXi::Constant(n, -r);
        do {
            found.push_back(make_weight(spec, m));
        } while (next_box_point(m, r));

        if (static_cast<int>(found.size()) >= count) {
            std::sort(found.begin(), found.end(), weight_order);
            const double t_count = found[static_cast<std::size_t>(count) - 1].norm_sq;
            // any m outside the box has |m|_inf >= r+1, so norm_sq >= lambda_min (r+1)^2
            if (lambda_min * (r + 1.0) * (r + 1.0) > t_count * (1.0 + 1e-12)) {
                found.resize(static_cast<std::size_t>(count));
                return found;
            }
        }
        r *= 2;
        if (r > (1 << 20))
            throw Error("enumerate_weights: box radius exploded; spec is too skewed");
    }
}

TripleTensor torus_triple(const TorusSpec& spec, int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("torus_triple: cutoff must be >= 1");
    const std::vector<Weight> weights = enumerate_weights(spec, cutoff);
    const int n = spec.dim();

    std::unordered_map<std::vector<int>, int, CoordsHash> index_of;
    index_of.reserve(static_cast<std::size_t>(cutoff));
    for (int i = 0; i < cutoff; ++i) {
        std::vector<int> key(weights[static_cast<std::size_t>(i)].coords.data(),
                             weights[static_cast<std::size_t>(i)].coords.data() + n);
        index_of.emplace(std::move(key), i);
    }

    const double value = 1.0 / std::sqrt(spec.volume());
    std::vector<TripleTensor::Entry> entries;
    std::vector<int> sum(static_cast<std::size_t>(n));
    for (int i = 0; i < cutoff; ++i) {
        for (int j = i; j < cutoff; ++j) {
            for (int d = 0; d < n; ++d)
                sum[static_cast<std::size_t>(d)] =
                    weights[static_cast<std::size_t>(i)].coords[d] +
                    weights[static_cast<std::size_t>(j)].coords[d];
            auto it = index_of.find(sum);
            if (it != index_of.end())
                entries.push_back({i, j, it->second, {value, 0.0}});
        }
    }

    std::vector<double> eigenvalues(static_cast<std::size_t>(cutoff));
    for (int i = 0; i < cutoff; ++i)
        eigenvalues[static_cast<std::size_t>(i)] = weights[static_cast<std::size_t>(i)].eigenvalue;

    // exact entries are 1/sqrt(vol) > 0: the default exact threshold drops
    // nothing but is recorded in the metadata
    return TripleTensor(cutoff, spec.volume(), TripleTensor::Source::Exact,
                        1e-12, std::move(eigenvalues), std::move(entries));
}

IsospectralPrefix isospectral_prefix(const TorusSpec& a, const TorusSpec& b,
                                     int count, double rtol) {
    if (rtol <= 0.0 || rtol > 1e-2)
        throw std::invalid_argument("isospectral_prefix: rtol must be in (0, 1e-2]");
    if (count < 1)
        throw std::invalid_argument("isospectral_prefix: count must be >= 1");
    const std::vector<Weight> wa = enumerate_weights(a, count);
    const std::vector<Weight> wb = enumerate_weights(b, count);
    for (int i = 0; i < count; ++i) {
        const double la = wa[static_cast<std::size_t>(i)].eigenvalue;
        const double lb = wb[static_cast<std::size_t>(i)].eigenvalue;
        const double scale = std::max(la, lb);
        if (std::abs(la - lb) > rtol * scale)
            return IsospectralPrefix{false, i};
    }
    return IsospectralPrefix{true, std::nullopt};
}

std::map<std::int64_t, std::int64_t> theta_shells(const IntMatrix& gram,
                                                  std::int64_t max_norm) {
    if (gram.rows() != gram.cols() || gram.rows() < 1)
        throw std::invalid_argument("theta_shells: gram must be square");
    if (max_norm < 0) throw std::invalid_argument("theta_shells: max_norm must be >= 0");
    const int n = static_cast<int>(gram.rows());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram.cast<double>());
    const double lambda_min = es.eigenvalues().minCoeff();
    if (lambda_min <= 0.0)
        throw InvalidSpecError("theta_shells: form is not positive definite");
    const int r = static_cast<int>(
        std::floor(std::sqrt(static_cast<double>(max_norm) / lambda_min) + 1e-9));

    std::map<std::int64_t, std::int64_t> shells;
    Eigen::VectorXi m = Eigen::VectorXi::Constant(n, -r);
    do {
        __int128 q = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                q += static_cast<__int128>(m[a]) * gram(a, b) * m[b];
        if (q <= max_norm) ++shells[static_cast<std::int64_t>(q)];
    } while (next_box_point(m, r));
    return shells;
}

}  // namespace spectriples
