#include "spectriples/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "spectriples/errors.hpp"
#include "spectriples/lattice.hpp"

namespace spectriples {

namespace {

constexpr double kNormRtol = 1e-9;

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

struct Candidate {
    Eigen::VectorXi coords;
    double norm_sq;
    std::int64_t exact_num;  // -1 if float path
};

// all weight-lattice vectors with norm_sq <= bound (inclusive, small slack)
std::vector<Candidate> weights_in_ball(const TorusSpec& spec, double bound) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(spec.dual_gram());
    const double lambda_min = es.eigenvalues().minCoeff();
    const int r = static_cast<int>(
        std::ceil(std::sqrt(bound * (1.0 + 1e-9) / lambda_min))) + 1;
    if (std::pow(2.0 * r + 1.0, spec.dim()) > 4e7)
        throw Error("lattice_congruent: candidate enumeration is too large");

    std::vector<Candidate> out;
    Eigen::VectorXi m = Eigen::VectorXi::Constant(spec.dim(), -r);
    do {
        Candidate c;
        c.coords = m;
        if (spec.has_exact_dual()) {
            __int128 acc = 0;
            for (int a = 0; a < spec.dim(); ++a)
                for (int b = 0; b < spec.dim(); ++b)
                    acc += static_cast<__int128>(m[a]) * spec.dual_num()(a, b) * m[b];
            c.exact_num = static_cast<std::int64_t>(acc);
            c.norm_sq = static_cast<double>(c.exact_num) /
                        static_cast<double>(spec.dual_den());
        } else {
            c.exact_num = -1;
            c.norm_sq = m.cast<double>().dot(spec.dual_gram() * m.cast<double>());
        }
        if (c.norm_sq <= bound * (1.0 + kNormRtol)) out.push_back(std::move(c));
    } while (next_box_point(m, r));
    return out;
}

// inner product of two integer weight vectors of `spec`, exact numerator over
// dual_den when available, else floating point
double dual_inner(const TorusSpec& spec, const Eigen::VectorXi& a,
                  const Eigen::VectorXi& b, std::int64_t* exact_num) {
    if (spec.has_exact_dual()) {
        __int128 acc = 0;
        for (int i = 0; i < spec.dim(); ++i)
            for (int j = 0; j < spec.dim(); ++j)
                acc += static_cast<__int128>(a[i]) * spec.dual_num()(i, j) * b[j];
        *exact_num = static_cast<std::int64_t>(acc);
        return static_cast<double>(*exact_num) / static_cast<double>(spec.dual_den());
    }
    *exact_num = -1;
    return a.cast<double>().dot(spec.dual_gram() * b.cast<double>());
}

// Greedy pairwise size reduction of the identity basis of a's weight lattice.
// Returns a unimodular U; the reduced source Gram is U^T dual_gram U.
IntMatrix size_reduce(const TorusSpec& spec) {
    const int n = spec.dim();
    IntMatrix u = IntMatrix::Identity(n, n);
    Eigen::MatrixXd ud = u.cast<double>();
    Eigen::MatrixXd g = ud.transpose() * spec.dual_gram() * ud;
    for (int pass = 0; pass < 64; ++pass) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const long long t = std::llround(g(i, j) / g(j, j));
                if (t == 0) continue;
                const double new_norm =
                    g(i, i) - 2.0 * t * g(i, j) + t * t * g(j, j);
                if (new_norm < g(i, i) * (1.0 - 1e-12)) {
                    u.col(i) -= t * u.col(j);
                    ud = u.cast<double>();
                    g = ud.transpose() * spec.dual_gram() * ud;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    // shortest first keeps candidate lists small early in the backtracking
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&g](int a, int b) { return g(a, a) < g(b, b); });
    IntMatrix sorted(n, n);
    for (int i = 0; i < n; ++i) sorted.col(i) = u.col(order[static_cast<std::size_t>(i)]);
    return sorted;
}

struct Search {
    const TorusSpec* b;
    int n = 0;
    bool exact = false;           // both sides exact
    std::int64_t den_a = 0, den_b = 0;
    Eigen::MatrixXd source_gram;  // U^T dual_gram_a U
    IntMatrix source_gram_num;    // U^T dual_num_a U (exact path)
    std::vector<std::vector<const Candidate*>> candidates;  // per level
    std::vector<const Candidate*> chosen;

    bool inner_matches(const Eigen::VectorXi& va, const Eigen::VectorXi& vb,
                       int row, int col) const {
        std::int64_t num = -1;
        const double ip = dual_inner(*b, va, vb, &num);
        if (exact)
            return static_cast<__int128>(num) * den_a ==
                   static_cast<__int128>(source_gram_num(row, col)) * den_b;
        const double scale = std::max(1.0, source_gram.cwiseAbs().maxCoeff());
        return std::abs(ip - source_gram(row, col)) <= kNormRtol * scale;
    }

    bool extend(int level) {
        if (level == n) {
            // images must generate b's lattice, not a sublattice
            IntMatrix c(n, n);
            for (int i = 0; i < n; ++i)
                c.col(i) = chosen[static_cast<std::size_t>(i)]->coords.cast<std::int64_t>();
            return std::abs(int_det(c)) == 1;
        }
        for (const Candidate* cand : candidates[static_cast<std::size_t>(level)]) {
            bool ok = true;
            for (int s = 0; s < level; ++s) {
                if (!inner_matches(cand->coords, chosen[static_cast<std::size_t>(s)]->coords,
                                   level, s)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen[static_cast<std::size_t>(level)] = cand;
            if (extend(level + 1)) return true;
        }
        chosen[static_cast<std::size_t>(level)] = nullptr;
        return false;
    }
};

}  // namespace

std::optional<Congruence> lattice_congruent(const TorusSpec& a, const TorusSpec& b) {
    if (a.dim() != b.dim()) return std::nullopt;
    const int n = a.dim();
    if (n > 4)
        throw UnsupportedError("lattice_congruent: dimension > 4 is unsupported");

    // congruent lattices have equal covolume
    const double det_a = a.dual_gram().determinant();
    const double det_b = b.dual_gram().determinant();
    if (std::abs(det_a - det_b) > kNormRtol * std::max(det_a, det_b))
        return std::nullopt;

    Search search;
    search.b = &b;
    search.n = n;
    search.exact = a.has_exact_dual() && b.has_exact_dual();
    if (search.exact) {
        search.den_a = a.dual_den();
        search.den_b = b.dual_den();
    }

    const IntMatrix u = size_reduce(a);
    const Eigen::MatrixXd ud = u.cast<double>();
    search.source_gram = ud.transpose() * a.dual_gram() * ud;
    if (search.exact)
        search.source_gram_num = u.transpose() * a.dual_num() * u;

    const double max_diag = search.source_gram.diagonal().maxCoeff();
    const std::vector<Candidate> ball = weights_in_ball(b, max_diag);

    search.candidates.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (const Candidate& cand : ball) {
            bool norm_match;
            if (search.exact) {
                norm_match = static_cast<__int128>(cand.exact_num) * search.den_a ==
                             static_cast<__int128>(search.source_gram_num(i, i)) *
                                 search.den_b;
            } else {
                norm_match = std::abs(cand.norm_sq - search.source_gram(i, i)) <=
                             kNormRtol * std::max(1.0, max_diag);
            }
            if (norm_match)
                search.candidates[static_cast<std::size_t>(i)].push_back(&cand);
        }
        if (search.candidates[static_cast<std::size_t>(i)].empty()) return std::nullopt;
    }

    search.chosen.assign(static_cast<std::size_t>(n), nullptr);
    if (!search.extend(0)) return std::nullopt;

    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i)
        c.col(i) = search.chosen[static_cast<std::size_t>(i)]->coords.cast<std::int64_t>();

    const Eigen::MatrixXd source_basis = a.dual_basis() * ud;
    const Eigen::MatrixXd target_basis = b.dual_basis() * c.cast<double>();
    Congruence result;
    result.map = target_basis * source_basis.inverse();
    result.det = result.map.determinant();
    result.change_of_basis = c;

    const double orth_err =
        (result.map.transpose() * result.map - Eigen::MatrixXd::Identity(n, n))
            .cwiseAbs()
            .maxCoeff();
    if (orth_err > 1e-9)
        throw Error("lattice_congruent: accepted map failed the orthogonality check");
    return result;
}

}  // namespace spectriples
