#include "negtype/negative_type.hpp"

#include "negtype/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>

namespace negtype {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Orthonormal basis of the zero-sum hyperplane {alpha : sum(alpha) = 0},
// taken from the Householder factorization of the all-ones vector.
Eigen::MatrixXd zero_sum_basis(int n) {
    Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(n, 1);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(ones);
    Eigen::MatrixXd q = qr.householderQ();
    return q.rightCols(n - 1);
}

double inf_norm(const Eigen::MatrixXd& m) {
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

// Euclidean projection onto the probability simplex {x >= 0, sum(x) = 1}.
void project_simplex(Eigen::VectorXd& v) {
    const int k = static_cast<int>(v.size());
    if (k == 1) {
        v(0) = 1.0;
        return;
    }
    std::vector<double> u(v.data(), v.data() + k);
    std::sort(u.begin(), u.end(), std::greater<>());
    double csum = 0, tau = 0;
    for (int j = 0; j < k; ++j) {
        csum += u[static_cast<std::size_t>(j)];
        double t = (csum - 1.0) / (j + 1);
        if (u[static_cast<std::size_t>(j)] - t > 0) tau = t;
    }
    for (int i = 0; i < k; ++i) v(i) = std::max(v(i) - tau, 0.0);
}

} // namespace

TypeVerdict has_negative_type(const SemiMetricSpace& s, double p, double tol) {
    if (p < 0) throw DomainError("p must be nonnegative");
    if (tol <= 0) throw DomainError("tolerance must be positive");
    TypeVerdict verdict;
    verdict.p = p;
    const int n = s.size();
    if (n == 1) {
        verdict.has_type = true;
        verdict.strict = true;
        return verdict;
    }
    Eigen::MatrixXd m = s.power_matrix(p);
    Eigen::MatrixXd basis = zero_sum_basis(n);
    Eigen::MatrixXd restricted = basis.transpose() * m * basis;
    restricted = 0.5 * (restricted + restricted.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(restricted);
    const int top = n - 2;
    double lambda_max = eig.eigenvalues()(top);
    double threshold = tol * inf_norm(m);

    verdict.max_form_value = lambda_max;
    verdict.has_type = lambda_max <= threshold;
    verdict.strict = lambda_max < -threshold;
    verdict.marginal = std::abs(lambda_max) <= threshold;
    if (!verdict.has_type) {
        Eigen::VectorXd alpha = basis * eig.eigenvectors().col(top);
        verdict.violation = alpha / alpha.norm();
    }
    return verdict;
}

std::optional<double> supremal_p(const SemiMetricSpace& s, double p_max, double tol) {
    if (p_max <= 0) throw DomainError("p_max must be positive");
    if (tol <= 0) throw DomainError("tolerance must be positive");
    if (has_negative_type(s, p_max).has_type) return std::nullopt;
    double lo = 0.0, hi = p_max;
    for (int iter = 0; hi - lo > tol && iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (has_negative_type(s, mid).has_type)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

namespace {

// One team sign pattern: minimizing gamma over normalized simplices whose
// a-team lies in a_idx and b-team in b_idx amounts to maximizing
// phi(u, v) = 0.5 * alpha' M alpha over the product of two probability
// simplices, with alpha = u on a_idx and -v on b_idx. The gap is the
// negative of the overall maximum.
struct Pattern {
    std::vector<int> a_idx, b_idx;
};

struct LocalPoint {
    double phi = -std::numeric_limits<double>::infinity();
    Eigen::VectorXd u, v;
};

Eigen::VectorXd assemble_alpha(int n, const Pattern& pat, const Eigen::VectorXd& u,
                               const Eigen::VectorXd& v) {
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k < pat.a_idx.size(); ++k) alpha(pat.a_idx[k]) = u(static_cast<int>(k));
    for (std::size_t k = 0; k < pat.b_idx.size(); ++k) alpha(pat.b_idx[k]) = -v(static_cast<int>(k));
    return alpha;
}

double pattern_value(const Eigen::MatrixXd& m, int n, const Pattern& pat,
                     const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    Eigen::VectorXd alpha = assemble_alpha(n, pat, u, v);
    return 0.5 * alpha.dot(m * alpha);
}

LocalPoint projected_gradient(const Eigen::MatrixXd& m, const Pattern& pat, Eigen::VectorXd u,
                              Eigen::VectorXd v, int max_iter) {
    const int n = static_cast<int>(m.rows());
    const int na = static_cast<int>(pat.a_idx.size());
    const int nb = static_cast<int>(pat.b_idx.size());
    double eta = 1.0 / (inf_norm(m) + 1.0);
    double phi = pattern_value(m, n, pat, u, v);
    for (int iter = 0; iter < max_iter; ++iter) {
        Eigen::VectorXd grad = m * assemble_alpha(n, pat, u, v);
        Eigen::VectorXd gu(na), gv(nb);
        for (int k = 0; k < na; ++k) gu(k) = grad(pat.a_idx[static_cast<std::size_t>(k)]);
        for (int k = 0; k < nb; ++k) gv(k) = -grad(pat.b_idx[static_cast<std::size_t>(k)]);
        bool improved = false;
        for (int tries = 0; tries < 60; ++tries) {
            Eigen::VectorXd u2 = u + eta * gu;
            Eigen::VectorXd v2 = v + eta * gv;
            project_simplex(u2);
            project_simplex(v2);
            double phi2 = pattern_value(m, n, pat, u2, v2);
            if (phi2 > phi + 1e-18) {
                u = std::move(u2);
                v = std::move(v2);
                phi = phi2;
                eta *= 1.25;
                improved = true;
                break;
            }
            eta *= 0.5;
            if (eta < 1e-18) break;
        }
        if (!improved) break;
    }
    return {phi, std::move(u), std::move(v)};
}

// Solve the stationarity system on the active support in floating point and
// keep the result when it is feasible and at least as good.
void kkt_polish(const Eigen::MatrixXd& m, const Pattern& pat, LocalPoint& point) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> sa, sb; // positions within the pattern teams
    for (int k = 0; k < point.u.size(); ++k)
        if (point.u(k) > 1e-9) sa.push_back(k);
    for (int k = 0; k < point.v.size(); ++k)
        if (point.v(k) > 1e-9) sb.push_back(k);
    if (sa.empty() || sb.empty()) return;
    const int ka = static_cast<int>(sa.size());
    const int kb = static_cast<int>(sb.size());
    const int dim = ka + kb + 2;
    std::vector<int> pts;
    for (int k : sa) pts.push_back(pat.a_idx[static_cast<std::size_t>(k)]);
    for (int k : sb) pts.push_back(pat.b_idx[static_cast<std::size_t>(k)]);

    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
    for (int r = 0; r < ka + kb; ++r) {
        for (int c = 0; c < ka + kb; ++c)
            sys(r, c) = m(pts[static_cast<std::size_t>(r)], pts[static_cast<std::size_t>(c)]);
        sys(r, r < ka ? ka + kb : ka + kb + 1) = -1.0;
    }
    for (int c = 0; c < ka; ++c) sys(ka + kb, c) = 1.0;
    for (int c = ka; c < ka + kb; ++c) sys(ka + kb + 1, c) = 1.0;
    rhs(ka + kb) = 1.0;
    rhs(ka + kb + 1) = -1.0;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
    if (!lu.isInvertible()) return;
    Eigen::VectorXd sol = lu.solve(rhs);

    Eigen::VectorXd u2 = Eigen::VectorXd::Zero(point.u.size());
    Eigen::VectorXd v2 = Eigen::VectorXd::Zero(point.v.size());
    for (int k = 0; k < ka; ++k) {
        double w = sol(k);
        if (w < -1e-12) return;
        u2(sa[static_cast<std::size_t>(k)]) = std::max(w, 0.0);
    }
    for (int k = 0; k < kb; ++k) {
        double w = -sol(ka + k);
        if (w < -1e-12) return;
        v2(sb[static_cast<std::size_t>(k)]) = std::max(w, 0.0);
    }
    double su = u2.sum(), sv = v2.sum();
    if (su <= 0 || sv <= 0) return;
    u2 /= su;
    v2 /= sv;
    double phi2 = pattern_value(m, n, pat, u2, v2);
    if (phi2 >= point.phi - 1e-14) {
        point.phi = phi2;
        point.u = std::move(u2);
        point.v = std::move(v2);
    }
}

// First-order ascent residual at a feasible point: how much the linearized
// objective could still gain by moving mass within each simplex.
double ascent_residual(const Eigen::MatrixXd& m, const Pattern& pat, const LocalPoint& point) {
    const int n = static_cast<int>(m.rows());
    Eigen::VectorXd grad = m * assemble_alpha(n, pat, point.u, point.v);
    double ru_max = -std::numeric_limits<double>::infinity();
    double ru_cur = 0;
    for (int k = 0; k < point.u.size(); ++k) {
        double g = grad(pat.a_idx[static_cast<std::size_t>(k)]);
        ru_max = std::max(ru_max, g);
        ru_cur += point.u(k) * g;
    }
    double rv_max = -std::numeric_limits<double>::infinity();
    double rv_cur = 0;
    for (int k = 0; k < point.v.size(); ++k) {
        double g = -grad(pat.b_idx[static_cast<std::size_t>(k)]);
        rv_max = std::max(rv_max, g);
        rv_cur += point.v(k) * g;
    }
    return std::max(ru_max - ru_cur, 0.0) + std::max(rv_max - rv_cur, 0.0);
}

Pattern pattern_from_mask(int n, std::uint64_t mask) {
    Pattern pat;
    for (int i = 0; i < n; ++i) {
        if (mask & (std::uint64_t(1) << i))
            pat.a_idx.push_back(i);
        else
            pat.b_idx.push_back(i);
    }
    return pat;
}

std::vector<std::uint64_t> candidate_masks(const Eigen::MatrixXd& m, int n,
                                           const GapOptions& opts) {
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::set<std::uint64_t> masks;
    if (n <= opts.exact_cutoff) {
        // Every split with point 0 on the a-team; complements are equivalent.
        for (std::uint64_t mask = 1; mask < full; mask += 2) masks.insert(mask);
    } else {
        auto normalized = [&](std::uint64_t mask) { return (mask & 1) ? mask : (full & ~mask); };
        // Spectral seed: split by the sign of the top eigenvector of the
        // form restricted to the zero-sum hyperplane.
        Eigen::MatrixXd basis = zero_sum_basis(n);
        Eigen::MatrixXd restricted = basis.transpose() * m * basis;
        restricted = 0.5 * (restricted + restricted.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(restricted);
        for (int c = 0; c < restricted.cols(); ++c) {
            Eigen::VectorXd alpha = basis * eig.eigenvectors().col(c);
            std::uint64_t mask = 0;
            for (int i = 0; i < n; ++i)
                if (alpha(i) >= 0) mask |= std::uint64_t(1) << i;
            if (mask != 0 && mask != full) masks.insert(normalized(mask));
        }
        for (int i = 0; i < n; ++i) masks.insert(normalized(std::uint64_t(1) << i));
        std::uint64_t state = splitmix64(opts.seed ^ 0x7b1fa2c5d6e3a09bULL);
        std::size_t available = n >= 40 ? std::numeric_limits<std::size_t>::max()
                                        : (std::size_t(1) << (n - 1)) - 1;
        std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(opts.pattern_samples),
                                                 available);
        while (masks.size() < want) {
            state = splitmix64(state);
            std::uint64_t mask = state & full;
            if (mask == 0 || mask == full) continue;
            masks.insert(normalized(mask));
        }
    }
    return {masks.begin(), masks.end()};
}

struct ExactOptimum {
    Rational gamma;
    std::vector<WeightedPoint> a, b;
};

// Re-derive the optimum exactly: solve the stationarity system over the
// rationals on the support suggested by the float solution, then verify
// feasibility and the first-order inequalities for the inactive points.
std::optional<ExactOptimum> exact_recover(const SemiMetricSpace& s, unsigned p,
                                          const Pattern& pat, const LocalPoint& point,
                                          double gap_float) {
    std::vector<int> sup_a, sup_b; // space point indices
    for (int k = 0; k < point.u.size(); ++k)
        if (point.u(k) > 1e-7) sup_a.push_back(pat.a_idx[static_cast<std::size_t>(k)]);
    for (int k = 0; k < point.v.size(); ++k)
        if (point.v(k) > 1e-7) sup_b.push_back(pat.b_idx[static_cast<std::size_t>(k)]);
    if (sup_a.empty() || sup_b.empty()) return std::nullopt;

    const int n = s.size();
    std::vector<Rational> mx = s.power_matrix_exact(p);
    auto mat = [&](int i, int j) -> const Rational& { return mx[static_cast<std::size_t>(i) * n + j]; };

    const int ka = static_cast<int>(sup_a.size());
    const int kb = static_cast<int>(sup_b.size());
    const int dim = ka + kb + 2;
    std::vector<int> pts = sup_a;
    pts.insert(pts.end(), sup_b.begin(), sup_b.end());

    std::vector<Rational> sys(static_cast<std::size_t>(dim) * dim), rhs(static_cast<std::size_t>(dim));
    auto at = [&](int r, int c) -> Rational& { return sys[static_cast<std::size_t>(r) * dim + c]; };
    for (int r = 0; r < ka + kb; ++r) {
        for (int c = 0; c < ka + kb; ++c)
            at(r, c) = mat(pts[static_cast<std::size_t>(r)], pts[static_cast<std::size_t>(c)]);
        at(r, r < ka ? ka + kb : ka + kb + 1) = -1;
    }
    for (int c = 0; c < ka; ++c) at(ka + kb, c) = 1;
    for (int c = ka; c < ka + kb; ++c) at(ka + kb + 1, c) = 1;
    rhs[static_cast<std::size_t>(ka + kb)] = 1;
    rhs[static_cast<std::size_t>(ka + kb + 1)] = -1;

    auto sol = solve_linear_exact(dim, std::move(sys), std::move(rhs));
    if (!sol) return std::nullopt;

    std::vector<Rational> alpha(static_cast<std::size_t>(n), Rational(0));
    for (int k = 0; k < ka; ++k) {
        if ((*sol)[static_cast<std::size_t>(k)] <= 0) return std::nullopt;
        alpha[static_cast<std::size_t>(sup_a[static_cast<std::size_t>(k)])] = (*sol)[static_cast<std::size_t>(k)];
    }
    for (int k = 0; k < kb; ++k) {
        if ((*sol)[static_cast<std::size_t>(ka + k)] >= 0) return std::nullopt;
        alpha[static_cast<std::size_t>(sup_b[static_cast<std::size_t>(k)])] = (*sol)[static_cast<std::size_t>(ka + k)];
    }
    const Rational& c_a = (*sol)[static_cast<std::size_t>(ka + kb)];
    const Rational& c_b = (*sol)[static_cast<std::size_t>(ka + kb + 1)];

    auto form_row = [&](int i) {
        Rational acc(0);
        for (int j = 0; j < n; ++j)
            if (alpha[static_cast<std::size_t>(j)] != 0) acc += mat(i, j) * alpha[static_cast<std::size_t>(j)];
        return acc;
    };
    // Inactive points must not offer a first-order improvement.
    std::set<int> sup(pts.begin(), pts.end());
    for (int i : pat.a_idx)
        if (!sup.count(i) && form_row(i) > c_a) return std::nullopt;
    for (int j : pat.b_idx)
        if (!sup.count(j) && form_row(j) < c_b) return std::nullopt;

    Rational gamma_exact_value = (c_b - c_a) / 2;
    double gx = to_double(gamma_exact_value);
    if (std::abs(gx - gap_float) > 1e-6 * std::max(1.0, std::abs(gap_float))) return std::nullopt;

    ExactOptimum out;
    out.gamma = gamma_exact_value;
    for (int k = 0; k < ka; ++k)
        out.a.push_back({sup_a[static_cast<std::size_t>(k)], (*sol)[static_cast<std::size_t>(k)]});
    for (int k = 0; k < kb; ++k)
        out.b.push_back({sup_b[static_cast<std::size_t>(k)], -(*sol)[static_cast<std::size_t>(ka + k)]});
    return out;
}

WeightedSimplex witness_from_floats(const Pattern& pat, const LocalPoint& point) {
    std::vector<WeightedPoint> a, b;
    for (int k = 0; k < point.u.size(); ++k)
        if (point.u(k) > 1e-12) a.push_back({pat.a_idx[static_cast<std::size_t>(k)], Rational(point.u(k))});
    for (int k = 0; k < point.v.size(); ++k)
        if (point.v(k) > 1e-12) b.push_back({pat.b_idx[static_cast<std::size_t>(k)], Rational(point.v(k))});
    // Team totals are 1 up to rounding; renormalize exactly.
    Rational ta(0), tb(0);
    for (const auto& e : a) ta += e.weight;
    for (const auto& e : b) tb += e.weight;
    for (auto& e : a) e.weight /= ta;
    for (auto& e : b) e.weight /= tb;
    return WeightedSimplex(std::move(a), std::move(b));
}

} // namespace

GapResult gap(const SemiMetricSpace& s, double p, const GapOptions& opts) {
    const int n = s.size();
    if (n < 2) throw DomainError("gap requires at least two points");
    if (p < 0) throw DomainError("p must be nonnegative");
    if (n > 62) throw DomainError("space too large for sign-pattern search");

    Eigen::MatrixXd m = s.power_matrix(p);
    std::vector<std::uint64_t> masks = candidate_masks(m, n, opts);

    LocalPoint best;
    Pattern best_pattern;
    for (std::uint64_t mask : masks) {
        Pattern pat = pattern_from_mask(n, mask);
        const int na = static_cast<int>(pat.a_idx.size());
        const int nb = static_cast<int>(pat.b_idx.size());
        LocalPoint pattern_best;
        for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
            Eigen::VectorXd u(na), v(nb);
            if (restart == 0) {
                u.setConstant(1.0 / na);
                v.setConstant(1.0 / nb);
            } else {
                std::mt19937_64 rng(splitmix64(splitmix64(opts.seed) ^ splitmix64(mask) ^
                                               static_cast<std::uint64_t>(restart)));
                std::exponential_distribution<double> exp_dist(1.0);
                for (int k = 0; k < na; ++k) u(k) = exp_dist(rng);
                for (int k = 0; k < nb; ++k) v(k) = exp_dist(rng);
                u /= u.sum();
                v /= v.sum();
            }
            LocalPoint local = projected_gradient(m, pat, std::move(u), std::move(v), opts.max_iter);
            kkt_polish(m, pat, local);
            if (local.phi > pattern_best.phi) pattern_best = std::move(local);
        }
        if (pattern_best.phi > best.phi) {
            best = std::move(pattern_best);
            best_pattern = std::move(pat);
        }
    }

    GapResult result;
    result.p = p;
    result.method = GapMethod::optimizer;
    result.negative_type_holds = has_negative_type(s, p, opts.type_tol).has_type;

    double gap_float = -best.phi;
    bool p_integral = p >= 0 && p == std::floor(p) && p <= 64;
    std::optional<ExactOptimum> exact;
    if (opts.try_exact && s.exact() && p_integral)
        exact = exact_recover(s, static_cast<unsigned>(p), best_pattern, best, gap_float);

    if (exact) {
        result.gap = to_double(exact->gamma);
        result.gap_exact = exact->gamma;
        result.certified_tol = 0;
        result.witness = refine(WeightedSimplex(std::move(exact->a), std::move(exact->b))).simplex;
    } else {
        result.gap = gap_float;
        result.certified_tol = std::max(1e-10, ascent_residual(m, best_pattern, best));
        result.witness = refine(witness_from_floats(best_pattern, best)).simplex;
    }
    return result;
}

namespace {

// Direct evaluation of gamma from the definition; the oracle deliberately
// avoids the quadratic-form shortcut used by the optimizer.
double oracle_gamma(const Eigen::MatrixXd& dp, const std::vector<int>& a_pts,
                    const std::vector<double>& u, const std::vector<int>& b_pts,
                    const std::vector<double>& v) {
    double cross = 0, within = 0;
    for (std::size_t i = 0; i < a_pts.size(); ++i)
        for (std::size_t j = 0; j < b_pts.size(); ++j)
            cross += u[i] * v[j] * dp(a_pts[i], b_pts[j]);
    for (std::size_t i = 0; i < a_pts.size(); ++i)
        for (std::size_t j = i + 1; j < a_pts.size(); ++j)
            within += u[i] * u[j] * dp(a_pts[i], a_pts[j]);
    for (std::size_t i = 0; i < b_pts.size(); ++i)
        for (std::size_t j = i + 1; j < b_pts.size(); ++j)
            within += v[i] * v[j] * dp(b_pts[i], b_pts[j]);
    return cross - within;
}

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int head = 0; head <= total; ++head) {
        cur.push_back(head);
        compositions(total - head, parts - 1, cur, emit);
        cur.pop_back();
    }
}

// Greedy pairwise weight transfers with a shrinking step; a pattern search
// that needs no gradients.
double transfer_descent(const Eigen::MatrixXd& dp, const std::vector<int>& a_pts,
                        std::vector<double>& u, const std::vector<int>& b_pts,
                        std::vector<double>& v, double resolution) {
    double best = oracle_gamma(dp, a_pts, u, b_pts, v);
    double delta = 0.25;
    while (delta >= resolution / 4) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (auto* team : {&u, &v}) {
                for (std::size_t give = 0; give < team->size(); ++give) {
                    if ((*team)[give] <= 0) continue;
                    for (std::size_t take = 0; take < team->size(); ++take) {
                        if (take == give) continue;
                        double amount = std::min(delta, (*team)[give]);
                        (*team)[give] -= amount;
                        (*team)[take] += amount;
                        double cand = oracle_gamma(dp, a_pts, u, b_pts, v);
                        if (cand < best - 1e-15) {
                            best = cand;
                            improved = true;
                        } else {
                            (*team)[give] += amount;
                            (*team)[take] -= amount;
                        }
                    }
                }
            }
        }
        delta *= 0.5;
    }
    return best;
}

} // namespace

double gap_oracle(const SemiMetricSpace& s, double p, double resolution, unsigned seed) {
    const int n = s.size();
    if (n < 2) throw DomainError("gap_oracle requires at least two points");
    if (resolution <= 0) throw DomainError("resolution must be positive");
    Eigen::MatrixXd dp = s.power_matrix(p);

    double best = std::numeric_limits<double>::infinity();
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::mt19937_64 rng(splitmix64(seed ^ 0x2545f4914f6cdd1dULL));

    for (std::uint64_t mask = 1; mask < full; mask += 2) {
        std::vector<int> a_pts, b_pts;
        for (int i = 0; i < n; ++i) {
            if (mask & (std::uint64_t(1) << i))
                a_pts.push_back(i);
            else
                b_pts.push_back(i);
        }
        const int grid = 6;
        std::vector<std::vector<double>> grid_a, grid_b;
        std::vector<int> cur;
        compositions(grid, static_cast<int>(a_pts.size()), cur, [&](const std::vector<int>& c) {
            std::vector<double> w(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) w[i] = static_cast<double>(c[i]) / grid;
            grid_a.push_back(std::move(w));
        });
        compositions(grid, static_cast<int>(b_pts.size()), cur, [&](const std::vector<int>& c) {
            std::vector<double> w(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) w[i] = static_cast<double>(c[i]) / grid;
            grid_b.push_back(std::move(w));
        });

        // Best few grid cells seed the descent.
        using Start = std::pair<double, std::pair<std::size_t, std::size_t>>;
        std::vector<Start> starts;
        for (std::size_t i = 0; i < grid_a.size(); ++i)
            for (std::size_t j = 0; j < grid_b.size(); ++j) {
                double val = oracle_gamma(dp, a_pts, grid_a[i], b_pts, grid_b[j]);
                starts.push_back({val, {i, j}});
            }
        std::sort(starts.begin(), starts.end(),
                  [](const Start& x, const Start& y) { return x.first < y.first; });
        const std::size_t keep = std::min<std::size_t>(6, starts.size());
        for (std::size_t k = 0; k < keep; ++k) {
            auto u = grid_a[starts[k].second.first];
            auto v = grid_b[starts[k].second.second];
            best = std::min(best, transfer_descent(dp, a_pts, u, b_pts, v, resolution));
        }
        std::exponential_distribution<double> exp_dist(1.0);
        for (int restart = 0; restart < 16; ++restart) {
            std::vector<double> u(a_pts.size()), v(b_pts.size());
            double su = 0, sv = 0;
            for (auto& w : u) su += (w = exp_dist(rng));
            for (auto& w : v) sv += (w = exp_dist(rng));
            for (auto& w : u) w /= su;
            for (auto& w : v) w /= sv;
            best = std::min(best, transfer_descent(dp, a_pts, u, b_pts, v, resolution));
        }
    }
    return best;
}

} // namespace negtype
