#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "qlandau/analytic.hpp"
#include "qlandau/grid.hpp"
#include "qlandau/operators.hpp"

namespace qlandau {

namespace detail {

// Number of eigenvalues of the symmetric tridiagonal (a, b) strictly below x,
// by the Sturm sequence of the LDL^T pivots.
inline int sturm_count(const std::vector<double>& a, const std::vector<double>& b,
                       double x) {
    int count = 0;
    double d = a[0] - x;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < a.size(); ++i) {
        double denom = d;
        if (denom == 0.0) denom = std::numeric_limits<double>::min();
        d = (a[i] - x) - b[i - 1] * b[i - 1] / denom;
        if (d < 0.0) ++count;
    }
    return count;
}

// i-th smallest eigenvalue (0-based) by bisection to ulp-level width.
inline double bisect_eigenvalue(const std::vector<double>& a,
                                const std::vector<double>& b, int i, double lo,
                                double hi) {
    const double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count(a, b, mid) > i)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= eps * (std::abs(lo) + std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

// Solve (T - lambda I) x = r for tridiagonal T, Gaussian elimination with
// partial pivoting (one superdiagonal of fill-in).
inline std::vector<double> solve_shifted(const std::vector<double>& a,
                                         const std::vector<double>& b,
                                         double lambda, std::vector<double> r) {
    const std::size_t n = a.size();
    const double pivmin = std::numeric_limits<double>::min();
    std::vector<double> d(n), u(n > 1 ? n - 1 : 0), u2(n > 2 ? n - 2 : 0, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i] - lambda;
    std::vector<double> l = b;
    u = b;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(l[i])) {
            if (d[i] == 0.0) d[i] = pivmin;
            const double m = l[i] / d[i];
            d[i + 1] -= m * u[i];
            if (i + 2 < n) u2[i] = 0.0;
            r[i + 1] -= m * r[i];
        } else {
            const double di = d[i], ui = u[i], di1 = d[i + 1];
            const double ui1 = (i + 2 < n) ? u[i + 1] : 0.0;
            const double m = di / l[i];
            d[i] = l[i];
            u[i] = di1;
            if (i + 2 < n) u2[i] = ui1;
            d[i + 1] = ui - m * di1;
            if (i + 2 < n) u[i + 1] = -m * ui1;
            const double ri = r[i];
            r[i] = r[i + 1];
            r[i + 1] = ri - m * r[i];
        }
    }
    if (d[n - 1] == 0.0) d[n - 1] = pivmin;
    std::vector<double> x(n);
    x[n - 1] = r[n - 1] / d[n - 1];
    if (n > 1) x[n - 2] = (r[n - 2] - u[n - 2] * x[n - 1]) / d[n - 2];
    for (std::size_t ii = n; ii-- > 2;) {
        const std::size_t i = ii - 2;
        x[i] = (r[i] - u[i] * x[i + 1] - u2[i] * x[i + 2]) / d[i];
    }
    return x;
}

inline double lcg_uniform(std::uint64_t& state) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return (state >> 11) * (1.0 / 9007199254740992.0) - 0.5;
}

} // namespace detail

struct EigenResult {
    std::vector<double> values;               // J, ascending
    std::vector<std::vector<double>> vectors; // one column per state, h-weight normalized
    std::vector<double> residual_norms;       // ||H v - lambda v|| (h-weighted), J
    Grid1D grid;
};

enum class EigenMethod {
    BisectionInverseIteration, // Sturm bisection + inverse iteration (default)
    QL                         // eigenvalues via QL (Eigen), vectors via inverse iteration
};

// k smallest eigenpairs of a symmetric tridiagonal operator. Deterministic:
// fixed bisection schedule, fixed LCG start vector. States above n_points/4
// are discretization-polluted and refused.
inline EigenResult lowest_eigenpairs(const TridiagonalOperator& op, int k,
                                     EigenMethod method = EigenMethod::BisectionInverseIteration) {
    const int n = static_cast<int>(op.diag.size());
    if (n < 16 || static_cast<int>(op.offdiag.size()) != n - 1)
        throw std::invalid_argument("lowest_eigenpairs: malformed operator");
    if (k < 1 || k > n / 4)
        throw std::invalid_argument("lowest_eigenpairs: k must satisfy 1 <= k <= n_points/4 = " +
                                    std::to_string(n / 4));

    const auto& a = op.diag;
    const auto& b = op.offdiag;

    double gmin = a[0], gmax = a[0];
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(b[i - 1]);
        if (i + 1 < n) r += std::abs(b[i]);
        gmin = std::min(gmin, a[i] - r);
        gmax = std::max(gmax, a[i] + r);
    }

    EigenResult res;
    res.grid = op.grid;
    res.values.resize(k);
    if (method == EigenMethod::QL) {
        Eigen::VectorXd ad = Eigen::Map<const Eigen::VectorXd>(a.data(), n);
        Eigen::VectorXd bd = Eigen::Map<const Eigen::VectorXd>(b.data(), n - 1);
        // computeFromTridiagonal's deflation test is absolute in sqrt(scale),
        // so matrices far from unit norm (SI energies ~1e-25 J) lose couplings
        // it should keep. Normalize and undo, as the dense path does.
        const double qscale =
            std::max(ad.cwiseAbs().maxCoeff(), bd.cwiseAbs().maxCoeff());
        if (qscale > 0.0) {
            ad /= qscale;
            bd /= qscale;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(ad, bd, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("lowest_eigenpairs: QL iteration failed");
        for (int i = 0; i < k; ++i) res.values[i] = solver.eigenvalues()(i) * qscale;
    } else {
        for (int i = 0; i < k; ++i)
            res.values[i] = detail::bisect_eigenvalue(a, b, i, gmin, gmax);
    }

    const double h = op.grid.spacing();
    const double nb = op.norm_bound();
    const double eps = std::numeric_limits<double>::epsilon();
    res.vectors.reserve(k);
    res.residual_norms.resize(k);
    for (int i = 0; i < k; ++i) {
        std::uint64_t seed = 0x9e3779b97f4a7c15ULL + 0x100000001b3ULL * i;
        std::vector<double> v(n);
        for (int j = 0; j < n; ++j) v[j] = detail::lcg_uniform(seed);
        double best_resid = std::numeric_limits<double>::infinity();
        std::vector<double> best = v;
        for (int it = 0; it < 8; ++it) {
            v = detail::solve_shifted(a, b, res.values[i], v);
            double s = 0.0;
            for (double x : v) s += x * x;
            s = std::sqrt(s);
            for (double& x : v) x /= s;
            const auto hv = op.apply(v);
            double rn = 0.0;
            for (int j = 0; j < n; ++j) {
                const double d = hv[j] - res.values[i] * v[j];
                rn += d * d;
            }
            rn = std::sqrt(rn);
            if (rn < best_resid) {
                best_resid = rn;
                best = v;
            }
            if (rn <= 8.0 * eps * nb) break;
        }
        v = best;
        // one re-orthogonalization sweep against lower states
        for (int j = 0; j < i; ++j) {
            double dot = 0.0;
            for (int m = 0; m < n; ++m) dot += v[m] * res.vectors[j][m] * h;
            for (int m = 0; m < n; ++m) v[m] -= dot * res.vectors[j][m];
        }
        double s = 0.0;
        for (double x : v) s += x * x;
        s = std::sqrt(s * h);
        for (double& x : v) x /= s;
        // sign convention: positive tail toward y -> +inf
        double vmax = 0.0;
        for (double x : v) vmax = std::max(vmax, std::abs(x));
        for (int j = n; j-- > 0;) {
            if (std::abs(v[j]) > 1e-6 * vmax) {
                if (v[j] < 0.0)
                    for (double& x : v) x = -x;
                break;
            }
        }
        const auto hv = op.apply(v);
        double rn = 0.0;
        for (int j = 0; j < n; ++j) {
            const double d = hv[j] - res.values[i] * v[j];
            rn += d * d;
        }
        res.residual_norms[i] = std::sqrt(rn * h);
        res.vectors.push_back(std::move(v));
    }
    return res;
}

struct DeviationReport {
    std::vector<double> abs_error;     // |lambda_n - (n+1/2) hbar omega_c|, J
    std::vector<double> rel_error;
    std::vector<double> overlap_error; // 1 - |<v_n | phi_n>|
    double max_rel_error = 0.0;
    double max_overlap_error = 0.0;
    double kinetic_offset = 0.0;       // hbar^2 kx^2/2m; add when comparing to full dispersion
};

inline DeviationReport compare_to_analytic(const EigenResult& res,
                                           const PhysParams& p, const Sector& s) {
    require_confined(s, "compare_to_analytic");
    if (res.values.empty() || res.values.size() != res.vectors.size())
        throw std::invalid_argument("compare_to_analytic: level-count mismatch");
    const double wc = cyclotron_frequency(p, std::abs(s.kx));
    const auto y = res.grid.points();
    const double h = res.grid.spacing();
    DeviationReport rep;
    rep.kinetic_offset = p.hbar * p.hbar * s.kx * s.kx / (2.0 * p.mass);
    const int k = static_cast<int>(res.values.size());
    for (int n = 0; n < k; ++n) {
        const double exact = p.hbar * wc * (n + 0.5);
        const double ae = std::abs(res.values[n] - exact);
        rep.abs_error.push_back(ae);
        rep.rel_error.push_back(ae / exact);
        const auto phi = eigenfunction(p, s, n, y);
        double nrm = 0.0, dot = 0.0;
        for (std::size_t i = 0; i < phi.values.size(); ++i)
            nrm += phi.values[i] * phi.values[i];
        nrm = std::sqrt(nrm * h);
        for (std::size_t i = 0; i < phi.values.size(); ++i)
            dot += res.vectors[n][i] * (phi.values[i] / nrm) * h;
        rep.overlap_error.push_back(1.0 - std::abs(dot));
        rep.max_rel_error = std::max(rep.max_rel_error, rep.rel_error.back());
        rep.max_overlap_error = std::max(rep.max_overlap_error, rep.overlap_error.back());
    }
    return rep;
}

struct ConvergenceTable {
    std::vector<int> n_points;
    std::vector<double> max_rel_error;
    std::vector<double> ratios; // error[i] / error[i+1], one per refinement step
    double fitted_order = 0.0;  // mean log2 of the ratios
    bool truncation_dominated = false;
};

// Grid-refinement study of eigenvalue error for the k lowest levels. The grid
// extent follows the default rule unless extent_lengths (in oscillator
// lengths) is given; a run with 1.5x extent at the finest grid detects
// truncation-dominated error.
inline ConvergenceTable convergence_study(const PhysParams& p, const Sector& s,
                                          const std::vector<int>& n_points_list,
                                          int k, double extent_lengths = -1.0) {
    require_confined(s, "convergence_study");
    if (n_points_list.empty())
        throw std::invalid_argument("convergence_study: empty n_points list");
    for (std::size_t i = 0; i < n_points_list.size(); ++i) {
        if (n_points_list[i] < 64)
            throw std::invalid_argument("convergence_study: all n_points must be >= 64");
        if (i > 0 && n_points_list[i] <= n_points_list[i - 1])
            throw std::invalid_argument("convergence_study: n_points must ascend");
    }
    if (k < 1) throw std::invalid_argument("convergence_study: k must be >= 1");
    const UnitScale u = to_natural_units(p, std::abs(s.kx));
    const double lengths =
        extent_lengths > 0.0 ? extent_lengths : std::sqrt(2.0 * k + 1.0) + 6.0;
    const double ext = lengths * u.length;

    auto max_err = [&](int n, double extent) {
        const Grid1D grid(-extent, extent, n);
        const auto op = build_effective_1d(p, s, grid);
        const auto res = lowest_eigenpairs(op, k);
        double worst = 0.0;
        for (int m = 0; m < k; ++m) {
            const double exact = p.hbar * u.omega_c * (m + 0.5);
            worst = std::max(worst, std::abs(res.values[m] - exact) / exact);
        }
        return worst;
    };

    ConvergenceTable t;
    for (int n : n_points_list) {
        t.n_points.push_back(n);
        t.max_rel_error.push_back(max_err(n, ext));
    }
    for (std::size_t i = 0; i + 1 < t.max_rel_error.size(); ++i)
        t.ratios.push_back(t.max_rel_error[i] / t.max_rel_error[i + 1]);
    if (!t.ratios.empty()) {
        double s2 = 0.0;
        for (double r : t.ratios) s2 += std::log2(r);
        t.fitted_order = s2 / t.ratios.size();
    }
    const double base = t.max_rel_error.back();
    const double enlarged = max_err(n_points_list.back(), 1.5 * ext);
    t.truncation_dominated = enlarged < 0.5 * base;
    return t;
}

} // namespace qlandau
