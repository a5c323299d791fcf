#pragma once

// Profile evaluation on a grid, and re-expansion of a translated profile.

#include "error.hpp"
#include "hermite.hpp"
#include "models.hpp"
#include "quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

namespace hermitewave {

/// Column-major table: columns[0] is "x", then one column per physical field.
struct ProfileTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> values; // values[col][row]

    std::size_t size() const noexcept { return values.empty() ? 0 : values.front().size(); }
};

namespace detail {

inline void check_grid(const std::vector<double>& grid, double eps) {
    require(eps > 0.0 && std::isfinite(eps), ErrorCode::InvalidArgument, "eps must be positive");
    require(!grid.empty(), ErrorCode::InvalidArgument, "grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        require(std::isfinite(grid[i]), ErrorCode::InvalidArgument, "grid has non-finite points");
        if (i > 0) require(grid[i] > grid[i - 1], ErrorCode::InvalidArgument, "grid must be strictly increasing");
    }
}

} // namespace detail

/// Uniform grid of count points on [lo, hi].
inline std::vector<double> uniform_grid(double lo, double hi, int count) {
    require(count >= 2 && hi > lo, ErrorCode::InvalidArgument, "grid needs hi > lo and at least two points");
    std::vector<double> g(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    g.back() = hi;
    return g;
}

/// v(t, x) = l0 + dl * phi((x - c t) / eps).
inline ProfileTable profile_eval(const SolitonAnsatz& s, const std::vector<double>& grid, double t, double eps) {
    detail::check_grid(grid, eps);
    ProfileTable tab{{"x", "v"}, {grid, {}}};
    tab.values[1].reserve(grid.size());
    for (double x : grid) tab.values[1].push_back(s.l0 + s.dl * s.phi.evaluate((x - s.c * t) / eps));
    return tab;
}

/// w(t, x) = h0 + dh * K((x - a t) / eps).
inline ProfileTable profile_eval(const ShockAnsatz& s, const std::vector<double>& grid, double t, double eps) {
    detail::check_grid(grid, eps);
    ProfileTable tab{{"x", "w"}, {grid, {}}};
    tab.values[1].reserve(grid.size());
    for (double x : grid) tab.values[1].push_back(s.h0 + s.dh * s.theta.antiderivative((x - s.a * t) / eps));
    return tab;
}

/// u, sigma (and rho) as background plus jump times K((x - v t) / eps).
inline ProfileTable profile_eval(const ElasticitySolution& e, const std::vector<double>& grid, double t, double eps) {
    detail::check_grid(grid, eps);
    const auto& p = e.params;
    const bool two = p.system == ElasticSystem::Two;
    ProfileTable tab;
    tab.columns = {"x", "u", "sigma"};
    if (two) tab.columns.push_back("rho");
    tab.values.assign(tab.columns.size(), {});
    tab.values[0] = grid;
    for (double x : grid) {
        const double K = e.profile.antiderivative((x - p.v * t) / eps);
        tab.values[1].push_back(p.u0 + p.du * K);
        tab.values[2].push_back(p.sigma0 + p.dsigma * K);
        if (two) tab.values[3].push_back(*p.rho0 + *p.drho * K);
    }
    return tab;
}

inline constexpr double kTranslationTolerance = 1e-8;

/// Coefficients of x -> phi(x + beta) on an all-parity basis n_max + pad,
/// with pad = 8, 16, 32, 64 tried in turn until the L2 re-expansion error
/// drops below tol.
inline CoeffVec translate_profile(const CoeffVec& phi, double beta, double tol = kTranslationTolerance) {
    require(std::isfinite(beta), ErrorCode::InvalidArgument, "shift must be finite");
    if (beta == 0.0) return phi;
    double err = 0.0;
    for (int pad : {8, 16, 32, 64}) {
        const int n = phi.basis.n_max + pad;
        const double L = domain_half_width(n, 0) + std::abs(beta);
        const SymmetricRule rule = make_symmetric_rule(L, 0.5);
        // Nodes and samples over the full line, both signs.
        std::vector<double> xs, ws, fs;
        for (std::size_t q = 0; q < rule.size(); ++q) {
            for (double s : {1.0, -1.0}) {
                xs.push_back(s * rule.nodes[q]);
                ws.push_back(rule.weights[q]);
                fs.push_back(phi.evaluate(s * rule.nodes[q] + beta));
            }
        }
        Eigen::VectorXd d = Eigen::VectorXd::Zero(n + 1);
        std::vector<std::vector<double>> H(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            H[i] = hermite_all(n, xs[i]);
            for (int m = 0; m <= n; ++m) d[m] += ws[i] * fs[i] * H[i][static_cast<std::size_t>(m)];
        }
        double e2 = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double g = 0.0;
            for (int m = 0; m <= n; ++m) g += d[m] * H[i][static_cast<std::size_t>(m)];
            e2 += ws[i] * (fs[i] - g) * (fs[i] - g);
        }
        err = std::sqrt(e2);
        if (err <= tol) return CoeffVec(BasisSpec{n, Parity::All}, d);
    }
    throw Error(ErrorCode::TruncationTooCoarse,
                "re-expansion error " + std::to_string(err) + " exceeds " + std::to_string(tol) + " after padding by 64");
}

} // namespace hermitewave
