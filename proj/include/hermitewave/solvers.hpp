#pragma once

/**
 * @file solvers.hpp
 * @brief Nonlinear solvers for the square moment systems.
 *
 * Soliton profile:  A x = N(x),  N(x)_k = x^T N(k) x / |x|^2,
 *                   solved by the fixed-point sweep x <- A^{-1} N(x).
 * Shock profile:    P(c) = A c - 2 [c^T S(k) c]_k = 0,
 *                   solved by (optionally damped) Newton with the exact Jacobian
 *                   J(c) row k = A(k,:) - 2 c^T (S(k) + S(k)^T).
 *
 * Both take square tables (see square_system_orders) and are deterministic.
 */

#include "error.hpp"
#include "linalg.hpp"
#include "moments.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace hermitewave {

struct SolverOptions {
    double tol = 1e-12;
    int max_iter = 10000;
    double damping = 1.0;   // Newton step scale in (0, 1]
    int max_halvings = 30;  // Newton backtracking when |P| grows
    double divergence_bound = 1e6;

    static SolverOptions fixed_point_defaults() { return {}; }
    static SolverOptions newton_defaults() {
        SolverOptions o;
        o.max_iter = 200;
        return o;
    }
};

struct SolveReport {
    std::string method;
    Eigen::VectorXd x;
    Eigen::VectorXd seed;
    int iterations = 0;
    double residual_inf = 0.0;  // final step (fixed point) or scaled |P| (Newton)
    double equation_residual = 0.0; // |A x - N(x)|_inf or |P(x)|_inf, unscaled
    bool converged = false;
    double cond = 0.0;          // condition number of the basis moment matrix
    std::vector<int> orders;    // moment orders of the equations solved
};

/// N(x)_k = x^T N(k) x / |x|^2.
inline Eigen::VectorXd soliton_map(const MomentTables& t, const Eigen::VectorXd& x) {
    const double nrm2 = x.squaredNorm();
    if (nrm2 == 0.0) throw Error(ErrorCode::DegenerateIterate, "the soliton map is undefined at x = 0");
    Eigen::VectorXd out(t.rows());
    for (int k = 0; k < t.rows(); ++k) out[k] = x.dot(t.N[static_cast<std::size_t>(k)] * x) / nrm2;
    return out;
}

/// P(c) = A c - 2 [c^T S(k) c]_k.
inline Eigen::VectorXd shock_residual(const MomentTables& t, const Eigen::VectorXd& c) {
    return t.A * c - 2.0 * t.shock_moments(c);
}

inline Eigen::MatrixXd shock_jacobian(const MomentTables& t, const Eigen::VectorXd& c) {
    Eigen::MatrixXd J = t.A;
    for (int k = 0; k < t.rows(); ++k) {
        const auto& Sk = t.S[static_cast<std::size_t>(k)];
        J.row(k) -= 2.0 * ((Sk + Sk.transpose()) * c).transpose();
    }
    return J;
}

namespace detail {

// Per-row magnitude of the terms that cancel in P(c).
inline double shock_scaled_residual(const MomentTables& t, const Eigen::VectorXd& c, const Eigen::VectorXd& P) {
    const Eigen::VectorXd lin = (t.A.cwiseAbs() * c.cwiseAbs());
    const Eigen::VectorXd quad = 2.0 * t.shock_moments(c).cwiseAbs();
    double worst = 0.0;
    for (int k = 0; k < P.size(); ++k) worst = std::max(worst, std::abs(P[k]) / std::max(1.0, lin[k] + quad[k]));
    return worst;
}

inline void require_square(const MomentTables& t, const Eigen::VectorXd& x0) {
    require(t.square(), ErrorCode::InvalidArgument,
            "solver needs square tables (" + std::to_string(t.rows()) + " rows, " + std::to_string(t.dim()) +
                " unknowns); select the system orders first");
    require(x0.size() == t.dim(), ErrorCode::InvalidArgument, "initial guess has the wrong length");
    require(x0.allFinite(), ErrorCode::InvalidArgument, "initial guess has non-finite entries");
}

} // namespace detail

/// x_{m+1} = A^{-1} N(x_m) until |x_{m+1} - x_m|_inf < tol.
/// Returns an unconverged report (converged = false) when max_iter runs out.
inline SolveReport fixed_point_solve(const MomentTables& t, const Eigen::VectorXd& x0,
                                     const SolverOptions& opts = SolverOptions::fixed_point_defaults()) {
    detail::require_square(t, x0);
    if (x0.squaredNorm() == 0.0) throw Error(ErrorCode::DegenerateIterate, "initial guess is the zero vector");
    const LuFactor lu(t.A);
    SolveReport rep;
    rep.method = "fixed_point";
    rep.seed = x0;
    rep.cond = t.cond_A;
    rep.orders = t.orders;
    Eigen::VectorXd x = x0;
    double step = std::numeric_limits<double>::infinity();
    for (int m = 0; m < opts.max_iter; ++m) {
        Eigen::VectorXd next = lu.solve(soliton_map(t, x));
        if (!next.allFinite()) throw Error(ErrorCode::Diverged, "fixed-point iterate became non-finite");
        if (next.squaredNorm() == 0.0) throw Error(ErrorCode::DegenerateIterate, "fixed-point iterate collapsed to zero");
        step = (next - x).lpNorm<Eigen::Infinity>();
        x = std::move(next);
        rep.iterations = m + 1;
        if (step < opts.tol) {
            rep.converged = true;
            break;
        }
    }
    rep.x = x;
    rep.residual_inf = step;
    rep.equation_residual = (t.A * x - soliton_map(t, x)).lpNorm<Eigen::Infinity>();
    return rep;
}

/// Newton on P(c) = 0 with step halving while |P| grows. Converged means
/// every row of P is below tol relative to the magnitude of its terms.
inline SolveReport newton_solve(const MomentTables& t, const Eigen::VectorXd& x0,
                                const SolverOptions& opts = SolverOptions::newton_defaults()) {
    detail::require_square(t, x0);
    require(opts.damping > 0.0 && opts.damping <= 1.0, ErrorCode::InvalidArgument, "damping must lie in (0, 1]");
    SolveReport rep;
    rep.method = "newton";
    rep.seed = x0;
    rep.cond = t.cond_A;
    rep.orders = t.orders;
    Eigen::VectorXd x = x0;
    Eigen::VectorXd P = shock_residual(t, x);
    double scaled = detail::shock_scaled_residual(t, x, P);
    int it = 0;
    while (!(scaled < opts.tol) && it < opts.max_iter) {
        const LuFactor lu(shock_jacobian(t, x), ErrorCode::SingularJacobian);
        const Eigen::VectorXd dx = lu.solve(P);
        double step = opts.damping;
        Eigen::VectorXd trial = x - step * dx;
        Eigen::VectorXd Pt = shock_residual(t, trial);
        const double pnorm = P.lpNorm<Eigen::Infinity>();
        for (int h = 0; h < opts.max_halvings && !(Pt.lpNorm<Eigen::Infinity>() <= pnorm); ++h) {
            step *= 0.5;
            trial = x - step * dx;
            Pt = shock_residual(t, trial);
        }
        x = std::move(trial);
        P = std::move(Pt);
        ++it;
        if (!x.allFinite() || x.norm() > opts.divergence_bound) {
            throw Error(ErrorCode::Diverged, "Newton iterate left the ball of radius " + std::to_string(opts.divergence_bound));
        }
        scaled = detail::shock_scaled_residual(t, x, P);
    }
    rep.x = x;
    rep.iterations = it;
    rep.residual_inf = scaled;
    rep.equation_residual = P.lpNorm<Eigen::Infinity>();
    rep.converged = scaled < opts.tol;
    return rep;
}

} // namespace hermitewave
