#pragma once

/**
 * @file models.hpp
 * @brief The four wave problems built on the moment solvers.
 *
 *  - Hopf soliton    v = l0 + dl * phi((x - c t) / eps)
 *  - Hopf shock      w = h0 + dh * K((x - a t) / eps),  K' = theta
 *  - Elasticity, momentum + Hooke law            (u, sigma)
 *  - Elasticity, mass + momentum + Hooke law     (u, rho, sigma)
 *
 * In both elasticity systems every field shares one profile theta, which
 * satisfies the same moment conditions as the Hopf shock; only the jump
 * constants and the shock speed differ.
 */

#include "error.hpp"
#include "hermite.hpp"
#include "moments.hpp"
#include "solvers.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hermitewave {

/// Above this cond(A) results carry a warning.
inline constexpr double kIllConditionedWarning = 1e12;
/// Above this cond(A) the square system is rejected outright.
inline constexpr double kIllConditionedLimit = 1e16;

/// Initial guess for the nonlinear solve, indexed by Hermite index.
struct Seed {
    std::string name;
    Eigen::VectorXd dense;
};

/// Named presets:
///  "gaussian"  e_0, the soliton start
///  "K"         (0.8, 0, -0.5, 0, 0.2), the even shock branch
///  "K1"        (0.18, -0.74, 0.75, 0.15, -0.30), the asymmetric shock branch
inline Seed seed_preset(std::string_view name) {
    Seed s{std::string(name), {}};
    if (name == "gaussian") {
        s.dense = Eigen::VectorXd::Unit(1, 0);
    } else if (name == "K") {
        s.dense.resize(5);
        s.dense << 0.8, 0.0, -0.5, 0.0, 0.2;
    } else if (name == "K1") {
        s.dense.resize(5);
        s.dense << 0.18, -0.74, 0.75, 0.15, -0.30;
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown seed preset '" + std::string(name) + "' (gaussian|K|K1)");
    }
    return s;
}

inline Seed explicit_seed(Eigen::VectorXd dense) { return Seed{"explicit", std::move(dense)}; }

/// Restrict a seed to the basis; refuses seeds that put weight outside it.
inline Eigen::VectorXd seed_for_basis(const Seed& seed, const BasisSpec& basis) {
    for (int j = 0; j < seed.dense.size(); ++j) {
        if (seed.dense[j] != 0.0 && !basis.contains(j)) {
            throw Error(ErrorCode::InvalidArgument, "seed '" + seed.name + "' has weight on h_" + std::to_string(j) +
                                                        ", which is outside the basis");
        }
    }
    return CoeffVec::from_dense(basis, seed.dense).c;
}

struct SolitonAnsatz {
    double l0 = 0.0;
    double dl = 1.0;
    double c = 0.0;
    CoeffVec phi;
};

struct ShockAnsatz {
    double h0 = 0.0;
    double dh = 1.0;
    double a = 0.5;
    CoeffVec theta;
};

struct SolitonResult {
    SolitonAnsatz ansatz;
    SolveReport report;
    std::string seed_name;
    std::vector<std::string> warnings;
};

struct ShockResult {
    ShockAnsatz ansatz;
    SolveReport report;
    std::string seed_name;
    std::vector<std::string> warnings;
};

namespace detail {

inline MomentTables square_tables(const MomentTables& full, SystemKind kind, std::vector<std::string>& warnings) {
    const auto orders = square_system_orders(full.basis, kind);
    require(full.max_order() >= orders.back(), ErrorCode::InvalidArgument,
            "tables stop at k = " + std::to_string(full.max_order()) + " but the system needs k = " +
                std::to_string(orders.back()));
    MomentTables sq = full.select(orders);
    // On an even basis the odd shock rows of A vanish, so conditioning is
    // measured on the basis moment matrix (the soliton rows) instead.
    if (kind == SystemKind::Shock && full.basis.parity == Parity::Even) {
        sq.cond_A = condition_number(full.select(square_system_orders(full.basis, SystemKind::Soliton)).A);
    }
    if (!(sq.cond_A <= kIllConditionedLimit)) {
        throw Error(ErrorCode::IllConditioned, "cond(A) = " + std::to_string(sq.cond_A) + " exceeds " +
                                                   std::to_string(kIllConditionedLimit) + "; the basis is too large");
    }
    if (sq.cond_A > kIllConditionedWarning) {
        warnings.push_back("ill-conditioned moment matrix: cond(A) = " + std::to_string(sq.cond_A) +
                           "; coefficients may be inaccurate");
    }
    return sq;
}

} // namespace detail

/// Soliton profile from the fixed-point sweep; c = l0 + dl * |phi|^2 / 2.
inline SolitonResult solve_hopf_soliton(const MomentTables& full, double l0, double dl, const Seed& seed,
                                        const SolverOptions& opts = SolverOptions::fixed_point_defaults()) {
    require(dl != 0.0 && std::isfinite(dl), ErrorCode::InvalidArgument, "soliton amplitude dl must be nonzero");
    require(std::isfinite(l0), ErrorCode::InvalidArgument, "l0 must be finite");
    SolitonResult res;
    res.seed_name = seed.name;
    const MomentTables sq = detail::square_tables(full, SystemKind::Soliton, res.warnings);
    res.report = fixed_point_solve(sq, seed_for_basis(seed, full.basis), opts);
    if (!res.report.converged) {
        throw Error(ErrorCode::NotConverged, "fixed-point iteration stopped after " +
                                                 std::to_string(res.report.iterations) + " sweeps with step " +
                                                 std::to_string(res.report.residual_inf));
    }
    res.ansatz.l0 = l0;
    res.ansatz.dl = dl;
    res.ansatz.phi = CoeffVec(full.basis, res.report.x);
    res.ansatz.c = l0 + dl * 0.5 * res.report.x.squaredNorm();
    return res;
}

inline SolitonResult solve_hopf_soliton(const BasisSpec& basis, double l0, double dl, const Seed& seed,
                                        const SolverOptions& opts = SolverOptions::fixed_point_defaults()) {
    return solve_hopf_soliton(assemble_moment_tables(basis, basis.n_max), l0, dl, seed, opts);
}

/// Shock profile from Newton; a = h0 + dh / 2. The k = 0 equation reads
/// m_0 = m_0^2, so the root with m_0 = 0 is rejected.
inline ShockResult solve_hopf_shock(const MomentTables& full, double h0, double dh, const Seed& seed,
                                    const SolverOptions& opts = SolverOptions::newton_defaults()) {
    require(dh != 0.0 && std::isfinite(dh), ErrorCode::InvalidArgument, "shock jump dh must be nonzero");
    require(std::isfinite(h0), ErrorCode::InvalidArgument, "h0 must be finite");
    ShockResult res;
    res.seed_name = seed.name;
    const MomentTables sq = detail::square_tables(full, SystemKind::Shock, res.warnings);
    res.report = newton_solve(sq, seed_for_basis(seed, full.basis), opts);
    if (!res.report.converged) {
        throw Error(ErrorCode::NotConverged, "Newton stopped after " + std::to_string(res.report.iterations) +
                                                 " steps with scaled residual " +
                                                 std::to_string(res.report.residual_inf));
    }
    const double m0 = (sq.A.row(sq.row_of(0)) * res.report.x)(0);
    if (std::abs(m0 - 1.0) > 1e-8) {
        throw Error(ErrorCode::DegenerateRoot, "Newton reached a root with total mass " + std::to_string(m0) +
                                                   " instead of 1; try another seed");
    }
    res.ansatz.h0 = h0;
    res.ansatz.dh = dh;
    res.ansatz.a = h0 + 0.5 * dh;
    res.ansatz.theta = CoeffVec(full.basis, res.report.x);
    return res;
}

inline ShockResult solve_hopf_shock(const BasisSpec& basis, double h0, double dh, const Seed& seed,
                                    const SolverOptions& opts = SolverOptions::newton_defaults()) {
    return solve_hopf_shock(assemble_moment_tables(basis, basis.n_max), h0, dh, seed, opts);
}

enum class Branch { Plus, Minus };
enum class ElasticSystem { One, Two };

constexpr std::string_view to_string(Branch b) noexcept { return b == Branch::Plus ? "plus" : "minus"; }
constexpr std::string_view to_string(ElasticSystem s) noexcept { return s == ElasticSystem::One ? "one" : "two"; }

inline Branch parse_branch(std::string_view s) {
    if (s == "plus") return Branch::Plus;
    if (s == "minus") return Branch::Minus;
    throw Error(ErrorCode::InvalidArgument, "unknown branch '" + std::string(s) + "' (plus|minus)");
}

/// Background values, jumps and shock speed of an elasticity shock.
/// rho0/drho are absent for the constant-density system.
struct ElasticityParams {
    ElasticSystem system = ElasticSystem::One;
    Branch branch = Branch::Plus;
    double u0 = 0.0;
    double du = 0.0;
    std::optional<double> rho0;
    std::optional<double> drho;
    double sigma0 = 0.0; // plot offset only; never enters the profile equations
    double dsigma = 0.0;
    double k2 = 0.0;
    double v = 0.0;
};

/// dsigma^2 - (u0 + du/2) du dsigma - k2 du^2.
inline double elasticity1_quadratic(const ElasticityParams& p) {
    return p.dsigma * p.dsigma - (p.u0 + 0.5 * p.du) * p.du * p.dsigma - p.k2 * p.du * p.du;
}

/// rho0 du^2 (rho0 + drho) + dsigma drho.
inline double elasticity2_mass_momentum(const ElasticityParams& p) {
    return *p.rho0 * p.du * p.du * (*p.rho0 + *p.drho) + p.dsigma * *p.drho;
}

/// dsigma (rho0 + drho/2) + k2 drho.
inline double elasticity2_hooke(const ElasticityParams& p) {
    return p.dsigma * (*p.rho0 + 0.5 * *p.drho) + p.k2 * *p.drho;
}

/// v = u0 + du/2 - k2 du / dsigma, the speed read off the Hooke-law k = 0 row.
inline double elasticity2_velocity_via_stress(const ElasticityParams& p) {
    return p.u0 + 0.5 * p.du - p.k2 * p.du / p.dsigma;
}

/// Jump constants for the momentum + Hooke system. dsigma is the root of the
/// quadratic above: dsigma = du (u0 + du/2)/2 +- |du| sqrt((u0 + du/2)^2 + 4 k2) / 2.
inline ElasticityParams elasticity1_params(double u0, double du, double sigma0, double k2, Branch branch) {
    require(du != 0.0 && std::isfinite(du), ErrorCode::InvalidArgument, "velocity jump du must be nonzero");
    require(k2 > 0.0 && std::isfinite(k2), ErrorCode::InvalidArgument, "Hooke modulus k2 must be positive");
    require(std::isfinite(u0) && std::isfinite(sigma0), ErrorCode::InvalidArgument, "u0 and sigma0 must be finite");
    const double mid = u0 + 0.5 * du;
    const double disc = mid * mid + 4.0 * k2;
    if (disc < 0.0) throw Error(ErrorCode::DegenerateParameters, "stress jump has no real root");
    const double sgn = branch == Branch::Plus ? 1.0 : -1.0;
    ElasticityParams p;
    p.system = ElasticSystem::One;
    p.branch = branch;
    p.u0 = u0;
    p.du = du;
    p.sigma0 = sigma0;
    p.k2 = k2;
    p.dsigma = 0.5 * du * mid + sgn * 0.5 * std::abs(du) * std::sqrt(disc);
    if (p.dsigma == 0.0) throw Error(ErrorCode::DegenerateParameters, "stress jump vanishes");
    p.v = 2.0 * u0 + du - p.dsigma / du;
    return p;
}

/// Jump constants for the mass + momentum + Hooke system:
///   drho = (-3/2 rho0^2 du^2 +- sqrt(rho0^4 du^4 / 4 + 4 k2 du^2 rho0^3)) / (rho0 du^2 - 2 k2)
///   dsigma = -2 k2 drho / (2 rho0 + drho)
///   v = u0 + du + rho0 du / drho
inline ElasticityParams elasticity2_params(double u0, double du, double rho0, double sigma0, double k2, Branch branch) {
    require(du != 0.0 && std::isfinite(du), ErrorCode::InvalidArgument, "velocity jump du must be nonzero");
    require(rho0 > 0.0 && std::isfinite(rho0), ErrorCode::InvalidArgument, "background density rho0 must be positive");
    require(k2 > 0.0 && std::isfinite(k2), ErrorCode::InvalidArgument, "Hooke modulus k2 must be positive");
    require(std::isfinite(u0) && std::isfinite(sigma0), ErrorCode::InvalidArgument, "u0 and sigma0 must be finite");
    const double du2 = du * du;
    const double denom = rho0 * du2 - 2.0 * k2;
    if (std::abs(denom) <= 1e-14 * (rho0 * du2 + 2.0 * k2)) {
        throw Error(ErrorCode::DegenerateParameters, "rho0 du^2 = 2 k2: the density jump is undefined");
    }
    const double disc = std::pow(rho0, 4) * du2 * du2 / 4.0 + 4.0 * k2 * du2 * std::pow(rho0, 3);
    if (disc < 0.0) throw Error(ErrorCode::DegenerateParameters, "density jump has no real root");
    const double sgn = branch == Branch::Plus ? 1.0 : -1.0;
    const double drho = (-1.5 * rho0 * rho0 * du2 + sgn * std::sqrt(disc)) / denom;
    if (drho == 0.0) throw Error(ErrorCode::DegenerateParameters, "density jump vanishes");
    if (2.0 * rho0 + drho == 0.0) throw Error(ErrorCode::DegenerateParameters, "2 rho0 + drho = 0");
    ElasticityParams p;
    p.system = ElasticSystem::Two;
    p.branch = branch;
    p.u0 = u0;
    p.du = du;
    p.rho0 = rho0;
    p.drho = drho;
    p.sigma0 = sigma0;
    p.k2 = k2;
    p.dsigma = -2.0 * k2 * drho / (2.0 * rho0 + drho);
    p.v = u0 + du + rho0 * du / drho;
    return p;
}

struct ElasticitySolution {
    ElasticityParams params;
    CoeffVec profile; // shared density of U, R and Sigma
    SolveReport report;
    std::string seed_name;
    std::vector<std::string> warnings;
};

namespace detail {

inline ElasticitySolution attach_profile(ElasticityParams params, const MomentTables& full, const Seed& seed,
                                         const SolverOptions& opts) {
    // The profile equations m_k = 2 m_k(theta K) do not involve the jumps.
    ShockResult shock = solve_hopf_shock(full, 0.0, 1.0, seed, opts);
    ElasticitySolution sol;
    sol.params = params;
    sol.profile = std::move(shock.ansatz.theta);
    sol.report = std::move(shock.report);
    sol.seed_name = std::move(shock.seed_name);
    sol.warnings = std::move(shock.warnings);
    return sol;
}

} // namespace detail

inline ElasticitySolution solve_elasticity1(const MomentTables& full, double u0, double du, double sigma0, double k2,
                                            Branch branch, const Seed& seed,
                                            const SolverOptions& opts = SolverOptions::newton_defaults()) {
    return detail::attach_profile(elasticity1_params(u0, du, sigma0, k2, branch), full, seed, opts);
}

inline ElasticitySolution solve_elasticity1(const BasisSpec& basis, double u0, double du, double sigma0, double k2,
                                            Branch branch, const Seed& seed,
                                            const SolverOptions& opts = SolverOptions::newton_defaults()) {
    return solve_elasticity1(assemble_moment_tables(basis, basis.n_max), u0, du, sigma0, k2, branch, seed, opts);
}

inline ElasticitySolution solve_elasticity2(const MomentTables& full, double u0, double du, double rho0, double sigma0,
                                            double k2, Branch branch, const Seed& seed,
                                            const SolverOptions& opts = SolverOptions::newton_defaults()) {
    return detail::attach_profile(elasticity2_params(u0, du, rho0, sigma0, k2, branch), full, seed, opts);
}

inline ElasticitySolution solve_elasticity2(const BasisSpec& basis, double u0, double du, double rho0, double sigma0,
                                            double k2, Branch branch, const Seed& seed,
                                            const SolverOptions& opts = SolverOptions::newton_defaults()) {
    return solve_elasticity2(assemble_moment_tables(basis, basis.n_max), u0, du, rho0, sigma0, k2, branch, seed, opts);
}

} // namespace hermitewave
