#pragma once

/**
 * @file residual.hpp
 * @brief Moment deficits of each conservation law and their Laurent pairing.
 *
 * Substituting an ansatz into a conservation law and pairing with a test
 * function psi gives, after Taylor expansion of psi around the wave centre,
 *
 *   soliton:  sum_k D_k eps^{k+1} psi^{(k+1)}(ct) / k!
 *   shock:    sum_k D_k eps^k     psi^{(k)}(at)   / k!
 *
 * The achieved order p is the first eps-power whose deficit is nonzero.
 */

#include "error.hpp"
#include "hermite.hpp"
#include "laurent.hpp"
#include "models.hpp"
#include "moments.hpp"
#include "quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace hermitewave {

inline constexpr double kDeficitTolerance = 1e-8;

struct TestFunction {
    CoeffVec d;
    double center = 0.0;
};

struct DeficitSequence {
    std::string equation;
    std::vector<double> D;        // k = 0..k_max
    std::vector<double> scale;    // magnitude of the terms that cancel in D_k, at least 1
    std::vector<int> constrained; // orders the solved profile is meant to satisfy
    int offset = 0;               // D_k multiplies eps^(k + offset)
    double tol = kDeficitTolerance;
    int achieved_order = 0;
    bool order_is_lower_bound = false; // no nonzero deficit up to k_max
    bool diagnostic = false;           // reported only, never part of a pass/fail

    int k_max() const noexcept { return static_cast<int>(D.size()) - 1; }

    bool is_zero(int k) const {
        const auto i = static_cast<std::size_t>(k);
        return std::abs(D[i]) <= tol * scale[i];
    }

    bool constrained_ok() const {
        return std::all_of(constrained.begin(), constrained.end(), [this](int k) { return is_zero(k); });
    }

    /// Largest |D_k| / scale_k over the constrained orders.
    double worst_constrained() const {
        double w = 0.0;
        for (int k : constrained) w = std::max(w, std::abs(D[static_cast<std::size_t>(k)]) / scale[static_cast<std::size_t>(k)]);
        return w;
    }
};

namespace detail {

inline void finish(DeficitSequence& s) {
    s.order_is_lower_bound = true;
    s.achieved_order = s.k_max() + 1 + s.offset;
    for (int k = 0; k <= s.k_max(); ++k) {
        if (!s.is_zero(k)) {
            s.achieved_order = k + s.offset;
            s.order_is_lower_bound = false;
            break;
        }
    }
}

inline std::vector<int> range_orders(int last) {
    std::vector<int> ks;
    for (int k = 0; k <= last; ++k) ks.push_back(k);
    return ks;
}

/// m_k, r_k, g_k of a profile and the same forms taken on absolute values.
struct ProfileMoments {
    std::vector<double> m, r, g, m_abs, r_abs, g_abs;
};

inline ProfileMoments profile_moments(const CoeffVec& prof, const MomentTables& t, int k_max) {
    require(prof.basis == t.basis, ErrorCode::InvalidArgument, "profile and tables use different bases");
    require(k_max >= 0 && k_max <= t.max_order(), ErrorCode::InvalidArgument,
            "tables stop at k = " + std::to_string(t.max_order()) + ", k_max = " + std::to_string(k_max));
    const Eigen::VectorXd& c = prof.c;
    const Eigen::VectorXd ca = c.cwiseAbs();
    ProfileMoments pm;
    for (int k = 0; k <= k_max; ++k) {
        const int row = t.row_of(k);
        require(row >= 0, ErrorCode::InvalidArgument, "moment order " + std::to_string(k) + " not assembled");
        const auto& S = t.S[static_cast<std::size_t>(row)];
        const auto& N = t.N[static_cast<std::size_t>(row)];
        pm.m.push_back(t.A.row(row).dot(c));
        pm.m_abs.push_back(t.A.row(row).cwiseAbs().dot(ca));
        pm.r.push_back(c.dot(S * c));
        pm.r_abs.push_back(ca.dot(S.cwiseAbs() * ca));
        pm.g.push_back(0.5 * c.dot(N * c));
        pm.g_abs.push_back(0.5 * ca.dot(N.cwiseAbs() * ca));
    }
    return pm;
}

inline std::vector<int> shock_constrained(const BasisSpec& b) { return range_orders(b.n_max); }

} // namespace detail

/// D_k = dl (c - l0) m_k - dl^2 g_k, offset 1.
inline DeficitSequence soliton_deficits(const SolitonAnsatz& s, const MomentTables& t, int k_max,
                                        double tol = kDeficitTolerance) {
    const auto pm = detail::profile_moments(s.phi, t, k_max);
    DeficitSequence out;
    out.equation = "hopf";
    out.offset = 1;
    out.tol = tol;
    const double lin = s.dl * (s.c - s.l0);
    const double quad = s.dl * s.dl;
    for (int k = 0; k <= k_max; ++k) {
        const auto i = static_cast<std::size_t>(k);
        out.D.push_back(lin * pm.m[i] - quad * pm.g[i]);
        out.scale.push_back(std::max(1.0, std::abs(lin) * pm.m_abs[i] + quad * pm.g_abs[i]));
    }
    // An even profile makes every odd-k deficit vanish, including n_max + 1.
    const int last = s.phi.basis.parity == Parity::Even ? s.phi.basis.n_max + 1 : s.phi.basis.n_max;
    for (int k = 0; k <= std::min(last, k_max); ++k) out.constrained.push_back(k);
    detail::finish(out);
    return out;
}

/// D_k = dh^2 r_k - dh (a - h0) m_k, offset 0.
inline DeficitSequence shock_deficits(const ShockAnsatz& s, const MomentTables& t, int k_max,
                                      double tol = kDeficitTolerance) {
    const auto pm = detail::profile_moments(s.theta, t, k_max);
    DeficitSequence out;
    out.equation = "hopf";
    out.offset = 0;
    out.tol = tol;
    const double lin = s.dh * (s.a - s.h0);
    const double quad = s.dh * s.dh;
    for (int k = 0; k <= k_max; ++k) {
        const auto i = static_cast<std::size_t>(k);
        out.D.push_back(quad * pm.r[i] - lin * pm.m[i]);
        out.scale.push_back(std::max(1.0, quad * pm.r_abs[i] + std::abs(lin) * pm.m_abs[i]));
    }
    for (int k : detail::shock_constrained(s.theta.basis))
        if (k <= k_max) out.constrained.push_back(k);
    detail::finish(out);
    return out;
}

/// q_k = int x^k theta K^2 for k = 0..k_max, with its absolute-value form.
/// Two panel widths must agree or NumericalFailure is raised.
inline std::pair<std::vector<double>, std::vector<double>> cubic_moments(const CoeffVec& theta, int k_max) {
    const double L = domain_half_width(theta.basis.n_max, k_max);
    const auto pass = [&](double width) {
        const SymmetricRule rule = make_symmetric_rule(L, width);
        std::vector<double> q(static_cast<std::size_t>(k_max) + 1, 0.0), qa(q.size(), 0.0);
        for (std::size_t i = 0; i < rule.size(); ++i) {
            for (double sgn : {1.0, -1.0}) {
                const double x = sgn * rule.nodes[i];
                const double K = theta.antiderivative(x);
                const double f = theta.evaluate(x) * K * K;
                double w = rule.weights[i];
                for (std::size_t k = 0; k < q.size(); ++k) {
                    q[k] += w * f;
                    qa[k] += std::abs(w * f);
                    w *= x;
                }
            }
        }
        return std::make_pair(q, qa);
    };
    const auto coarse = pass(0.5);
    auto fine = pass(0.25);
    for (std::size_t k = 0; k < fine.first.size(); ++k) {
        if (std::abs(coarse.first[k] - fine.first[k]) > 1e-10 * std::max(1.0, fine.second[k])) {
            throw Error(ErrorCode::NumericalFailure, "cubic moment quadrature did not converge at k = " + std::to_string(k));
        }
    }
    return fine;
}

/// One sequence per conservation law: momentum and Hooke for system one;
/// mass, momentum and Hooke for system two, plus the diagnostic
/// m_k - 3 q_k (reported, never constrained).
inline std::vector<DeficitSequence> elasticity_deficits(const ElasticityParams& p, const CoeffVec& theta,
                                                        const MomentTables& t, int k_max,
                                                        double tol = kDeficitTolerance) {
    const auto pm = detail::profile_moments(theta, t, k_max);
    const auto constrained = detail::shock_constrained(theta.basis);
    const auto make = [&](std::string name) {
        DeficitSequence s;
        s.equation = std::move(name);
        s.tol = tol;
        for (int k : constrained)
            if (k <= k_max) s.constrained.push_back(k);
        return s;
    };
    // alpha m_k + beta r_k + gamma q_k
    const auto fill = [&](DeficitSequence& s, double alpha, double beta, double gamma, const std::vector<double>* q,
                          const std::vector<double>* qa) {
        for (int k = 0; k <= k_max; ++k) {
            const auto i = static_cast<std::size_t>(k);
            double d = alpha * pm.m[i] + beta * pm.r[i];
            double sc = std::abs(alpha) * pm.m_abs[i] + std::abs(beta) * pm.r_abs[i];
            if (q) {
                d += gamma * (*q)[i];
                sc += std::abs(gamma) * (*qa)[i];
            }
            s.D.push_back(d);
            s.scale.push_back(std::max(1.0, sc));
        }
        detail::finish(s);
    };

    const double u0 = p.u0, du = p.du, ds = p.dsigma, v = p.v, k2 = p.k2;
    std::vector<DeficitSequence> out;
    if (p.system == ElasticSystem::One) {
        DeficitSequence mom = make("momentum");
        fill(mom, 2.0 * u0 * du - v * du - ds, 2.0 * du * du, 0.0, nullptr, nullptr);
        out.push_back(std::move(mom));
    } else {
        require(p.rho0.has_value() && p.drho.has_value(), ErrorCode::InvalidArgument,
                "system two needs rho0 and drho");
        const double r0 = *p.rho0, dr = *p.drho;
        const auto [q, qa] = cubic_moments(theta, k_max);

        DeficitSequence mass = make("mass");
        fill(mass, u0 * dr - v * dr + r0 * du, 2.0 * dr * du, 0.0, nullptr, nullptr);
        out.push_back(std::move(mass));

        // For k >= 1 the cubic term makes this row gamma (q_k - m_k / 3) on a
        // solved profile; only the k = 0 row is a constraint.
        DeficitSequence mom = make("momentum");
        mom.constrained = {0};
        const double alpha = -v * dr * u0 - v * du * r0 + dr * u0 * u0 + 2.0 * du * r0 * u0 - ds;
        const double beta = -2.0 * v * dr * du + 4.0 * dr * u0 * du + 2.0 * r0 * du * du;
        const double gamma = 3.0 * dr * du * du;
        fill(mom, alpha, beta, gamma, &q, &qa);
        out.push_back(std::move(mom));

        DeficitSequence diag;
        diag.equation = "density_identity";
        diag.tol = tol;
        diag.diagnostic = true;
        for (int k = 0; k <= k_max; ++k) {
            const auto i = static_cast<std::size_t>(k);
            diag.D.push_back(pm.m[i] - 3.0 * q[i]);
            diag.scale.push_back(std::max(1.0, pm.m_abs[i] + 3.0 * qa[i]));
        }
        detail::finish(diag);
        out.push_back(std::move(diag));
    }
    DeficitSequence hooke = make("hooke");
    fill(hooke, u0 * ds - v * ds - k2 * du, du * ds, 0.0, nullptr, nullptr);
    out.push_back(std::move(hooke));
    return out;
}

/// Laurent series sum_k D_k psi^{(k+offset)}(center) / k! eps^{k+offset},
/// known up to eps^{eps_trunc} (or up to the last deficit, if sooner).
/// Deficits that count as zero enter as exact zeros.
inline LaurentSeries pair_with_test_function(const DeficitSequence& def, const TestFunction& psi, int eps_trunc) {
    require(eps_trunc > def.offset, ErrorCode::InvalidArgument, "truncation order must exceed the first eps-power");
    const int trunc = std::min(eps_trunc, def.k_max() + def.offset + 1);
    const int kmax = trunc - 1 - def.offset;
    const auto deriv = derivatives_at(psi.d, kmax + def.offset, psi.center);
    std::vector<double> coeffs;
    double fact = 1.0;
    bool any = false;
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) fact *= k;
        const double d = def.is_zero(k) ? 0.0 : def.D[static_cast<std::size_t>(k)];
        const double c = d * deriv[static_cast<std::size_t>(k + def.offset)] / fact;
        any = any || c != 0.0;
        coeffs.push_back(c);
    }
    if (!any) return LaurentSeries::zero(trunc);
    return LaurentSeries::from_coefficients(def.offset, std::move(coeffs), trunc);
}

} // namespace hermitewave
