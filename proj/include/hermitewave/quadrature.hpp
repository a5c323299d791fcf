#pragma once

// Composite Gauss-Legendre quadrature over [-L, L] for integrands built from
// Hermite functions, their antiderivatives and monomials.

#include "error.hpp"
#include "hermite.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace hermitewave {

inline constexpr int kGaussPoints = 20;

/// Half-line rule: nodes in (0, L], used as sum_i w_i (f(x_i) + f(-x_i)).
/// Pairing each node with its mirror makes odd integrands cancel exactly.
struct SymmetricRule {
    double half_width = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Panels of the given width tiling [0, L]. Layout is fixed by (L, width),
/// so results are reproducible bit for bit.
inline SymmetricRule make_symmetric_rule(double half_width, double panel_width) {
    require(half_width > 0.0 && panel_width > 0.0, ErrorCode::InvalidArgument, "quadrature widths must be positive");
    using Gauss = boost::math::quadrature::gauss<double, kGaussPoints>;
    const auto& abscissa = Gauss::abscissa();
    const auto& weight = Gauss::weights();
    const int panels = static_cast<int>(std::ceil(half_width / panel_width - 1e-12));
    const double h = half_width / panels;
    SymmetricRule rule;
    rule.half_width = half_width;
    rule.nodes.reserve(static_cast<std::size_t>(panels) * kGaussPoints);
    rule.weights.reserve(rule.nodes.capacity());
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * h;
        for (std::size_t i = 0; i < abscissa.size(); ++i) {
            // gauss<> stores the non-negative half of the rule; N is even so no node sits at 0.
            for (double s : {-1.0, 1.0}) {
                rule.nodes.push_back(mid + s * 0.5 * h * abscissa[i]);
                rule.weights.push_back(0.5 * h * weight[i]);
            }
        }
    }
    return rule;
}

/// L = max(12, sqrt(2 n_max + k_max) + 10): past the turning point of the
/// highest Hermite function, widened by the moment power.
inline double domain_half_width(int n_max, int k_max) {
    return std::max(12.0, std::sqrt(2.0 * n_max + k_max) + 10.0);
}

struct QuadratureSum {
    double value = 0.0;
    double magnitude = 0.0; // sum of |w f|, sets the rounding floor
};

inline QuadratureSum integrate_with_magnitude(const SymmetricRule& rule, const std::function<double(double)>& f) {
    QuadratureSum s;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i];
        const double a = f(x);
        const double b = f(-x);
        s.value += rule.weights[i] * (a + b);
        s.magnitude += rule.weights[i] * (std::abs(a) + std::abs(b));
    }
    return s;
}

inline double integrate(const SymmetricRule& rule, const std::function<double(double)>& f) {
    return integrate_with_magnitude(rule, f).value;
}

/// x^power * prod h_i(x) * prod P_j(x).
struct IntegrandSpec {
    int power = 0;
    std::vector<int> hermite;
    std::vector<int> antideriv;

    int max_index() const {
        int m = 0;
        for (int i : hermite) m = std::max(m, i);
        for (int j : antideriv) m = std::max(m, j);
        return m;
    }

    double operator()(double x) const {
        const int n = max_index();
        const auto h = hermite_all(n, x);
        double v = std::pow(x, power);
        for (int i : hermite) v *= h[static_cast<std::size_t>(i)];
        if (!antideriv.empty()) {
            const auto p = hermite_antideriv_all(n, x, h);
            for (int j : antideriv) v *= p[static_cast<std::size_t>(j)];
        }
        return v;
    }
};

/// Integral over R to absolute tolerance tol, halving the panel width until
/// two successive layouts agree. Agreement below the rounding floor
/// (1e-14 times the integral of |f|) also counts.
inline double quadrature_integral(const IntegrandSpec& f, double tol) {
    require(!f.hermite.empty(), ErrorCode::InvalidArgument, "integrand needs at least one Hermite factor to decay");
    require(f.power >= 0, ErrorCode::InvalidArgument, "monomial power must be non-negative");
    require(tol > 0.0, ErrorCode::InvalidArgument, "tolerance must be positive");
    const double L = domain_half_width(f.max_index(), f.power);
    const std::function<double(double)> fn = [&f](double x) { return f(x); };
    double width = 1.0;
    double prev = integrate(make_symmetric_rule(L, width), fn);
    for (int level = 0; level < 5; ++level) {
        width *= 0.5;
        const auto cur = integrate_with_magnitude(make_symmetric_rule(L, width), fn);
        if (std::abs(cur.value - prev) <= std::max(tol, 1e-14 * cur.magnitude)) return cur.value;
        prev = cur.value;
    }
    throw Error(ErrorCode::NumericalFailure, "quadrature did not reach tolerance " + std::to_string(tol));
}

} // namespace hermitewave
