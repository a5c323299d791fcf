#pragma once

// Orthonormal Hermite functions h_j(x) = H_j(x) exp(-x^2/2) / sqrt(2^j j! sqrt(pi)),
// their antiderivatives P_j(x) = int_{-inf}^x h_j, and finite expansions in them.

#include "error.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace hermitewave {

enum class Parity { All, Even, Odd };

constexpr std::string_view to_string(Parity p) noexcept {
    switch (p) {
    case Parity::All: return "all";
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    }
    return "all";
}

inline Parity parse_parity(std::string_view s) {
    if (s == "all") return Parity::All;
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw Error(ErrorCode::InvalidArgument, "unknown parity '" + std::string(s) + "' (expected all|even|odd)");
}

/// Which Hermite indices an expansion uses.
struct BasisSpec {
    int n_max = 0;
    Parity parity = Parity::All;

    bool contains(int j) const noexcept {
        if (j < 0 || j > n_max) return false;
        switch (parity) {
        case Parity::Even: return j % 2 == 0;
        case Parity::Odd: return j % 2 == 1;
        case Parity::All: return true;
        }
        return false;
    }

    std::vector<int> indices() const {
        std::vector<int> idx;
        for (int j = 0; j <= n_max; ++j)
            if (contains(j)) idx.push_back(j);
        return idx;
    }

    int dimension() const { return static_cast<int>(indices().size()); }

    /// Position of Hermite index j inside the coefficient vector, or -1.
    int position(int j) const noexcept {
        if (!contains(j)) return -1;
        return parity == Parity::All ? j : j / 2;
    }

    void validate() const {
        require(n_max >= 0, ErrorCode::InvalidArgument, "n_max must be non-negative");
        require(dimension() >= 1, ErrorCode::InvalidArgument,
                "basis has no indices (odd parity needs n_max >= 1)");
    }

    friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

namespace detail {

inline constexpr double kPiQuarterInv = 0.75112554446494248286; // pi^(-1/4)
inline constexpr double kPiQuarter = 1.33133536380038971279;    // pi^(1/4)
inline constexpr double kRescale = 1e100;

} // namespace detail

/// h_0(x) .. h_n(x) by the three-term recurrence. The polynomial part is
/// rescaled whenever it grows past 1e100 and the Gaussian is applied in log
/// space, so nothing overflows for large n or |x|. h_j(-x) = (-1)^j h_j(x)
/// holds bit-for-bit.
inline std::vector<double> hermite_all(int n, double x) {
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    double log_gauss = -0.5 * x * x;
    double prev = 0.0;
    double cur = detail::kPiQuarterInv;
    out[0] = cur * std::exp(log_gauss);
    for (int j = 0; j < n; ++j) {
        const double next = std::sqrt(2.0 / (j + 1)) * x * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > detail::kRescale) {
            cur /= detail::kRescale;
            prev /= detail::kRescale;
            log_gauss += std::log(detail::kRescale);
        }
        out[static_cast<std::size_t>(j) + 1] = cur * std::exp(log_gauss);
    }
    return out;
}

inline double hermite_eval(int j, double x) {
    require(j >= 0, ErrorCode::InvalidArgument, "Hermite index must be non-negative");
    return hermite_all(j, x).back();
}

/// P_0(x) .. P_n(x) given h_0(x) .. h_{n-1}(x).
inline std::vector<double> hermite_antideriv_all(int n, double x, const std::vector<double>& h) {
    std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
    p[0] = detail::kPiQuarter / std::numbers::sqrt2 * std::erfc(-x / std::numbers::sqrt2);
    if (n >= 1) p[1] = -std::numbers::sqrt2 * h[0];
    for (int j = 2; j <= n; ++j) {
        p[static_cast<std::size_t>(j)] = std::sqrt((j - 1.0) / j) * p[static_cast<std::size_t>(j) - 2] -
                                         std::sqrt(2.0 / j) * h[static_cast<std::size_t>(j) - 1];
    }
    return p;
}

/// Q_j(x) = P_j(x) - m_j / 2 with m_j = int_R h_j; Q_j has the parity of j + 1 exactly.
inline std::vector<double> hermite_antideriv_centered_all(int n, double x, const std::vector<double>& h) {
    std::vector<double> q(static_cast<std::size_t>(n) + 1, 0.0);
    q[0] = detail::kPiQuarter / std::numbers::sqrt2 * std::erf(x / std::numbers::sqrt2);
    if (n >= 1) q[1] = -std::numbers::sqrt2 * h[0];
    for (int j = 2; j <= n; ++j) {
        q[static_cast<std::size_t>(j)] = std::sqrt((j - 1.0) / j) * q[static_cast<std::size_t>(j) - 2] -
                                         std::sqrt(2.0 / j) * h[static_cast<std::size_t>(j) - 1];
    }
    return q;
}

inline std::vector<double> hermite_antideriv_all(int n, double x) {
    return hermite_antideriv_all(n, x, hermite_all(n, x));
}

/// P_j(x) = int_{-inf}^x h_j(y) dy.
inline double hermite_antideriv(int j, double x) {
    require(j >= 0, ErrorCode::InvalidArgument, "Hermite index must be non-negative");
    return hermite_antideriv_all(j, x).back();
}

/// int_R h_j = sqrt(2 pi) (-i)^j h_j(0); zero for odd j.
inline double hermite_integral(int j) {
    if (j % 2 != 0) return 0.0;
    const double sign = (j / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::sqrt(2.0 * std::numbers::pi) * hermite_all(j, 0.0).back();
}

/// Expansion sum_j c_j h_j over the indices of a basis.
struct CoeffVec {
    BasisSpec basis;
    Eigen::VectorXd c;

    CoeffVec() = default;
    CoeffVec(BasisSpec b, Eigen::VectorXd coeffs) : basis(b), c(std::move(coeffs)) {
        basis.validate();
        require(c.size() == basis.dimension(), ErrorCode::InvalidArgument,
                "coefficient count " + std::to_string(c.size()) + " does not match basis dimension " +
                    std::to_string(basis.dimension()));
    }

    static CoeffVec zero(BasisSpec b) { return CoeffVec(b, Eigen::VectorXd::Zero(b.dimension())); }

    /// Coefficient of h_j (zero outside the basis).
    double operator[](int j) const {
        const int pos = basis.position(j);
        return pos < 0 ? 0.0 : c[pos];
    }

    /// Coefficients indexed by Hermite index 0..n_max.
    Eigen::VectorXd dense() const {
        Eigen::VectorXd d = Eigen::VectorXd::Zero(basis.n_max + 1);
        for (int j : basis.indices()) d[j] = (*this)[j];
        return d;
    }

    static CoeffVec from_dense(BasisSpec b, const Eigen::VectorXd& d) {
        Eigen::VectorXd c(b.dimension());
        int pos = 0;
        for (int j : b.indices()) c[pos++] = j < d.size() ? d[j] : 0.0;
        return CoeffVec(b, std::move(c));
    }

    double evaluate(double x) const {
        const auto h = hermite_all(basis.n_max, x);
        double acc = 0.0;
        for (int j : basis.indices()) acc += (*this)[j] * h[static_cast<std::size_t>(j)];
        return acc;
    }

    /// int_{-inf}^x of the expansion.
    double antiderivative(double x) const {
        const auto p = hermite_antideriv_all(basis.n_max, x);
        double acc = 0.0;
        for (int j : basis.indices()) acc += (*this)[j] * p[static_cast<std::size_t>(j)];
        return acc;
    }

    /// int_R of the expansion.
    double mass() const {
        double acc = 0.0;
        for (int j : basis.indices()) acc += (*this)[j] * hermite_integral(j);
        return acc;
    }
};

/// Coefficients of psi' from psi = sum d_j h_j, by the ladder identity
/// h_j' = sqrt(j/2) h_{j-1} - sqrt((j+1)/2) h_{j+1}.
inline CoeffVec hermite_coeff_derivative(const CoeffVec& d) {
    const int n = d.basis.n_max + 1;
    Parity parity = Parity::All;
    if (d.basis.parity == Parity::Even) parity = Parity::Odd;
    if (d.basis.parity == Parity::Odd) parity = Parity::Even;
    const Eigen::VectorXd in = d.dense();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n + 1);
    for (int j = 0; j < in.size(); ++j) {
        if (in[j] == 0.0) continue;
        if (j >= 1) out[j - 1] += std::sqrt(j / 2.0) * in[j];
        out[j + 1] -= std::sqrt((j + 1) / 2.0) * in[j];
    }
    return CoeffVec::from_dense(BasisSpec{n, parity}, out);
}

/// psi^{(m)}(x) for m = 0..order.
inline std::vector<double> derivatives_at(const CoeffVec& psi, int order, double x) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    CoeffVec cur = psi;
    for (int m = 0; m <= order; ++m) {
        out.push_back(cur.evaluate(x));
        if (m < order) cur = hermite_coeff_derivative(cur);
    }
    return out;
}

} // namespace hermitewave
