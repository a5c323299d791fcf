#pragma once

/**
 * @file laurent.hpp
 * @brief Truncated Laurent series in a formal parameter eps.
 *
 * A LaurentSeries stores the coefficients of eps^k for
 * valuation <= k < trunc_order. Coefficients at or beyond trunc_order are
 * unknown, not zero, and every operation propagates the tightest truncation
 * that the inputs justify. The valuation is the exponent of the leading
 * nonzero coefficient; the non-Archimedean norm is exp(-valuation).
 *
 * @code
 * using hermitewave::LaurentSeries;
 * auto x = LaurentSeries::from_coefficients(1, {1.0, 1.0}, 8); // eps + eps^2
 * auto y = LaurentSeries::monomial(-1.0, 1, 8);                // -eps
 * auto s = x + y;                                              // eps^2
 * // valuation(s) == 2, norm(s) == exp(-2)
 * @endcode
 */

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hermitewave {

class LaurentSeries {
public:
    /// Valuation of the zero series, and trunc_order of an exactly known series.
    static constexpr int kInfinite = std::numeric_limits<int>::max();

    /// Relative magnitude below which a leading coefficient counts as zero.
    static constexpr double kZeroThreshold = 1e-14;

    /// Exact zero.
    LaurentSeries() = default;

    static LaurentSeries zero(int trunc_order = kInfinite) {
        LaurentSeries s;
        s.trunc_order_ = trunc_order;
        return s;
    }

    /// coeffs[i] multiplies eps^(first_exponent + i). Exponents in
    /// [first_exponent + coeffs.size(), trunc_order) are known zeros.
    static LaurentSeries from_coefficients(int first_exponent, std::vector<double> coeffs,
                                           int trunc_order) {
        require(trunc_order != kInfinite, ErrorCode::InvalidArgument,
                "a nonzero Laurent series needs a finite truncation order");
        const auto last = static_cast<std::int64_t>(first_exponent) +
                          static_cast<std::int64_t>(coeffs.size());
        require(last <= trunc_order, ErrorCode::InvalidArgument,
                "coefficients extend past the truncation order");
        for (double c : coeffs)
            require(std::isfinite(c), ErrorCode::InvalidArgument, "non-finite Laurent coefficient");
        coeffs.resize(static_cast<std::size_t>(trunc_order - first_exponent), 0.0);
        LaurentSeries s;
        s.valuation_ = first_exponent;
        s.coeffs_ = std::move(coeffs);
        s.trunc_order_ = trunc_order;
        s.normalize();
        return s;
    }

    static LaurentSeries monomial(double coeff, int exponent, int trunc_order) {
        return from_coefficients(exponent, {coeff}, trunc_order);
    }

    static LaurentSeries one(int trunc_order) { return monomial(1.0, 0, trunc_order); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int valuation() const noexcept { return valuation_; }
    int trunc_order() const noexcept { return trunc_order_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of eps^exponent; throws when the exponent is past the truncation.
    double coefficient(int exponent) const {
        require(exponent < trunc_order_, ErrorCode::InvalidArgument,
                "coefficient of eps^" + std::to_string(exponent) + " is beyond the truncation order " +
                    std::to_string(trunc_order_));
        if (is_zero() || exponent < valuation_) return 0.0;
        return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
    }

    double norm() const noexcept { return is_zero() ? 0.0 : std::exp(-static_cast<double>(valuation_)); }

    friend LaurentSeries operator-(const LaurentSeries& a) {
        LaurentSeries r = a;
        for (double& c : r.coeffs_) c = -c;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        const int trunc = std::min(a.trunc_order_, b.trunc_order_);
        if (a.is_zero() && b.is_zero()) return zero(trunc);
        if (a.is_zero()) return b.truncated(trunc);
        if (b.is_zero()) return a.truncated(trunc);
        const int start = std::min(a.valuation_, b.valuation_);
        if (start >= trunc) return zero(trunc);
        std::vector<double> sum(static_cast<std::size_t>(trunc - start), 0.0);
        for (int e = start; e < trunc; ++e) {
            sum[static_cast<std::size_t>(e - start)] = a.coefficient(e) + b.coefficient(e);
        }
        return from_coefficients(start, std::move(sum), trunc);
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.is_zero() || b.is_zero()) {
            // O(eps^ta) * eps^vb (...) = O(eps^(ta + vb)).
            const int bound_a = a.is_zero() ? saturating_add(a.trunc_order_, b.lower_bound())
                                            : kInfinite;
            const int bound_b = b.is_zero() ? saturating_add(b.trunc_order_, a.lower_bound())
                                            : kInfinite;
            return zero(std::min(bound_a, bound_b));
        }
        const int val = a.valuation_ + b.valuation_;
        const std::size_t known = std::min(a.coeffs_.size(), b.coeffs_.size());
        std::vector<double> prod(known, 0.0);
        for (std::size_t n = 0; n < known; ++n) {
            double acc = 0.0;
            for (std::size_t i = 0; i <= n; ++i) acc += a.coeffs_[i] * b.coeffs_[n - i];
            prod[n] = acc;
        }
        return from_coefficients(val, std::move(prod), val + static_cast<int>(known));
    }

    friend LaurentSeries inverse(const LaurentSeries& a) {
        if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero Laurent series");
        const std::size_t known = a.coeffs_.size();
        std::vector<double> inv(known, 0.0);
        const double lead = a.coeffs_[0];
        inv[0] = 1.0 / lead;
        for (std::size_t n = 1; n < known; ++n) {
            double acc = 0.0;
            for (std::size_t i = 1; i <= n; ++i) acc += a.coeffs_[i] * inv[n - i];
            inv[n] = -acc / lead;
        }
        return from_coefficients(-a.valuation_, std::move(inv), -a.valuation_ + static_cast<int>(known));
    }

    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * inverse(b); }

    /// Scale by a real number.
    friend LaurentSeries operator*(double s, const LaurentSeries& a) {
        if (a.is_zero()) return a;
        if (s == 0.0) return zero(a.trunc_order_);
        std::vector<double> c(a.coeffs_);
        for (double& x : c) x *= s;
        return from_coefficients(a.valuation_, std::move(c), a.trunc_order_);
    }

    /// Drop everything at or beyond the new (smaller) truncation order.
    LaurentSeries truncated(int trunc_order) const {
        if (trunc_order >= trunc_order_) return *this;
        if (is_zero() || trunc_order <= valuation_) return zero(trunc_order);
        std::vector<double> c(coeffs_.begin(), coeffs_.begin() + (trunc_order - valuation_));
        return from_coefficients(valuation_, std::move(c), trunc_order);
    }

private:
    static int saturating_add(int x, int y) {
        const std::int64_t s = static_cast<std::int64_t>(x) + y;
        if (x == kInfinite || y == kInfinite || s >= kInfinite) return kInfinite;
        return static_cast<int>(std::max<std::int64_t>(s, std::numeric_limits<int>::min() + 1));
    }

    // Smallest exponent that may carry a nonzero coefficient.
    int lower_bound() const noexcept { return is_zero() ? trunc_order_ : valuation_; }

    void normalize() {
        double scale = 0.0;
        for (double c : coeffs_) scale = std::max(scale, std::abs(c));
        const double cutoff = kZeroThreshold * scale;
        std::size_t lead = 0;
        while (lead < coeffs_.size() && (coeffs_[lead] == 0.0 || std::abs(coeffs_[lead]) <= cutoff)) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            valuation_ = kInfinite;
            return;
        }
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        valuation_ += static_cast<int>(lead);
    }

    int valuation_ = kInfinite;
    std::vector<double> coeffs_;
    int trunc_order_ = kInfinite;
};

inline int valuation(const LaurentSeries& a) noexcept { return a.valuation(); }
inline double norm(const LaurentSeries& a) noexcept { return a.norm(); }

} // namespace hermitewave
