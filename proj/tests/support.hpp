#pragma once

// Shared helpers for the test suites: seeded generators and brute-force
// oracles that do not go through the library's quadrature.

#include "hermitewave/hermitewave.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace hwtest {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Composite Simpson on [a, b] with an even number of intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, long intervals) {
    if (intervals % 2) ++intervals;
    const double h = (b - a) / static_cast<double>(intervals);
    double acc = f(a) + f(b);
    for (long i = 1; i < intervals; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
    return acc * h / 3.0;
}

struct OracleTables {
    Eigen::MatrixXd A;              // (k_max + 1) x (n + 1)
    std::vector<Eigen::MatrixXd> N; // per k, (n + 1) x (n + 1)
    std::vector<Eigen::MatrixXd> S;
};

/// Every A, N(k), S(k) entry for the full basis 0..n by composite Simpson on
/// [-L, L]. Nodes x and -x are summed as a pair and accumulated in long
/// double, so mirror cancellation leaves no running-sum residue.
inline OracleTables simpson_tables(int n, int k_max, long intervals, double L = 20.0) {
    using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    if (intervals % 2) ++intervals;
    const auto rows = static_cast<std::size_t>(k_max) + 1;
    MatL A = MatL::Zero(k_max + 1, n + 1);
    std::vector<MatL> N(rows, MatL::Zero(n + 1, n + 1));
    std::vector<MatL> S = N;
    const double h = 2.0 * L / static_cast<double>(intervals);
    const long half = intervals / 2;
    for (long i = 0; i <= half; ++i) {
        const double x = i == half ? 0.0 : -L + h * static_cast<double>(i);
        const long double w = (i == 0 ? 1.0L : (i % 2 ? 4.0L : 2.0L)) * h / 3.0L;
        const int copies = i == half ? 1 : 2;
        const double xs[2] = {x, -x};
        std::vector<double> hv[2], pv[2];
        for (int c = 0; c < copies; ++c) {
            hv[c] = hermitewave::hermite_all(n, xs[c]);
            pv[c] = hermitewave::hermite_antideriv_all(n, xs[c], hv[c]);
        }
        long double wk[2] = {w, w};
        for (std::size_t k = 0; k < rows; ++k) {
            for (int a = 0; a <= n; ++a) {
                long double fa = 0.0L;
                for (int c = 0; c < copies; ++c) fa += wk[c] * hv[c][static_cast<std::size_t>(a)];
                A(static_cast<Eigen::Index>(k), a) += fa;
                for (int b = 0; b <= n; ++b) {
                    long double fn = 0.0L, fs = 0.0L;
                    for (int c = 0; c < copies; ++c) {
                        const long double wh = wk[c] * hv[c][static_cast<std::size_t>(a)];
                        fn += wh * hv[c][static_cast<std::size_t>(b)];
                        fs += wh * pv[c][static_cast<std::size_t>(b)];
                    }
                    N[k](a, b) += fn;
                    S[k](a, b) += fs;
                }
            }
            wk[0] *= x;
            wk[1] *= -x;
        }
    }
    OracleTables o;
    o.A = A.cast<double>();
    for (std::size_t k = 0; k < rows; ++k) {
        o.N.push_back(N[k].cast<double>());
        o.S.push_back(S[k].cast<double>());
    }
    return o;
}

/// Normalized Hermite function from the explicit sum
/// H_j(x) = j! sum_m (-1)^m (2x)^(j-2m) / (m! (j-2m)!), in long double.
inline double hermite_explicit(int j, double xd) {
    const long double x = xd;
    long double fact_j = 1.0L;
    for (int i = 2; i <= j; ++i) fact_j *= i;
    long double H = 0.0L;
    for (int m = 0; 2 * m <= j; ++m) {
        long double fm = 1.0L, fr = 1.0L;
        for (int i = 2; i <= m; ++i) fm *= i;
        for (int i = 2; i <= j - 2 * m; ++i) fr *= i;
        H += ((m % 2) ? -1.0L : 1.0L) * std::pow(2.0L * x, j - 2 * m) / (fm * fr);
    }
    H *= fact_j;
    const long double norm = std::sqrt(std::pow(2.0L, j) * fact_j * std::sqrt(3.14159265358979323846264338327950288L));
    return static_cast<double>(H * std::exp(-x * x / 2.0L) / norm);
}

/// Random Laurent series with leading coefficient of magnitude in [0.5, 1].
inline hermitewave::LaurentSeries random_series(Rng& rng) {
    const int val = uniform_int(rng, -5, 5);
    const int len = uniform_int(rng, 1, 8);
    std::vector<double> c(static_cast<std::size_t>(len));
    for (auto& x : c) x = uniform(rng, -1.0, 1.0);
    c[0] = (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0) * uniform(rng, 0.5, 1.0);
    return hermitewave::LaurentSeries::from_coefficients(val, c, val + len);
}

/// Random Schwartz test function: Hermite expansion of degree <= 12.
inline hermitewave::TestFunction random_test_function(Rng& rng, double center) {
    const int n = uniform_int(rng, 0, 12);
    Eigen::VectorXd d(n + 1);
    for (int j = 0; j <= n; ++j) d[j] = uniform(rng, -1.0, 1.0);
    return {hermitewave::CoeffVec(hermitewave::BasisSpec{n, hermitewave::Parity::All}, d), center};
}

/// |a - b| <= tol * max(1, |b|).
inline bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

} // namespace hwtest
