#pragma once

/**
 * @file moments.hpp
 * @brief Moment tables that turn the integral profile conditions into algebra.
 *
 * For a basis with index set J and moment orders k = 0..k_max:
 *
 *   A(k, j)     = int x^k h_j(x) dx
 *   N(k)(i, j)  = int x^k h_i(x) h_j(x) dx
 *   S(k)(i, j)  = int x^k h_i(x) P_j(x) dx,   P_j(x) = int_{-inf}^x h_j
 *
 * so that for theta = sum c_j h_j the moments are m_k = (A c)_k,
 * g_k = c^T N(k) c / 2 and r_k = c^T S(k) c.
 *
 * All entries come from one fixed Gauss-Legendre panel layout; a second pass
 * at half the panel width must agree (up to rounding at the scale of the
 * largest entry of the row), otherwise assembly fails with the offending (k, i, j).
 */

#include "error.hpp"
#include "hermite.hpp"
#include "quadrature.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace hermitewave {

struct MomentTables {
    BasisSpec basis;
    std::vector<int> orders;        // moment order k of each row
    Eigen::MatrixXd A;              // rows x dim
    std::vector<Eigen::MatrixXd> N; // one dim x dim matrix per row, symmetric
    std::vector<Eigen::MatrixXd> S; // one dim x dim matrix per row
    double cond_A = 0.0;            // 2-norm condition number of A

    int rows() const noexcept { return static_cast<int>(orders.size()); }
    int dim() const noexcept { return static_cast<int>(A.cols()); }
    bool square() const noexcept { return rows() == dim(); }

    /// Row holding moment order k, or -1.
    int row_of(int k) const noexcept {
        const auto it = std::find(orders.begin(), orders.end(), k);
        return it == orders.end() ? -1 : static_cast<int>(it - orders.begin());
    }

    int max_order() const noexcept { return orders.empty() ? -1 : *std::max_element(orders.begin(), orders.end()); }

    /// Keep only the listed moment orders, in the given sequence.
    MomentTables select(std::span<const int> ks) const;

    Eigen::VectorXd moments(const Eigen::VectorXd& c) const { return A * c; }

    /// r_k = c^T S(k) c for every row.
    Eigen::VectorXd shock_moments(const Eigen::VectorXd& c) const {
        Eigen::VectorXd r(rows());
        for (int k = 0; k < rows(); ++k) r[k] = c.dot(S[static_cast<std::size_t>(k)] * c);
        return r;
    }

    /// g_k = c^T N(k) c / 2 for every row.
    Eigen::VectorXd square_moments(const Eigen::VectorXd& c) const {
        Eigen::VectorXd g(rows());
        for (int k = 0; k < rows(); ++k) g[k] = 0.5 * c.dot(N[static_cast<std::size_t>(k)] * c);
        return g;
    }
};

inline double condition_number(const Eigen::MatrixXd& M) {
    if (M.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& s = svd.singularValues();
    const double smin = s[s.size() - 1];
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return s[0] / smin;
}

inline MomentTables MomentTables::select(std::span<const int> ks) const {
    MomentTables out;
    out.basis = basis;
    out.A.resize(static_cast<Eigen::Index>(ks.size()), dim());
    for (std::size_t r = 0; r < ks.size(); ++r) {
        const int src = row_of(ks[r]);
        require(src >= 0, ErrorCode::InvalidArgument, "moment order " + std::to_string(ks[r]) + " not assembled");
        out.orders.push_back(ks[r]);
        out.A.row(static_cast<Eigen::Index>(r)) = A.row(src);
        out.N.push_back(N[static_cast<std::size_t>(src)]);
        out.S.push_back(S[static_cast<std::size_t>(src)]);
    }
    out.cond_A = condition_number(out.A);
    return out;
}

namespace detail {

inline MomentTables assemble_with_rule(const BasisSpec& basis, int k_max, const SymmetricRule& rule) {
    const std::vector<int> idx = basis.indices();
    const int dim = static_cast<int>(idx.size());
    const int rows = k_max + 1;
    MomentTables t;
    t.basis = basis;
    for (int k = 0; k <= k_max; ++k) t.orders.push_back(k);
    t.A = Eigen::MatrixXd::Zero(rows, dim);
    t.N.assign(static_cast<std::size_t>(rows), Eigen::MatrixXd::Zero(dim, dim));
    t.S.assign(static_cast<std::size_t>(rows), Eigen::MatrixXd::Zero(dim, dim));

    // Nodes are taken in mirror pairs and P_j = m_j / 2 + Q_j, so every parity zero comes out exact.
    Eigen::VectorXd hp(dim), hm(dim), qp(dim), qm(dim);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const double x = rule.nodes[q];
        const auto h = hermite_all(basis.n_max, x);
        const auto qx = hermite_antideriv_centered_all(basis.n_max, x, h);
        const auto hn = hermite_all(basis.n_max, -x);
        const auto qn = hermite_antideriv_centered_all(basis.n_max, -x, hn);
        for (int a = 0; a < dim; ++a) {
            const auto j = static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
            hp[a] = h[j];
            hm[a] = hn[j];
            qp[a] = qx[j];
            qm[a] = qn[j];
        }
        double wk = rule.weights[q]; // w * x^k
        double sk = 1.0;              // (-1)^k
        for (int k = 0; k <= k_max; ++k) {
            auto& Nk = t.N[static_cast<std::size_t>(k)];
            auto& Sk = t.S[static_cast<std::size_t>(k)];
            const double wm = sk * wk;
            for (int i = 0; i < dim; ++i) {
                const double wp_i = wk * hp[i];
                const double wm_i = wm * hm[i];
                t.A(k, i) += wp_i + wm_i;
                for (int j = i; j < dim; ++j) Nk(i, j) += wp_i * hp[j] + wm_i * hm[j];
                for (int j = 0; j < dim; ++j) Sk(i, j) += wp_i * qp[j] + wm_i * qm[j];
            }
            wk *= x;
            sk = -sk;
        }
    }
    for (int a = 0; a < dim; ++a) {
        const double half_mass = 0.5 * hermite_integral(idx[static_cast<std::size_t>(a)]);
        if (half_mass == 0.0) continue;
        for (int k = 0; k <= k_max; ++k) t.S[static_cast<std::size_t>(k)].col(a) += half_mass * t.A.row(k).transpose();
    }
    for (auto& Nk : t.N)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < i; ++j) Nk(i, j) = Nk(j, i);
    return t;
}

} // namespace detail

/// Assemble A, N(k), S(k) for k = 0..k_max over the basis index set.
inline MomentTables assemble_moment_tables(const BasisSpec& basis, int k_max) {
    basis.validate();
    require(k_max >= 0, ErrorCode::InvalidArgument, "k_max must be non-negative");
    const double L = domain_half_width(basis.n_max, k_max);
    MomentTables coarse = detail::assemble_with_rule(basis, k_max, make_symmetric_rule(L, 1.0));
    MomentTables fine = detail::assemble_with_rule(basis, k_max, make_symmetric_rule(L, 0.5));

    const auto idx = basis.indices();
    // Rounding in a row grows with its largest entry, hence the row floor.
    double row_floor = 0.0;
    const auto check = [&](double a, double b, int k, int i, int j, const char* table) {
        if (std::abs(a - b) > 1e-10 * std::max(1.0, std::abs(b)) + row_floor) {
            throw Error(ErrorCode::NumericalFailure,
                        std::string("quadrature for ") + table + " did not converge at (k=" + std::to_string(k) +
                            ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
        }
    };
    for (int k = 0; k <= k_max; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        row_floor = 1e-13 * std::max({fine.A.row(k).cwiseAbs().maxCoeff(), fine.N[ku].cwiseAbs().maxCoeff(),
                                      fine.S[ku].cwiseAbs().maxCoeff()});
        for (int a = 0; a < fine.dim(); ++a) {
            const int i = idx[static_cast<std::size_t>(a)];
            check(coarse.A(k, a), fine.A(k, a), k, 0, i, "A");
            for (int b = 0; b < fine.dim(); ++b) {
                const int j = idx[static_cast<std::size_t>(b)];
                check(coarse.N[static_cast<std::size_t>(k)](a, b), fine.N[static_cast<std::size_t>(k)](a, b), k, i, j, "N");
                check(coarse.S[static_cast<std::size_t>(k)](a, b), fine.S[static_cast<std::size_t>(k)](a, b), k, i, j, "S");
            }
        }
    }
    fine.cond_A = condition_number(fine.A);
    return fine;
}

/// A(k, j) from the closed form (-i)^j i^k sqrt(2 pi) h_j^{(k)}(0), with the
/// derivative taken through the ladder identity. Independent of quadrature.
inline double moment_closed_form(int k, int j) {
    require(k >= 0 && j >= 0, ErrorCode::InvalidArgument, "indices must be non-negative");
    if ((k + j) % 2 != 0) return 0.0;
    // (-i)^j i^k = (-1)^j i^(j+k), and i^(j+k) = (-1)^((j+k)/2) for even j+k.
    const double sign = ((j % 2 == 0) ? 1.0 : -1.0) * ((((j + k) / 2) % 2 == 0) ? 1.0 : -1.0);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(j + 1);
    e[j] = 1.0;
    const CoeffVec hj = CoeffVec::from_dense(BasisSpec{j, Parity::All}, e);
    const double deriv = derivatives_at(hj, k, 0.0).back();
    return sign * std::sqrt(2.0 * std::numbers::pi) * deriv;
}

enum class SystemKind { Soliton, Shock };

/// Moment orders that make the square system for a basis.
///
/// Full basis: k = 0..n_max. Even basis of dimension d: the soliton rows are
/// k = 0, 2, .., 2(d-1) (odd-k rows vanish identically for an even profile);
/// the shock rows are k = 0, 1, 3, .., 2d-3 (for even theta, K - 1/2 is odd,
/// so every even-k row reduces to r_k = m_k / 2 and holds automatically).
/// Odd profiles have zero mass and cannot be normalized.
inline std::vector<int> square_system_orders(const BasisSpec& basis, SystemKind kind) {
    basis.validate();
    require(basis.parity != Parity::Odd, ErrorCode::InvalidArgument,
            "an odd-parity profile has zero total mass and cannot satisfy the unit-mass condition");
    const int d = basis.dimension();
    std::vector<int> ks;
    if (basis.parity == Parity::All) {
        for (int k = 0; k < d; ++k) ks.push_back(k);
    } else if (kind == SystemKind::Soliton) {
        for (int r = 0; r < d; ++r) ks.push_back(2 * r);
    } else {
        ks.push_back(0);
        for (int r = 1; r < d; ++r) ks.push_back(2 * r - 1);
    }
    return ks;
}

} // namespace hermitewave
