#pragma once

#include "error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hermitewave {

/// LU with partial pivoting that refuses numerically singular pivots.
class LuFactor {
public:
    explicit LuFactor(const Eigen::MatrixXd& M, ErrorCode on_singular = ErrorCode::SingularMatrix) {
        require(M.rows() == M.cols() && M.rows() > 0, ErrorCode::InvalidArgument, "LU needs a non-empty square matrix");
        require(M.allFinite(), ErrorCode::InvalidArgument, "matrix has non-finite entries");
        lu_.compute(M);
        const auto diag = lu_.matrixLU().diagonal().cwiseAbs();
        const double umax = diag.maxCoeff();
        const double umin = diag.minCoeff();
        const double floor = static_cast<double>(M.rows()) * std::numeric_limits<double>::epsilon() * umax;
        if (umax == 0.0 || umin <= floor) {
            throw Error(on_singular, "pivot " + std::to_string(umin) + " is below " + std::to_string(floor));
        }
    }

    Eigen::VectorXd solve(const Eigen::VectorXd& b) const {
        require(b.size() == lu_.rows(), ErrorCode::InvalidArgument, "right-hand side has the wrong length");
        return lu_.solve(b);
    }

private:
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

inline Eigen::VectorXd linear_solve(const Eigen::MatrixXd& M, const Eigen::VectorXd& b) {
    return LuFactor(M).solve(b);
}

} // namespace hermitewave
