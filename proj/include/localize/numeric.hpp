// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace localize {

/// Kahan-compensated accumulator.
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

/// sign * exp(log_abs) representation of a determinant; sign == 0 means the
/// determinant is exactly zero (a pivot vanished).
struct SignLogDet {
    int sign = 1;
    double log_abs = 0.0;
};

/// LU with partial pivoting (max-|entry| pivot chosen per column),
/// accumulating log|det| so large Vandermonde factors cannot overflow.
SignLogDet sign_log_det(Eigen::MatrixXd a);

/// exp(num - den) * sign_num * sign_den, returning 0 when either sign is 0.
double det_ratio(const SignLogDet& num, const SignLogDet& den);

double rel_diff(double a, double b);

/// Gauss-Legendre nodes/weights on (0,1), and Gauss-Laguerre (weight e^{-x})
/// on (0,inf). Golub-Welsch on the Jacobi matrix; cached per order.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const QuadratureRule& gauss_legendre_01(int order);
const QuadratureRule& gauss_laguerre(int order);

}  // namespace localize
