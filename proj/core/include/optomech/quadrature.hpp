#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace optomech {

struct QuadratureResult {
    Eigen::MatrixXd value;
    double error = 0.0;        // estimated absolute error (max norm)
    long evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod 15(7) for matrix-valued integrands. The initial
// subdivision follows the sorted breakpoints; intervals are then split at
// the largest error estimate until sum(err) < max(abs_tol, rel_tol*|value|).
QuadratureResult integrate_adaptive(const std::function<Eigen::MatrixXd(double)>& f,
                                    std::vector<double> breakpoints,
                                    double rel_tol = 1e-8, double abs_tol = 1e-14,
                                    int max_intervals = 200000);

// Scalar convenience wrapper.
struct ScalarQuadratureResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
    bool converged = false;
};
ScalarQuadratureResult integrate_adaptive_scalar(const std::function<double(double)>& f,
                                                 std::vector<double> breakpoints,
                                                 double rel_tol = 1e-8,
                                                 double abs_tol = 1e-14,
                                                 int max_intervals = 200000);

// Geometric ladder of points c +- w*steps around a feature of width w,
// appended to pts (used to seed subdivisions at narrow resonances).
void append_feature_ladder(std::vector<double>& pts, double center, double width,
                           double outer = 300.0);

} // namespace optomech
