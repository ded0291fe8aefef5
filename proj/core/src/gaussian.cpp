#include "optomech/gaussian.hpp"

#include <cmath>

#include "optomech/errors.hpp"

namespace optomech {

BipartiteBlocks BipartiteBlocks::from(const CovarianceMatrix& cm, int mode_i, int mode_j) {
    if (mode_i == mode_j || mode_i < 0 || mode_j < 0 || mode_i >= cm.mode_count()
        || mode_j >= cm.mode_count()) {
        throw ValidationError("BipartiteBlocks: invalid mode pair");
    }
    BipartiteBlocks b;
    b.v1 = cm.block(mode_i, mode_i);
    b.v2 = cm.block(mode_j, mode_j);
    b.vc = cm.block(mode_i, mode_j);
    return b;
}

Eigen::Matrix4d BipartiteBlocks::assemble() const {
    Eigen::Matrix4d v;
    v.block<2, 2>(0, 0) = v1;
    v.block<2, 2>(0, 2) = vc;
    v.block<2, 2>(2, 0) = vc.transpose();
    v.block<2, 2>(2, 2) = v2;
    return v;
}

OccupancyResult occupancy(const CovarianceMatrix& cm, int mechanical_mode_index) {
    const Eigen::Matrix2d v = cm.block(mechanical_mode_index, mechanical_mode_index);
    OccupancyResult res;
    res.n = (v(0, 0) + v(1, 1) - 1.0) / 2.0;
    res.equipartition_ratio = v(0, 0) / v(1, 1);
    if (res.n < -1e-9) {
        throw PhysicalityError("occupancy: negative occupancy beyond tolerance");
    }
    return res;
}

namespace {

double eta_minus(const BipartiteBlocks& blocks) {
    const double sigma = blocks.v1.determinant() + blocks.v2.determinant()
                       - 2.0 * blocks.vc.determinant();
    const double det_v = blocks.assemble().determinant();
    double radicand = sigma * sigma - 4.0 * det_v;
    if (radicand < 0.0) {
        if (radicand < -1e-12) {
            throw PhysicalityError("log_negativity: negative radicand beyond tolerance");
        }
        radicand = 0.0;
    }
    double inner = (sigma - std::sqrt(radicand)) / 2.0;
    if (inner < 0.0) {
        if (inner < -1e-12) {
            throw PhysicalityError("log_negativity: negative radicand beyond tolerance");
        }
        inner = 0.0;
    }
    return std::sqrt(inner);
}

} // namespace

double log_negativity(const BipartiteBlocks& blocks) {
    const double eta = eta_minus(blocks);
    if (eta <= 0.0) return std::numeric_limits<double>::infinity();
    return std::max(0.0, -std::log(2.0 * eta));
}

double log_negativity(const CovarianceMatrix& cm, int mode_i, int mode_j) {
    return log_negativity(BipartiteBlocks::from(cm, mode_i, mode_j));
}

bool simon_criterion(const BipartiteBlocks& blocks) {
    const double sigma = blocks.v1.determinant() + blocks.v2.determinant()
                       - 2.0 * blocks.vc.determinant();
    return 4.0 * blocks.assemble().determinant() < sigma - 0.25;
}

TripartiteReport tripartite_class(const CovarianceMatrix& cm) {
    if (cm.mode_count() != 3) {
        throw ValidationError("tripartite_class: expected a three-mode covariance matrix");
    }
    TripartiteReport rep;
    for (int k = 0; k < 3; ++k) {
        Eigen::MatrixXd pt = cm.matrix();
        // transpose mode k: flip the sign of its momentum row/column
        pt.row(2 * k + 1) *= -1.0;
        pt.col(2 * k + 1) *= -1.0;
        rep.min_symplectic[static_cast<size_t>(k)] = symplectic_spectrum(pt).minCoeff();
        rep.npt[static_cast<size_t>(k)] = rep.min_symplectic[static_cast<size_t>(k)] < 0.5;
        if (rep.npt[static_cast<size_t>(k)]) ++rep.npt_count;
    }
    switch (rep.npt_count) {
        case 3: rep.label = "fully tripartite-entangled (all bipartitions NPT)"; break;
        case 2: rep.label = "two NPT bipartitions (one-mode biseparable pattern)"; break;
        case 1: rep.label = "one NPT bipartition"; break;
        default: rep.label = "PPT-pattern separable class (possibly bound entangled)"; break;
    }
    return rep;
}

double swap_fidelity(const Eigen::Matrix2d& v1, const Eigen::Matrix2d& v2) {
    const double d1 = v1.determinant() - 0.25;
    const double d2 = v2.determinant() - 0.25;
    const double lam = std::max(d1 * d2, 0.0);
    const double f = 1.0 / (std::sqrt((v1 + v2).determinant() + lam) - std::sqrt(lam));
    if (f > 1.0 + 1e-9) {
        throw PhysicalityError("swap_fidelity: fidelity exceeds one beyond tolerance");
    }
    return std::min(f, 1.0);
}

double en_upper_bound(double coupling, double kappa, double gamma_m, double n0) {
    return std::log((1.0 + coupling / std::sqrt(2.0 * kappa * gamma_m)) / (1.0 + n0));
}

} // namespace optomech
