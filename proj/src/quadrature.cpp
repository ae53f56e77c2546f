#include "sobrf/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace sobrf {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the orthonormal
// recurrence, weights are mu0 * (first eigenvector component)^2.
QuadRule gauss_hermite_prob(int degree) {
    if (degree < 1) throw std::invalid_argument("gauss_hermite_prob: degree < 1");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) {
        J(i, i - 1) = J(i - 1, i) = std::sqrt(static_cast<double>(i));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadRule r;
    r.nodes.resize(degree);
    r.weights.resize(degree);
    double wsum = 0.0;
    for (int i = 0; i < degree; ++i) {
        r.nodes[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        r.weights[i] = v0 * v0;
        wsum += r.weights[i];
    }
    for (double& w : r.weights) w /= wsum;  // mu0 = 1 for the normalized Gaussian weight
    return r;
}

QuadRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        double k = static_cast<double>(i);
        double beta = k / std::sqrt(4.0 * k * k - 1.0);
        J(i, i - 1) = J(i - 1, i) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = mid + half * es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        r.weights[i] = 2.0 * v0 * v0 * half;  // mu0 = 2 on [-1,1]
    }
    return r;
}

}  // namespace sobrf
