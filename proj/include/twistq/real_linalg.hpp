#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "twistq/exact_matrix.hpp"

namespace twistq {

using RealMatrix = Eigen::MatrixXd;

RealMatrix to_real(const ExactMatrix& m);

// Matrix exponential (scaling-and-squaring with Pade approximant).
RealMatrix expm(const RealMatrix& m);

struct EigenvalueReport {
    std::vector<std::complex<double>> values;
    double max_residual = 0.0;  // max ||A v - lambda v|| over reported pairs
    bool all_real = false;
    bool all_distinct = false;  // pairwise gaps > tol
    bool all_positive = false;  // real and > tol
};

// Numeric eigensolve; throws on non-convergence (never silent).
EigenvalueReport eigenvalues(const RealMatrix& m, double tol);

struct KrylovCoordinates {
    Eigen::VectorXd coeffs;   // p(A) = sum coeffs[k] A^k, k = 0..n-1
    double condition = 0.0;   // singular value ratio of the Krylov system
    double residual = 0.0;    // ||p(A) - T||_max
};

// Coordinates of T in the basis I, A, ..., A^{n-1}. Requires A to have
// distinct eigenvalues (rank deficiency is reported as an error).
KrylovCoordinates krylov_coordinates(const RealMatrix& A, const RealMatrix& T);

// Entrywise max-absolute-difference.
double dist(const RealMatrix& a, const RealMatrix& b);
double dist(const ExactMatrix& a, const RealMatrix& b);

// Real Horner evaluation, mirroring the exact one.
RealMatrix poly_eval(const Eigen::VectorXd& coeffs, const RealMatrix& A);

}  // namespace twistq
