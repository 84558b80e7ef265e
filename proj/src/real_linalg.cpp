#include "twistq/real_linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace twistq {

RealMatrix to_real(const ExactMatrix& m) {
    RealMatrix out(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

RealMatrix expm(const RealMatrix& m) {
    if (!m.allFinite()) throw std::domain_error("expm of non-finite matrix");
    RealMatrix e = m.exp();
    if (!e.allFinite()) throw std::overflow_error("expm overflow; matrix norm too large");
    return e;
}

namespace {

// Parlett-Reinsch balancing: diagonal similarity equalizing row/column
// norms. Sharp exponent-graded matrices (symmetric powers of hyperbolic
// elements) are hopeless for plain QR without it.
Eigen::VectorXd balance(RealMatrix& a) {
    const int n = static_cast<int>(a.rows());
    const double radix = 2.0;
    Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double c = 0, r = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            if (c == 0 || r == 0) continue;
            double f = 1.0, s = c + r;
            while (c < r / radix) {
                c *= radix;
                r /= radix;
                f *= radix;
            }
            while (c >= r * radix) {
                c /= radix;
                r *= radix;
                f /= radix;
            }
            if ((c + r) < 0.95 * s) {
                done = false;
                d(i) *= f;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
    return d;
}

}  // namespace

EigenvalueReport eigenvalues(const RealMatrix& m, double tol) {
    RealMatrix balanced = m;
    Eigen::VectorXd scale = balance(balanced);
    Eigen::EigenSolver<RealMatrix> solver(balanced, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue iteration did not converge");
    EigenvalueReport rep;
    const auto& vals = solver.eigenvalues();
    int n = static_cast<int>(vals.size());
    for (int i = 0; i < n; ++i) {
        rep.values.push_back(vals(i));
        Eigen::VectorXcd v = scale.cast<std::complex<double>>().asDiagonal() *
                             solver.eigenvectors().col(i);
        v /= v.norm();
        Eigen::VectorXcd r = m.cast<std::complex<double>>() * v - vals(i) * v;
        rep.max_residual = std::max(rep.max_residual, r.cwiseAbs().maxCoeff());
    }
    rep.all_real = true;
    rep.all_positive = true;
    rep.all_distinct = true;
    for (int i = 0; i < n; ++i) {
        if (std::abs(vals(i).imag()) > tol) rep.all_real = false;
        if (std::abs(vals(i).imag()) > tol || vals(i).real() <= tol) rep.all_positive = false;
        for (int j = i + 1; j < n; ++j)
            if (std::abs(vals(i) - vals(j)) <= tol) rep.all_distinct = false;
    }
    return rep;
}

KrylovCoordinates krylov_coordinates(const RealMatrix& A, const RealMatrix& T) {
    const int n = static_cast<int>(A.rows());
    if (T.rows() != n || T.cols() != n)
        throw std::invalid_argument("dimension mismatch in krylov_coordinates");
    Eigen::MatrixXd basis(n * n, n);
    RealMatrix p = RealMatrix::Identity(n, n);
    for (int k = 0; k < n; ++k) {
        basis.col(k) = Eigen::Map<const Eigen::VectorXd>(p.data(), n * n);
        p = p * A;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(n - 1);
    if (smin <= smax * n * 1e-14)
        throw std::runtime_error(
            "Krylov basis is rank deficient (eigenvalue collision in A)");
    KrylovCoordinates out;
    out.coeffs = svd.solve(Eigen::Map<const Eigen::VectorXd>(T.data(), n * n));
    out.condition = smax / smin;
    out.residual = dist(poly_eval(out.coeffs, A), T);
    return out;
}

double dist(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in dist");
    return (a - b).cwiseAbs().maxCoeff();
}

double dist(const ExactMatrix& a, const RealMatrix& b) { return dist(to_real(a), b); }

RealMatrix poly_eval(const Eigen::VectorXd& coeffs, const RealMatrix& A) {
    const int n = static_cast<int>(A.rows());
    RealMatrix acc = RealMatrix::Zero(n, n);
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        acc = acc * A;
        acc.diagonal().array() += coeffs(k);
    }
    return acc;
}

}  // namespace twistq
