#pragma once

#include <vector>

#include "twistq/rational.hpp"

namespace twistq {

class PolyExact;

// Dense square matrix over arbitrary-precision rationals. All group
// elements in the exact half of the library are of this type.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    explicit ExactMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Rational(0)) {}
    ExactMatrix(int n, std::vector<Rational> entries);

    static ExactMatrix identity(int n);
    static ExactMatrix zero(int n) { return ExactMatrix(n); }

    int dim() const { return n_; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }

    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    ExactMatrix operator*(const Rational& s) const;
    ExactMatrix operator-() const { return (*this) * Rational(-1); }

    ExactMatrix transpose() const;
    ExactMatrix inverse() const;  // throws on singular input
    ExactMatrix pow(long k) const;

    Rational trace() const;
    Rational det() const;

    // Monic characteristic polynomial det(xI - A), via Faddeev-LeVerrier.
    PolyExact charpoly() const;

    bool is_identity() const;
    bool is_zero() const;
    bool commutes_with(const ExactMatrix& other) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  private:
    int n_ = 0;
    std::vector<Rational> a_;
};

// Polynomial over Q, coefficients stored low degree first, normalized so
// the leading coefficient is nonzero (zero polynomial = empty).
class PolyExact {
  public:
    PolyExact() = default;
    explicit PolyExact(std::vector<Rational> coeffs);

    static PolyExact constant(const Rational& c) { return PolyExact({c}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }

    PolyExact operator+(const PolyExact&) const;
    PolyExact operator-(const PolyExact&) const;
    PolyExact operator*(const PolyExact&) const;
    PolyExact derivative() const;
    PolyExact monic() const;

    // Euclidean division remainder; divisor must be nonzero.
    PolyExact rem(const PolyExact& divisor) const;

    Rational eval(const Rational& x) const;

    friend bool operator==(const PolyExact&, const PolyExact&) = default;

  private:
    std::vector<Rational> c_;
};

PolyExact poly_gcd(PolyExact a, PolyExact b);  // monic gcd

// Number of distinct real roots (Sturm chain; exact).
int count_real_roots(const PolyExact& p);
// Number of distinct real roots in (0, infinity) (exact).
int count_positive_real_roots(const PolyExact& p);

// Horner evaluation of p at a square matrix; the result commutes with A
// by construction.
ExactMatrix poly_eval(const PolyExact& p, const ExactMatrix& A);

// Exact certificate that A has n distinct eigenvalues (over C):
// gcd(charpoly, charpoly') = 1.
bool has_distinct_eigenvalues(const ExactMatrix& A);

// Entrywise max-absolute-difference, as a double.
double dist(const ExactMatrix& a, const ExactMatrix& b);

double max_abs(const ExactMatrix& a);

}  // namespace twistq
