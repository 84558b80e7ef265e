#include "twistq/exact_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace twistq {

ExactMatrix::ExactMatrix(int n, std::vector<Rational> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("entry count does not match dimension");
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("dimension mismatch in matrix product");
    ExactMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < n_; ++j) out(i, j) += x * rhs(k, j);
        }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("dimension mismatch in matrix sum");
    ExactMatrix out(n_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("dimension mismatch in matrix difference");
    ExactMatrix out(n_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

ExactMatrix ExactMatrix::operator*(const Rational& s) const {
    ExactMatrix out(n_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

ExactMatrix ExactMatrix::inverse() const {
    // Gauss-Jordan on [A | I]
    ExactMatrix m = *this;
    ExactMatrix inv = identity(n_);
    for (int c = 0; c < n_; ++c) {
        int pivot = -1;
        for (int r = c; r < n_; ++r)
            if (m(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("singular matrix has no inverse");
        if (pivot != c)
            for (int j = 0; j < n_; ++j) {
                std::swap(m(c, j), m(pivot, j));
                std::swap(inv(c, j), inv(pivot, j));
            }
        Rational pv = m(c, c);
        for (int j = 0; j < n_; ++j) {
            m(c, j) /= pv;
            inv(c, j) /= pv;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == c || m(r, c) == 0) continue;
            Rational f = m(r, c);
            for (int j = 0; j < n_; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

ExactMatrix ExactMatrix::pow(long k) const {
    ExactMatrix base = k >= 0 ? *this : inverse();
    long e = std::labs(k);
    ExactMatrix acc = identity(n_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Rational ExactMatrix::trace() const {
    Rational t(0);
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

Rational ExactMatrix::det() const {
    ExactMatrix m = *this;
    Rational d(1);
    for (int c = 0; c < n_; ++c) {
        int pivot = -1;
        for (int r = c; r < n_; ++r)
            if (m(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            for (int j = 0; j < n_; ++j) std::swap(m(c, j), m(pivot, j));
            d = -d;
        }
        d *= m(c, c);
        Rational pv = m(c, c);
        for (int r = c + 1; r < n_; ++r) {
            if (m(r, c) == 0) continue;
            Rational f = m(r, c) / pv;
            for (int j = c; j < n_; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

PolyExact ExactMatrix::charpoly() const {
    // Faddeev-LeVerrier: exact over Q, O(n^4), no pivoting concerns.
    int n = n_;
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    ExactMatrix N = identity(n);
    for (int k = 1; k <= n; ++k) {
        ExactMatrix M = (*this) * N;
        Rational ck = -M.trace() / Rational(k);
        c[n - k] = ck;
        N = M;
        for (int i = 0; i < n; ++i) N(i, i) += ck;
    }
    return PolyExact(std::move(c));
}

bool ExactMatrix::is_identity() const { return *this == identity(n_); }

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool ExactMatrix::commutes_with(const ExactMatrix& other) const {
    return (*this) * other == other * (*this);
}

PolyExact::PolyExact(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyExact PolyExact::operator+(const PolyExact& rhs) const {
    std::vector<Rational> out(std::max(c_.size(), rhs.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
    return PolyExact(std::move(out));
}

PolyExact PolyExact::operator-(const PolyExact& rhs) const {
    std::vector<Rational> out(std::max(c_.size(), rhs.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] -= rhs.c_[i];
    return PolyExact(std::move(out));
}

PolyExact PolyExact::operator*(const PolyExact& rhs) const {
    if (is_zero() || rhs.is_zero()) return PolyExact();
    std::vector<Rational> out(c_.size() + rhs.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    return PolyExact(std::move(out));
}

PolyExact PolyExact::derivative() const {
    if (c_.size() <= 1) return PolyExact();
    std::vector<Rational> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return PolyExact(std::move(out));
}

PolyExact PolyExact::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> out = c_;
    Rational lead = out.back();
    for (auto& x : out) x /= lead;
    return PolyExact(std::move(out));
}

PolyExact PolyExact::rem(const PolyExact& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = c_;
    const auto& d = divisor.c_;
    while (r.size() >= d.size()) {
        Rational f = r.back() / d.back();
        size_t off = r.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i) r[off + i] -= f * d[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return PolyExact(std::move(r));
}

Rational PolyExact::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyExact poly_gcd(PolyExact a, PolyExact b) {
    while (!b.is_zero()) {
        PolyExact r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

// Rescales to a primitive integer polynomial (positive scalar multiples
// leave Sturm sign sequences unchanged and keep coefficients small).
PolyExact make_primitive(const PolyExact& p) {
    if (p.is_zero()) return p;
    Integer lcm_den = 1, gcd_num = 0;
    for (const auto& c : p.coeffs()) {
        lcm_den = lcm(lcm_den, c.get_den());
        gcd_num = gcd(gcd_num, c.get_num());
    }
    if (gcd_num == 0) return p;
    Rational scale(lcm_den, abs(gcd_num));
    scale.canonicalize();
    std::vector<Rational> out;
    for (const auto& c : p.coeffs()) out.push_back(c * scale);
    return PolyExact(std::move(out));
}

std::vector<PolyExact> sturm_chain(const PolyExact& p) {
    std::vector<PolyExact> chain;
    chain.push_back(make_primitive(p));
    chain.push_back(make_primitive(p.derivative()));
    while (!chain.back().is_zero()) {
        const PolyExact& a = chain[chain.size() - 2];
        const PolyExact& b = chain.back();
        PolyExact r = a.rem(b);
        chain.push_back(make_primitive(PolyExact() - r));
    }
    chain.pop_back();
    return chain;
}

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Sturm counts want a squarefree polynomial; distinct real roots of p are
// those of p / gcd(p, p').
PolyExact squarefree_part(const PolyExact& p) {
    PolyExact g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    // exact division p / g via repeated leading-term elimination
    std::vector<Rational> r = p.coeffs();
    const auto& d = g.coeffs();
    std::vector<Rational> q(p.coeffs().size() - d.size() + 1, Rational(0));
    while (r.size() >= d.size() && !r.empty()) {
        Rational f = r.back() / d.back();
        size_t off = r.size() - d.size();
        q[off] = f;
        for (size_t i = 0; i < d.size(); ++i) r[off + i] -= f * d[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return PolyExact(std::move(q));
}

}  // namespace

int count_real_roots(const PolyExact& p) {
    if (p.degree() <= 0) return 0;
    auto chain = sturm_chain(squarefree_part(p));
    std::vector<int> at_minus_inf, at_plus_inf;
    for (const auto& q : chain) {
        int lead = sign_of(q.coeffs().back());
        at_plus_inf.push_back(lead);
        at_minus_inf.push_back(q.degree() % 2 == 0 ? lead : -lead);
    }
    return variations(at_minus_inf) - variations(at_plus_inf);
}

int count_positive_real_roots(const PolyExact& p) {
    if (p.degree() <= 0) return 0;
    PolyExact sf = squarefree_part(p);
    if (sf.eval(Rational(0)) == 0) {
        // shift the root at zero out of the open interval
        std::vector<Rational> c(sf.coeffs().begin() + 1, sf.coeffs().end());
        sf = PolyExact(std::move(c));
        if (sf.degree() <= 0) return 0;
    }
    auto chain = sturm_chain(sf);
    std::vector<int> at_zero, at_plus_inf;
    for (const auto& q : chain) {
        at_zero.push_back(q.is_zero() ? 0 : sign_of(q.eval(Rational(0))));
        at_plus_inf.push_back(sign_of(q.coeffs().back()));
    }
    return variations(at_zero) - variations(at_plus_inf);
}

ExactMatrix poly_eval(const PolyExact& p, const ExactMatrix& A) {
    int n = A.dim();
    ExactMatrix acc(n);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * A;
        for (int i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

bool has_distinct_eigenvalues(const ExactMatrix& A) {
    PolyExact p = A.charpoly();
    return poly_gcd(p, p.derivative()).degree() == 0;
}

double dist(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in dist");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Rational d = a(i, j) - b(i, j);
            m = std::max(m, std::abs(to_double(d)));
        }
    return m;
}

double max_abs(const ExactMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(to_double(a(i, j))));
    return m;
}

}  // namespace twistq
