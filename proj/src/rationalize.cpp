#include "twistq/rationalize.hpp"

#include <cmath>
#include <stdexcept>

namespace twistq {

Rational rationalize(double x, const Integer& max_denominator) {
    if (!std::isfinite(x)) throw std::domain_error("rationalize of non-finite value");
    if (max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");

    Rational target = rational_from_double(x);
    if (target.get_den() <= max_denominator) return target;

    // continued fraction of the exact dyadic value; h_{-2}/k_{-2} = 0/1,
    // h_{-1}/k_{-1} = 1/0
    Integer num = target.get_num(), den = target.get_den();
    Integer p_prev = 0, q_prev = 1;
    Integer p_cur = 1, q_cur = 0;
    while (true) {
        Integer a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Integer p_next = a * p_cur + p_prev;
        Integer q_next = a * q_cur + q_prev;
        if (q_next > max_denominator) {
            // best approximation is the last convergent or a semiconvergent
            Integer t = (max_denominator - q_prev) / q_cur;
            Rational conv(p_cur, q_cur);
            conv.canonicalize();
            if (t >= 1) {
                Rational semi(p_prev + t * p_cur, q_prev + t * q_cur);
                semi.canonicalize();
                Rational ec = abs(target - conv), es = abs(target - semi);
                if (es < ec) return semi;
            }
            return conv;
        }
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        if (r == 0) {  // exact: the value itself has denominator <= bound
            Rational exact(p_cur, q_cur);
            exact.canonicalize();
            return exact;
        }
        num = den;
        den = r;
    }
}

std::vector<Rational> rationalize(const std::vector<double>& xs, const Integer& max_denominator) {
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(rationalize(x, max_denominator));
    return out;
}

ExactMatrix rationalize(const RealMatrix& m, const Integer& max_denominator) {
    ExactMatrix out(static_cast<int>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = rationalize(m(i, j), max_denominator);
    return out;
}

}  // namespace twistq
