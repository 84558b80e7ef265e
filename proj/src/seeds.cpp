#include "twistq/seeds.hpp"

#include <cmath>
#include <stdexcept>

namespace twistq {

namespace {

Rational binom(int n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(n - i) / Rational(i + 1);
    return r;
}

}  // namespace

Representation long_reid() {
    Representation rep;
    rep.presentation = orbifold_group();
    rep.group = GroupSpec::sl(2);
    rep.kind = ScalarKind::Exact;
    rep.central_relator = true;
    ExactMatrix A(2), B(2);
    A(0, 0) = 3;
    A(0, 1) = Rational(2, 3);
    A(1, 1) = Rational(1, 3);
    B(0, 1) = -2;
    B(1, 0) = Rational(1, 2);
    B(1, 1) = Rational(83, 8);
    rep.exact_images = {A, B};
    if (!validate(rep).ok()) throw std::logic_error("Long-Reid seed failed validation");
    return rep;
}

Representation surface_seed(int genus) {
    if (genus < 2) throw std::invalid_argument("surface seeds need genus >= 2");
    Representation rho0 = long_reid();
    auto eval = [&rho0](const Word& w) { return rho0.evaluate(w); };

    SubgroupData base = orbifold_genus2_subgroup();
    if (!certify_dictionary(base, eval))
        throw std::logic_error("genus-2 dictionary failed its relator certificate");

    std::vector<Word> words_in_gamma = *base.standard_dictionary;
    if (genus > 2) {
        SubgroupData cover = cyclic_cover_subgroup(surface_presentation(2), genus - 1);
        std::vector<Word> lifted;
        for (const auto& w : *cover.standard_dictionary)
            lifted.push_back(w.substituted(words_in_gamma));
        words_in_gamma = std::move(lifted);
    }

    Representation rep;
    rep.presentation = surface_presentation(genus);
    rep.group = GroupSpec::sl(2);
    rep.kind = ScalarKind::Exact;
    for (const auto& w : words_in_gamma) rep.exact_images.push_back(rho0.evaluate(w));
    if (!validate(rep).ok())
        throw std::logic_error("surface seed failed exact relator/membership checks");
    return rep;
}

namespace {

// image of e_i = (a x + b y)^(deg-i) (c x + d y)^i; the coefficient of
// x^(deg-j) y^j lands in entry (i, j)
ExactMatrix sym_power_core(const ExactMatrix& m, int n) {
    const int deg = n - 1;
    const Rational &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
    ExactMatrix out(n);
    for (int i = 0; i <= deg; ++i) {
        std::vector<Rational> p1(deg - i + 1), p2(i + 1);
        for (int k = 0; k <= deg - i; ++k) {
            Rational t = binom(deg - i, k);
            for (int u = 0; u < deg - i - k; ++u) t *= a;
            for (int u = 0; u < k; ++u) t *= b;
            p1[k] = t;
        }
        for (int k = 0; k <= i; ++k) {
            Rational t = binom(i, k);
            for (int u = 0; u < i - k; ++u) t *= c;
            for (int u = 0; u < k; ++u) t *= d;
            p2[k] = t;
        }
        for (int k1 = 0; k1 <= deg - i; ++k1)
            for (int k2 = 0; k2 <= i; ++k2) out(i, k1 + k2) += p1[k1] * p2[k2];
    }
    return out;
}

}  // namespace

ExactMatrix sym_power(const ExactMatrix& m, int n) {
    if (m.dim() != 2) throw std::invalid_argument("sym_power input must be 2x2");
    if (n < 1) throw std::invalid_argument("sym_power needs n >= 1");
    if (m.det() != 1) throw std::invalid_argument("sym_power input must have determinant 1");
    return sym_power_core(m, n);
}

RealMatrix sym_power(const RealMatrix& m, int n) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("sym_power input must be 2x2");
    if (n < 1) throw std::invalid_argument("sym_power needs n >= 1");
    // doubles are dyadic rationals, so the expansion can run exactly; the
    // det = 1 gate is relaxed to float tolerance here
    if (std::abs(m.determinant() - 1.0) > 1e-9)
        throw std::invalid_argument("sym_power input must have determinant 1");
    ExactMatrix e(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e(i, j) = rational_from_double(m(i, j));
    return to_real(sym_power_core(e, n));
}

ExactMatrix induced_form(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("induced alternating form needs even n");
    const int m = n - 1;
    ExactMatrix J(n);
    for (int i = 0; i < n; ++i) J(i, m - i) = (i % 2 == 0 ? 1 : -1) * binom(m, i);
    return J;
}

GroupSpec seed_group_spec(GroupKind kind, int n) {
    switch (kind) {
        case GroupKind::SL: return GroupSpec::sl(n);
        case GroupKind::SP: return GroupSpec::sp(n, induced_form(n));
        case GroupKind::G2:
            if (n != 7) throw std::invalid_argument("G2 seeds live in dimension 7");
            return GroupSpec::g2();
    }
    throw std::logic_error("unreachable");
}

Representation hitchin_seed(int genus, int n, const GroupSpec& spec) {
    if (spec.dim() != n) throw std::invalid_argument("group spec dimension mismatch");
    if (spec.kind() == GroupKind::SP && n % 2 != 0)
        throw std::invalid_argument("symplectic seeds need even n");
    if (spec.kind() == GroupKind::G2 && n != 7)
        throw std::invalid_argument("G2 seeds live in dimension 7");

    Representation base = surface_seed(genus);
    Representation rep;
    rep.presentation = base.presentation;
    rep.group = spec;
    rep.kind = ScalarKind::Exact;
    for (const auto& m : base.exact_images) rep.exact_images.push_back(sym_power(m, n));
    auto report = validate(rep);
    if (!report.ok())
        throw std::logic_error("hitchin seed failed exact relator/membership checks (residual " +
                               std::to_string(report.membership_residual) + ")");
    return rep;
}

}  // namespace twistq
