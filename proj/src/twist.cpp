#include "twistq/twist.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistq {

TwistDatum standard_twist_datum(const Presentation& pres, int gen_index) {
    if (!pres.genus) throw std::invalid_argument("twist data need a surface presentation");
    if (gen_index < 0 || gen_index >= pres.num_generators())
        throw std::out_of_range("generator index outside presentation");
    if (gen_index % 2 != 0)
        throw std::invalid_argument(
            "standard twists are about a-generators; reach b-curves via pushforward");
    TwistDatum d;
    d.curve = Word::generator(gen_index);
    d.twisted = {gen_index + 1};
    for (int g = 0; g < pres.num_generators(); ++g)
        if (g != gen_index + 1) d.fixed.push_back(g);
    validate_twist_datum(d, pres);
    return d;
}

void validate_twist_datum(const TwistDatum& d, const Presentation& pres) {
    std::vector<int> seen(pres.num_generators(), 0);
    for (int g : d.twisted) {
        if (g < 0 || g >= pres.num_generators()) throw std::out_of_range("twisted index");
        ++seen[g];
        if (algebraic_intersection(d.curve, Word::generator(g), pres) != 1)
            throw std::invalid_argument("twisted generator must meet the curve once positively");
    }
    for (int g : d.fixed) {
        if (g < 0 || g >= pres.num_generators()) throw std::out_of_range("fixed index");
        ++seen[g];
        if (algebraic_intersection(d.curve, Word::generator(g), pres) != 0)
            throw std::invalid_argument("fixed generator must be homologically disjoint from the curve");
    }
    for (int g = 0; g < pres.num_generators(); ++g)
        if (seen[g] != 1)
            throw std::invalid_argument("every generator must be in exactly one subset");
}

TwistOutcome twist_real(const Representation& rep, const TwistDatum& d, double t) {
    validate_twist_datum(d, rep.presentation);
    TwistOutcome out;

    RealMatrix curve_image = rep.evaluate_real(d.curve);
    auto eig = eigenvalues(curve_image, 1e-9);
    if (!eig.all_distinct)
        out.warnings.push_back("curve image may have repeated eigenvalues; twist flow is "
                               "outside the centralizer-torus regime");

    RealMatrix T = expm(t * variation(curve_image, rep.group));
    Representation twisted = rep.to_real_kind();
    for (int g : d.twisted) twisted.real_images[g] = twisted.real_images[g] * T;

    auto report = validate(twisted);
    out.relator_residual = report.relator_residual;
    if (!report.membership_ok)
        throw std::runtime_error("twisted representation leaves the group (residual " +
                                 std::to_string(report.membership_residual) + ")");
    if (!report.relator_ok)
        throw std::runtime_error("twisted representation violates the relator (residual " +
                                 std::to_string(report.relator_residual) + ")");
    out.rep = std::move(twisted);
    return out;
}

Representation twist_rational(const Representation& rep, const TwistDatum& d,
                              const ExactMatrix& B) {
    if (!rep.is_exact()) throw std::invalid_argument("twist_rational needs an exact representation");
    validate_twist_datum(d, rep.presentation);

    ExactMatrix curve_image = rep.evaluate(d.curve);
    if (!B.commutes_with(curve_image))
        throw std::invalid_argument("twist matrix does not centralize the curve image");
    auto membership = member(B, rep.group);
    if (!membership.member)
        throw std::invalid_argument("twist matrix is not in the group (" + membership.detail + ")");

    Representation twisted = rep;
    for (int g : d.twisted) twisted.exact_images[g] = twisted.exact_images[g] * B;
    auto report = validate(twisted);
    if (!report.ok())
        throw std::logic_error("exact twist failed relator or membership certification");
    return twisted;
}

Representation pushforward(const Representation& rep, const std::vector<Word>& substitution) {
    if (static_cast<int>(substitution.size()) != rep.presentation.num_generators())
        throw std::invalid_argument("substitution must cover every generator");

    Representation out = rep;
    if (rep.is_exact()) {
        for (int g = 0; g < rep.presentation.num_generators(); ++g)
            out.exact_images[g] = rep.evaluate(substitution[g]);
    } else {
        for (int g = 0; g < rep.presentation.num_generators(); ++g)
            out.real_images[g] = rep.evaluate_real(substitution[g]);
    }
    auto report = validate(out);
    if (!report.relator_ok)
        throw std::invalid_argument("substitution does not preserve the relator (residual " +
                                    std::to_string(report.relator_residual) + ")");
    return out;
}

}  // namespace twistq
