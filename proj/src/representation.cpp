#include "twistq/representation.hpp"

#include <cmath>
#include <stdexcept>

namespace twistq {

ExactMatrix Representation::evaluate(const Word& w) const {
    if (kind != ScalarKind::Exact)
        throw std::logic_error("exact evaluation on a real representation");
    ExactMatrix acc = ExactMatrix::identity(dim());
    for (const auto& l : w.letters()) {
        if (l.gen >= static_cast<int>(exact_images.size()))
            throw std::out_of_range("word generator outside representation");
        acc = acc * exact_images[l.gen].pow(l.exp);
    }
    return acc;
}

RealMatrix Representation::evaluate_real(const Word& w) const {
    if (kind == ScalarKind::Exact) return to_real(evaluate(w));
    RealMatrix acc = RealMatrix::Identity(dim(), dim());
    for (const auto& l : w.letters()) {
        if (l.gen >= static_cast<int>(real_images.size()))
            throw std::out_of_range("word generator outside representation");
        RealMatrix m = l.exp < 0 ? real_images[l.gen].inverse().eval() : real_images[l.gen];
        for (long i = 0; i < std::labs(l.exp); ++i) acc = acc * m;
    }
    return acc;
}

Representation Representation::to_real_kind() const {
    if (kind == ScalarKind::Real) return *this;
    Representation out = *this;
    out.kind = ScalarKind::Real;
    out.real_images.clear();
    for (const auto& m : exact_images) out.real_images.push_back(to_real(m));
    out.exact_images.clear();
    return out;
}

double relator_scale(const Representation& rep) {
    double scale = 1.0;
    int n = rep.presentation.num_generators();
    for (int g = 0; g < n; ++g) {
        double norm = rep.is_exact() ? max_abs(rep.exact_images[g])
                                     : rep.real_images[g].cwiseAbs().maxCoeff();
        scale *= std::max(1.0, norm);
    }
    return scale;
}

ValidationReport validate(const Representation& rep) {
    ValidationReport out;
    const int n = rep.dim();
    if (rep.is_exact()) {
        out.relator_ok = true;
        for (const auto& rel : rep.presentation.relators) {
            ExactMatrix img = rep.evaluate(rel);
            bool ok = img.is_identity() || (rep.central_relator && (-img).is_identity());
            if (!ok) {
                out.relator_ok = false;
                out.relator_residual =
                    std::max(out.relator_residual, dist(img, ExactMatrix::identity(n)));
            }
        }
        out.membership_ok = true;
        for (const auto& m : rep.exact_images) {
            auto rep_m = member(m, rep.group);
            if (!rep_m.member) {
                out.membership_ok = false;
                out.membership_residual = std::max(out.membership_residual, rep_m.residual);
            }
        }
    } else {
        // float residuals scale with the entry sizes; both checks share the
        // generator-norm scaling
        double tol = rep.tolerance * relator_scale(rep);
        out.relator_ok = true;
        RealMatrix id = RealMatrix::Identity(n, n);
        for (const auto& rel : rep.presentation.relators) {
            RealMatrix img = rep.evaluate_real(rel);
            double r = std::min(dist(img, id), dist(img, RealMatrix(-id)));
            if (!rep.central_relator) r = dist(img, id);
            out.relator_residual = std::max(out.relator_residual, r);
            if (r > tol) out.relator_ok = false;
        }
        out.membership_ok = true;
        for (const auto& m : rep.real_images) {
            auto rep_m = member(m, rep.group, tol);
            out.membership_residual = std::max(out.membership_residual, rep_m.residual);
            if (!rep_m.member) out.membership_ok = false;
        }
    }
    return out;
}

}  // namespace twistq
