#include "twistq/group_spec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace twistq {

std::string to_string(GroupKind k) {
    switch (k) {
        case GroupKind::SL: return "SL";
        case GroupKind::SP: return "SP";
        case GroupKind::G2: return "G2";
    }
    return "?";
}

GroupKind group_kind_from_string(const std::string& s) {
    if (s == "SL" || s == "sl") return GroupKind::SL;
    if (s == "SP" || s == "sp" || s == "Sp") return GroupKind::SP;
    if (s == "G2" || s == "g2") return GroupKind::G2;
    throw std::invalid_argument("unknown group kind \"" + s + "\"");
}

namespace {

// Null space of a rational matrix given as rows; returns a basis.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m, int ncols) {
    std::vector<int> pivot_cols;
    size_t row = 0;
    for (int c = 0; c < ncols && row < m.size(); ++c) {
        size_t pr = row;
        while (pr < m.size() && m[pr][c] == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[row], m[pr]);
        Rational pv = m[row][c];
        for (int j = 0; j < ncols; ++j) m[row][j] /= pv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (int j = 0; j < ncols; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_cols.push_back(c);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (int fc = 0; fc < ncols; ++fc) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), fc) != pivot_cols.end()) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[fc] = 1;
        for (size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// The split G2-invariant alternating 3-form on Sym^6(Q^2) in the monomial
// basis, normalized to integer coefficients. Its derivation algebra has
// dimension exactly 14, and it is preserved by every 7th symmetric power
// of a determinant-one 2x2 matrix.
std::vector<ThreeFormEntry> split_g2_table() {
    return {
        {0, 3, 6, Rational(-30)},
        {0, 4, 5, Rational(20)},
        {1, 2, 6, Rational(20)},
        {1, 3, 5, Rational(-5)},
        {2, 3, 4, Rational(2)},
    };
}

std::vector<ExactMatrix> g2_derivation_basis(const GroupSpec& spec) {
    const int n = 7;
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::vector<Rational> row(n * n, Rational(0));
                for (int m = 0; m < n; ++m) {
                    row[i * n + m] += spec.three_form(m, j, k);
                    row[j * n + m] += spec.three_form(i, m, k);
                    row[k * n + m] += spec.three_form(i, j, m);
                }
                rows.push_back(std::move(row));
            }
    auto basis_vecs = nullspace(std::move(rows), n * n);
    std::vector<ExactMatrix> basis;
    for (const auto& v : basis_vecs) {
        ExactMatrix X(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) X(i, j) = v[i * n + j];
        basis.push_back(std::move(X));
    }
    return basis;
}

}  // namespace

GroupSpec GroupSpec::sl(int n) {
    if (n < 2) throw std::invalid_argument("SL(n) needs n >= 2");
    GroupSpec s;
    s.kind_ = GroupKind::SL;
    s.n_ = n;
    return s;
}

GroupSpec GroupSpec::sp(int n, ExactMatrix J) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("Sp(n) needs even n >= 2");
    if (J.dim() != n) throw std::invalid_argument("form dimension mismatch");
    if (J.transpose() != -J) throw std::invalid_argument("symplectic form must be alternating");
    if (J.det() == 0) throw std::invalid_argument("symplectic form must be nondegenerate");
    GroupSpec s;
    s.kind_ = GroupKind::SP;
    s.n_ = n;
    s.form_ = std::move(J);
    return s;
}

GroupSpec GroupSpec::sp_standard(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("Sp(n) needs even n >= 2");
    int k = n / 2;
    ExactMatrix J(n);
    for (int i = 0; i < k; ++i) {
        J(i, k + i) = 1;
        J(k + i, i) = -1;
    }
    return sp(n, std::move(J));
}

GroupSpec GroupSpec::g2() { return g2(split_g2_table()); }

GroupSpec GroupSpec::g2(std::vector<ThreeFormEntry> table) {
    if (table.empty()) throw std::invalid_argument("G2 three-form table missing");
    GroupSpec s;
    s.kind_ = GroupKind::G2;
    s.n_ = 7;
    s.phi3_ = std::move(table);
    for (const auto& e : s.phi3_)
        if (e.i < 0 || e.i >= e.j || e.j >= e.k || e.k > 6)
            throw std::invalid_argument("G2 three-form table entries must have 0 <= i < j < k <= 6");
    // A generic alternating 3-form in dimension 7 has a 14-dimensional
    // derivation algebra; anything else means the table is degenerate.
    if (g2_derivation_basis(s).size() != 14)
        throw std::invalid_argument("G2 three-form table is degenerate (derivation dim != 14)");
    return s;
}

const ExactMatrix& GroupSpec::form() const {
    if (!form_) throw std::logic_error("group spec carries no bilinear form");
    return *form_;
}

const std::vector<ThreeFormEntry>& GroupSpec::three_form_table() const {
    if (kind_ != GroupKind::G2) throw std::logic_error("three-form only available for G2");
    return phi3_;
}

Rational GroupSpec::three_form(int i, int j, int k) const {
    if (i == j || j == k || i == k) return Rational(0);
    int idx[3] = {i, j, k};
    int sign = 1;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2 - a; ++b)
            if (idx[b] > idx[b + 1]) {
                std::swap(idx[b], idx[b + 1]);
                sign = -sign;
            }
    for (const auto& e : phi3_)
        if (e.i == idx[0] && e.j == idx[1] && e.k == idx[2])
            return sign > 0 ? e.value : -e.value;
    return Rational(0);
}

namespace {

MembershipReport report(bool ok, double residual, std::string detail) {
    return {ok, residual, std::move(detail)};
}

}  // namespace

MembershipReport member(const ExactMatrix& g, const GroupSpec& spec) {
    if (g.dim() != spec.dim())
        throw std::invalid_argument("dimension mismatch in membership test");
    switch (spec.kind()) {
        case GroupKind::SL: {
            Rational d = g.det();
            bool ok = d == 1;
            return report(ok, ok ? 0.0 : std::abs(to_double(d - 1)), "det");
        }
        case GroupKind::SP: {
            ExactMatrix lhs = g.transpose() * spec.form() * g;
            bool ok = lhs == spec.form();
            return report(ok, ok ? 0.0 : dist(lhs, spec.form()), "B^T J B = J");
        }
        case GroupKind::G2: {
            if (g.det() != 1) return report(false, std::abs(to_double(g.det() - 1)), "det");
            double worst = 0.0;
            const int n = 7;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k) {
                        Rational s(0);
                        for (int p = 0; p < n; ++p) {
                            if (g(i, p) == 0) continue;
                            for (int q = 0; q < n; ++q) {
                                if (g(j, q) == 0) continue;
                                for (int r = 0; r < n; ++r) {
                                    Rational c = spec.three_form(p, q, r);
                                    if (c != 0 && g(k, r) != 0) s += g(i, p) * g(j, q) * g(k, r) * c;
                                }
                            }
                        }
                        Rational diff = s - spec.three_form(i, j, k);
                        if (diff != 0) worst = std::max(worst, std::abs(to_double(diff)));
                    }
            return report(worst == 0.0, worst, "3-form preservation");
        }
    }
    throw std::logic_error("unreachable");
}

MembershipReport member(const RealMatrix& g, const GroupSpec& spec, double tol) {
    if (g.rows() != spec.dim() || g.cols() != spec.dim())
        throw std::invalid_argument("dimension mismatch in membership test");
    switch (spec.kind()) {
        case GroupKind::SL: {
            double r = std::abs(g.determinant() - 1.0);
            return report(r <= tol, r, "det");
        }
        case GroupKind::SP: {
            RealMatrix J = to_real(spec.form());
            double r = dist(g.transpose() * J * g, J);
            return report(r <= tol, r, "B^T J B = J");
        }
        case GroupKind::G2: {
            double r = std::abs(g.determinant() - 1.0);
            const int n = 7;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k) {
                        double s = 0;
                        for (int p = 0; p < n; ++p)
                            for (int q = 0; q < n; ++q)
                                for (int rr = 0; rr < n; ++rr) {
                                    Rational c = spec.three_form(p, q, rr);
                                    if (c != 0) s += g(i, p) * g(j, q) * g(k, rr) * to_double(c);
                                }
                        r = std::max(r, std::abs(s - to_double(spec.three_form(i, j, k))));
                    }
            return report(r <= tol, r, "3-form preservation");
        }
    }
    throw std::logic_error("unreachable");
}

ExactMatrix variation(const ExactMatrix& A, const GroupSpec& spec) {
    const int n = A.dim();
    if (n != spec.dim()) throw std::invalid_argument("dimension mismatch in variation");
    switch (spec.kind()) {
        case GroupKind::SL: {
            ExactMatrix out = A;
            Rational shift = A.trace() / Rational(n);
            for (int i = 0; i < n; ++i) out(i, i) -= shift;
            return out;
        }
        case GroupKind::SP: {
            if (A.det() == 0) throw std::domain_error("variation of singular matrix");
            const ExactMatrix& J = spec.form();
            ExactMatrix out = (A - J.inverse() * A.transpose() * J) * Rational(1, 2);
            return out;
        }
        case GroupKind::G2: {
            // trace-form projection onto the Lie algebra
            auto basis = lie_algebra_basis(spec);
            const int d = static_cast<int>(basis.size());
            std::vector<std::vector<Rational>> gram(d, std::vector<Rational>(d + 1, Rational(0)));
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j)
                    gram[i][j] = (basis[i].transpose() * basis[j]).trace();
                gram[i][d] = (basis[i].transpose() * A).trace();
            }
            // solve the (positive definite) Gram system
            for (int c = 0; c < d; ++c) {
                int pr = c;
                while (gram[pr][c] == 0) ++pr;
                std::swap(gram[c], gram[pr]);
                Rational pv = gram[c][c];
                for (int j = c; j <= d; ++j) gram[c][j] /= pv;
                for (int r = 0; r < d; ++r) {
                    if (r == c || gram[r][c] == 0) continue;
                    Rational f = gram[r][c];
                    for (int j = c; j <= d; ++j) gram[r][j] -= f * gram[c][j];
                }
            }
            ExactMatrix out(7);
            for (int i = 0; i < d; ++i) out = out + basis[i] * gram[i][d];
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

RealMatrix variation(const RealMatrix& A, const GroupSpec& spec) {
    const int n = static_cast<int>(A.rows());
    if (n != spec.dim()) throw std::invalid_argument("dimension mismatch in variation");
    switch (spec.kind()) {
        case GroupKind::SL: {
            RealMatrix out = A;
            out.diagonal().array() -= A.trace() / n;
            return out;
        }
        case GroupKind::SP: {
            RealMatrix J = to_real(spec.form());
            RealMatrix Jinv = to_real(spec.form().inverse());
            return 0.5 * (A - Jinv * A.transpose() * J);
        }
        case GroupKind::G2: {
            auto basis = lie_algebra_basis(spec);
            const int d = static_cast<int>(basis.size());
            Eigen::MatrixXd G(d, d);
            Eigen::VectorXd b(d);
            std::vector<RealMatrix> rb;
            rb.reserve(d);
            for (const auto& B : basis) rb.push_back(to_real(B));
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) G(i, j) = (rb[i].transpose() * rb[j]).trace();
                b(i) = (rb[i].transpose() * A).trace();
            }
            Eigen::VectorXd c = G.ldlt().solve(b);
            RealMatrix out = RealMatrix::Zero(7, 7);
            for (int i = 0; i < d; ++i) out += c(i) * rb[i];
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

ExactMatrix centralizer_involution(const ExactMatrix& x, const ExactMatrix& A,
                                   const GroupSpec& spec) {
    if (spec.kind() != GroupKind::SP)
        throw std::invalid_argument("centralizer involution is defined for SP only");
    if (x.dim() != spec.dim() || A.dim() != spec.dim())
        throw std::invalid_argument("dimension mismatch in centralizer involution");
    if (!x.commutes_with(A))
        throw std::invalid_argument("involution input does not centralize A");
    const ExactMatrix& J = spec.form();
    return J.inverse() * x.transpose() * J;
}

std::vector<ExactMatrix> lie_algebra_basis(const GroupSpec& spec) {
    const int n = spec.dim();
    std::vector<ExactMatrix> basis;
    switch (spec.kind()) {
        case GroupKind::SL: {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    ExactMatrix E(n);
                    E(i, j) = 1;
                    basis.push_back(std::move(E));
                }
            for (int i = 0; i + 1 < n; ++i) {
                ExactMatrix H(n);
                H(i, i) = 1;
                H(i + 1, i + 1) = -1;
                basis.push_back(std::move(H));
            }
            return basis;
        }
        case GroupKind::SP: {
            // X = J^{-1} S with S symmetric spans {X : X^T J + J X = 0}
            ExactMatrix Jinv = spec.form().inverse();
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    ExactMatrix S(n);
                    S(i, j) = 1;
                    S(j, i) = 1;
                    basis.push_back(Jinv * S);
                }
            return basis;
        }
        case GroupKind::G2: {
            basis = g2_derivation_basis(spec);
            if (basis.size() != 14)
                throw std::runtime_error("G2 derivation condition has wrong null-space dimension");
            return basis;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace twistq
