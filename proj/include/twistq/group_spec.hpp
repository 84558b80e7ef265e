#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twistq/exact_matrix.hpp"
#include "twistq/real_linalg.hpp"

namespace twistq {

enum class GroupKind { SL, SP, G2 };

std::string to_string(GroupKind k);
GroupKind group_kind_from_string(const std::string& s);

// Entry of an alternating 3-form table: phi(e_i, e_j, e_k) = value for
// i < j < k; all other index triples follow by antisymmetry.
struct ThreeFormEntry {
    int i, j, k;
    Rational value;
};

// Target-group descriptor: SL(n), Sp(n, J) for an alternating form J, or
// G2 as the stabilizer of a 3-form on Q^7.
class GroupSpec {
  public:
    static GroupSpec sl(int n);
    static GroupSpec sp(int n, ExactMatrix J);     // validates J^T = -J, det != 0
    static GroupSpec sp_standard(int n);           // block form [[0, I],[-I, 0]]
    static GroupSpec g2();                         // shipped split 3-form
    static GroupSpec g2(std::vector<ThreeFormEntry> table);

    GroupKind kind() const { return kind_; }
    int dim() const { return n_; }
    const ExactMatrix& form() const;               // SP only
    const std::vector<ThreeFormEntry>& three_form_table() const;  // G2 only

    // phi(e_i, e_j, e_k) with antisymmetric extension.
    Rational three_form(int i, int j, int k) const;

  private:
    GroupSpec() = default;
    GroupKind kind_ = GroupKind::SL;
    int n_ = 0;
    std::optional<ExactMatrix> form_;
    std::vector<ThreeFormEntry> phi3_;
};

struct MembershipReport {
    bool member = false;
    double residual = 0.0;
    std::string detail;
};

// Exact membership: SL: det = 1; SP: B^T J B = J; G2: det = 1 and the
// 3-form is preserved on all basis triples.
MembershipReport member(const ExactMatrix& g, const GroupSpec& spec);
// Float membership with tolerance on the same residuals.
MembershipReport member(const RealMatrix& g, const GroupSpec& spec, double tol);

// The variation map generating twist one-parameter subgroups:
//   SL: A - (Tr A / n) I
//   SP: (A - J^{-1} A^T J)/2, which is (A - A^{-1})/2 on Sp itself
//   G2: trace-form projection of A onto the 14-dimensional Lie algebra
// Output is trace-free and commutes with regular semisimple A in the group.
ExactMatrix variation(const ExactMatrix& A, const GroupSpec& spec);
RealMatrix variation(const RealMatrix& A, const GroupSpec& spec);

// tau(x) = J^{-1} x^T J on the centralizer algebra Q[A] of a symplectic A:
// an anti-automorphism with tau(p(A)) = p(A^{-1}) and tau^2 = id. The
// matrix A is checked to commute with x.
ExactMatrix centralizer_involution(const ExactMatrix& x, const ExactMatrix& A,
                                   const GroupSpec& spec);

// Basis of the Lie algebra: n^2-1 (SL), n(n+1)/2 (SP), 14 (G2, solved
// exactly from the derivation condition of the 3-form).
std::vector<ExactMatrix> lie_algebra_basis(const GroupSpec& spec);

}  // namespace twistq
