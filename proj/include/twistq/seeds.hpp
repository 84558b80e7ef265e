#pragma once

#include "twistq/representation.hpp"
#include "twistq/subgroup.hpp"

namespace twistq {

// The Long-Reid assignment a -> [[3, 2/3],[0, 1/3]], b -> [[0,-2],[1/2, 83/8]]
// for <a,b | [a,b]^2>. The commutator squares to -I (the relator is satisfied
// centrally; see README), so the representation is tagged central_relator.
// Its restriction to surface subgroups is an honest SL(2,Q) representation.
Representation long_reid();

// Exact discrete faithful genus-g representation into SL(2,Q): dictionary
// words of the index-4 subgroup of the Long-Reid group (genus 2), then a
// cyclic cover of degree genus-1 on top of it (genus >= 3). The standard
// relator is certified to land exactly on the identity at construction.
Representation surface_seed(int genus);

// Action of a 2x2 matrix on degree-(n-1) binary forms in the monomial basis
// x^(n-1-j) y^j; entries are integer polynomials in the entries of m, the
// map is multiplicative and determinant-one on SL(2).
ExactMatrix sym_power(const ExactMatrix& m, int n);
RealMatrix sym_power(const RealMatrix& m, int n);

// The Sym^(n-1)-invariant alternating form for even n: antidiagonal with
// entries (-1)^i binom(n-1, i).
ExactMatrix induced_form(int n);

// Composition sym_power . surface_seed(genus): exact Hitchin seed in
// SL(n,Q), Sp(n,Q) (even n, induced form), or G2(Q) (n = 7). Group
// membership and the relator identity are certified exactly.
Representation hitchin_seed(int genus, int n, const GroupSpec& spec);

// GroupSpec consistent with hitchin_seed for the given kind and n.
GroupSpec seed_group_spec(GroupKind kind, int n);

}  // namespace twistq
