#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "twistq/exact_matrix.hpp"
#include "twistq/word.hpp"

namespace twistq {

// Permutation on {0, ..., degree-1}; images[i] is the image of point i.
struct Permutation {
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }
    int apply(int x) const { return images[x]; }
    Permutation inverse() const;
    static Permutation identity(int degree);
    // Cycle notation on 1-based points, e.g. {{1,2,3,4}} for (1 2 3 4).
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

// Assignment of a permutation to each generator of a presentation.
struct PermutationRep {
    int degree = 0;
    std::vector<Permutation> images;

    int act(int point, const Word& w) const;  // right action, word read left to right
    bool is_transitive() const;
    bool respects(const Presentation& pres) const;  // relators act trivially
};

// Finite-index subgroup data from Reidemeister-Schreier: a prefix-closed
// transversal, the Schreier generators of the basepoint stabilizer, and
// rewriting tables. A standard-form dictionary, when attached, expresses
// the generators of a standard surface presentation as ambient words.
struct SubgroupData {
    Presentation ambient;
    PermutationRep rep;
    int basepoint = 0;
    std::vector<Word> transversal;                  // indexed by coset point
    std::vector<Word> generators;                   // Schreier generators
    std::vector<std::vector<int>> edge_generator;   // [point][gen] -> signed 1-based id, 0 = tree
    std::vector<Word> rewritten_relators;           // ambient relators through every coset

    std::optional<std::vector<Word>> standard_dictionary;  // 2g' ambient words
    std::optional<Presentation> standard_presentation;

    int index() const { return rep.degree; }
};

// Stabilizer of `basepoint` under a transitive permutation representation.
// Throws when the action is not transitive or some relator acts nontrivially.
SubgroupData schreier_subgroup(const Presentation& group, const PermutationRep& rep,
                               int basepoint);

// Rewrites a word of the subgroup (its permutation image fixes the
// basepoint) as a word in the Schreier generators.
Word rewrite_in_subgroup(const Word& w, const SubgroupData& sub);

// Rank of the abelianization of the subgroup presentation (generator count
// minus exact rank of the relator exponent matrix).
int abelianization_rank(const SubgroupData& sub);

// Best-effort conversion of the Reidemeister-Schreier presentation to a
// standard surface presentation: Tietze eliminations followed by a bounded
// best-first search over Nielsen moves on the relator. On success the
// returned words (in ambient generators) satisfy the standard relator in
// the ambient group; returns nullopt when the budget runs out.
std::optional<std::vector<Word>> standardize(const SubgroupData& sub, int max_states = 200000);

// Index-4 stabilizer of <a,b | [a,b]^2> under a -> (1 2 3 4), b -> (1 3),
// with the shipped genus-2 standard dictionary attached.
SubgroupData orbifold_genus2_subgroup();

// Kernel of a1 -> 1 in Z/degree on a standard surface presentation, with
// the closed-form standard dictionary for the cyclic cover attached
// (cover genus = degree * (g - 1) + 1).
SubgroupData cyclic_cover_subgroup(const Presentation& surface, int degree);

// Evaluates the attached dictionary through a matrix representation of the
// ambient group and checks the standard relator lands on the identity
// (up to the ambient center when `allow_center` is set).
bool certify_dictionary(const SubgroupData& sub,
                        const std::function<ExactMatrix(const Word&)>& evaluate,
                        bool allow_center = false);

}  // namespace twistq
