#pragma once

#include <optional>
#include <string>
#include <vector>

namespace twistq {

// One run of a freely reduced word: generator index and a nonzero exponent.
struct Letter {
    int gen;
    long exp;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in the generators of some presentation, run-length
// encoded. The empty word is the identity.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);  // reduces on construction

    static Word generator(int g, long exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    long length() const;  // sum of |exp|

    Word inverse() const;
    Word operator*(const Word& rhs) const;
    Word pow(long k) const;
    Word conjugated_by(const Word& c) const { return c * (*this) * c.inverse(); }

    // Cyclic reduction: strips matching prefix/suffix inverse pairs.
    Word cyclically_reduced() const;

    // Replaces generator g by images[g]; images must cover every generator
    // that occurs.
    Word substituted(const std::vector<Word>& images) const;

    int max_generator() const;  // -1 for the identity

    friend bool operator==(const Word&, const Word&) = default;

  private:
    std::vector<Letter> letters_;
};

Word commutator(const Word& u, const Word& v);

inline Word free_reduce(const Word& w) { return w; }  // Words are always reduced
Word free_reduce(const std::vector<Letter>& raw);

// Finitely presented group: named generators plus relators. A standard
// surface presentation additionally records its genus.
struct Presentation {
    std::vector<std::string> names;
    std::vector<Word> relators;
    std::optional<int> genus;

    int num_generators() const { return static_cast<int>(names.size()); }
    int generator_index(const std::string& name) const;  // -1 when absent
};

// Genus-g surface group: generators a1,b1,...,ag,bg with relator
// [a1,b1]...[ag,bg]; a_i sits at index 2(i-1), b_i at 2(i-1)+1.
Presentation surface_presentation(int genus);

// The one-relator group <a,b | [a,b]^2> underlying the Long-Reid seed.
Presentation orbifold_group();

// Word <-> string in the surface alphabet: space-separated letters, one
// token per unit exponent, uppercase first letter meaning inverse
// ("a1 b1 A1 B1").
std::string format_word(const Word& w, const Presentation& pres);
Word parse_word(const std::string& text, const Presentation& pres);

// Exponent-sum vector in Z^{num_generators}.
using HomologyClass = std::vector<long>;
HomologyClass abelianize(const Word& w, const Presentation& pres);

// Symplectic pairing of homology classes on a surface presentation:
// sum_i (x_{a_i} y_{b_i} - x_{b_i} y_{a_i}). Equals the algebraic
// intersection number of the underlying curves, with i(a1, b1) = +1.
long algebraic_intersection(const Word& u, const Word& v, const Presentation& pres);

}  // namespace twistq
