#include "twistq/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistq {

namespace {

void push_reduced(std::vector<Letter>& out, int g, long e) {
    if (e == 0) return;
    if (!out.empty() && out.back().gen == g) {
        out.back().exp += e;
        if (out.back().exp == 0) out.pop_back();
        return;
    }
    out.push_back({g, e});
}

std::vector<Letter> reduce(const std::vector<Letter>& raw) {
    std::vector<Letter> out;
    for (const auto& l : raw) push_reduced(out, l.gen, l.exp);
    return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(reduce(letters)) {}

Word Word::generator(int g, long exp) {
    if (g < 0) throw std::invalid_argument("negative generator index");
    return Word({{g, exp}});
}

long Word::length() const {
    return std::accumulate(letters_.begin(), letters_.end(), 0L,
                           [](long acc, const Letter& l) { return acc + std::abs(l.exp); });
}

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back({it->gen, -it->exp});
    Word w;
    w.letters_ = std::move(out);  // inverse of a reduced word is reduced
    return w;
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> out = letters_;
    for (const auto& l : rhs.letters_) push_reduced(out, l.gen, l.exp);
    Word w;
    w.letters_ = std::move(out);
    return w;
}

Word Word::pow(long k) const {
    if (k == 0) return Word();
    Word base = k > 0 ? *this : inverse();
    Word acc;
    for (long i = 0; i < std::abs(k); ++i) acc = acc * base;
    return acc;
}

Word Word::cyclically_reduced() const {
    std::vector<Letter> ls = letters_;
    while (ls.size() >= 2) {
        Letter& f = ls.front();
        Letter& b = ls.back();
        if (f.gen != b.gen) break;
        long c = std::min(std::abs(f.exp), std::abs(b.exp));
        if ((f.exp > 0) == (b.exp > 0)) break;
        f.exp += (f.exp > 0 ? -c : c);
        b.exp += (b.exp > 0 ? -c : c);
        if (b.exp == 0) ls.pop_back();
        if (!ls.empty() && ls.front().exp == 0) ls.erase(ls.begin());
        if (ls.size() == 1) break;
    }
    return Word(std::move(ls));
}

Word Word::substituted(const std::vector<Word>& images) const {
    Word out;
    for (const auto& l : letters_) {
        if (l.gen >= static_cast<int>(images.size()))
            throw std::out_of_range("substitution does not cover generator index " +
                                    std::to_string(l.gen));
        out = out * images[l.gen].pow(l.exp);
    }
    return out;
}

int Word::max_generator() const {
    int m = -1;
    for (const auto& l : letters_) m = std::max(m, l.gen);
    return m;
}

Word commutator(const Word& u, const Word& v) {
    return u * v * u.inverse() * v.inverse();
}

Word free_reduce(const std::vector<Letter>& raw) { return Word(raw); }

int Presentation::generator_index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

Presentation surface_presentation(int genus) {
    if (genus < 1) throw std::invalid_argument("genus must be >= 1");
    Presentation p;
    for (int i = 1; i <= genus; ++i) {
        p.names.push_back("a" + std::to_string(i));
        p.names.push_back("b" + std::to_string(i));
    }
    Word rel;
    for (int i = 0; i < genus; ++i)
        rel = rel * commutator(Word::generator(2 * i), Word::generator(2 * i + 1));
    p.relators.push_back(rel);
    p.genus = genus;
    return p;
}

Presentation orbifold_group() {
    Presentation p;
    p.names = {"a", "b"};
    Word c = commutator(Word::generator(0), Word::generator(1));
    p.relators.push_back(c * c);
    return p;
}

std::string format_word(const Word& w, const Presentation& pres) {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : w.letters()) {
        if (l.gen >= pres.num_generators())
            throw std::out_of_range("word uses generator outside presentation");
        std::string name = pres.names[l.gen];
        if (l.exp < 0) name[0] = static_cast<char>(std::toupper(name[0]));
        for (long i = 0; i < std::abs(l.exp); ++i) {
            if (!first) os << ' ';
            os << name;
            first = false;
        }
    }
    return first ? "1" : os.str();
}

Word parse_word(const std::string& text, const Presentation& pres) {
    std::istringstream is(text);
    std::string tok;
    std::vector<Letter> letters;
    while (is >> tok) {
        if (tok == "1") continue;
        bool inverse = std::isupper(static_cast<unsigned char>(tok[0])) != 0;
        std::string name = tok;
        name[0] = static_cast<char>(std::tolower(name[0]));
        int g = pres.generator_index(name);
        if (g < 0) throw std::invalid_argument("unknown generator \"" + tok + "\"");
        letters.push_back({g, inverse ? -1L : 1L});
    }
    return Word(letters);
}

HomologyClass abelianize(const Word& w, const Presentation& pres) {
    HomologyClass v(pres.num_generators(), 0);
    for (const auto& l : w.letters()) {
        if (l.gen >= pres.num_generators())
            throw std::out_of_range("word uses generator outside presentation");
        v[l.gen] += l.exp;
    }
    return v;
}

long algebraic_intersection(const Word& u, const Word& v, const Presentation& pres) {
    if (!pres.genus)
        throw std::invalid_argument("intersection pairing needs a surface presentation");
    HomologyClass x = abelianize(u, pres), y = abelianize(v, pres);
    long s = 0;
    for (int i = 0; i < *pres.genus; ++i)
        s += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
    return s;
}

}  // namespace twistq
