#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qrmat/exactring.hpp"
#include "qrmat/superdata.hpp"

namespace qrmat {

/// Word over the alphabet {1..s} of simple-root letters, ordered
/// lexicographically with 1 < 2 < ... < s.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> l) : letters(std::move(l)) {}

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    bool operator<(const Word& o) const { return letters < o.letters; }
    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return !(*this == o); }

    Word appended(int letter) const {
        Word w = *this;
        w.letters.push_back(letter);
        return w;
    }
    friend Word operator+(const Word& a, const Word& b) {
        Word w = a;
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        return w;
    }
    std::string str() const;
};

Weight word_degree(const SuperData& sd, const Word& w);
int word_parity(const SuperData& sd, const Word& w);

/// Smaller than all of its proper right factors.
bool is_lyndon(const Word& w);

/// Unique factorization into non-increasing Lyndon words.
std::vector<Word> canonical_factorization(const Word& w);

/// l = l1 l2 with l1 the longest proper Lyndon prefix; requires |l| >= 2
/// and l Lyndon.
std::pair<Word, Word> costandard_factorization(const Word& l);

/// Element of the free superalgebra on the alphabet: a finite QLaurent
/// combination of words.
struct FreeElem {
    std::map<Word, QLaurent> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Word& w, const QLaurent& c);
    FreeElem& operator+=(const FreeElem& o);
    FreeElem& operator-=(const FreeElem& o);
    friend FreeElem operator+(FreeElem a, const FreeElem& b) { return a += b; }
    friend FreeElem operator-(FreeElem a, const FreeElem& b) { return a -= b; }
    FreeElem scaled(const QLaurent& c) const;
    bool operator==(const FreeElem& o) const { return terms == o.terms; }
    /// Lexicographically largest word with nonzero coefficient.
    Word leading_word() const;

    static FreeElem single(const Word& w) {
        FreeElem x;
        x.terms.emplace(w, QLaurent(1));
        return x;
    }
};

/// q-shuffle product (bilinear extension of the letter recursion).
FreeElem shuffle(const SuperData& sd, const FreeElem& x, const FreeElem& y);

/// x <> y - (-1)^{p(x)p(y)} q^{(deg x, deg y)} y <> x for homogeneous x, y.
FreeElem shuffle_bracket(const SuperData& sd, const FreeElem& x, const FreeElem& y);

/// R_l = Xi([l]): the q-bracketing of a Lyndon word evaluated in the
/// shuffle algebra.
FreeElem shuffle_root_vector(const SuperData& sd, const Word& lyndon);

/// Concatenation product of free-algebra elements.
FreeElem concat(const FreeElem& x, const FreeElem& y);

/// The q-bracketing [l] of a Lyndon word in the free algebra itself; its
/// words index the monomial expansion of the root vector, which is what
/// the permutation-sum pairing consumes.
FreeElem concat_bracket(const SuperData& sd, const Word& lyndon);

/// P(alpha) and N(alpha) for alpha expressed through its multiset of
/// simple-root letters.
struct PNValue {
    int p = 0;  // Z2
    int n = 0;  // integer (the symmetric bilinear sums are integral here)
};
PNValue pn_value(const SuperData& sd, const std::vector<int>& simple_coeffs);
PNValue pn_of_root(const SuperData& sd, const Weight& gamma);

int root_height(const SuperData& sd, const Weight& gamma);

/// The dominant Lyndon words of the instance, with their degrees and the
/// generating-family tag used by the closed pairing formulas.
struct DominantWord {
    Word word;
    Weight degree;
    int family;  // case-specific tag, 1-based
    int i, j;    // indices in the family parametrization (j = 0 if unused)
};

/// Returned sorted lexicographically by word; the degree map is a bijection
/// onto the reduced positive system.
std::vector<DominantWord> dominant_lyndon(const SuperData& sd);

/// The costandard split of a non-simple reduced positive root, as a pair of
/// reduced positive roots; throws SimpleRoot on simple input.
std::pair<Weight, Weight> costandard_split(const SuperData& sd, const Weight& gamma);

/// The sum over matching permutations defining the twisted pairing of two
/// monomial words; zero for words of different lengths. Guarded at d <= 9.
QLaurent pair_tw_words(const SuperData& sd, const Word& u, const Word& v);

/// Bilinear extension to free-algebra elements.
QLaurent pair_tw(const SuperData& sd, const FreeElem& x, const FreeElem& y);

/// Closed form of (R_l, R_l)^tw for a dominant Lyndon word.
QLaurent pair_tw_closed_form(const SuperData& sd, const DominantWord& dw);

/// C_{gamma,k}: the q-integer product entering power pairings.
QLaurent power_pairing_factor(const SuperData& sd, const Weight& gamma, int k);

}  // namespace qrmat
