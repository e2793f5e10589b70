#include "qrmat/lyndon.hpp"

#include <algorithm>
#include <sstream>

namespace qrmat {

std::string Word::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < letters.size(); ++k) {
        if (k) os << " ";
        os << letters[k];
    }
    os << "]";
    return os.str();
}

Weight word_degree(const SuperData& sd, const Word& w) {
    Weight d(sd.weight_rank());
    for (int l : w.letters) d += sd.roots.simple[l - 1];
    return d;
}

int word_parity(const SuperData& sd, const Word& w) {
    int p = 0;
    for (int l : w.letters) p += sd.root_parity(sd.roots.simple[l - 1]);
    return p % 2;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    const auto& l = w.letters;
    for (size_t k = 1; k < l.size(); ++k) {
        std::vector<int> suffix(l.begin() + k, l.end());
        if (!(l < suffix)) return false;
    }
    return true;
}

std::vector<Word> canonical_factorization(const Word& w) {
    // Duval's algorithm.
    std::vector<Word> out;
    const auto& v = w.letters;
    size_t i = 0;
    const size_t n = v.size();
    while (i < n) {
        size_t j = i + 1, k = i;
        while (j < n && v[k] <= v[j]) {
            if (v[k] < v[j])
                k = i;
            else
                ++k;
            ++j;
        }
        while (i <= k) {
            out.push_back(Word(std::vector<int>(v.begin() + i, v.begin() + i + (j - k))));
            i += j - k;
        }
    }
    return out;
}

std::pair<Word, Word> costandard_factorization(const Word& l) {
    if (!is_lyndon(l) || l.size() < 2) throw NotLyndon(l.str());
    for (int cut = l.size() - 1; cut >= 1; --cut) {
        Word l1(std::vector<int>(l.letters.begin(), l.letters.begin() + cut));
        if (is_lyndon(l1)) {
            Word l2(std::vector<int>(l.letters.begin() + cut, l.letters.end()));
            return {l1, l2};
        }
    }
    throw NotLyndon(l.str());
}

void FreeElem::add(const Word& w, const QLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

FreeElem& FreeElem::operator+=(const FreeElem& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

FreeElem& FreeElem::operator-=(const FreeElem& o) {
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
}

FreeElem FreeElem::scaled(const QLaurent& c) const {
    FreeElem r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms) r.terms.emplace(w, v * c);
    return r;
}

Word FreeElem::leading_word() const {
    if (terms.empty()) throw Error("leading word of zero");
    return terms.rbegin()->first;
}

namespace {

/// Shuffle of two plain words via the prefix-table recursion.
FreeElem shuffle_words(const SuperData& sd, const Word& u, const Word& v) {
    const int a = u.size(), b = v.size();
    // degree and parity of every prefix of u
    std::vector<int> upar(a + 1, 0);
    std::vector<Weight> udeg(a + 1, Weight(sd.weight_rank()));
    for (int k = 0; k < a; ++k) {
        const Weight& al = sd.roots.simple[u.letters[k] - 1];
        upar[k + 1] = (upar[k] + sd.root_parity(al)) % 2;
        udeg[k + 1] = udeg[k] + al;
    }
    std::vector<std::vector<FreeElem>> table(a + 1, std::vector<FreeElem>(b + 1));
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            if (i == 0) {
                table[i][j] = FreeElem::single(
                    Word(std::vector<int>(v.letters.begin(), v.letters.begin() + j)));
                continue;
            }
            if (j == 0) {
                table[i][j] = FreeElem::single(
                    Word(std::vector<int>(u.letters.begin(), u.letters.begin() + i)));
                continue;
            }
            // (x i) <> (y j) = (x <> (y j)) i + sign q^{-(deg(xi), alpha_j)} ((x i) <> y) j
            FreeElem acc;
            for (const auto& [w, c] : table[i - 1][j].terms)
                acc.add(w.appended(u.letters[i - 1]), c);
            int jl = v.letters[j - 1];
            const Weight& aj = sd.roots.simple[jl - 1];
            int sign = (upar[i] * sd.root_parity(aj)) % 2 ? -1 : 1;
            QLaurent coeff = QLaurent::monomial(Rational(sign), -sd.pair4(udeg[i], aj));
            for (const auto& [w, c] : table[i][j - 1].terms)
                acc.add(w.appended(jl), c * coeff);
            table[i][j] = std::move(acc);
        }
    return table[a][b];
}

}  // namespace

FreeElem shuffle(const SuperData& sd, const FreeElem& x, const FreeElem& y) {
    FreeElem r;
    for (const auto& [u, cu] : x.terms)
        for (const auto& [v, cv] : y.terms) {
            FreeElem s = shuffle_words(sd, u, v);
            for (const auto& [w, c] : s.terms) r.add(w, c * cu * cv);
        }
    return r;
}

FreeElem shuffle_bracket(const SuperData& sd, const FreeElem& x, const FreeElem& y) {
    if (x.is_zero() || y.is_zero()) return FreeElem();
    const Word& wx = x.terms.begin()->first;
    const Word& wy = y.terms.begin()->first;
    int sign = (word_parity(sd, wx) * word_parity(sd, wy)) % 2 ? -1 : 1;
    QLaurent coeff = QLaurent::monomial(Rational(sign),
                                        sd.pair4(word_degree(sd, wx), word_degree(sd, wy)));
    FreeElem r = shuffle(sd, x, y);
    r -= shuffle(sd, y, x).scaled(coeff);
    return r;
}

FreeElem shuffle_root_vector(const SuperData& sd, const Word& lyndon) {
    if (lyndon.size() == 1) return FreeElem::single(lyndon);
    auto [l1, l2] = costandard_factorization(lyndon);
    return shuffle_bracket(sd, shuffle_root_vector(sd, l1), shuffle_root_vector(sd, l2));
}

FreeElem concat(const FreeElem& x, const FreeElem& y) {
    FreeElem r;
    for (const auto& [u, cu] : x.terms)
        for (const auto& [v, cv] : y.terms) r.add(u + v, cu * cv);
    return r;
}

FreeElem concat_bracket(const SuperData& sd, const Word& lyndon) {
    if (lyndon.size() == 1) return FreeElem::single(lyndon);
    auto [l1, l2] = costandard_factorization(lyndon);
    FreeElem a = concat_bracket(sd, l1), b = concat_bracket(sd, l2);
    int sign = (word_parity(sd, l1) * word_parity(sd, l2)) % 2 ? -1 : 1;
    QLaurent coeff = QLaurent::monomial(
        Rational(sign), sd.pair4(word_degree(sd, l1), word_degree(sd, l2)));
    FreeElem r = concat(a, b);
    r -= concat(b, a).scaled(coeff);
    return r;
}

PNValue pn_value(const SuperData& sd, const std::vector<int>& k) {
    PNValue r;
    const int s = sd.s;
    long p = 0, n = 0;
    for (int i = 0; i < s; ++i) {
        int pi = sd.root_parity(sd.roots.simple[i]);
        int aii = sd.roots.cartan[i][i];
        // within the same letter: C(k_i, 2) unordered pairs
        long pairs = static_cast<long>(k[i]) * (k[i] - 1) / 2;
        p += pairs * pi;  // pi * pi = pi over Z2
        n += pairs * aii;
        for (int j = i + 1; j < s; ++j) {
            long cross = static_cast<long>(k[i]) * k[j];
            p += cross * pi * sd.root_parity(sd.roots.simple[j]);
            n += cross * sd.roots.cartan[i][j];
        }
    }
    r.p = static_cast<int>(((p % 2) + 2) % 2);
    r.n = static_cast<int>(n);
    return r;
}

PNValue pn_of_root(const SuperData& sd, const Weight& gamma) {
    return pn_value(sd, sd.simple_root_coeffs(gamma));
}

int root_height(const SuperData& sd, const Weight& gamma) {
    auto k = sd.simple_root_coeffs(gamma);
    int h = 0;
    for (int v : k) h += v;
    return h;
}

namespace {

Word run(int from, int to) {  // ascending run [from..to]; empty when from > to
    std::vector<int> l;
    for (int k = from; k <= to; ++k) l.push_back(k);
    return Word(std::move(l));
}

Word run_down(int from, int to) {  // descending run [from..to]; empty when from < to
    std::vector<int> l;
    for (int k = from; k >= to; --k) l.push_back(k);
    return Word(std::move(l));
}

}  // namespace

std::vector<DominantWord> dominant_lyndon(const SuperData& sd) {
    std::vector<DominantWord> out;
    const int s = sd.s;
    auto push = [&](Word w, int family, int i, int j) {
        out.push_back(DominantWord{w, word_degree(sd, w), family, i, j});
    };
    if (sd.family == Family::GlA) {
        for (int i = 1; i <= s; ++i)
            for (int j = i; j <= s; ++j) push(run(i, j), 1, i, j);
    } else if (sd.case_tag == CaseTag::OddM) {
        for (int i = 1; i <= s; ++i)
            for (int j = i; j <= s; ++j) push(run(i, j), 1, i, j);
        for (int i = 1; i <= s; ++i)
            for (int j = i + 1; j <= s; ++j) push(run(i, s) + run_down(s, j), 2, i, j);
    } else if (sd.case_tag == CaseTag::EvenM_sEven) {
        for (int i = 1; i <= s - 1; ++i)
            for (int j = i; j <= s - 1; ++j) push(run(i, j), 1, i, j);
        for (int i = 1; i <= s - 1; ++i)  // [i..(s-2) s]; i = s-1 gives the single [s]
            push(run(i, s - 2).appended(s), 2, i, 0);
        for (int i = 1; i <= s - 1; ++i)
            for (int j = i + 1; j <= s - 1; ++j)
                push(run(i, s - 2).appended(s) + run_down(s - 1, j), 3, i, j);
        for (int i = 1; i <= s - 1; ++i) {
            if (word_parity(sd, run(i, s - 1)) == 1)
                push(run(i, s - 1) + run(i, s - 2).appended(s), 4, i, 0);
        }
    } else {  // EvenM_sOdd
        for (int i = 1; i <= s; ++i)
            for (int j = i; j <= s; ++j) push(run(i, j), 1, i, j);
        for (int i = 1; i <= s - 1; ++i)
            for (int j = i + 1; j <= s - 1; ++j)
                push(run(i, s) + run_down(s - 1, j), 2, i, j);
        for (int i = 1; i <= s - 1; ++i) {
            if (word_parity(sd, run(i, s - 1)) == 0)
                push(run(i, s - 1) + run(i, s - 1).appended(s), 3, i, 0);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const DominantWord& a, const DominantWord& b) { return a.word < b.word; });
    return out;
}

std::pair<Weight, Weight> costandard_split(const SuperData& sd, const Weight& gamma) {
    const int s = sd.s;
    for (const Weight& a : sd.roots.simple)
        if (gamma == a) throw SimpleRoot();
    // classify the root through its eps-coefficients
    std::vector<int> c(sd.weight_rank());
    for (int k = 0; k < sd.weight_rank(); ++k) c[k] = gamma.half2[k] / 2;
    auto eps = [&](int i) { return sd.eps(i); };
    if (sd.family == Family::GlA) {
        int i = -1, j = -1;
        for (int k = 1; k <= sd.N; ++k) {
            if (c[k - 1] == 1) i = k;
            if (c[k - 1] == -1) j = k;
        }
        return {eps(i) - eps(j - 1), eps(j - 1) - eps(j)};
    }
    int i = 0, j = 0, plus = 0, minus = 0, twos = 0;
    for (int k = 1; k <= s; ++k) {
        if (c[k - 1] == 2) {
            i = k;
            ++twos;
        } else if (c[k - 1] == 1) {
            if (i == 0)
                i = k;
            else
                j = k;
            ++plus;
        } else if (c[k - 1] == -1) {
            j = k;
            ++minus;
        }
    }
    if (twos == 1)  // 2 eps_i, both even cases share the split
        return {eps(i) - eps(s), eps(i) + eps(s)};
    if (minus == 1)  // eps_i - eps_j with i < j <= s
        return {eps(i) - eps(j - 1), eps(j - 1) - eps(j)};
    if (plus == 1)  // eps_i alone (odd N)
        return {eps(i) - eps(s), eps(s)};
    // eps_i + eps_j with i < j <= s
    switch (sd.case_tag) {
        case CaseTag::OddM:
            if (j == s) return {eps(i), eps(s)};
            return {eps(i) + eps(j + 1), eps(j) - eps(j + 1)};
        case CaseTag::EvenM_sEven:
            if (j == s) return {eps(i) - eps(s - 1), eps(s - 1) + eps(s)};
            return {eps(i) + eps(j + 1), eps(j) - eps(j + 1)};
        case CaseTag::EvenM_sOdd:
            if (j == s) return {eps(i) - eps(s), eps(s).scaled(2)};
            if (j == s - 1) return {eps(i) + eps(s), eps(s - 1) - eps(s)};
            return {eps(i) + eps(j + 1), eps(j) - eps(j + 1)};
        default:
            break;
    }
    throw Error("unclassified root " + gamma.str());
}

QLaurent pair_tw_words(const SuperData& sd, const Word& u, const Word& v) {
    if (u.size() != v.size()) return QLaurent();
    const int d = u.size();
    if (d > 9) throw TooLong(std::to_string(d));
    if (d == 0) return QLaurent(1);
    // Positions of v still unused, as a bitmask; recursion strips u's last
    // letter and matches it against every unused position of v, collecting
    // the inversion factors against the unused positions to its right.
    std::vector<int> vpar(d);
    const std::vector<int>& vletters = v.letters;
    for (int k = 0; k < d; ++k) vpar[k] = sd.root_parity(sd.roots.simple[vletters[k] - 1]);
    std::map<std::pair<int, unsigned>, QLaurent> memo;
    auto rec = [&](auto&& self, int ulen, unsigned mask) -> QLaurent {
        if (ulen == 0) return QLaurent(1);
        auto key = std::make_pair(ulen, mask);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        QLaurent acc;
        int target = u.letters[ulen - 1];
        for (int k = 0; k < d; ++k) {
            if (!(mask & (1u << k)) || vletters[k] != target) continue;
            QLaurent factor(1);
            for (int l = k + 1; l < d; ++l) {
                if (!(mask & (1u << l))) continue;
                int sign = (vpar[k] * vpar[l]) % 2 ? -1 : 1;
                factor *= QLaurent::monomial(
                    Rational(sign), -sd.pair4(sd.roots.simple[vletters[k] - 1],
                                              sd.roots.simple[vletters[l] - 1]));
            }
            acc += factor * self(self, ulen - 1, mask & ~(1u << k));
        }
        memo.emplace(key, acc);
        return acc;
    };
    return rec(rec, d, (1u << d) - 1);
}

QLaurent pair_tw(const SuperData& sd, const FreeElem& x, const FreeElem& y) {
    QLaurent acc;
    for (const auto& [u, cu] : x.terms)
        for (const auto& [v, cv] : y.terms) acc += cu * cv * pair_tw_words(sd, u, v);
    return acc;
}

QLaurent pair_tw_closed_form(const SuperData& sd, const DominantWord& dw) {
    const int s = sd.s;
    const QLaurent qdiff = QLaurent::q_power(1) - QLaurent::q_power(-1);
    auto qpow = [](const QLaurent& base, int e) {
        QLaurent r(1);
        for (int k = 0; k < e; ++k) r *= base;
        return r;
    };
    PNValue pn = pn_of_root(sd, dw.degree);
    QLaurent qn = QLaurent::q_power(pn.n);
    auto cartan_run = [&](int from, int to) {  // prod (alpha_k, alpha_{k+1})
        long prod = 1;
        for (int k = from; k <= to; ++k) prod *= sd.roots.cartan[k - 1][k];
        return prod;
    };
    const int i = dw.i, j = dw.j;
    if (sd.family == Family::GlA || sd.case_tag == CaseTag::OddM) {
        if (dw.family == 1) {
            if (i == j) return QLaurent(1);
            return QLaurent(Rational(cartan_run(i, j - 1))) * qpow(qdiff, j - i) * qn;
        }
        // [i .. s s .. j]
        int sign = 1;
        for (int k = j; k <= s; ++k)
            if (sd.root_parity(sd.roots.simple[k - 1])) sign = -sign;
        return QLaurent(Rational(sign * cartan_run(i, j - 2))) *
               qpow(qdiff, 2 * s + 1 - i - j) * qn;
    }
    const QLaurent q2diff = QLaurent::q_power(2) - QLaurent::q_power(-2);
    if (sd.case_tag == CaseTag::EvenM_sEven) {
        switch (dw.family) {
            case 1:
                if (i == j) return QLaurent(1);
                return QLaurent(Rational(cartan_run(i, j - 1))) * qpow(qdiff, j - i) * qn;
            case 2:
                if (i == s - 1) return QLaurent(1);  // the single-letter word [s]
                return QLaurent(Rational(cartan_run(i, s - 2))) * qpow(qdiff, s - i - 1) * qn;
            case 3:
                return QLaurent(Rational(-cartan_run(i, j - 1))) *
                       qpow(qdiff, 2 * s - 1 - i - j) * qn;
            default:
                return qpow(qdiff, 2 * s - 2 * i - 2).scaled(Rational(-1)) * q2diff * qn;
        }
    }
    // EvenM_sOdd
    switch (dw.family) {
        case 1:
            if (i == j) return QLaurent(1);
            if (j <= s - 1)
                return QLaurent(Rational(cartan_run(i, j - 1))) * qpow(qdiff, j - i) * qn;
            // [i .. s], carrying the 1/2 prefactor
            {
                Rational half_run(cartan_run(i, s - 1), 2);
                half_run.canonicalize();
                return QLaurent(half_run) * qpow(qdiff, s - i - 1) * q2diff * qn;
            }
        case 2:
            return QLaurent(Rational(cartan_run(i, j - 1))) * qpow(qdiff, 2 * s - 1 - i - j) *
                   q2diff * qn;
        default:
            return qpow(qdiff, 2 * s - 2 * i - 2) * q2diff * q2diff * qn;
    }
}

QLaurent power_pairing_factor(const SuperData& sd, const Weight& gamma, int k) {
    int par = sd.root_parity(gamma);
    int gg4 = sd.pair4(gamma, gamma);
    // x = (-1)^{|e|} q^{-(gamma,gamma)}; C = prod_{t=1}^{k} (1 - x^t)/(1 - x)
    QLaurent x = QLaurent::monomial(Rational(par ? -1 : 1), -gg4);
    QLaurent r(1);
    QLaurent xt(1);
    for (int t = 1; t <= k; ++t) {
        xt *= x;
        r *= exact_div(QLaurent(1) - xt, QLaurent(1) - x);
    }
    return r;
}

}  // namespace qrmat
