#include "qrmat/superdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qrmat {

bool Weight::is_zero() const {
    return std::all_of(half2.begin(), half2.end(), [](int c) { return c == 0; });
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (int& c : r.half2) c = -c;
    return r;
}

Weight& Weight::operator+=(const Weight& o) {
    for (size_t i = 0; i < half2.size(); ++i) half2[i] += o.half2[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (size_t i = 0; i < half2.size(); ++i) half2[i] -= o.half2[i];
    return *this;
}

Weight Weight::scaled(int k) const {
    Weight r = *this;
    for (int& c : r.half2) c *= k;
    return r;
}

std::string Weight::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank(); ++i) {
        int c = half2[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        first = false;
        int a = std::abs(c);
        if (a != 2) {
            if (a % 2 == 0) os << a / 2;
            else os << a << "/2";
            os << "*";
        }
        os << "e" << i + 1;
    }
    if (first) return "0";
    return os.str();
}

SuperData SuperData::build(Family fam, int m, int n, const std::vector<int>& parity_seq,
                           const std::vector<int>& theta_choice) {
    SuperData sd;
    sd.family = fam;
    sd.m = m;
    sd.n = n;
    sd.N = m + n;
    if (fam == Family::Osp) {
        if (n % 2 != 0) throw BadInstance("osp requires an even number of odd basis vectors");
        if (sd.N <= 2) throw BadInstance("osp requires m+n > 2");
        sd.s = sd.N / 2;
        if (static_cast<int>(parity_seq.size()) != sd.s)
            throw BadInstance("parity sequence must have length " + std::to_string(sd.s));
        sd.parity.assign(sd.N, 0);
        int odd_count = 0;
        for (int i = 1; i <= sd.s; ++i) {
            int p = parity_seq[i - 1];
            if (p != 0 && p != 1) throw BadInstance("parity entries must be 0 or 1");
            sd.parity[i - 1] = p;
            sd.parity[sd.N - i] = p;  // parity of v_{i'} matches v_i
            odd_count += 2 * p;
        }
        if (sd.N % 2 == 1) sd.parity[sd.s] = 0;  // v_{s+1} is even
        if (odd_count != n)
            throw BadInstance("parity sequence has " + std::to_string(odd_count) +
                              " odd vectors; expected " + std::to_string(n));
        if (sd.N % 2 == 1)
            sd.case_tag = CaseTag::OddM;
        else
            sd.case_tag = sd.parity[sd.s - 1] == 0 ? CaseTag::EvenM_sEven : CaseTag::EvenM_sOdd;

        // Sign sequence: theta_i = 1 when v_i is even; theta_{i'} = -theta_i
        // when v_i is odd. Default picks +1 on the first half.
        sd.theta.assign(sd.N, 1);
        std::vector<int> half(sd.s, 1);
        if (!theta_choice.empty()) {
            if (static_cast<int>(theta_choice.size()) == sd.s) {
                half = theta_choice;
            } else if (static_cast<int>(theta_choice.size()) == sd.N) {
                for (int i = 1; i <= sd.s; ++i) half[i - 1] = theta_choice[i - 1];
                // Full-length input must already satisfy the sign rules.
                for (int i = 1; i <= sd.N; ++i) {
                    int expect = sd.parity[i - 1] == 0 ? 1 : -theta_choice[sd.N - i];
                    if (theta_choice[i - 1] != expect)
                        throw BadInstance("theta sequence violates the sign rules");
                }
            } else {
                throw BadInstance("theta sequence must have length s or N");
            }
        }
        for (int i = 1; i <= sd.s; ++i) {
            int t = half[i - 1];
            if (t != 1 && t != -1) throw BadInstance("theta entries must be +1 or -1");
            if (sd.parity[i - 1] == 0 && t != 1)
                throw BadInstance("theta sequence violates the sign rules");
            sd.theta[i - 1] = t;
            sd.theta[sd.N - i] = sd.parity[i - 1] == 0 ? t : -t;
        }
    } else {
        if (sd.N < 2) throw BadInstance("A-type requires m+n >= 2");
        sd.s = sd.N - 1;
        if (static_cast<int>(parity_seq.size()) != sd.N)
            throw BadInstance("parity sequence must have length " + std::to_string(sd.N));
        int odd_count = 0;
        for (int p : parity_seq) {
            if (p != 0 && p != 1) throw BadInstance("parity entries must be 0 or 1");
            odd_count += p;
        }
        if (odd_count != n)
            throw BadInstance("parity sequence has " + std::to_string(odd_count) +
                              " odd vectors; expected " + std::to_string(n));
        sd.parity = parity_seq;
        sd.theta.assign(sd.N, 1);
        sd.case_tag = CaseTag::Atype;
    }

    // Positive roots.
    auto& rs = sd.roots;
    if (fam == Family::Osp) {
        for (int a = 1; a <= sd.N; ++a)
            for (int b = a + 1; b < sd.prime(a); ++b) rs.positive.push_back(sd.eps(a) - sd.eps(b));
        for (int a = 1; a <= sd.s; ++a)
            if (sd.bar(a) == 1) rs.positive.push_back(sd.eps(a).scaled(2));
    } else {
        for (int a = 1; a <= sd.N; ++a)
            for (int b = a + 1; b <= sd.N; ++b) rs.positive.push_back(sd.eps(a) - sd.eps(b));
    }

    // Reduced positive roots: drop gamma when gamma/2 is also a root.
    for (const Weight& g : rs.positive) {
        bool halvable = true;
        Weight h(g.rank());
        for (int i = 0; i < g.rank(); ++i) {
            if (g.half2[i] % 2 != 0) halvable = false;
            h.half2[i] = g.half2[i] / 2;
        }
        bool half_is_root =
            halvable && std::find(rs.positive.begin(), rs.positive.end(), h) != rs.positive.end();
        if (!half_is_root) {
            rs.reduced_positive.push_back(g);
            if (sd.root_parity(g) == 0)
                rs.reduced_kind.push_back(RootKind::Even);
            else
                rs.reduced_kind.push_back(sd.pair4(g, g) == 0 ? RootKind::OddIsotropic
                                                              : RootKind::OddNonIsotropic);
        }
    }

    // Simple roots.
    if (fam == Family::Osp) {
        for (int i = 1; i < sd.s; ++i) rs.simple.push_back(sd.eps(i) - sd.eps(i + 1));
        switch (sd.case_tag) {
            case CaseTag::OddM:
                rs.simple.push_back(sd.eps(sd.s) - sd.eps(sd.s + 1));
                break;
            case CaseTag::EvenM_sEven:
                rs.simple.push_back(sd.eps(sd.s - 1) + sd.eps(sd.s));
                break;
            case CaseTag::EvenM_sOdd:
                rs.simple.push_back(sd.eps(sd.s).scaled(2));
                break;
            default:
                break;
        }
        if (sd.s == 1 && sd.case_tag == CaseTag::OddM) {
            // covered by the loop-free push above
        }
    } else {
        for (int i = 1; i <= sd.s; ++i) rs.simple.push_back(sd.eps(i) - sd.eps(i + 1));
    }
    if (static_cast<int>(rs.simple.size()) != sd.s) throw Error("internal: simple root count");

    rs.cartan.assign(sd.s, std::vector<int>(sd.s, 0));
    for (int i = 0; i < sd.s; ++i)
        for (int j = 0; j < sd.s; ++j) {
            int p4 = sd.pair4(rs.simple[i], rs.simple[j]);
            if (p4 % 4 != 0) throw Error("internal: non-integer Cartan entry");
            rs.cartan[i][j] = p4 / 4;
        }

    // Weyl vector: graded half-sum of the positive roots.
    rs.rho = Weight(sd.weight_rank());
    for (const Weight& g : rs.positive) {
        int sign = sd.root_parity(g) == 0 ? 1 : -1;
        for (int i = 0; i < g.rank(); ++i) rs.rho.half2[i] += sign * g.half2[i] / 2;
    }
    return sd;
}

Weight SuperData::eps(int i) const {
    Weight w(weight_rank());
    if (family == Family::Osp) {
        if (i <= s) {
            w.half2[i - 1] = 2;
        } else if (2 * i == N + 1) {
            // eps_{s+1} = 0 for odd N
        } else {
            w.half2[prime(i) - 1] = -2;
        }
    } else {
        w.half2[i - 1] = 2;
    }
    return w;
}

int SuperData::eps_pair(int i, int j) const { return pair4(eps(i), eps(j)) / 4; }

int SuperData::pair4(const Weight& mu, const Weight& nu) const {
    int acc = 0;
    for (int i = 0; i < weight_rank(); ++i)
        acc += mu.half2[i] * nu.half2[i] * (parity[i] ? -1 : 1);
    return acc;
}

int SuperData::root_parity(const Weight& gamma) const {
    int acc = 0;
    for (int i = 0; i < gamma.rank(); ++i) {
        if (gamma.half2[i] % 2 != 0) throw Error("root parity of a non-integer weight");
        acc += (gamma.half2[i] / 2) * parity[i];
    }
    return ((acc % 2) + 2) % 2;
}

Weight SuperData::highest_root() const {
    if (family == Family::GlA) return eps(1) - eps(N);
    return bar(1) == 1 ? eps(1).scaled(2) : eps(1) + eps(2);
}

std::vector<int> SuperData::highest_root_coeffs() const {
    return simple_root_coeffs(highest_root());
}

std::vector<int> SuperData::simple_root_coeffs(const Weight& gamma) const {
    // Exact rational solve of sum_i k_i alpha_i = gamma over the eps basis.
    int r = weight_rank();
    std::vector<std::vector<double>> unused;  // avoid accidental FP use
    (void)unused;
    std::vector<std::vector<long>> a(r, std::vector<long>(s + 1, 0));
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < r; ++i) a[i][j] = roots.simple[j].half2[i];
    for (int i = 0; i < r; ++i) a[i][s] = gamma.half2[i];

    // Fraction-free elimination with long arithmetic; entries stay tiny.
    std::vector<int> pivot_row(s, -1);
    int row = 0;
    for (int col = 0; col < s && row < r; ++col) {
        int pr = -1;
        for (int i = row; i < r; ++i)
            if (a[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr == -1) continue;
        std::swap(a[row], a[pr]);
        for (int i = 0; i < r; ++i) {
            if (i == row || a[i][col] == 0) continue;
            long p = a[row][col], q = a[i][col];
            for (int j = 0; j <= s; ++j) a[i][j] = a[i][j] * p - a[row][j] * q;
        }
        pivot_row[col] = row;
        ++row;
    }
    std::vector<int> k(s, 0);
    for (int col = 0; col < s; ++col) {
        if (pivot_row[col] == -1) continue;
        long num = a[pivot_row[col]][s], den = a[pivot_row[col]][col];
        if (den == 0 || num % den != 0)
            throw Error("weight is not an integer combination of simple roots");
        k[col] = static_cast<int>(num / den);
    }
    // Verify (guards the rank-deficient case).
    Weight check(r);
    for (int j = 0; j < s; ++j) check += roots.simple[j].scaled(k[j]);
    if (!(check == gamma)) throw Error("weight is not in the span of the simple roots");
    return k;
}

std::string SuperData::label() const {
    std::ostringstream os;
    os << (family == Family::Osp ? "osp(" : "gl(") << m << "|" << n << ") parity=";
    int len = family == Family::Osp ? s : N;
    for (int i = 0; i < len; ++i) os << parity[i];
    bool default_theta = true;
    for (int i = 1; i <= (family == Family::Osp ? s : 0); ++i)
        if (theta[i - 1] != 1) default_theta = false;
    if (!default_theta) {
        os << " theta=";
        for (int i = 0; i < (family == Family::Osp ? s : 0); ++i)
            os << (theta[i] > 0 ? '+' : '-');
    }
    return os.str();
}

std::vector<std::vector<int>> admissible_parities(Family fam, int m, int n) {
    int len = fam == Family::Osp ? (m + n) / 2 : m + n;
    int ones = fam == Family::Osp ? n / 2 : n;
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == len) {
            if (left == 0) out.push_back(cur);
            return;
        }
        if (len - pos < left) return;
        cur[pos] = 0;
        self(self, pos + 1, left);
        if (left > 0) {
            cur[pos] = 1;
            self(self, pos + 1, left - 1);
            cur[pos] = 0;
        }
    };
    rec(rec, 0, ones);
    return out;
}

}  // namespace qrmat
