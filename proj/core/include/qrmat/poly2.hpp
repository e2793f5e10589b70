#pragma once

#include <map>

#include "qrmat/exactring.hpp"
#include <sstream>
#include <string>
#include <utility>

namespace qrmat {

/// Bivariate polynomial over an exact coefficient ring R, used to clear
/// denominators in spectral-parameter identities. Exponents are
/// non-negative.
template <typename R>
class Poly2 {
public:
    using Key = std::pair<int, int>;

    Poly2() = default;
    Poly2(long v) {
        if (v != 0) terms_.emplace(Key{0, 0}, R(v));
    }
    Poly2(const R& c) {
        if (!qrmat::is_zero(c)) terms_.emplace(Key{0, 0}, c);
    }

    static Poly2 monomial(const R& c, int i, int j) {
        Poly2 r;
        if (!qrmat::is_zero(c)) r.terms_.emplace(Key{i, j}, c);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, R>& terms() const { return terms_; }

    void add_term(int i, int j, const R& c) {
        Key k{i, j};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!qrmat::is_zero(c)) terms_.emplace(k, c);
        } else {
            it->second += c;
            if (qrmat::is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly2 operator-() const {
        Poly2 r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    Poly2& operator+=(const Poly2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")*x^" << k.first << "*y^" << k.second;
        }
        return os.str();
    }

private:
    std::map<Key, R> terms_;
};

template <typename R>
bool is_zero(const Poly2<R>& p) {
    return p.is_zero();
}

}  // namespace qrmat
