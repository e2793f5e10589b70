#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "qrmat/errors.hpp"

namespace qrmat {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Laurent polynomial in t = q^{1/4} with arbitrary-precision rational
/// coefficients. The zero element has an empty term map; no zero
/// coefficients are ever stored.
class QLaurent {
public:
    QLaurent() = default;
    QLaurent(long v) { set_term(0, Rational(v)); }
    QLaurent(const Rational& c) { set_term(0, c); }

    /// c * t^k
    static QLaurent monomial(const Rational& c, int k) {
        QLaurent r;
        r.set_term(k, c);
        return r;
    }
    static QLaurent t_power(int k) { return monomial(1, k); }
    /// q^k = t^{4k}
    static QLaurent q_power(int k) { return monomial(1, 4 * k); }
    /// q^{k/2} = t^{2k}
    static QLaurent q_half_power(int k) { return monomial(1, 2 * k); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True when the element is c * t^k for a single term.
    bool is_monomial() const { return terms_.size() == 1; }

    int lo() const;  // smallest exponent; element must be nonzero
    int hi() const;  // largest exponent; element must be nonzero
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int k) const;

    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent& operator*=(const QLaurent& o);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const QLaurent& o) const { return !(*this == o); }

    QLaurent scaled(const Rational& c) const {
        QLaurent r;
        if (qrmat::is_zero(c)) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
        return r;
    }

    /// t -> t^{-1} (the bar involution q -> q^{-1}).
    QLaurent bar() const;

    /// Exact evaluation at a rational point t = t0. Throws PoleAtPoint when
    /// t0 = 0 and negative powers are present.
    Rational eval(const Rational& t0) const;
    double eval_double(double t0) const;

    std::string str() const;  // human-readable, for diagnostics

    void set_term(int k, const Rational& c) {
        if (qrmat::is_zero(c))
            terms_.erase(k);
        else
            terms_[k] = c;
    }
    void add_term(int k, const Rational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!qrmat::is_zero(c)) terms_.emplace(k, c);
        } else {
            it->second += c;
            if (qrmat::is_zero(it->second)) terms_.erase(it);
        }
    }

private:
    std::map<int, Rational> terms_;
};

inline bool is_zero(const QLaurent& x) { return x.is_zero(); }

/// a / b when the division is exact in the Laurent ring; throws
/// InexactDivision otherwise and DivisionByZero when b = 0.
QLaurent exact_div(const QLaurent& a, const QLaurent& b);

/// Quotient-and-remainder attempt: returns true and sets q when b | a.
bool try_exact_div(const QLaurent& a, const QLaurent& b, QLaurent& q);

/// Monic gcd, normalized so the lowest exponent is 0 and the leading
/// (highest-exponent) coefficient is 1. gcd(0, 0) = 0.
QLaurent laurent_gcd(const QLaurent& a, const QLaurent& b);

/// Fraction field of QLaurent. Canonical form: gcd(num, den) is a unit and
/// den has lowest exponent 0 with leading coefficient 1.
class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(long v) : num_(v), den_(1) {}
    QRat(const Rational& c) : num_(c), den_(1) {}
    QRat(const QLaurent& n) : num_(n), den_(1) {}
    QRat(const QLaurent& n, const QLaurent& d);

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    QLaurent to_laurent() const { return exact_div(num_, den_); }

    QRat operator-() const;
    QRat inv() const;
    QRat& operator+=(const QRat& o);
    QRat& operator-=(const QRat& o);
    QRat& operator*=(const QRat& o);
    QRat& operator/=(const QRat& o);
    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    QRat bar() const { return QRat(num_.bar(), den_.bar()); }
    Rational eval(const Rational& t0) const;
    double eval_double(double t0) const;
    std::string str() const;

private:
    void normalize();
    QLaurent num_, den_;
};

inline bool is_zero(const QRat& x) { return x.is_zero(); }

/// Polynomial in the spectral variable z with QRat coefficients, dense by
/// ascending power of z.
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long v) { coeffs_.assign(1, QRat(v)); trim(); }
    ZPoly(const QRat& c) { coeffs_.assign(1, c); trim(); }
    ZPoly(const QLaurent& c) { coeffs_.assign(1, QRat(c)); trim(); }
    explicit ZPoly(std::vector<QRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static ZPoly z() { return monomial(QRat(1), 1); }
    static ZPoly monomial(const QRat& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<QRat>& coeffs() const { return coeffs_; }
    QRat coeff(int k) const;
    const QRat& leading() const { return coeffs_.back(); }

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }
    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    /// Division in QRat[z]; both quotient and remainder.
    static void divmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r);

    QRat eval(const QRat& z0) const;
    std::string str() const;

private:
    void trim();
    std::vector<QRat> coeffs_;
};

ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b);

/// Fractions in z over the QRat field; canonical form has monic den and
/// unit gcd(num, den).
class ZRat {
public:
    ZRat() : num_(), den_(1) {}
    ZRat(long v) : num_(v), den_(1) {}
    ZRat(const QRat& c) : num_(c), den_(1) {}
    ZRat(const QLaurent& c) : num_(c), den_(1) {}
    ZRat(const ZPoly& n) : num_(n), den_(1) {}
    ZRat(const ZPoly& n, const ZPoly& d);

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }
    ZPoly to_poly() const;

    ZRat operator-() const;
    ZRat inv() const;
    ZRat& operator+=(const ZRat& o);
    ZRat& operator-=(const ZRat& o);
    ZRat& operator*=(const ZRat& o);
    ZRat& operator/=(const ZRat& o);
    friend ZRat operator+(ZRat a, const ZRat& b) { return a += b; }
    friend ZRat operator-(ZRat a, const ZRat& b) { return a -= b; }
    friend ZRat operator*(ZRat a, const ZRat& b) { return a *= b; }
    friend ZRat operator/(ZRat a, const ZRat& b) { return a /= b; }
    bool operator==(const ZRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ZRat& o) const { return !(*this == o); }

    /// Exact value at t = t0, z = z0.
    Rational eval(const Rational& t0, const Rational& z0) const;
    double eval_double(double t0, double z0) const;
    std::string str() const;

private:
    void normalize();
    ZPoly num_, den_;
};

inline bool is_zero(const ZRat& x) { return x.is_zero(); }

// Multiplicative inverses, used for diagonal matrices of units.
inline Rational inverse_of(const Rational& x) {
    if (sgn(x) == 0) throw DivisionByZero();
    return Rational(1) / x;
}
inline QLaurent inverse_of(const QLaurent& x) { return exact_div(QLaurent(1), x); }
inline QRat inverse_of(const QRat& x) { return x.inv(); }
inline ZRat inverse_of(const ZRat& x) { return x.inv(); }

std::string rational_str(const Rational& x);
Rational parse_rational(const std::string& s);

}  // namespace qrmat
