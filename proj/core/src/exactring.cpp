#include "qrmat/exactring.hpp"

#include <cmath>
#include <sstream>

namespace qrmat {

bool QLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int QLaurent::lo() const { return terms_.begin()->first; }
int QLaurent::hi() const { return terms_.rbegin()->first; }

Rational QLaurent::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) { return *this = *this * o; }

QLaurent QLaurent::bar() const {
    QLaurent r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(-k, c);
    return r;
}

Rational QLaurent::eval(const Rational& t0) const {
    if (is_zero()) return Rational(0);
    if (sgn(t0) == 0 && lo() < 0) throw PoleAtPoint("negative power of t at t=0");
    Rational acc(0);
    // Horner over the exponent range, walking down from the top.
    int prev = hi();
    Rational pos(0);
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int e = prev; e > it->first; --e) pos *= t0;
        pos += it->second;
        prev = it->first;
    }
    acc = pos;
    if (prev > 0) {
        for (int e = 0; e < prev; ++e) acc *= t0;
    } else if (prev < 0) {
        if (sgn(t0) == 0) throw PoleAtPoint("negative power of t at t=0");
        for (int e = 0; e < -prev; ++e) acc /= t0;
    }
    return acc;
}

double QLaurent::eval_double(double t0) const {
    double acc = 0;
    for (const auto& [k, c] : terms_) acc += c.get_d() * std::pow(t0, k);
    return acc;
}

std::string QLaurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << (sgn(c) >= 0 ? " + " : " - ");
        Rational a = first ? c : Rational(abs(c));
        first = false;
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t^" << k;
        }
    }
    return os.str();
}

bool try_exact_div(const QLaurent& a, const QLaurent& b, QLaurent& q) {
    if (b.is_zero()) throw DivisionByZero();
    q = QLaurent();
    if (a.is_zero()) return true;
    // Shift both to ordinary polynomials and do long division from the top.
    QLaurent rem = a;
    const int bhi = b.hi();
    const Rational blead = b.coeff(bhi);
    while (!rem.is_zero() && rem.hi() - rem.lo() >= bhi - b.lo()) {
        int k = rem.hi() - bhi;
        Rational c = rem.coeff(rem.hi()) / blead;
        q.add_term(k, c);
        for (const auto& [kb, cb] : b.terms()) rem.add_term(kb + k, -c * cb);
    }
    if (!rem.is_zero()) return false;
    // Absorb the unit t^{lo(a)-lo(b)-lo(q)} mismatch: long division above
    // already accounts for it because exponents were never shifted.
    return true;
}

QLaurent exact_div(const QLaurent& a, const QLaurent& b) {
    QLaurent q;
    if (!try_exact_div(a, b, q))
        throw InexactDivision("(" + a.str() + ") / (" + b.str() + ")");
    return q;
}

QLaurent laurent_gcd(const QLaurent& a, const QLaurent& b) {
    auto normalize = [](QLaurent x) {
        if (x.is_zero()) return x;
        QLaurent u = QLaurent::monomial(Rational(1) / x.coeff(x.hi()), -x.lo());
        return x * u;
    };
    QLaurent x = normalize(a), y = normalize(b);
    while (!y.is_zero()) {
        // Remainder of x by y as ordinary polynomials (both have lo = 0).
        QLaurent rem = x;
        const int yh = y.hi();
        while (!rem.is_zero() && rem.hi() >= yh) {
            int k = rem.hi() - yh;
            Rational c = rem.coeff(rem.hi());  // y is monic
            for (const auto& [kb, cb] : y.terms()) rem.add_term(kb + k, -c * cb);
        }
        x = y;
        y = normalize(rem);
    }
    return x;
}

QRat::QRat(const QLaurent& n, const QLaurent& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void QRat::normalize() {
    if (num_.is_zero()) {
        den_ = QLaurent(1);
        return;
    }
    QLaurent g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    // Unit normalization of the denominator: lo = 0, leading coefficient 1.
    QLaurent u = QLaurent::monomial(Rational(1) / den_.coeff(den_.hi()), -den_.lo());
    num_ *= u;
    den_ *= u;
}

QRat QRat::operator-() const {
    QRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QRat QRat::inv() const {
    if (num_.is_zero()) throw DivisionByZero();
    return QRat(den_, num_);
}

QRat& QRat::operator+=(const QRat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QRat& QRat::operator-=(const QRat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QRat& QRat::operator*=(const QRat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QRat& QRat::operator/=(const QRat& o) {
    if (o.num_.is_zero()) throw DivisionByZero();
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational QRat::eval(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (sgn(d) == 0) throw PoleAtPoint("denominator vanishes at t=" + rational_str(t0));
    return num_.eval(t0) / d;
}

double QRat::eval_double(double t0) const { return num_.eval_double(t0) / den_.eval_double(t0); }

std::string QRat::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

ZPoly ZPoly::monomial(const QRat& c, int k) {
    ZPoly r;
    if (!c.is_zero()) {
        r.coeffs_.assign(k + 1, QRat());
        r.coeffs_[k] = c;
    }
    return r;
}

QRat ZPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return QRat();
    return coeffs_[k];
}

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, QRat());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

void ZPoly::divmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
    if (b.is_zero()) throw DivisionByZero();
    q = ZPoly();
    r = a;
    QRat lead_inv = b.leading().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        QRat c = r.leading() * lead_inv;
        q += ZPoly::monomial(c, k);
        r -= ZPoly::monomial(c, k) * b;
    }
}

QRat ZPoly::eval(const QRat& z0) const {
    QRat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z0 + *it;
    return acc;
}

std::string ZPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].str() << ")";
        if (k > 0) os << "*z^" << k;
    }
    return os.str();
}

ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b) {
    ZPoly x = a, y = b, q, r;
    while (!y.is_zero()) {
        ZPoly::divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (!x.is_zero()) {
        QRat inv = x.leading().inv();
        x = x * ZPoly(inv);
    }
    return x;
}

ZRat::ZRat(const ZPoly& n, const ZPoly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void ZRat::normalize() {
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    ZPoly g = zpoly_gcd(num_, den_);
    if (g.degree() > 0 || !(g.coeff(0) == QRat(1))) {
        ZPoly q, r;
        ZPoly::divmod(num_, g, q, r);
        num_ = q;
        ZPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    QRat lead_inv = den_.leading().inv();
    num_ = num_ * ZPoly(lead_inv);
    den_ = den_ * ZPoly(lead_inv);
}

ZPoly ZRat::to_poly() const {
    ZPoly q, r;
    ZPoly::divmod(num_, den_, q, r);
    if (!r.is_zero()) throw InexactDivision("fraction in z is not polynomial");
    return q;
}

ZRat ZRat::operator-() const {
    ZRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

ZRat ZRat::inv() const {
    if (num_.is_zero()) throw DivisionByZero();
    return ZRat(den_, num_);
}

ZRat& ZRat::operator+=(const ZRat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ZRat& ZRat::operator-=(const ZRat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ZRat& ZRat::operator*=(const ZRat& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ZRat& ZRat::operator/=(const ZRat& o) {
    if (o.num_.is_zero()) throw DivisionByZero();
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

Rational ZRat::eval(const Rational& t0, const Rational& z0) const {
    auto eval_poly = [&](const ZPoly& p) {
        Rational acc(0);
        for (int k = p.degree(); k >= 0; --k) acc = acc * z0 + p.coeff(k).eval(t0);
        return acc;
    };
    Rational d = eval_poly(den_);
    if (sgn(d) == 0) throw PoleAtPoint("denominator vanishes");
    return eval_poly(num_) / d;
}

double ZRat::eval_double(double t0, double z0) const {
    auto eval_poly = [&](const ZPoly& p) {
        double acc = 0;
        for (int k = p.degree(); k >= 0; --k) acc = acc * z0 + p.coeff(k).eval_double(t0);
        return acc;
    };
    return eval_poly(num_) / eval_poly(den_);
}

std::string ZRat::str() const {
    if (is_poly() && den_.coeff(0) == QRat(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::string rational_str(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace qrmat
