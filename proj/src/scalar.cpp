#include "yangcheck/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace yangcheck {

HPoly::HPoly(const Rational& c) {
    if (c != 0) terms_.emplace_back(0u, c);
}

HPoly HPoly::monomial(const Rational& c, unsigned exp) {
    HPoly p;
    if (c != 0) p.terms_.emplace_back(exp, c);
    return p;
}

bool HPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool HPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

unsigned HPoly::degree() const {
    if (terms_.empty()) throw std::logic_error("HPoly::degree of zero");
    return terms_.back().first;
}

Rational HPoly::coeff(unsigned exp) const {
    for (const auto& [e, c] : terms_)
        if (e == exp) return c;
    return Rational(0);
}

const Rational& HPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("HPoly::leading_coeff of zero");
    return terms_.back().second;
}

void HPoly::add_term(unsigned exp, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const auto& t, unsigned e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {exp, c});
    }
}

HPoly HPoly::operator+(const HPoly& o) const {
    HPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

HPoly HPoly::operator-(const HPoly& o) const {
    HPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

HPoly HPoly::operator-() const {
    HPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

HPoly HPoly::operator*(const HPoly& o) const {
    HPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

HPoly HPoly::scaled(const Rational& c) const {
    HPoly r;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, k] : r.terms_) k *= c;
    return r;
}

std::pair<HPoly, HPoly> HPoly::divmod(const HPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("HPoly::divmod by zero");
    HPoly q, r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        unsigned e = r.degree() - d.degree();
        Rational c = r.leading_coeff() / d.leading_coeff();
        q.add_term(e, c);
        HPoly t = d.scaled(c);
        for (auto& [te, tc] : t.terms_) te += e;
        r = r - t;
    }
    return {q, r};
}

HPoly HPoly::gcd(const HPoly& a, const HPoly& b) {
    HPoly x = a, y = b;
    while (!y.is_zero()) {
        HPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    if (!x.is_zero()) x = x.scaled(Rational(1) / x.leading_coeff());
    return x;
}

std::string HPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print descending by exponent
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        unsigned e = it->first;
        if (e == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << "ħ";
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

Scalar::Scalar(HPoly num, HPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("Scalar: zero denominator");
    reduce();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = HPoly::one();
        return;
    }
    if (!den_.is_one()) {
        HPoly g = HPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        Rational lc = den_.leading_coeff();
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
}

const HPoly& Scalar::poly() const {
    if (!is_polynomial()) throw std::logic_error("Scalar::poly on a proper fraction");
    return num_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (den_ == o.den_) return Scalar(num_ - o.num_, den_);
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::invalid_argument("Scalar: division by zero");
    if (is_zero()) return Scalar();
    return Scalar(num_ * o.den_, den_ * o.num_);
}

std::string Scalar::to_string() const {
    if (is_polynomial()) {
        if (num_.is_monomial() || num_.is_zero()) return num_.to_string();
        return "(" + num_.to_string() + ")";
    }
    std::string n = num_.is_monomial() ? num_.to_string() : "(" + num_.to_string() + ")";
    std::string d = den_.is_monomial() ? den_.to_string() : "(" + den_.to_string() + ")";
    return n + "/" + d;
}

}  // namespace yangcheck
