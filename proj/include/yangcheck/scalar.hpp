#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "yangcheck/rational.hpp"

namespace yangcheck {

// Univariate polynomial in the deformation parameter over Q.
// Terms are kept sorted by ascending exponent with no zero coefficients.
class HPoly {
  public:
    HPoly() = default;
    explicit HPoly(const Rational& c);
    static HPoly monomial(const Rational& c, unsigned exp);
    static HPoly one() { return HPoly(Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    unsigned degree() const;  // requires nonzero
    Rational coeff(unsigned exp) const;
    const Rational& leading_coeff() const;  // requires nonzero
    const std::vector<std::pair<unsigned, Rational>>& terms() const { return terms_; }

    HPoly operator+(const HPoly& o) const;
    HPoly operator-(const HPoly& o) const;
    HPoly operator-() const;
    HPoly operator*(const HPoly& o) const;
    HPoly scaled(const Rational& c) const;

    bool operator==(const HPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const HPoly& o) const { return !(*this == o); }

    // Euclidean division: *this = q * d + r with deg r < deg d. Requires d nonzero.
    std::pair<HPoly, HPoly> divmod(const HPoly& d) const;
    static HPoly gcd(const HPoly& a, const HPoly& b);  // monic, gcd(0,0) = 0

    std::string to_string() const;  // e.g. "3/2*ħ^2 + 1"

  private:
    void add_term(unsigned exp, const Rational& c);
    std::vector<std::pair<unsigned, Rational>> terms_;
};

// Coefficient domain for the free algebra: rational functions in the
// deformation parameter, normalized so the denominator is monic and coprime
// to the numerator. Plain polynomials (denominator 1) are the common case.
class Scalar {
  public:
    Scalar() : num_(), den_(HPoly::one()) {}
    Scalar(long c) : Scalar(Rational(c)) {}
    Scalar(const Rational& c) : num_(HPoly(c)), den_(HPoly::one()) {}
    explicit Scalar(HPoly p) : num_(std::move(p)), den_(HPoly::one()) {}
    Scalar(HPoly num, HPoly den);  // reduces; throws on zero denominator

    static Scalar hbar(unsigned exp = 1) { return Scalar(HPoly::monomial(Rational(1), exp)); }
    static Scalar of(const Rational& c, unsigned exp) { return Scalar(HPoly::monomial(c, exp)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    const HPoly& poly() const;  // requires is_polynomial
    const HPoly& num() const { return num_; }
    const HPoly& den() const { return den_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    void reduce();
    HPoly num_, den_;
};

}  // namespace yangcheck
