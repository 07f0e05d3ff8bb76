#pragma once

#include <utility>
#include <vector>

#include "planekit/scalar.hpp"

namespace planekit {

// Dense univariate polynomial in t over a fixed field. Invariant: the
// coefficient vector never ends in a zero, so degree() is its size minus one.
// The zero polynomial has an empty vector; its degree is the distinguished
// marker kNegInfinity (compares below every genuine degree).
class UniPoly {
public:
    static constexpr int kNegInfinity = -0x40000000;

    explicit UniPoly(const FieldSpec& f) : field_(f) {}

    static UniPoly zero(const FieldSpec& f) { return UniPoly(f); }
    static UniPoly constant(const Scalar& c);
    static UniPoly one(const FieldSpec& f) { return constant(Scalar::one(f)); }
    static UniPoly t(const FieldSpec& f) { return monomial(Scalar::one(f), 1); }
    static UniPoly monomial(const Scalar& c, int k);
    static UniPoly from_coeffs(const FieldSpec& f, std::vector<Scalar> coeffs);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kNegInfinity : static_cast<int>(c_.size()) - 1; }
    // Smallest exponent with nonzero coefficient; kNegInfinity marker reused
    // as "none" for the zero polynomial.
    int valuation() const;
    Scalar coeff(int k) const;
    Scalar leading() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly scaled(const Scalar& c) const;
    UniPoly shifted(int k) const; // multiply by t^k; k <= valuation allowed negative
    UniPoly pow(int e) const;

    Scalar eval(const Scalar& x) const;

    // Quotient and remainder; divisor's leading coefficient must be invertible
    // (always, over a field) and nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    std::string str() const; // grammar-compatible, e.g. "t^3 - 2*t"

private:
    void trim();
    void check_same_field(const UniPoly& o) const;

    FieldSpec field_;
    std::vector<Scalar> c_;
};

// f(g): substitute g for t in f.
UniPoly poly_compose(const UniPoly& f, const UniPoly& g);

} // namespace planekit
