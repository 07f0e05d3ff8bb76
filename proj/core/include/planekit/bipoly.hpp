#pragma once

#include <map>
#include <utility>
#include <vector>

#include "planekit/scalar.hpp"
#include "planekit/unipoly.hpp"

namespace planekit {

// Sparse bivariate polynomial in x, y. Invariant: the term map carries no
// zero coefficients, so emptiness is the zero test and iteration order is
// the canonical (deg x, deg y) lexicographic order.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (i, j) for x^i y^j

    explicit BiPoly(const FieldSpec& f) : field_(f) {}

    static BiPoly zero(const FieldSpec& f) { return BiPoly(f); }
    static BiPoly constant(const Scalar& c);
    static BiPoly x(const FieldSpec& f) { return monomial(Scalar::one(f), 1, 0); }
    static BiPoly y(const FieldSpec& f) { return monomial(Scalar::one(f), 0, 1); }
    static BiPoly monomial(const Scalar& c, int i, int j);
    // f(v) for a univariate f and bivariate v.
    static BiPoly from_unipoly(const UniPoly& f, const BiPoly& v);
    // Bulk constructor; keys must be strictly ascending, zero coefficients are
    // dropped.
    static BiPoly from_terms(const FieldSpec& f, std::vector<std::pair<Key, Scalar>> terms);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // UniPoly::kNegInfinity for zero
    Scalar coeff(int i, int j) const;
    const std::map<Key, Scalar>& terms() const { return terms_; }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly scaled(const Scalar& c) const;
    BiPoly pow(int e) const;

    // Terms of maximal total degree (a homogeneous polynomial); zero for zero.
    BiPoly leading_form() const;

    Scalar eval(const Scalar& x, const Scalar& y) const;

    // True when no term involves y (resp. x).
    bool depends_only_on_x() const;
    // Extract a univariate polynomial in t from a y-free (or x-free) value.
    UniPoly to_unipoly_in_x() const;
    UniPoly to_unipoly_in_y() const;

    bool operator==(const BiPoly& o) const;
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    std::string str() const; // grammar-compatible, e.g. "x^2*y + 1"

private:
    void add_term(int i, int j, const Scalar& c);

    FieldSpec field_;
    std::map<Key, Scalar> terms_;
};

// p(u, v): substitute u for x and v for y.
BiPoly bipoly_subst(const BiPoly& p, const BiPoly& u, const BiPoly& v);

// c * q == p for some scalar c != 0? Returns c through out if found.
bool proportional(const BiPoly& p, const BiPoly& q, Scalar& c_out);

} // namespace planekit
