#pragma once

#include <map>

#include "planekit/amalgam.hpp"
#include "planekit/planeaut.hpp"

namespace planekit {

// The three rational-plane generators of the witness group: the homothety
// by 1/2, the linear map [[1,1],[1,0]], and the quadratic shear
// (x, y + x^2). Defined over the rationals only.
struct GammaGens {
    PolyAut s;
    PolyAut sp;
    PolyAut t;
};

GammaGens gamma_generators();

struct CheckReport {
    std::vector<std::pair<std::string, bool>> checks;

    bool all_pass() const;
    std::string str() const;
};

// The two defining relations: s and sp commute, conjugating the shear by s
// squares it. The substitution variant runs the same suite with another map
// in the shear slot (negative controls).
CheckReport verify_gamma_relations();
CheckReport verify_gamma_relations_with(const PolyAut& shear_like);

enum class GammaLetter { S, SInv, Sp, SpInv, T, TInv };

PolyAut gamma_letter_aut(GammaLetter l);
PolyAut gamma_word(const std::vector<GammaLetter>& letters);

// Abstract element of the witness group presented as an amalgam over the
// cyclic center-of-sides subgroup <s>: side 1 is the abelian group
// s^a sp^b, side 2 the semidirect product s^n tau^q with q a dyadic
// rational and s tau s^-1 = tau^2. Elements of the common subgroup are
// always stored in side-1 form.
struct GammaElt {
    int side = 1;
    long a = 0, b = 0; // side 1: s^a sp^b
    long n = 0;        // side 2: s^n tau^q
    mpq_class q = 0;

    static GammaElt linear(long a, long b);
    static GammaElt shear(long n, const mpq_class& q);
};

AmalgamSpec<GammaElt> gamma_amalgam_spec();
GammaElt gamma_letter_elt(GammaLetter l);

// Enumerate all free-reduced letter words of length <= max_len, compute the
// abstract normal form and the plane realization of each, and cross-check:
// equal normal forms must give equal automorphisms (soundness of the
// relations), distinct normal forms must give distinct automorphisms
// (faithfulness evidence).
struct DistinctnessReport {
    long words_enumerated = 0;
    long normal_forms = 0;
    std::vector<std::string> collisions; // distinct forms, equal automorphism
    std::vector<std::string> mismatches; // equal form, distinct automorphisms

    bool clean() const { return collisions.empty() && mismatches.empty(); }
};

DistinctnessReport distinctness_suite(int max_len);

// For a nontrivial lower-triangular linear map, produce a conjugator moving
// it out of the triangular subgroup: coordinate swap when the corner entry
// is nonzero, the quadratic shear for homotheties, the unitriangular
// [[1,1],[0,1]] for other diagonals. The returned conjugate is verified to
// leave the subgroup. IsIdentity on the identity input.
PolyAut hypothesis_H_witness(const PolyAut& g);

// Polynomial written in the binomial-coefficient basis binom(t, n).
// Rationals only; conversions to and from the monomial basis are exact.
struct BinomialPoly {
    FieldSpec field;
    std::vector<Scalar> a; // a[n] multiplies binom(t, n); no trailing zeros

    explicit BinomialPoly(const FieldSpec& f);
    BinomialPoly(const FieldSpec& f, std::vector<Scalar> coeffs);

    int degree() const { return a.empty() ? UniPoly::kNegInfinity : static_cast<int>(a.size()) - 1; }
    bool operator==(const BinomialPoly& o) const { return field == o.field && a == o.a; }

    std::string str() const;
};

UniPoly binomial_basis_poly(int n, const FieldSpec& f); // binom(t, n)
UniPoly binomial_to_poly(const BinomialPoly& b);
BinomialPoly binomial_from_poly(const UniPoly& f);
// f(t + alpha) recomputed in the binomial basis
BinomialPoly binomial_shift(const BinomialPoly& b, const Scalar& alpha);

// Element of the ring Q[[x]] + Q((x))/Q[[x]] with the second summand an
// ideal of square zero. The regular part is stored exactly up to `order`
// coefficients; the singular part is a finite principal part, keyed by pole
// exponent k >= 1 for the class of x^(-k). Products against singular parts
// need only the first (max pole) regular coefficients, so every operation
// here is exact.
struct SquareZeroElt {
    UniPoly regular;
    int order;
    std::map<int, Scalar> singular;
};

SquareZeroElt sz_make(const UniPoly& regular, std::map<int, Scalar> singular, int order);
SquareZeroElt sz_zero(const FieldSpec& f, int order);
SquareZeroElt sz_one(const FieldSpec& f, int order);
SquareZeroElt sz_add(const SquareZeroElt& x, const SquareZeroElt& y);
SquareZeroElt sz_mul(const SquareZeroElt& x, const SquareZeroElt& y);
bool sz_equal(const SquareZeroElt& x, const SquareZeroElt& y);
std::string sz_str(const SquareZeroElt& x);

struct SZMat {
    SquareZeroElt a, b, c, d; // [[a,b],[c,d]]
};

SZMat sz_mat_mul(const SZMat& l, const SZMat& r);
bool sz_mat_equal(const SZMat& l, const SZMat& r);

// (1 + x)^alpha as a truncated series with generalized binomial
// coefficients; exact rationals.
UniPoly binomial_series(const Scalar& alpha, int order);

// Upper unitriangular matrix with the principal-part image of f in the
// corner, and the diagonal series matrix diag(1, (1+x)^alpha).
SZMat cornulier_rho1(const BinomialPoly& f, int order);
SZMat cornulier_rho2(const Scalar& alpha, int order);

// Conjugating the unitriangular image by the series matrix shifts the
// argument: rho2(-alpha) rho1(f) rho2(alpha) = rho1 of f(t + alpha).
// Checked as an exact identity in the square-zero ring.
bool verify_cornulier_identity(const BinomialPoly& f, const Scalar& alpha);

} // namespace planekit
