#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "planekit/errors.hpp"

namespace planekit {

// Ground field tag: the rationals, or F_p for a prime p.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::uint64_t p = 0; // meaningful only for PrimeField

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime_field(std::uint64_t p); // rejects non-primes

    bool is_rationals() const { return kind == Kind::Rationals; }
    bool is_prime_field() const { return kind == Kind::PrimeField; }
    std::uint64_t characteristic() const { return is_prime_field() ? p : 0; }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const; // "q" or "fp:7"
    static FieldSpec parse(const std::string& text); // inverse of str()
};

bool is_prime_u64(std::uint64_t n);

// Exact field element. Over the rationals the value is an mpq_class kept in
// lowest terms with positive denominator (gmp guarantees that canonical form);
// over F_p it is the residue in [0, p). Mixed-field arithmetic is a
// FieldMismatch error, never a coercion.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), q_(0), r_(0) {}

    static Scalar zero(const FieldSpec& f) { return from_int(0, f); }
    static Scalar one(const FieldSpec& f) { return from_int(1, f); }
    static Scalar from_int(long v, const FieldSpec& f);
    static Scalar from_mpq(const mpq_class& v); // rationals only
    static Scalar from_mpq_mod(const mpq_class& v, const FieldSpec& f); // reduces a/b mod p
    static Scalar residue(std::uint64_t r, const FieldSpec& f);
    static Scalar fraction(long num, long den, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    // Value accessors; each checks the field kind.
    const mpq_class& rat() const;
    std::uint64_t res() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // DivisionByZero on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long e) const; // negative e inverts first

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used only for canonical tie-breaks and sorted output,
    // not for field semantics. Requires matching fields.
    int cmp(const Scalar& o) const;

    bool is_square() const; // has a square root in the field

    std::string str() const;

private:
    Scalar(FieldSpec f, mpq_class q, std::uint64_t r)
        : field_(f), q_(std::move(q)), r_(r) {}
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class q_;       // Rationals payload
    std::uint64_t r_;   // PrimeField payload
};

} // namespace planekit
