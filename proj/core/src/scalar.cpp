#include "planekit/scalar.hpp"

namespace planekit {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit with the standard witness set
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    require(is_prime_u64(p), "BadShape", "field modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::str() const {
    return is_rationals() ? "q" : "fp:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(3, "expected a prime after 'fp:' in field spec '" + text + "'");
        return prime_field(std::stoull(digits));
    }
    throw ParseError(0, "unknown field spec '" + text + "' (expected 'q' or 'fp:<prime>')");
}

Scalar Scalar::from_int(long v, const FieldSpec& f) {
    if (f.is_rationals()) return Scalar(f, mpq_class(v), 0);
    const std::uint64_t p = f.p;
    long m = v % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    return Scalar(f, 0, static_cast<std::uint64_t>(m));
}

Scalar Scalar::from_mpq(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    return Scalar(FieldSpec::rationals(), c, 0);
}

Scalar Scalar::from_mpq_mod(const mpq_class& v, const FieldSpec& f) {
    if (f.is_rationals()) return from_mpq(v);
    mpq_class c = v;
    c.canonicalize();
    const std::uint64_t p = f.p;
    mpz_class num = c.get_num() % static_cast<long>(p);
    mpz_class den = c.get_den() % static_cast<long>(p);
    if (num < 0) num += static_cast<long>(p);
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    require(d % p != 0, "BadShape", "denominator divisible by " + std::to_string(p));
    return Scalar(f, 0, mulmod(n, powmod(d, p - 2, p), p));
}

Scalar Scalar::residue(std::uint64_t r, const FieldSpec& f) {
    require(f.is_prime_field(), "FieldMismatch", "residue constructor needs a prime field");
    return Scalar(f, 0, r % f.p);
}

Scalar Scalar::fraction(long num, long den, const FieldSpec& f) {
    require(den != 0, "BadShape", "zero denominator");
    if (f.is_rationals()) {
        mpq_class c(num, den);
        c.canonicalize();
        return Scalar(f, c, 0);
    }
    return from_int(num, f) / from_int(den, f);
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? q_ == 1 : r_ == 1 % field_.p;
}

const mpq_class& Scalar::rat() const {
    require(field_.is_rationals(), "FieldMismatch", "rational payload requested from F_p element");
    return q_;
}

std::uint64_t Scalar::res() const {
    require(field_.is_prime_field(), "FieldMismatch", "residue payload requested from rational element");
    return r_;
}

void Scalar::check_same_field(const Scalar& o) const {
    require(field_ == o.field_, "FieldMismatch",
            "operands live in different fields (" + field_.str() + " vs " + o.field_.str() + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, q_ + o.q_, 0);
    return Scalar(field_, 0, (r_ + o.r_) % field_.p);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, q_ - o.q_, 0);
    return Scalar(field_, 0, (r_ + field_.p - o.r_) % field_.p);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, q_ * o.q_, 0);
    return Scalar(field_, 0, mulmod(r_, o.r_, field_.p));
}

Scalar Scalar::inverse() const {
    require(!is_zero(), "DivisionByZero", "inverse of zero");
    if (field_.is_rationals()) return Scalar(field_, 1 / q_, 0);
    return Scalar(field_, 0, powmod(r_, field_.p - 2, field_.p));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, -q_, 0);
    return Scalar(field_, 0, r_ == 0 ? 0 : field_.p - r_);
}

Scalar Scalar::pow(long e) const {
    Scalar base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Scalar acc = Scalar::one(field_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

int Scalar::cmp(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return ::cmp(q_, o.q_);
    return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
}

bool Scalar::is_square() const {
    if (field_.is_rationals()) {
        if (q_ < 0) return false;
        if (q_ == 0) return true;
        return mpz_perfect_square_p(q_.get_num_mpz_t()) && mpz_perfect_square_p(q_.get_den_mpz_t());
    }
    if (field_.p == 2) return true; // squaring is the Frobenius bijection
    if (r_ == 0) return true;
    return powmod(r_, (field_.p - 1) / 2, field_.p) == 1;
}

std::string Scalar::str() const {
    if (field_.is_rationals()) return q_.get_str();
    return std::to_string(r_);
}

} // namespace planekit
