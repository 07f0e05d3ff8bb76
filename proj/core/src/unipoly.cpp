#include "planekit/unipoly.hpp"

#include <algorithm>

namespace planekit {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void UniPoly::check_same_field(const UniPoly& o) const {
    require(field_ == o.field_, "FieldMismatch",
            "polynomial operands over different fields (" + field_.str() + " vs " + o.field_.str() + ")");
}

UniPoly UniPoly::constant(const Scalar& c) {
    UniPoly p(c.field());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

UniPoly UniPoly::monomial(const Scalar& c, int k) {
    require(k >= 0, "BadShape", "negative exponent in monomial");
    UniPoly p(c.field());
    if (!c.is_zero()) {
        p.c_.assign(static_cast<std::size_t>(k) + 1, Scalar::zero(c.field()));
        p.c_.back() = c;
    }
    return p;
}

UniPoly UniPoly::from_coeffs(const FieldSpec& f, std::vector<Scalar> coeffs) {
    UniPoly p(f);
    for (const Scalar& c : coeffs)
        require(c.field() == f, "FieldMismatch", "coefficient field differs from polynomial field");
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

int UniPoly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return kNegInfinity;
}

Scalar UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar::zero(field_);
    return c_[static_cast<std::size_t>(k)];
}

Scalar UniPoly::leading() const {
    require(!is_zero(), "BadShape", "leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    check_same_field(o);
    UniPoly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (Scalar& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    check_same_field(o);
    if (is_zero() || o.is_zero()) return zero(field_);
    UniPoly r(field_);
    const std::size_t n = c_.size() + o.c_.size() - 1;
    r.c_.reserve(n);

    if (field_.is_prime_field()) {
        const std::uint64_t p = field_.p;
        std::vector<std::uint64_t> acc(n, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const std::uint64_t a = c_[i].res();
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                acc[i + j] = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(a) * o.c_[j].res() + acc[i + j]) % p);
        }
        for (std::uint64_t v : acc) r.c_.push_back(Scalar::residue(v, field_));
        r.trim();
        return r;
    }

    // rationals: integer numerators over one shared denominator, canonicalized
    // once per output coefficient
    mpz_class da = 1, db = 1;
    for (const Scalar& c : c_)
        mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), mpq_denref(c.rat().get_mpq_t()));
    for (const Scalar& c : o.c_)
        mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), mpq_denref(c.rat().get_mpq_t()));
    auto scale_numerators = [](const std::vector<Scalar>& cs, const mpz_class& d) {
        std::vector<mpz_class> out(cs.size());
        mpz_class q;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), mpq_denref(cs[i].rat().get_mpq_t()));
            out[i] = q * cs[i].rat().get_num();
        }
        return out;
    };
    const auto za = scale_numerators(c_, da);
    const auto zb = scale_numerators(o.c_, db);
    std::vector<mpz_class> acc(n);
    for (std::size_t i = 0; i < za.size(); ++i) {
        if (mpz_sgn(za[i].get_mpz_t()) == 0) continue;
        for (std::size_t j = 0; j < zb.size(); ++j)
            mpz_addmul(acc[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
    }
    const mpz_class d = da * db;
    for (const mpz_class& v : acc) {
        mpq_class c(v, d);
        c.canonicalize();
        r.c_.push_back(Scalar::from_mpq(c));
    }
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const Scalar& s) const {
    UniPoly r(field_);
    if (s.is_zero()) return r;
    r.c_ = c_;
    for (Scalar& c : r.c_) c = c * s;
    return r;
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero()) return *this;
    if (k >= 0) {
        UniPoly r(field_);
        r.c_.assign(static_cast<std::size_t>(k), Scalar::zero(field_));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }
    require(valuation() >= -k, "BadShape", "shift below valuation would truncate");
    UniPoly r(field_);
    r.c_.assign(c_.begin() + static_cast<std::size_t>(-k), c_.end());
    return r;
}

UniPoly UniPoly::pow(int e) const {
    require(e >= 0, "BadShape", "negative polynomial power");
    UniPoly acc = one(field_);
    UniPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar UniPoly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    check_same_field(divisor);
    require(!divisor.is_zero(), "DivisionByZero", "polynomial division by zero");
    UniPoly q(field_), r = *this;
    const Scalar lead_inv = divisor.leading().inverse();
    const int dd = divisor.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        const Scalar c = r.leading() * lead_inv;
        const int k = r.degree() - dd;
        q = q + monomial(c, k);
        r = r - divisor.scaled(c).shifted(k);
    }
    return {q, r};
}

bool UniPoly::operator==(const UniPoly& o) const {
    if (field_ != o.field_ || c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Scalar c = coeff(k);
        if (c.is_zero()) continue;
        bool neg = false;
        std::string cs = c.str();
        if (!cs.empty() && cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const bool unit = (cs == "1");
        if (k == 0) {
            out += cs;
        } else {
            if (!unit) out += cs + "*";
            out += (k == 1) ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

UniPoly poly_compose(const UniPoly& f, const UniPoly& g) {
    require(f.field() == g.field(), "FieldMismatch", "compose over different fields");
    UniPoly acc = UniPoly::zero(f.field());
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * g + UniPoly::constant(f.coeff(i));
    return acc;
}

} // namespace planekit
