#include "planekit/witness.hpp"

#include <functional>

namespace planekit {

namespace {

const FieldSpec kQ = FieldSpec::rationals();

mpq_class pow2(long e) {
    mpq_class r(1);
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    }
    return r;
}

} // namespace

GammaGens gamma_generators() {
    PolyAut s = AffineAut::linear(Mat2::scalar(Scalar::fraction(1, 2, kQ))).to_poly();
    PolyAut sp = AffineAut::linear(Mat2::from_rows(1, 1, 1, 0, kQ)).to_poly();
    PolyAut t = ElementaryAut::shear(UniPoly::monomial(Scalar::one(kQ), 2)).to_poly();
    return {s, sp, t};
}

bool CheckReport::all_pass() const {
    for (const auto& [name, ok] : checks) {
        if (!ok) return false;
    }
    return true;
}

std::string CheckReport::str() const {
    std::string out;
    for (const auto& [name, ok] : checks) {
        out += name;
        out += ok ? ": pass\n" : ": FAIL\n";
    }
    return out;
}

CheckReport verify_gamma_relations_with(const PolyAut& shear_like) {
    GammaGens g = gamma_generators();
    CheckReport rep;
    rep.checks.emplace_back("commuting pair", compose(g.s, g.sp) == compose(g.sp, g.s));
    PolyAut lhs = compose(g.s, compose(shear_like, inverse(g.s)));
    rep.checks.emplace_back("squaring conjugation", lhs == compose(shear_like, shear_like));
    return rep;
}

CheckReport verify_gamma_relations() { return verify_gamma_relations_with(gamma_generators().t); }

PolyAut gamma_letter_aut(GammaLetter l) {
    GammaGens g = gamma_generators();
    switch (l) {
    case GammaLetter::S: return g.s;
    case GammaLetter::SInv: return AffineAut::linear(Mat2::scalar(Scalar::from_int(2, kQ))).to_poly();
    case GammaLetter::Sp: return g.sp;
    case GammaLetter::SpInv: return AffineAut::linear(Mat2::from_rows(0, 1, 1, -1, kQ)).to_poly();
    case GammaLetter::T: return g.t;
    case GammaLetter::TInv:
        return ElementaryAut::shear(UniPoly::monomial(Scalar::from_int(-1, kQ), 2)).to_poly();
    }
    internal_error("unhandled letter");
}

PolyAut gamma_word(const std::vector<GammaLetter>& letters) {
    PolyAut acc = PolyAut::identity(kQ);
    for (GammaLetter l : letters) acc = compose(acc, gamma_letter_aut(l));
    return acc;
}

GammaElt GammaElt::linear(long a, long b) {
    GammaElt g;
    g.side = 1;
    g.a = a;
    g.b = b;
    return g;
}

GammaElt GammaElt::shear(long n, const mpq_class& q) {
    if (q == 0) return linear(n, 0);
    GammaElt g;
    g.side = 2;
    g.n = n;
    g.q = q;
    return g;
}

namespace {

bool gamma_in_A(const GammaElt& g) { return g.side == 1 && g.b == 0; }

GammaElt gamma_mul(const GammaElt& x, const GammaElt& y) {
    if (x.side == 1 && y.side == 1) return GammaElt::linear(x.a + y.a, x.b + y.b);
    // promote common-subgroup elements to the semidirect side
    long xn = x.side == 2 ? x.n : x.a;
    mpq_class xq = x.side == 2 ? x.q : mpq_class(0);
    long yn = y.side == 2 ? y.n : y.a;
    mpq_class yq = y.side == 2 ? y.q : mpq_class(0);
    if ((x.side == 1 && !gamma_in_A(x)) || (y.side == 1 && !gamma_in_A(y))) {
        internal_error("cross-side product outside the common subgroup");
    }
    return GammaElt::shear(xn + yn, xq * pow2(-yn) + yq);
}

GammaElt gamma_inv(const GammaElt& g) {
    if (g.side == 1) return GammaElt::linear(-g.a, -g.b);
    return GammaElt::shear(-g.n, -g.q * pow2(g.n));
}

bool gamma_eq(const GammaElt& x, const GammaElt& y) {
    if (x.side != y.side) return false;
    if (x.side == 1) return x.a == y.a && x.b == y.b;
    return x.n == y.n && x.q == y.q;
}

std::string gamma_key(const GammaElt& g) {
    if (g.side == 1) return "L:" + std::to_string(g.a) + ":" + std::to_string(g.b);
    return "T:" + std::to_string(g.n) + ":" + g.q.get_str();
}

} // namespace

AmalgamSpec<GammaElt> gamma_amalgam_spec() {
    AmalgamSpec<GammaElt> spec;
    spec.mul = gamma_mul;
    spec.inv = gamma_inv;
    spec.eq = gamma_eq;
    spec.in_A = gamma_in_A;
    spec.side_of = [](const GammaElt& g) { return g.side; };
    spec.coset_rep = [](const GammaElt& g) {
        if (g.side == 1) {
            return std::make_pair(GammaElt::linear(0, g.b), GammaElt::linear(g.a, 0));
        }
        // s^n tau^q = tau^(q 2^n) . s^n
        return std::make_pair(GammaElt::shear(0, g.q * pow2(g.n)), GammaElt::linear(g.n, 0));
    };
    spec.key = gamma_key;
    spec.identity = GammaElt::linear(0, 0);
    spec.side1_samples = {GammaElt::linear(0, 1), GammaElt::linear(0, -1)};
    spec.side2_samples = {GammaElt::shear(0, 1), GammaElt::shear(0, -1)};
    // conjugating a nontrivial power of s by tau leaves the edge subgroup
    spec.h_witness = [](const GammaElt&) { return std::vector<GammaElt>{GammaElt::shear(0, 1)}; };
    return spec;
}

GammaElt gamma_letter_elt(GammaLetter l) {
    switch (l) {
    case GammaLetter::S: return GammaElt::linear(1, 0);
    case GammaLetter::SInv: return GammaElt::linear(-1, 0);
    case GammaLetter::Sp: return GammaElt::linear(0, 1);
    case GammaLetter::SpInv: return GammaElt::linear(0, -1);
    case GammaLetter::T: return GammaElt::shear(0, 1);
    case GammaLetter::TInv: return GammaElt::shear(0, -1);
    }
    internal_error("unhandled letter");
}

namespace {

std::string reduced_key(const ReducedWord<GammaElt>& w) {
    std::string out;
    for (const GammaElt& f : w.factors) {
        out += gamma_key(f);
        out += "|";
    }
    out += "~";
    out += gamma_key(w.tail);
    return out;
}

} // namespace

DistinctnessReport distinctness_suite(int max_len) {
    require(max_len >= 1, "BadShape", "word length bound must be positive");
    AmalgamSpec<GammaElt> spec = gamma_amalgam_spec();
    const std::array<GammaLetter, 6> letters = {GammaLetter::S,  GammaLetter::SInv,
                                                GammaLetter::Sp, GammaLetter::SpInv,
                                                GammaLetter::T,  GammaLetter::TInv};
    const std::array<const char*, 6> names = {"s", "s^-1", "s'", "s'^-1", "t", "t^-1"};
    std::vector<PolyAut> auts;
    std::vector<GammaElt> elts;
    for (GammaLetter l : letters) {
        auts.push_back(gamma_letter_aut(l));
        elts.push_back(gamma_letter_elt(l));
    }

    DistinctnessReport rep;
    std::map<std::string, std::pair<std::string, std::string>> by_form; // form -> (aut, word)
    std::map<std::string, std::string> by_aut;                          // aut -> form

    std::function<void(int, int, const ReducedWord<GammaElt>&, const PolyAut&, const std::string&)>
        walk = [&](int last, int len, const ReducedWord<GammaElt>& w, const PolyAut& aut,
                   const std::string& word) {
            if (len > 0) {
                ++rep.words_enumerated;
                std::string form = reduced_key(w);
                std::string autstr = aut.str();
                auto it = by_form.find(form);
                if (it != by_form.end()) {
                    if (it->second.first != autstr) {
                        rep.mismatches.push_back(word + " vs " + it->second.second);
                    }
                } else {
                    by_form.emplace(form, std::make_pair(autstr, word));
                    auto [jt, fresh] = by_aut.emplace(autstr, form);
                    if (!fresh && jt->second != form) {
                        rep.collisions.push_back(word + " agrees with the word for form "
                                                 + jt->second);
                    }
                }
            }
            if (len == max_len) return;
            for (int i = 0; i < 6; ++i) {
                if (last >= 0 && (last ^ 1) == i) continue; // free reduction
                ReducedWord<GammaElt> w2 = reduced_push(w, elts[static_cast<size_t>(i)], spec);
                PolyAut a2 = compose(aut, auts[static_cast<size_t>(i)]);
                std::string word2 =
                    word.empty() ? names[static_cast<size_t>(i)] : word + "*" + names[static_cast<size_t>(i)];
                walk(i, len + 1, w2, a2, word2);
            }
        };
    walk(-1, 0, reduced_identity(spec), PolyAut::identity(kQ), "");
    rep.normal_forms = static_cast<long>(by_form.size());
    return rep;
}

PolyAut hypothesis_H_witness(const PolyAut& g) {
    require(membership(g) == Membership::InB, "BadShape",
            "input must lie in the triangular subgroup: " + g.str());
    AffineAut aff = AffineAut::from_poly(g);
    require(aff.tx.is_zero() && aff.ty.is_zero(), "BadShape", "input must be linear: " + g.str());
    const Mat2& m = aff.lin;
    if (m.is_identity()) raise("IsIdentity", "the identity has no conjugate outside anything");
    const FieldSpec& f = g.field();
    PolyAut gamma = PolyAut::identity(f);
    if (!m.c.is_zero()) {
        gamma = AffineAut::linear(Mat2::from_rows(0, 1, 1, 0, f)).to_poly();
    } else if (m.a == m.d) {
        gamma = ElementaryAut::shear(UniPoly::monomial(Scalar::one(f), 2)).to_poly();
    } else {
        gamma = AffineAut::linear(Mat2::from_rows(1, 1, 0, 1, f)).to_poly();
    }
    PolyAut conj = compose(gamma, compose(g, inverse(gamma)));
    if (membership(conj) == Membership::InB) internal_error("conjugate stayed triangular");
    return gamma;
}

BinomialPoly::BinomialPoly(const FieldSpec& f) : field(f) {
    require(f.is_rationals(), "BadShape", "binomial basis needs the rationals");
}

BinomialPoly::BinomialPoly(const FieldSpec& f, std::vector<Scalar> coeffs) : BinomialPoly(f) {
    a = std::move(coeffs);
    for (const Scalar& c : a) {
        require(c.field() == field, "FieldMismatch", "coefficient over the wrong field");
    }
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

std::string BinomialPoly::str() const {
    if (a.empty()) return "0";
    std::string out;
    for (int n = static_cast<int>(a.size()) - 1; n >= 0; --n) {
        const Scalar& c = a[static_cast<size_t>(n)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += c.str() + "*";
        out += "C(t," + std::to_string(n) + ")";
    }
    return out;
}

UniPoly binomial_basis_poly(int n, const FieldSpec& f) {
    require(n >= 0, "BadShape", "binomial index must be nonnegative");
    require(f.is_rationals(), "BadShape", "binomial basis needs the rationals");
    UniPoly acc = UniPoly::one(f);
    for (int k = 1; k <= n; ++k) {
        UniPoly lin = UniPoly::t(f) - UniPoly::constant(Scalar::from_int(k - 1, f));
        acc = (acc * lin).scaled(Scalar::fraction(1, k, f));
    }
    return acc;
}

UniPoly binomial_to_poly(const BinomialPoly& b) {
    UniPoly acc = UniPoly::zero(b.field);
    for (size_t n = 0; n < b.a.size(); ++n) {
        if (b.a[n].is_zero()) continue;
        acc = acc + binomial_basis_poly(static_cast<int>(n), b.field).scaled(b.a[n]);
    }
    return acc;
}

BinomialPoly binomial_from_poly(const UniPoly& f) {
    const FieldSpec& fld = f.field();
    require(fld.is_rationals(), "BadShape", "binomial basis needs the rationals");
    std::vector<Scalar> out;
    if (!f.is_zero()) out.assign(static_cast<size_t>(f.degree()) + 1, Scalar::zero(fld));
    UniPoly rem = f;
    while (!rem.is_zero()) {
        int k = rem.degree();
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
        Scalar ak = rem.leading() * Scalar::from_mpq(mpq_class(fact));
        out[static_cast<size_t>(k)] = ak;
        rem = rem - binomial_basis_poly(k, fld).scaled(ak);
        if (!rem.is_zero() && rem.degree() >= k) internal_error("degree failed to drop in basis change");
    }
    return BinomialPoly(fld, std::move(out));
}

BinomialPoly binomial_shift(const BinomialPoly& b, const Scalar& alpha) {
    require(alpha.field() == b.field, "FieldMismatch", "shift amount over the wrong field");
    UniPoly arg = UniPoly::t(b.field) + UniPoly::constant(alpha);
    return binomial_from_poly(poly_compose(binomial_to_poly(b), arg));
}

namespace {

UniPoly truncate_poly(const UniPoly& f, int order) {
    if (f.degree() < order) return f;
    std::vector<Scalar> cs;
    for (int i = 0; i < order; ++i) cs.push_back(f.coeff(i));
    return UniPoly::from_coeffs(f.field(), cs);
}

// class of (regular series) * (principal part), exact: pole k only sees the
// first k regular coefficients
void fold_singular(const UniPoly& reg, int reg_order, const std::map<int, Scalar>& sing,
                   std::map<int, Scalar>& out, const FieldSpec& f) {
    for (const auto& [k, c] : sing) {
        require(reg_order >= k, "BadShape",
                "regular part too short for an exact singular product");
        for (int j = 1; j <= k; ++j) {
            Scalar add = reg.coeff(k - j) * c;
            if (add.is_zero()) continue;
            auto it = out.find(j);
            if (it == out.end()) {
                out.emplace(j, add);
            } else {
                it->second = it->second + add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    (void)f;
}

} // namespace

SquareZeroElt sz_make(const UniPoly& regular, std::map<int, Scalar> singular, int order) {
    require(order >= 1, "BadShape", "order must be positive");
    for (auto it = singular.begin(); it != singular.end();) {
        require(it->first >= 1, "BadShape", "singular exponents must be at least 1");
        require(it->second.field() == regular.field(), "FieldMismatch",
                "singular coefficient over the wrong field");
        if (it->second.is_zero()) {
            it = singular.erase(it);
        } else {
            ++it;
        }
    }
    return {truncate_poly(regular, order), order, std::move(singular)};
}

SquareZeroElt sz_zero(const FieldSpec& f, int order) {
    return sz_make(UniPoly::zero(f), {}, order);
}

SquareZeroElt sz_one(const FieldSpec& f, int order) {
    return sz_make(UniPoly::one(f), {}, order);
}

SquareZeroElt sz_add(const SquareZeroElt& x, const SquareZeroElt& y) {
    int order = std::min(x.order, y.order);
    std::map<int, Scalar> sing = x.singular;
    for (const auto& [k, c] : y.singular) {
        auto it = sing.find(k);
        if (it == sing.end()) {
            sing.emplace(k, c);
        } else {
            it->second = it->second + c;
        }
    }
    return sz_make(x.regular + y.regular, std::move(sing), order);
}

SquareZeroElt sz_mul(const SquareZeroElt& x, const SquareZeroElt& y) {
    int order = std::min(x.order, y.order);
    std::map<int, Scalar> sing;
    fold_singular(x.regular, x.order, y.singular, sing, x.regular.field());
    fold_singular(y.regular, y.order, x.singular, sing, x.regular.field());
    // singular * singular vanishes: square-zero ideal
    return sz_make(x.regular * y.regular, std::move(sing), order);
}

bool sz_equal(const SquareZeroElt& x, const SquareZeroElt& y) {
    int order = std::min(x.order, y.order);
    if (truncate_poly(x.regular, order) != truncate_poly(y.regular, order)) return false;
    return x.singular == y.singular;
}

std::string sz_str(const SquareZeroElt& x) {
    std::string out;
    for (auto it = x.singular.rbegin(); it != x.singular.rend(); ++it) {
        if (!out.empty()) out += " + ";
        if (!it->second.is_one()) out += it->second.str() + "*";
        out += "x^-" + std::to_string(it->first);
    }
    std::string reg = x.regular.str();
    if (out.empty() || reg != "0") {
        if (!out.empty()) out += " + ";
        out += "[" + reg + " + O(x^" + std::to_string(x.order) + ")]";
    }
    return out;
}

SZMat sz_mat_mul(const SZMat& l, const SZMat& r) {
    return {sz_add(sz_mul(l.a, r.a), sz_mul(l.b, r.c)),
            sz_add(sz_mul(l.a, r.b), sz_mul(l.b, r.d)),
            sz_add(sz_mul(l.c, r.a), sz_mul(l.d, r.c)),
            sz_add(sz_mul(l.c, r.b), sz_mul(l.d, r.d))};
}

bool sz_mat_equal(const SZMat& l, const SZMat& r) {
    return sz_equal(l.a, r.a) && sz_equal(l.b, r.b) && sz_equal(l.c, r.c) && sz_equal(l.d, r.d);
}

UniPoly binomial_series(const Scalar& alpha, int order) {
    require(order >= 1, "BadShape", "order must be positive");
    const FieldSpec& f = alpha.field();
    std::vector<Scalar> cs;
    Scalar c = Scalar::one(f);
    cs.push_back(c);
    for (int k = 1; k < order; ++k) {
        c = c * (alpha - Scalar::from_int(k - 1, f)) / Scalar::from_int(k, f);
        cs.push_back(c);
    }
    return UniPoly::from_coeffs(f, cs);
}

SZMat cornulier_rho1(const BinomialPoly& f, int order) {
    std::map<int, Scalar> sing;
    for (size_t n = 0; n < f.a.size(); ++n) {
        if (!f.a[n].is_zero()) sing.emplace(static_cast<int>(n) + 1, f.a[n]);
    }
    return {sz_one(f.field, order), sz_make(UniPoly::zero(f.field), std::move(sing), order),
            sz_zero(f.field, order), sz_one(f.field, order)};
}

SZMat cornulier_rho2(const Scalar& alpha, int order) {
    const FieldSpec& f = alpha.field();
    require(f.is_rationals(), "BadShape", "series exponent must be rational");
    return {sz_one(f, order), sz_zero(f, order), sz_zero(f, order),
            sz_make(binomial_series(alpha, order), {}, order)};
}

bool verify_cornulier_identity(const BinomialPoly& f, const Scalar& alpha) {
    require(alpha.field() == f.field, "FieldMismatch", "shift amount over the wrong field");
    int order = (f.degree() >= 0 ? f.degree() + 1 : 1) + 1;
    SZMat lhs = sz_mat_mul(sz_mat_mul(cornulier_rho2(-alpha, order), cornulier_rho1(f, order)),
                           cornulier_rho2(alpha, order));
    SZMat rhs = cornulier_rho1(binomial_shift(f, alpha), order);
    return sz_mat_equal(lhs, rhs);
}

} // namespace planekit
