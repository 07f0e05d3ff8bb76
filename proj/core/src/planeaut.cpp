#include "planekit/planeaut.hpp"

#include "planekit/parse.hpp"

namespace planekit {

PolyAut::PolyAut(BiPoly f, BiPoly g) : f_(std::move(f)), g_(std::move(g)) {
    require(f_.field() == g_.field(), "FieldMismatch", "map components over different fields");
}

PolyAut PolyAut::identity(const FieldSpec& f) {
    return PolyAut(BiPoly::x(f), BiPoly::y(f));
}

PolyAut PolyAut::from_text(const std::string& text, const FieldSpec& f) {
    auto [a, b] = parse_poly_pair(text, f);
    return PolyAut(std::move(a), std::move(b));
}

std::string PolyAut::str() const { return "(" + f_.str() + " ; " + g_.str() + ")"; }

std::string membership_name(Membership m) {
    switch (m) {
        case Membership::InB: return "InB";
        case Membership::Affine: return "Affine";
        case Membership::Elementary: return "Elementary";
        case Membership::General: return "General";
    }
    return "?";
}

AffineAut::AffineAut(Mat2 l, Scalar tx_, Scalar ty_)
    : lin(std::move(l)), tx(std::move(tx_)), ty(std::move(ty_)) {
    require(!lin.det().is_zero(), "SingularMatrix", "affine map with singular linear part");
}

AffineAut AffineAut::linear(const Mat2& l) {
    return AffineAut(l, Scalar::zero(l.field()), Scalar::zero(l.field()));
}

AffineAut AffineAut::from_poly(const PolyAut& p) {
    require(p.f().total_degree() <= 1 && p.g().total_degree() <= 1, "BadShape",
            "map is not affine: " + p.str());
    const Mat2 l(p.f().coeff(1, 0), p.f().coeff(0, 1), p.g().coeff(1, 0), p.g().coeff(0, 1));
    return AffineAut(l, p.f().coeff(0, 0), p.g().coeff(0, 0));
}

PolyAut AffineAut::to_poly() const {
    const FieldSpec f = lin.field();
    BiPoly fx = BiPoly::x(f).scaled(lin.a) + BiPoly::y(f).scaled(lin.b) + BiPoly::constant(tx);
    BiPoly fy = BiPoly::x(f).scaled(lin.c) + BiPoly::y(f).scaled(lin.d) + BiPoly::constant(ty);
    return PolyAut(fx, fy);
}

AffineAut AffineAut::inverse() const {
    const Mat2 li = lin.inverse();
    const auto t = li.apply(tx, ty);
    return AffineAut(li, -t[0], -t[1]);
}

ElementaryAut::ElementaryAut(Scalar z1_, Scalar z2_, Scalar t0_, UniPoly fx_)
    : z1(std::move(z1_)), z2(std::move(z2_)), t0(std::move(t0_)), fx(std::move(fx_)) {
    require(!z1.is_zero() && !z2.is_zero(), "SingularMatrix", "elementary map with zero scale");
}

ElementaryAut ElementaryAut::shear(const UniPoly& f) {
    const FieldSpec fld = f.field();
    return ElementaryAut(Scalar::one(fld), Scalar::one(fld), Scalar::zero(fld), f);
}

ElementaryAut ElementaryAut::from_poly(const PolyAut& p) {
    const FieldSpec fld = p.field();
    // f = z1 x + t0, g = z2 y + F(x)
    require(p.f().depends_only_on_x() && p.f().total_degree() <= 1, "BadShape",
            "first component is not z1*x + t0: " + p.str());
    const Scalar z1 = p.f().coeff(1, 0);
    const Scalar t0 = p.f().coeff(0, 0);
    UniPoly F = UniPoly::zero(fld);
    Scalar z2 = Scalar::zero(fld);
    for (const auto& [k, c] : p.g().terms()) {
        if (k.second == 0) {
            F = F + UniPoly::monomial(c, k.first);
        } else if (k.first == 0 && k.second == 1) {
            z2 = c;
        } else {
            raise("BadShape", "second component is not z2*y + F(x): " + p.str());
        }
    }
    require(!z2.is_zero(), "BadShape", "second component has no y term: " + p.str());
    return ElementaryAut(z1, z2, t0, F);
}

PolyAut ElementaryAut::to_poly() const {
    const FieldSpec fld = z1.field();
    BiPoly f = BiPoly::x(fld).scaled(z1) + BiPoly::constant(t0);
    BiPoly g = BiPoly::y(fld).scaled(z2) + BiPoly::from_unipoly(fx, BiPoly::x(fld));
    return PolyAut(f, g);
}

ElementaryAut ElementaryAut::inverse() const {
    // (x, y) -> ((x - t0)/z1, (y - f((x - t0)/z1))/z2)
    const FieldSpec fld = z1.field();
    const Scalar z1i = z1.inverse();
    const Scalar z2i = z2.inverse();
    // inverse is elementary with parameters (1/z1, 1/z2, -t0/z1, -f((t-t0)/z1)/z2)
    UniPoly lin = UniPoly::from_coeffs(fld, {-t0 * z1i, z1i}); // (t - t0)/z1
    UniPoly g = poly_compose(fx, lin).scaled(-z2i);
    return ElementaryAut(z1i, z2i, -t0 * z1i, g);
}

PolyAut compose(const PolyAut& phi, const PolyAut& psi) {
    return PolyAut(bipoly_subst(phi.f(), psi.f(), psi.g()),
                   bipoly_subst(phi.g(), psi.f(), psi.g()));
}

Membership membership(const PolyAut& p) {
    const bool affine_shape = p.f().total_degree() <= 1 && p.g().total_degree() <= 1;
    bool affine = false;
    if (affine_shape) {
        const Mat2 l(p.f().coeff(1, 0), p.f().coeff(0, 1), p.g().coeff(1, 0), p.g().coeff(0, 1));
        affine = !l.det().is_zero();
    }
    bool elementary = false;
    if (p.f().depends_only_on_x() && p.f().total_degree() <= 1 && !p.f().coeff(1, 0).is_zero()) {
        elementary = true;
        bool has_y = false;
        for (const auto& [k, c] : p.g().terms()) {
            if (k.second == 0) continue;
            if (k.first == 0 && k.second == 1) {
                has_y = true;
                continue;
            }
            elementary = false;
            break;
        }
        if (!has_y) elementary = false;
    }
    if (affine && elementary) return Membership::InB;
    if (affine) return Membership::Affine;
    if (elementary) return Membership::Elementary;
    return Membership::General;
}

bool fixes_origin(const PolyAut& p) {
    return p.f().coeff(0, 0).is_zero() && p.g().coeff(0, 0).is_zero();
}

Mat2 differential_at_origin(const PolyAut& p) {
    return Mat2(p.f().coeff(1, 0), p.f().coeff(0, 1), p.g().coeff(1, 0), p.g().coeff(0, 1));
}

int degree(const PolyAut& p) {
    const int d = std::max(p.f().total_degree(), p.g().total_degree());
    return d;
}

std::vector<int> VdkWord::type_seq() const {
    std::vector<int> t;
    t.reserve(factors.size());
    for (const auto& f : factors) t.push_back(f.side());
    return t;
}

PolyAut VdkWord::recompose() const {
    PolyAut acc = PolyAut::identity(tail.field());
    for (const auto& f : factors) acc = compose(acc, f.value);
    return compose(acc, tail);
}

Mat2 affine_coset_rep(const ProjPoint& delta) {
    const FieldSpec f = delta.field();
    require(!delta.a().is_zero(), "BadShape", "coset (0:1) is B0 itself and has no outside representative");
    // columns ((0,1), w): invertible since w has nonzero first coordinate
    return Mat2(Scalar::zero(f), delta.a(), Scalar::one(f), delta.b());
}

namespace {

PolyAut swap_xy(const FieldSpec& f) {
    return PolyAut(BiPoly::y(f), BiPoly::x(f));
}

PolyAut invert_generator(const PolyAut& p) {
    // closed forms for the two sides; composite conjugators fall back on the
    // general factorizing inverse
    switch (membership(p)) {
        case Membership::InB:
        case Membership::Affine:
            return AffineAut::from_poly(p).inverse().to_poly();
        case Membership::Elementary:
            return ElementaryAut::from_poly(p).inverse().to_poly();
        case Membership::General:
            break;
    }
    return inverse(p);
}

std::pair<PolyAut, PolyAut> split_affine(const PolyAut& p) {
    const AffineAut a = AffineAut::from_poly(p);
    const ProjPoint delta(a.lin.b, a.lin.d); // direction of the second column
    const Mat2 r = affine_coset_rep(delta);
    const PolyAut rep = AffineAut::linear(r).to_poly();
    const PolyAut rest = compose(AffineAut::linear(r.inverse()).to_poly(), p);
    return {rep, rest};
}

std::pair<PolyAut, PolyAut> split_elementary(const PolyAut& p) {
    const ElementaryAut e = ElementaryAut::from_poly(p);
    const FieldSpec fld = p.field();
    // G = F((t - t0)/z1); the representative keeps the degree >= 2 part of G
    const Scalar z1i = e.z1.inverse();
    UniPoly lin = UniPoly::from_coeffs(fld, {-e.t0 * z1i, z1i});
    UniPoly G = poly_compose(e.fx, lin);
    UniPoly high = G - UniPoly::from_coeffs(fld, {G.coeff(0), G.coeff(1)});
    const PolyAut rep = ElementaryAut::shear(high).to_poly();
    const PolyAut rest = compose(ElementaryAut::shear(-high).to_poly(), p);
    return {rep, rest};
}

} // namespace

AmalgamSpec<PolyAut> vdk_amalgam_spec(const FieldSpec& f) {
    AmalgamSpec<PolyAut> spec;
    spec.mul = [](const PolyAut& a, const PolyAut& b) { return compose(a, b); };
    spec.inv = [](const PolyAut& a) { return invert_generator(a); };
    spec.eq = [](const PolyAut& a, const PolyAut& b) { return a == b; };
    spec.in_A = [](const PolyAut& a) { return membership(a) == Membership::InB; };
    spec.side_of = [](const PolyAut& a) {
        switch (membership(a)) {
            case Membership::Affine: return 1;
            case Membership::Elementary: return 2;
            default: break;
        }
        raise("SpecViolation", "side requested for an element outside the two sides: " + a.str());
    };
    spec.coset_rep = [](const PolyAut& a) {
        return membership(a) == Membership::Affine ? split_affine(a) : split_elementary(a);
    };
    spec.key = [](const PolyAut& a) { return a.str(); };
    spec.identity = PolyAut::identity(f);
    spec.side1_samples = {
        AffineAut::linear(affine_coset_rep(ProjPoint::from_ints(1, 0, f))).to_poly(),
        AffineAut::linear(affine_coset_rep(ProjPoint::from_ints(1, 1, f))).to_poly(),
    };
    spec.side2_samples = {
        ElementaryAut::shear(UniPoly::monomial(Scalar::one(f), 2)).to_poly(),
        ElementaryAut::shear(UniPoly::monomial(Scalar::one(f), 3)).to_poly(),
    };
    return spec;
}

VdkWord vdk_word_from_reduced(const ReducedWord<PolyAut>& w) {
    VdkWord out{{}, w.tail};
    out.factors.reserve(w.factors.size());
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        const Membership m = w.type_seq[i] == 1 ? Membership::Affine : Membership::Elementary;
        out.factors.push_back(VdkFactor{m, w.factors[i]});
    }
    return out;
}

VdkWord vdk_factorize(const PolyAut& phi) {
    const FieldSpec fld = phi.field();
    std::vector<PolyAut> raw; // inverses of the applied reducers, in compose order
    PolyAut cur = phi;
    for (;;) {
        const int df = cur.f().total_degree();
        const int dg = cur.g().total_degree();
        if (df < 1 || dg < 1)
            raise("NotAnAutomorphism", "a component of " + phi.str() + " is constant");
        if (df <= 1 && dg <= 1) {
            if (differential_at_origin(cur).det().is_zero())
                raise("NotAnAutomorphism", "affine residue of " + phi.str() + " is singular");
            break;
        }
        if (df > dg) {
            const PolyAut sw = swap_xy(fld);
            cur = compose(sw, cur);
            raw.push_back(sw); // the swap is an involution
            continue;
        }
        if (dg % df != 0)
            raise("NotAnAutomorphism",
                  "degree reduction stalls on " + phi.str() + " (component degrees " +
                      std::to_string(df) + ", " + std::to_string(dg) + ")");
        const int k = dg / df;
        Scalar c = Scalar::zero(fld);
        if (!proportional(cur.g().leading_form(), cur.f().leading_form().pow(k), c))
            raise("NotAnAutomorphism",
                  "degree reduction stalls on " + phi.str() + " (leading forms not proportional)");
        // left-compose with (x, y - c x^k); undo factor is (x, y + c x^k)
        cur = PolyAut(cur.f(), cur.g() - cur.f().pow(k).scaled(c));
        require(cur.g().total_degree() < dg, "InternalAssertion",
                "shear failed to lower the degree");
        raw.push_back(ElementaryAut::shear(UniPoly::monomial(c, k)).to_poly());
    }
    raw.push_back(cur); // the affine residue
    const AmalgamSpec<PolyAut> spec = vdk_amalgam_spec(fld);
    const ReducedWord<PolyAut> red = reduce(raw, spec);
    return vdk_word_from_reduced(red);
}

PolyAut inverse(const PolyAut& phi) {
    const VdkWord w = vdk_factorize(phi);
    PolyAut acc = invert_generator(w.tail);
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
        acc = compose(acc, invert_generator(it->value));
    return acc;
}

} // namespace planekit
