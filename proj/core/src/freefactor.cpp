#include "planekit/freefactor.hpp"

namespace planekit {

TauFactor::TauFactor(ProjPoint d, UniPoly f_) : delta(std::move(d)), f(std::move(f_)) {
    require(!f.is_zero(), "BadShape", "shear with zero polynomial");
    require(f.valuation() >= 2, "BadShape",
            "shear polynomial must lie in t^2 K[t], got " + f.str());
    require(delta.field() == f.field(), "FieldMismatch", "shear line and polynomial fields differ");
}

PolyAut TauFactor::to_poly() const {
    const FieldSpec fld = f.field();
    const LineFrame fr = line_frame(delta);
    const BiPoly l = BiPoly::x(fld).scaled(fr.l1) + BiPoly::y(fld).scaled(fr.l2);
    const BiPoly fl = BiPoly::from_unipoly(f, l);
    return PolyAut(BiPoly::x(fld) + fl.scaled(fr.w1), BiPoly::y(fld) + fl.scaled(fr.w2));
}

PolyAut tau(const ProjPoint& delta, const UniPoly& f) {
    return TauFactor(delta, f).to_poly();
}

PolyAut TauWord::recompose(const FieldSpec& f) const {
    PolyAut acc = PolyAut::identity(f);
    for (const TauFactor& u : factors) acc = compose(acc, u.to_poly());
    return acc;
}

std::vector<int> TauWord::degree_list() const {
    std::vector<int> m;
    m.reserve(factors.size());
    for (const TauFactor& u : factors) m.push_back(u.f.degree());
    return m;
}

TauWord tau_word_normalize(std::vector<TauFactor> factors) {
    std::vector<TauFactor> out;
    for (TauFactor& u : factors) {
        if (!out.empty() && out.back().delta == u.delta) {
            UniPoly sum = out.back().f + u.f;
            out.pop_back();
            if (!sum.is_zero()) out.push_back(TauFactor(u.delta, sum));
        } else {
            out.push_back(std::move(u));
        }
    }
    return TauWord{std::move(out)};
}

TauFactor tau_conjugate(const Mat2& L, const TauFactor& u) {
    const FieldSpec fld = L.field();
    require(!L.det().is_zero(), "SingularMatrix", "conjugation by a singular matrix");
    const LineFrame src = line_frame(u.delta);
    const ProjPoint image = apply_mat(L, u.delta);
    const LineFrame dst = line_frame(image);
    // mu: L w_delta = mu w_image (the image spans the same line, so one
    // nonzero coordinate determines mu; verify on both)
    const auto lw = L.apply(src.w1, src.w2);
    Scalar mu = dst.w1.is_zero() ? lw[1] / dst.w2 : lw[0] / dst.w1;
    require(lw[0] == mu * dst.w1 && lw[1] == mu * dst.w2, "InternalAssertion",
            "image vector not proportional to the canonical representative");
    // lambda: l_delta . L^-1 = lambda l_image (row vector times matrix)
    const Mat2 Li = L.inverse();
    const Scalar r1 = src.l1 * Li.a + src.l2 * Li.c;
    const Scalar r2 = src.l1 * Li.b + src.l2 * Li.d;
    Scalar lambda = dst.l1.is_zero() ? r2 / dst.l2 : r1 / dst.l1;
    require(r1 == lambda * dst.l1 && r2 == lambda * dst.l2, "InternalAssertion",
            "pulled-back covector not proportional to the canonical one");
    // h(s) = mu f(lambda s)
    UniPoly h = UniPoly::zero(fld);
    for (int k = 0; k <= u.f.degree(); ++k)
        h = h + UniPoly::monomial(u.f.coeff(k) * mu * lambda.pow(k), k);
    return TauFactor(image, h);
}

TauWord free_factorize(const PolyAut& phi) {
    const FieldSpec fld = phi.field();
    require(fixes_origin(phi), "NotInAut1", "map does not fix the origin: " + phi.str());
    require(differential_at_origin(phi).is_identity(), "NotInAut1",
            "differential at the origin is not the identity: " + phi.str());
    const VdkWord word = vdk_factorize(phi);
    std::vector<TauFactor> out;
    Mat2 L = Mat2::identity(fld);
    const ProjPoint delta0 = ProjPoint::from_ints(0, 1, fld);
    for (const VdkFactor& x : word.factors) {
        if (x.kind == Membership::Affine) {
            const AffineAut a = AffineAut::from_poly(x.value);
            require(a.tx.is_zero() && a.ty.is_zero(), "InternalAssertion",
                    "origin-preserving word produced a translating factor");
            L = L * a.lin;
        } else {
            const ElementaryAut e = ElementaryAut::from_poly(x.value);
            require(e.z1.is_one() && e.z2.is_one() && e.t0.is_zero(), "InternalAssertion",
                    "elementary representative is not a shear");
            out.push_back(tau_conjugate(L, TauFactor(delta0, e.fx)));
        }
    }
    const AffineAut tail = AffineAut::from_poly(word.tail);
    require(tail.tx.is_zero() && tail.ty.is_zero(), "InternalAssertion",
            "origin-preserving word produced a translating tail");
    L = L * tail.lin;
    require(L.is_identity(), "InternalAssertion",
            "linear factors of an identity-differential map do not cancel");
    // consecutive lines are automatically distinct: between two shears sits a
    // linear representative moving (0:1); normalize anyway as a cheap check
    TauWord w = tau_word_normalize(std::move(out));
    return w;
}

} // namespace planekit
