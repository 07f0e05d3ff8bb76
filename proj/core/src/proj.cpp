#include "planekit/proj.hpp"

namespace planekit {

ProjPoint::ProjPoint(const Scalar& a, const Scalar& b) : a_(a), b_(b) {
    require(a.field() == b.field(), "FieldMismatch", "projective coordinates over different fields");
    require(!(a.is_zero() && b.is_zero()), "ZeroVector", "projective point needs a nonzero vector");
    if (!a_.is_zero()) {
        b_ = b_ / a_;
        a_ = Scalar::one(a.field());
    } else {
        b_ = Scalar::one(a.field());
    }
}

ProjPoint ProjPoint::from_ints(long a, long b, const FieldSpec& f) {
    return ProjPoint(Scalar::from_int(a, f), Scalar::from_int(b, f));
}

ProjPoint ProjPoint::image_line(const Mat2& m) {
    require(!m.is_zero(), "ZeroVector", "image line of the zero matrix");
    if (!m.a.is_zero() || !m.c.is_zero()) return ProjPoint(m.a, m.c);
    return ProjPoint(m.b, m.d);
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    const int ca = a_.cmp(o.a_);
    if (ca != 0) return ca < 0;
    return b_.cmp(o.b_) < 0;
}

bool ProjPoint::contains(const Scalar& x, const Scalar& y) const {
    // (x, y) parallel to (a, b): cross product vanishes
    return (a_ * y - b_ * x).is_zero();
}

std::string ProjPoint::str() const { return "(" + a_.str() + ":" + b_.str() + ")"; }

LineFrame line_frame(const ProjPoint& delta) {
    const Scalar a = delta.a();
    const Scalar b = delta.b();
    // l spans the annihilator line (b, -a); normalize it like a projective point
    Scalar l1 = b;
    Scalar l2 = -a;
    if (!l1.is_zero()) {
        l2 = l2 / l1;
        l1 = Scalar::one(a.field());
    } else {
        l2 = Scalar::one(a.field());
    }
    return LineFrame{a, b, l1, l2};
}

Mat2 e_delta(const ProjPoint& delta) {
    const LineFrame fr = line_frame(delta);
    return Mat2(fr.w1 * fr.l1, fr.w1 * fr.l2, fr.w2 * fr.l1, fr.w2 * fr.l2);
}

std::vector<ProjPoint> all_proj_points(const FieldSpec& f) {
    require(f.is_prime_field(), "FieldMismatch", "projective line enumeration needs a finite field");
    std::vector<ProjPoint> pts;
    pts.push_back(ProjPoint(Scalar::zero(f), Scalar::one(f)));
    for (std::uint64_t m = 0; m < f.p; ++m)
        pts.push_back(ProjPoint(Scalar::one(f), Scalar::residue(m, f)));
    return pts;
}

ProjPoint apply_mat(const Mat2& m, const ProjPoint& delta) {
    require(!m.det().is_zero(), "SingularMatrix", "projective action of a singular matrix");
    const auto v = m.apply(delta.a(), delta.b());
    return ProjPoint(v[0], v[1]);
}

} // namespace planekit
