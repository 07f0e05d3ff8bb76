#include "planekit/mat.hpp"

#include <algorithm>

namespace planekit {

Mat2::Mat2(Scalar a_, Scalar b_, Scalar c_, Scalar d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    require(a.field() == b.field() && a.field() == c.field() && a.field() == d.field(),
            "FieldMismatch", "matrix entries over different fields");
}

Mat2 Mat2::identity(const FieldSpec& f) {
    return Mat2(Scalar::one(f), Scalar::zero(f), Scalar::zero(f), Scalar::one(f));
}

Mat2 Mat2::scalar(const Scalar& s) {
    return Mat2(s, Scalar::zero(s.field()), Scalar::zero(s.field()), s);
}

Mat2 Mat2::from_rows(long a, long b, long c, long d, const FieldSpec& f) {
    return Mat2(Scalar::from_int(a, f), Scalar::from_int(b, f),
                Scalar::from_int(c, f), Scalar::from_int(d, f));
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2(a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d);
}

Mat2 Mat2::operator+(const Mat2& o) const { return Mat2(a + o.a, b + o.b, c + o.c, d + o.d); }
Mat2 Mat2::operator-(const Mat2& o) const { return Mat2(a - o.a, b - o.b, c - o.c, d - o.d); }
Mat2 Mat2::scaled(const Scalar& s) const { return Mat2(a * s, b * s, c * s, d * s); }

Scalar Mat2::det() const { return a * d - b * c; }
Scalar Mat2::trace() const { return a + d; }

Mat2 Mat2::inverse() const {
    const Scalar dt = det();
    require(!dt.is_zero(), "SingularMatrix", "matrix " + str() + " is singular");
    const Scalar inv = dt.inverse();
    return Mat2(d * inv, -b * inv, -c * inv, a * inv);
}

Mat2 Mat2::pow(long e) const {
    Mat2 base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Mat2 acc = identity(field());
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Mat2::is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }
bool Mat2::is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }

std::array<Scalar, 2> Mat2::apply(const Scalar& xv, const Scalar& yv) const {
    return {a * xv + b * yv, c * xv + d * yv};
}

bool Mat2::operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

std::string Mat2::str() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

Mat2 mat_mul(const Mat2& l, const Mat2& r) { return l * r; }
Scalar mat_det(const Mat2& m) { return m.det(); }
Mat2 mat_inv(const Mat2& m) { return m.inverse(); }

MatPoly2::MatPoly2(UniPoly a_, UniPoly b_, UniPoly c_, UniPoly d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    require(a.field() == b.field() && a.field() == c.field() && a.field() == d.field(),
            "FieldMismatch", "matrix entries over different fields");
}

MatPoly2 MatPoly2::identity(const FieldSpec& f) {
    return MatPoly2(UniPoly::one(f), UniPoly::zero(f), UniPoly::zero(f), UniPoly::one(f));
}

MatPoly2 MatPoly2::from_mat(const Mat2& m) {
    return MatPoly2(UniPoly::constant(m.a), UniPoly::constant(m.b),
                    UniPoly::constant(m.c), UniPoly::constant(m.d));
}

MatPoly2 MatPoly2::operator*(const MatPoly2& o) const {
    return MatPoly2(a * o.a + b * o.c, a * o.b + b * o.d,
                    c * o.a + d * o.c, c * o.b + d * o.d);
}

MatPoly2 MatPoly2::operator+(const MatPoly2& o) const {
    return MatPoly2(a + o.a, b + o.b, c + o.c, d + o.d);
}

MatPoly2 MatPoly2::operator-(const MatPoly2& o) const {
    return MatPoly2(a - o.a, b - o.b, c - o.c, d - o.d);
}

MatPoly2 MatPoly2::scaled(const UniPoly& s) const {
    return MatPoly2(a * s, b * s, c * s, d * s);
}

UniPoly MatPoly2::det() const { return a * d - b * c; }

int MatPoly2::degree() const {
    return std::max(std::max(a.degree(), b.degree()), std::max(c.degree(), d.degree()));
}

Mat2 MatPoly2::coeff_mat(int k) const {
    return Mat2(a.coeff(k), b.coeff(k), c.coeff(k), d.coeff(k));
}

bool MatPoly2::is_identity() const {
    return degree() == 0 && eval0().is_identity();
}

bool MatPoly2::operator==(const MatPoly2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

std::string MatPoly2::str() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

MatPoly2 matpoly_mul(const MatPoly2& l, const MatPoly2& r) { return l * r; }
Mat2 matpoly_eval0(const MatPoly2& m) { return m.eval0(); }

PolyVector::PolyVector(UniPoly x_, UniPoly y_) : x(std::move(x_)), y(std::move(y_)) {
    require(x.field() == y.field(), "FieldMismatch", "vector entries over different fields");
}

std::string PolyVector::str() const { return "(" + x.str() + " ; " + y.str() + ")"; }

PolyVector matpoly_apply(const MatPoly2& m, const PolyVector& v) {
    return PolyVector(m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y);
}

} // namespace planekit
