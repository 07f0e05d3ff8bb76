#pragma once

#include <array>

#include "planekit/unipoly.hpp"

namespace planekit {

// 2x2 matrix over the scalar field, row major: [[a,b],[c,d]].
struct Mat2 {
    Scalar a, b, c, d;

    explicit Mat2(const FieldSpec& f)
        : a(Scalar::zero(f)), b(Scalar::zero(f)), c(Scalar::zero(f)), d(Scalar::zero(f)) {}
    Mat2(Scalar a_, Scalar b_, Scalar c_, Scalar d_);

    static Mat2 identity(const FieldSpec& f);
    static Mat2 scalar(const Scalar& s);
    static Mat2 from_rows(long a, long b, long c, long d, const FieldSpec& f);

    const FieldSpec& field() const { return a.field(); }

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 scaled(const Scalar& s) const;
    Scalar det() const;
    Scalar trace() const;
    Mat2 inverse() const; // SingularMatrix when det == 0
    Mat2 pow(long e) const;
    bool is_identity() const;
    bool is_zero() const;
    bool is_lower_triangular() const { return b.is_zero(); }

    // column action on (x, y)
    std::array<Scalar, 2> apply(const Scalar& x, const Scalar& y) const;

    bool operator==(const Mat2& o) const;
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    std::string str() const; // "[[a,b],[c,d]]"
};

Mat2 mat_mul(const Mat2& l, const Mat2& r);
Scalar mat_det(const Mat2& m);
Mat2 mat_inv(const Mat2& m);

// 2x2 matrix with polynomial entries in t.
struct MatPoly2 {
    UniPoly a, b, c, d;

    explicit MatPoly2(const FieldSpec& f)
        : a(UniPoly::zero(f)), b(UniPoly::zero(f)), c(UniPoly::zero(f)), d(UniPoly::zero(f)) {}
    MatPoly2(UniPoly a_, UniPoly b_, UniPoly c_, UniPoly d_);

    static MatPoly2 identity(const FieldSpec& f);
    static MatPoly2 from_mat(const Mat2& m);

    const FieldSpec& field() const { return a.field(); }

    MatPoly2 operator*(const MatPoly2& o) const;
    MatPoly2 operator+(const MatPoly2& o) const;
    MatPoly2 operator-(const MatPoly2& o) const;
    MatPoly2 scaled(const UniPoly& s) const;
    UniPoly det() const;
    int degree() const; // max entry degree; 0 for constant nonzero, marker for zero matrix
    Mat2 coeff_mat(int k) const; // matrix of t^k coefficients
    Mat2 eval0() const { return coeff_mat(0); }
    bool is_identity() const;

    bool operator==(const MatPoly2& o) const;
    bool operator!=(const MatPoly2& o) const { return !(*this == o); }

    std::string str() const;
};

MatPoly2 matpoly_mul(const MatPoly2& l, const MatPoly2& r);
Mat2 matpoly_eval0(const MatPoly2& m);

// Column vector with polynomial entries.
struct PolyVector {
    UniPoly x, y;

    explicit PolyVector(const FieldSpec& f) : x(UniPoly::zero(f)), y(UniPoly::zero(f)) {}
    PolyVector(UniPoly x_, UniPoly y_);

    const FieldSpec& field() const { return x.field(); }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    bool operator==(const PolyVector& o) const { return x == o.x && y == o.y; }

    std::string str() const; // "(x ; y)" with entries in t
};

PolyVector matpoly_apply(const MatPoly2& m, const PolyVector& v);

} // namespace planekit
