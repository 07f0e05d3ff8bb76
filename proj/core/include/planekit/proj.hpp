#pragma once

#include <vector>

#include "planekit/mat.hpp"

namespace planekit {

// Point of the projective line over the scalar field, stored in canonical
// form: (1, m) when the first homogeneous coordinate is nonzero, else (0, 1).
class ProjPoint {
public:
    ProjPoint(const Scalar& a, const Scalar& b); // ZeroVector when a = b = 0

    static ProjPoint from_ints(long a, long b, const FieldSpec& f);
    // Direction of a nonzero column vector of m (rank one expected).
    static ProjPoint image_line(const Mat2& m);

    const FieldSpec& field() const { return a_.field(); }
    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }

    bool operator==(const ProjPoint& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    // Canonical total order (for sorted containers and deterministic tie-breaks).
    bool operator<(const ProjPoint& o) const;

    // v lies on this line?
    bool contains(const Scalar& x, const Scalar& y) const;

    std::string str() const; // "(a:b)"

private:
    Scalar a_, b_;
};

// Canonical basis pair attached to a line: w spans the line, l is the
// canonical covector with l(w) = 0 (both ProjPoint-normalized so that the
// first nonzero coordinate is 1).
struct LineFrame {
    Scalar w1, w2; // column
    Scalar l1, l2; // row
};

LineFrame line_frame(const ProjPoint& delta);

// Rank-one nilpotent attached to a line: e = w * l with the canonical frame.
// Satisfies e != 0, e^2 = 0, Im e = delta.
Mat2 e_delta(const ProjPoint& delta);

// All points of P^1 over F_p (p+1 of them), in canonical order.
std::vector<ProjPoint> all_proj_points(const FieldSpec& f);

// m * delta as a projective point; m must be invertible.
ProjPoint apply_mat(const Mat2& m, const ProjPoint& delta);

} // namespace planekit
