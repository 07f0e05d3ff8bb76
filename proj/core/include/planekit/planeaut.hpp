#pragma once

#include "planekit/amalgam.hpp"
#include "planekit/bipoly.hpp"
#include "planekit/proj.hpp"

namespace planekit {

// Polynomial map of the plane, components in x, y. Plain data: nothing here
// certifies invertibility; vdk_factorize is the certificate (it either
// produces a factorization or proves non-invertibility by stalling).
class PolyAut {
public:
    PolyAut(BiPoly f, BiPoly g);

    static PolyAut identity(const FieldSpec& f);
    static PolyAut from_text(const std::string& text, const FieldSpec& f);

    const FieldSpec& field() const { return f_.field(); }
    const BiPoly& f() const { return f_; }
    const BiPoly& g() const { return g_; }

    bool operator==(const PolyAut& o) const { return f_ == o.f_ && g_ == o.g_; }
    bool operator!=(const PolyAut& o) const { return !(*this == o); }

    std::string str() const; // "(f ; g)"

private:
    BiPoly f_, g_;
};

enum class Membership { InB, Affine, Elementary, General };

std::string membership_name(Membership m);

// Affine map v -> L v + t with invertible L.
struct AffineAut {
    Mat2 lin;
    Scalar tx, ty;

    AffineAut(Mat2 l, Scalar tx_, Scalar ty_);
    static AffineAut linear(const Mat2& l);
    static AffineAut from_poly(const PolyAut& p); // BadShape unless affine

    PolyAut to_poly() const;
    AffineAut inverse() const;
};

// (x, y) -> (z1 x + t0, z2 y + f(x)) with z1 z2 != 0.
struct ElementaryAut {
    Scalar z1, z2, t0;
    UniPoly fx;

    ElementaryAut(Scalar z1_, Scalar z2_, Scalar t0_, UniPoly fx_);
    // (x, y + f(x)): the coset-representative shape
    static ElementaryAut shear(const UniPoly& f);
    static ElementaryAut from_poly(const PolyAut& p); // BadShape unless elementary

    PolyAut to_poly() const;
    ElementaryAut inverse() const;
};

// phi . psi, acting as phi after psi: (phi . psi)(v) = phi(psi(v)).
PolyAut compose(const PolyAut& phi, const PolyAut& psi);

Membership membership(const PolyAut& p);
bool fixes_origin(const PolyAut& p);
Mat2 differential_at_origin(const PolyAut& p);
// max total degree of the components (1 for the identity and all affine maps)
int degree(const PolyAut& p);

struct VdkFactor {
    Membership kind; // Affine or Elementary
    PolyAut value;

    int side() const { return kind == Membership::Affine ? 1 : 2; }
};

// Canonical alternating factorization phi = x_1 . x_2 ... x_n . tail:
// affine factors are the linear coset representatives of GL/B0 (column
// direction canonicalized, zero translation), elementary factors are shears
// (x, y + f(x)) with f in t^2 K[t], the tail lies in B.
struct VdkWord {
    std::vector<VdkFactor> factors;
    PolyAut tail;

    int length() const { return static_cast<int>(factors.size()); }
    std::vector<int> type_seq() const;
    PolyAut recompose() const;
};

// Degree-lowering factorization; raises NotAnAutomorphism when the degree
// reduction stalls or the affine residue is singular.
VdkWord vdk_factorize(const PolyAut& phi);

// Inverse through the factorization (each factor class has a closed form).
PolyAut inverse(const PolyAut& phi);

// The amalgam hook bundle for the plane automorphism group (side 1 affine,
// side 2 elementary, A = B). No h_witness by default; callers supply one
// when they need to conjugate A-elements.
AmalgamSpec<PolyAut> vdk_amalgam_spec(const FieldSpec& f);

// Canonical linear representative of the affine coset with column direction
// delta (delta != (0:1)).
Mat2 affine_coset_rep(const ProjPoint& delta);

VdkWord vdk_word_from_reduced(const ReducedWord<PolyAut>& w);

} // namespace planekit
