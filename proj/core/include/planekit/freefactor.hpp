#pragma once

#include "planekit/planeaut.hpp"

namespace planekit {

// Shear along the line delta: v -> v + f(l(v)) w with the canonical frame
// (w, l) of the line and f in t^2 K[t]. These generate, for fixed delta, an
// abelian group isomorphic to (t^2 K[t], +).
struct TauFactor {
    ProjPoint delta;
    UniPoly f; // nonzero, valuation >= 2

    TauFactor(ProjPoint d, UniPoly f_);

    PolyAut to_poly() const;
};

PolyAut tau(const ProjPoint& delta, const UniPoly& f);

// Word of shear factors with consecutive lines distinct. Empty word is the
// identity.
struct TauWord {
    std::vector<TauFactor> factors;

    int length() const { return static_cast<int>(factors.size()); }
    PolyAut recompose(const FieldSpec& f) const;
    // component degrees (deg f_i), the m-list of the degree laws
    std::vector<int> degree_list() const;
};

// Concatenate and merge adjacent factors with equal delta (their f add);
// factors cancelling to zero are dropped. Normal form of a product of
// tau-factors.
TauWord tau_word_normalize(std::vector<TauFactor> factors);

// Factor an origin-preserving map with identity differential into shear
// factors: walks the alternating factorization, conjugating each shear by
// the linear prefix accumulated so far. NotInAut1 when the differential is
// not the identity or the origin moves; NotAnAutomorphism bubbles up from
// the factorization.
TauWord free_factorize(const PolyAut& phi);

// Conjugation transport: L . tau_delta(f) . L^-1 = tau_(L delta)(h) with
// h(s) = mu f(lambda s), where L w_delta = mu w_(L delta) and
// l_delta . L^-1 = lambda l_(L delta). Exposed for reuse by the linear maps.
TauFactor tau_conjugate(const Mat2& L, const TauFactor& u);

} // namespace planekit
