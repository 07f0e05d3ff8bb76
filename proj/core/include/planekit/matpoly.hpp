#pragma once

#include <map>

#include "planekit/proj.hpp"

namespace planekit {

// One-parameter factor id + t f(t) e_delta with f != 0. The matrix entries
// are polynomial in t and the factor is unipotent for every value of t.
struct EFactor {
    ProjPoint delta;
    UniPoly f; // nonzero

    EFactor(ProjPoint d, UniPoly f_);

    MatPoly2 to_mat() const;
};

// Product of E-factors with consecutive lines distinct.
struct EWord {
    std::vector<EFactor> factors;

    int length() const { return static_cast<int>(factors.size()); }
    MatPoly2 recompose(const FieldSpec& f) const;
};

// Concatenate and merge adjacent factors with equal delta (their f add).
EWord e_word_normalize(std::vector<EFactor> factors);

// det == 1 identically and G(0) == id.
bool is_in_GL1(const MatPoly2& g);

// det(A+B) - det A - det B; equals tr(A) tr(B) - tr(A B) in dimension 2.
Scalar bracket(const Mat2& a, const Mat2& b);

// Factor a member of GL1 into E-factors by stripping the top coefficient:
// the top matrix has rank one, its image line names the factor, and one
// left multiplication strictly lowers the degree. NotInGL1 when the input
// fails the membership test.
EWord e_generation_factorize(const MatPoly2& g);

// Same, also reporting the degree after each loop iteration (strictly
// decreasing; exposed for the test suites).
EWord e_generation_factorize_traced(const MatPoly2& g, std::vector<int>& degree_trace);

int vector_degree(const PolyVector& v);
// coefficient pair at the top degree
std::array<Scalar, 2> vector_hc(const PolyVector& v);
// membership in Omega_delta: nonzero and head coefficient on the line
bool omega_member(const PolyVector& v, const ProjPoint& delta);

struct PingPongReport {
    long checks = 0;
    std::vector<std::string> violations;

    bool clean() const { return violations.empty(); }
};

// For every pair of distinct lines delta != delta', every supplied factor at
// delta and every supplied vector in Omega_(delta'), verify that the factor
// maps the vector into Omega_delta. Inputs are validated first (factors
// nontrivial, vectors in their claimed cones).
PingPongReport verify_pingpong(const std::map<ProjPoint, std::vector<EFactor>>& samples,
                               const std::map<ProjPoint, std::vector<PolyVector>>& vectors);

} // namespace planekit
