#pragma once

#include <functional>
#include <optional>

#include "planekit/freefactor.hpp"
#include "planekit/matpoly.hpp"

namespace planekit {

// Group isomorphism from origin-preserving maps with identity differential
// onto the unimodular polynomial matrices with identity constant term: each
// shear factor tau_delta(f) maps to id + (f/t) e_delta, multiplied in word
// order. NotInAut1 when the input fails the domain test.
MatPoly2 psi(const PolyAut& phi);
MatPoly2 psi_of_word(const TauWord& w, const FieldSpec& f);

// Inverse direction: factor the matrix into unipotent E-factors and send
// (delta, f) to the shear tau_delta(t^2 f), composed in word order.
PolyAut psi_inv(const MatPoly2& g);

// Degree bookkeeping of a reduced shear word: the composed map has degree
// equal to the product of the factor degrees, its matrix image has degree
// equal to their sum minus the factor count. LawViolation if either fails
// (that would be an implementation bug, not bad input).
struct DegreeLawReport {
    long aut_degree = 1;
    int mat_degree = 0;
    std::vector<int> factor_degrees;
};

DegreeLawReport degree_law_check(const TauWord& w, const FieldSpec& f);

// Spectral shape of an invertible 2x2 matrix over the exact field.
struct Classification {
    bool k_reducible = false;     // characteristic polynomial splits over K
    bool unipotent = false;       // (tr, det) = (2, 1)
    bool quasi_unipotent = false; // some positive power is unipotent
    long quasi_order = 0;         // smallest such power; 0 when none exists

    std::string str() const;
};

Classification classify(const Mat2& m); // SingularMatrix on det = 0

// Finitely generated linear group, given by its generators.
struct SubgroupSpec {
    std::vector<Mat2> generators;
    FieldSpec field;

    SubgroupSpec(std::vector<Mat2> gens, const FieldSpec& f); // SingularMatrix, FieldMismatch
};

// Choice of representative in each line orbit under a linear group, with a
// carrier word mapping the representative back to the line. CyclicExact
// sections are provably orbit-constant; BoundedBFS is best effort and the
// consumers cross-check it at runtime.
struct OrbitSection {
    enum class Mode { CyclicExact, BoundedBFS, Identity };

    Mode mode = Mode::Identity;
    std::function<ProjPoint(const ProjPoint&)> rep;
    std::function<Mat2(const ProjPoint&)> carrier; // g with g rep(delta) = delta
};

OrbitSection identity_section(const FieldSpec& f);
// Cyclic group generated by u. Over the rationals u must be unipotent: the
// orbit heights are then affine in the exponent and a finite window scan
// finds the global minimum. Over a prime field any invertible u works (full
// orbit enumeration).
OrbitSection cyclic_exact_section(const Mat2& u);
OrbitSection bounded_bfs_section(const SubgroupSpec& s, int depth);

// Linear representation of the group generated by s and the shears: phi
// splits as D . u with D its differential at the origin, u maps through the
// section-twisted matrix image. Raises SectionInconsistency when the
// built-in equivariance spot-checks fail (stabilizer must fix each factor,
// generator conjugation must commute with the twisted image), and
// HypothesisViolated when a generator is reducible without being unipotent.
MatPoly2 rho_S(const PolyAut& phi, const SubgroupSpec& s, const OrbitSection& section);

// Word search for a reducible generator-word that is not (quasi-)unipotent.
// Absence of a counterexample up to the bound is evidence, not proof.
struct HypothesisVerdict {
    bool counterexample_found = false;
    std::string word; // in tokens g<i>, g<i>^-1 joined by '*'
    std::optional<Mat2> witness;

    std::string str() const;
};

HypothesisVerdict check_hypothesis_U(const SubgroupSpec& s, int word_bound);
HypothesisVerdict check_hypothesis_QU(const SubgroupSpec& s, int word_bound);

// Uniform bound: the quasi-order of every quasi-unipotent element divides
// this. Rationals: 12. Prime field: p^2 - 1.
long quasi_order_bound(const FieldSpec& f);
long quasi_order_bound(const SubgroupSpec& s);

// All (trace, determinant) pairs realized by a 2x2 matrix whose eigenvalues
// are N-th roots of unity, restricted to pairs with both values in the base
// field. Rationals: computed in the quotient by the N-th cyclotomic
// polynomial. Prime field: roots of unity enumerated inside the quadratic
// extension. Sorted, deduplicated; always contains (2, 1).
std::vector<std::pair<Scalar, Scalar>> pair_set_C(long n, const FieldSpec& f);

UniPoly cyclotomic(long n, const FieldSpec& f);

// Smallest prime m, coprime to every generator denominator, such that no
// realizable pair above except (2, 1) itself is congruent to (2, 1) mod m.
// Rational generators only.
long congruence_modulus(const SubgroupSpec& s);

// Finite-index congruence subgroup data: kernel of reduction mod m on the
// generated group, with Schreier generators and an exact coset transversal
// (transversal[0] = id).
struct CongruenceData {
    long modulus = 0;
    long index = 0;
    std::vector<Mat2> generators;
    std::vector<Mat2> transversal;
};

// Enumerates the image mod m by worklist; ImageCapExceeded when it grows
// past cap. Every returned generator is congruent to id mod m.
CongruenceData congruence_subgroup_gens(const SubgroupSpec& s, long m, long cap = 200000);

// Square matrix of 2x2 polynomial blocks, row major.
struct BlockMat {
    int blocks = 0;
    std::vector<MatPoly2> entry;

    BlockMat(int n, const FieldSpec& f);

    MatPoly2& at(int i, int j) { return entry[static_cast<size_t>(i) * blocks + j]; }
    const MatPoly2& at(int i, int j) const { return entry[static_cast<size_t>(i) * blocks + j]; }

    BlockMat operator*(const BlockMat& o) const;
    bool operator==(const BlockMat& o) const;
    bool operator!=(const BlockMat& o) const { return !(*this == o); }

    std::string str() const;
};

// Induced block representation across the coset transversal: block (i, j)
// holds the congruence-subgroup representation of r_i^-1 . phi . r_j when
// that composite lands in the subgroup (decided by matching images mod m),
// zero otherwise; exactly one nonzero block per row and column. CosetError
// when the differential matches no coset.
BlockMat induce_representation(const PolyAut& phi, const SubgroupSpec& s,
                               const CongruenceData& cong, const OrbitSection& section);

} // namespace planekit
