#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planekit/errors.hpp"

namespace planekit {

// Hook bundle describing an amalgamated product G1 *_A G2 acting inside some
// ambient group of elements of type G. The engine never looks inside G; it
// only calls these hooks, and it verifies every claimed coset factorization
// g = r * a exactly (SpecViolation when a hook lies).
template <typename G>
struct AmalgamSpec {
    std::function<G(const G&, const G&)> mul;
    std::function<G(const G&)> inv;
    std::function<bool(const G&, const G&)> eq;
    std::function<bool(const G&)> in_A;
    // 1 or 2; only called on elements outside A.
    std::function<int(const G&)> side_of;
    // g outside A -> (r, a) with g = r * a, a in A, r the canonical
    // representative of the left coset g A.
    std::function<std::pair<G, G>(const G&)> coset_rep;
    // serialization used for dedup in bounded searches
    std::function<std::string(const G&)> key;
    // engaged by every complete spec; optional so G need not be
    // default-constructible
    std::optional<G> identity;
    // a few elements of G_i \ A covering at least two distinct left A-cosets;
    // used by the conjugation search
    std::vector<G> side1_samples;
    std::vector<G> side2_samples;
    // optional: for a in A, produce gamma with gamma a gamma^-1 outside A.
    // gamma is handed over as a factor list (product left to right) of
    // elements the other hooks can classify; a single side element does not
    // always exist, e.g. when a is fixed by one side and central in the other
    std::function<std::vector<G>(const G&)> h_witness;
};

// Alternating normal form x_1 ... x_n * a: the x_i are coset representatives
// with strictly alternating sides, a lies in A.
template <typename G>
struct ReducedWord {
    std::vector<G> factors;
    std::vector<int> type_seq;
    G tail;

    int length() const { return static_cast<int>(factors.size()); }
};

template <typename G>
ReducedWord<G> reduced_identity(const AmalgamSpec<G>& spec) {
    return ReducedWord<G>{{}, {}, *spec.identity};
}

namespace detail {

template <typename G>
void verified_split(const AmalgamSpec<G>& spec, const G& g, int side, G& r_out, G& a_out) {
    auto [r, a] = spec.coset_rep(g);
    require(spec.in_A(a), "SpecViolation", "coset_rep returned a non-A tail");
    require(!spec.in_A(r) && spec.side_of(r) == side, "SpecViolation",
            "coset_rep returned a representative on the wrong side");
    require(spec.eq(spec.mul(r, a), g), "SpecViolation",
            "coset_rep factorization does not multiply back to its input");
    r_out = r;
    a_out = a;
}

} // namespace detail

// Append one element (of G1 or G2) to a reduced word; the standard
// stack-based normal form step.
template <typename G>
ReducedWord<G> reduced_push(ReducedWord<G> w, const G& g, const AmalgamSpec<G>& spec) {
    G cur = spec.mul(w.tail, g);
    if (spec.in_A(cur)) {
        w.tail = cur;
        return w;
    }
    int side = spec.side_of(cur);
    for (;;) {
        if (w.factors.empty() || w.type_seq.back() != side) {
            G r(*spec.identity), a(*spec.identity);
            detail::verified_split(spec, cur, side, r, a);
            w.factors.push_back(r);
            w.type_seq.push_back(side);
            w.tail = a;
            return w;
        }
        // same side as the top: merge, possibly cancelling the top factor
        G h = spec.mul(w.factors.back(), cur);
        w.factors.pop_back();
        w.type_seq.pop_back();
        if (spec.in_A(h)) {
            w.tail = h;
            return w;
        }
        require(spec.side_of(h) == side, "SpecViolation", "side changed under A-absorption");
        cur = h;
    }
}

// Normal form of the product of `word` (each element must lie in G1 or G2).
template <typename G>
ReducedWord<G> reduce(const std::vector<G>& word, const AmalgamSpec<G>& spec) {
    ReducedWord<G> w = reduced_identity(spec);
    for (const G& g : word) w = reduced_push(w, g, spec);
    return w;
}

template <typename G>
G recompose(const ReducedWord<G>& w, const AmalgamSpec<G>& spec) {
    G acc = *spec.identity;
    for (const G& f : w.factors) acc = spec.mul(acc, f);
    return spec.mul(acc, w.tail);
}

// Normal form of gamma w gamma^-1 with gamma given as a factor list (product
// left to right). Each factor must be classifiable by the hook bundle;
// conjugators built by conjugate_to_type are proper products, so callers
// verifying them pass the factorization their instance provides.
template <typename G>
ReducedWord<G> conjugated_word(const std::vector<G>& gamma, const ReducedWord<G>& w,
                               const AmalgamSpec<G>& spec) {
    std::vector<G> lst;
    for (const G& g : gamma) lst.push_back(g);
    for (const G& f : w.factors) lst.push_back(f);
    lst.push_back(w.tail);
    for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) lst.push_back(spec.inv(*it));
    return reduce(lst, spec);
}

template <typename G>
ReducedWord<G> conjugated_word(const G& gamma, const ReducedWord<G>& w, const AmalgamSpec<G>& spec) {
    return conjugated_word(std::vector<G>{gamma}, w, spec);
}

// Find gamma with reduce(gamma w gamma^-1) of type (corner, ..., corner),
// corner in {1, 2}. Follows the constructive case analysis: A-elements are
// moved out of A by the h_witness hook, mixed-type words are first pushed
// into a uniform corner with a sample element whose product with the leading
// factor stays outside A, and uniform words are flipped with any sample from
// the other side. Every step is verified on the reduced conjugate.
template <typename G>
G conjugate_to_type(const ReducedWord<G>& w, int corner, const AmalgamSpec<G>& spec) {
    require(corner == 1 || corner == 2, "BadShape", "corner must be 1 or 2");
    G total = *spec.identity;
    ReducedWord<G> cur = w;
    for (int guard = 0; guard < 8; ++guard) {
        if (cur.length() == 0) {
            if (spec.eq(cur.tail, *spec.identity))
                raise("IsIdentity", "cannot conjugate the identity out of A");
            if (!spec.h_witness)
                raise("NeedsHWitness", "word lies in A and no witness hook was supplied");
            const std::vector<G> gamma = spec.h_witness(cur.tail);
            require(!gamma.empty(), "SpecViolation", "h_witness returned an empty conjugator");
            ReducedWord<G> next = conjugated_word(gamma, cur, spec);
            require(next.length() > 0, "SpecViolation", "h_witness failed to move the element out of A");
            G prod = *spec.identity;
            for (const G& g : gamma) prod = spec.mul(prod, g);
            total = spec.mul(prod, total);
            cur = next;
            continue;
        }
        const int i = cur.type_seq.front();
        const int j = cur.type_seq.back();
        if (i == j && i == corner) return total;
        if (i == j) {
            // uniform in the other corner: any sample from the wanted side works
            const auto& samples = (corner == 1) ? spec.side1_samples : spec.side2_samples;
            require(!samples.empty(), "SpecViolation", "no side samples supplied for the corner flip");
            bool advanced = false;
            for (const G& gamma : samples) {
                ReducedWord<G> next = conjugated_word(gamma, cur, spec);
                if (next.length() > 0 && next.type_seq.front() == corner && next.type_seq.back() == corner) {
                    total = spec.mul(gamma, total);
                    cur = next;
                    advanced = true;
                    break;
                }
            }
            require(advanced, "SpecViolation", "corner flip failed for all samples");
            continue;
        }
        // mixed type: push into the uniform corner matching one of the ends;
        // a sample gamma on side s with gamma * (leading factor) outside A
        // turns type (s, ..., s') into (s, ..., s). Try both sides.
        bool advanced = false;
        for (int s : {2, 1}) {
            const auto& samples = (s == 1) ? spec.side1_samples : spec.side2_samples;
            for (const G& gamma : samples) {
                ReducedWord<G> next = conjugated_word(gamma, cur, spec);
                if (next.length() > 0 && next.type_seq.front() == next.type_seq.back()) {
                    total = spec.mul(gamma, total);
                    cur = next;
                    advanced = true;
                    break;
                }
            }
            if (advanced) break;
        }
        require(advanced, "SpecViolation",
                "mixed-type word did not reach a uniform corner with the supplied samples");
    }
    internal_error("conjugation search did not converge");
}

template <typename G>
struct SubamalgamViolation {
    std::string word;  // description in the input generators
    std::string value; // key of the offending element
    int found_in_side; // 1 or 2: which generating set produced it
};

template <typename G>
struct SubamalgamReport {
    long words_checked = 0;
    std::vector<SubamalgamViolation<G>> violations;

    bool clean() const { return violations.empty(); }
};

// Bounded two-sided check of the subamalgam condition <gens1> meet A ==
// <gens2> meet A. Enumerates all products of at most `bound` letters
// (generators and their inverses) on each side, collects those lying in A and
// reports elements seen on one side only. An empty report is evidence, not
// proof: a deeper word could still witness a mismatch.
template <typename G>
SubamalgamReport<G> subamalgam_check(const std::vector<G>& gens1, const std::vector<G>& gens2,
                                     const AmalgamSpec<G>& spec, int bound) {
    require(bound >= 1, "BadShape", "bound must be positive");
    SubamalgamReport<G> report;

    auto explore = [&](const std::vector<G>& gens) {
        std::vector<std::pair<G, std::string>> letters;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            letters.push_back({gens[i], "g" + std::to_string(i + 1)});
            letters.push_back({spec.inv(gens[i]), "g" + std::to_string(i + 1) + "^-1"});
        }
        std::map<std::string, std::string> in_a; // key -> word
        std::map<std::string, G> frontier;
        std::map<std::string, std::string> frontier_words;
        frontier.emplace(spec.key(*spec.identity), *spec.identity);
        frontier_words.emplace(spec.key(*spec.identity), "1");
        std::map<std::string, G> seen = frontier;
        if (spec.in_A(*spec.identity)) in_a.emplace(spec.key(*spec.identity), "1");
        for (int len = 1; len <= bound; ++len) {
            std::map<std::string, G> next;
            std::map<std::string, std::string> next_words;
            for (const auto& [k, g] : frontier) {
                for (const auto& [l, lname] : letters) {
                    G h = spec.mul(g, l);
                    const std::string hk = spec.key(h);
                    if (seen.count(hk)) continue;
                    seen.emplace(hk, h);
                    next.emplace(hk, h);
                    const std::string w =
                        frontier_words.at(k) == "1" ? lname : frontier_words.at(k) + "*" + lname;
                    next_words.emplace(hk, w);
                    report.words_checked++;
                    if (spec.in_A(h)) in_a.emplace(hk, w);
                }
            }
            frontier = std::move(next);
            frontier_words = std::move(next_words);
        }
        return in_a;
    };

    auto a1 = explore(gens1);
    auto a2 = explore(gens2);
    for (const auto& [k, w] : a1)
        if (!a2.count(k)) report.violations.push_back({w, k, 1});
    for (const auto& [k, w] : a2)
        if (!a1.count(k)) report.violations.push_back({w, k, 2});
    return report;
}

} // namespace planekit
