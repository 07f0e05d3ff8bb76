#include "planekit/linmap.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace planekit {

namespace {

MatPoly2 conj_const(const Mat2& g, const MatPoly2& m) {
    return MatPoly2::from_mat(g) * m * MatPoly2::from_mat(g.inverse());
}

// id + (f/t) e_delta; valuation(f) >= 2 makes the shift exact
MatPoly2 psi_factor(const TauFactor& u) {
    return EFactor(u.delta, u.f.shifted(-2)).to_mat();
}

} // namespace

MatPoly2 psi_of_word(const TauWord& w, const FieldSpec& f) {
    MatPoly2 acc = MatPoly2::identity(f);
    for (const TauFactor& u : w.factors) acc = acc * psi_factor(u);
    return acc;
}

MatPoly2 psi(const PolyAut& phi) {
    TauWord w = free_factorize(phi);
    MatPoly2 g = psi_of_word(w, phi.field());
    if (!is_in_GL1(g)) internal_error("matrix image escaped the unimodular target");
    return g;
}

PolyAut psi_inv(const MatPoly2& g) {
    EWord w = e_generation_factorize(g);
    PolyAut acc = PolyAut::identity(g.field());
    for (const EFactor& e : w.factors) acc = compose(acc, tau(e.delta, e.f.shifted(2)));
    return acc;
}

DegreeLawReport degree_law_check(const TauWord& w, const FieldSpec& f) {
    for (size_t i = 1; i < w.factors.size(); ++i) {
        require(w.factors[i - 1].delta != w.factors[i].delta, "BadShape",
                "word not reduced: adjacent factors share the line " + w.factors[i].delta.str());
    }
    DegreeLawReport rep;
    rep.factor_degrees = w.degree_list();
    rep.aut_degree = degree(w.recompose(f));
    rep.mat_degree = psi_of_word(w, f).degree();
    long prod = 1;
    long sum = 0;
    for (int m : rep.factor_degrees) {
        prod *= m;
        sum += m;
    }
    require(rep.aut_degree == prod, "LawViolation",
            "composed degree " + std::to_string(rep.aut_degree) + " differs from the factor product "
                + std::to_string(prod));
    require(rep.mat_degree == sum - w.length(), "LawViolation",
            "matrix degree " + std::to_string(rep.mat_degree) + " differs from sum minus count "
                + std::to_string(sum - w.length()));
    return rep;
}

std::string Classification::str() const {
    std::string s = "k_reducible=";
    s += k_reducible ? "true" : "false";
    s += " unipotent=";
    s += unipotent ? "true" : "false";
    s += " quasi_unipotent=";
    s += quasi_unipotent ? "true" : "false";
    s += " quasi_order=";
    s += quasi_unipotent ? std::to_string(quasi_order) : std::string("none");
    return s;
}

namespace {

bool is_unipotent_mat(const Mat2& m) {
    const FieldSpec& f = m.field();
    return m.trace() == Scalar::from_int(2, f) && m.det() == Scalar::one(f);
}

} // namespace

Classification classify(const Mat2& m) {
    const FieldSpec& f = m.field();
    require(!m.det().is_zero(), "SingularMatrix", "classification needs an invertible matrix: " + m.str());
    Classification out;
    Scalar tr = m.trace();
    if (f.is_prime_field() && f.characteristic() == 2) {
        // over F_2 the characteristic polynomial x^2 + tr x + 1 splits iff tr = 0
        out.k_reducible = tr.is_zero();
    } else {
        Scalar disc = tr * tr - Scalar::from_int(4, f) * m.det();
        out.k_reducible = disc.is_square();
    }
    out.unipotent = is_unipotent_mat(m);
    if (f.is_rationals()) {
        // eigenvalues would be roots of unity of degree <= 2; their lcm lies here
        for (long n : {1L, 2L, 3L, 4L, 6L}) {
            if (is_unipotent_mat(m.pow(n))) {
                out.quasi_order = n;
                break;
            }
        }
    } else {
        long p = static_cast<long>(f.characteristic());
        long bound = p * (p * p - 1);
        Mat2 acc = m;
        for (long n = 1; n <= bound; ++n) {
            if (is_unipotent_mat(acc)) {
                out.quasi_order = n;
                break;
            }
            acc = acc * m;
        }
        if (out.quasi_order == 0) internal_error("no unipotent power within the group-order bound");
    }
    out.quasi_unipotent = out.quasi_order != 0;
    return out;
}

SubgroupSpec::SubgroupSpec(std::vector<Mat2> gens, const FieldSpec& f)
    : generators(std::move(gens)), field(f) {
    for (const Mat2& g : generators) {
        require(g.field() == field, "FieldMismatch", "generator over the wrong field");
        require(!g.det().is_zero(), "SingularMatrix", "subgroup generator must be invertible: " + g.str());
    }
}

namespace {

// canonical coprime integer coordinates of a point over the rationals
void primitive_coords(const ProjPoint& d, mpz_class& x, mpz_class& y) {
    if (d.a().is_zero()) {
        x = 0;
        y = 1;
        return;
    }
    const mpq_class& m = d.b().rat();
    x = m.get_den();
    y = m.get_num();
}

mpz_class canonical_height(const ProjPoint& d) {
    mpz_class x, y;
    primitive_coords(d, x, y);
    return abs(x) + abs(y);
}

void primitive_of_pair(const mpq_class& a, const mpq_class& b, mpz_class& x, mpz_class& y) {
    mpz_class l;
    mpz_class da = a.get_den(), db = b.get_den();
    mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    mpq_class xa = a * l, xb = b * l;
    x = xa.get_num();
    y = xb.get_num();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (g != 0) {
        x /= g;
        y /= g;
    }
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
}

struct CyclicScan {
    ProjPoint rep;
    long exponent; // rep = u^exponent applied to the queried point
};

// u unipotent over the rationals: u^k moves integer coordinates affinely in
// k, the pre-gcd height is convex in k and any gcd divides a fixed integer,
// so every global minimizer of the canonical height lies inside a window
// computable from the starting point. Scanning the window and breaking ties
// by the canonical point order yields the same representative from every
// point of the orbit.
CyclicScan cyclic_scan_q(const Mat2& u, const ProjPoint& d) {
    mpq_class n11 = u.a.rat() - 1, n12 = u.b.rat();
    mpq_class n21 = u.c.rat(), n22 = u.d.rat() - 1;
    mpz_class vx, vy;
    primitive_coords(d, vx, vy);
    mpq_class r1 = n11 * vx + n12 * vy;
    mpq_class r2 = n21 * vx + n22 * vy;
    if (r1 == 0 && r2 == 0) return {d, 0};

    mpz_class wx, wy;
    if (n11 != 0 || n21 != 0) {
        primitive_of_pair(n11, n21, wx, wy);
    } else {
        primitive_of_pair(n12, n22, wx, wy);
    }
    mpz_class lx, ly;
    if (n11 != 0 || n12 != 0) {
        primitive_of_pair(n11, n12, lx, ly);
    } else {
        primitive_of_pair(n21, n22, lx, ly);
    }
    mpq_class s = wx != 0 ? r1 / mpq_class(wx) : r2 / mpq_class(wy);
    if (!(r1 == s * wx && r2 == s * wy)) internal_error("difference matrix is not rank one");
    mpz_class den = s.get_den(), num = s.get_num();
    mpz_class lv = lx * vx + ly * vy;
    if (lv == 0) internal_error("kernel covector vanishes on a moving point");
    mpz_class hv = abs(vx) + abs(vy);
    mpz_class hw = abs(wx) + abs(wy);
    mpz_class bound = hv * abs(den * lv);
    mpz_class window = (bound + den * hv) / (abs(num) * hw) + 1;
    if (!window.fits_slong_p() || window.get_si() > (1L << 22)) {
        internal_error("orbit scan window out of range");
    }
    long k0 = -window.get_si();
    long k1 = window.get_si();

    ProjPoint cur = apply_mat(u.pow(k0), d);
    ProjPoint best = cur;
    mpz_class best_h = canonical_height(cur);
    long best_k = k0;
    for (long k = k0 + 1; k <= k1; ++k) {
        cur = apply_mat(u, cur);
        mpz_class h = canonical_height(cur);
        if (h < best_h || (h == best_h && cur < best)) {
            best = cur;
            best_h = h;
            best_k = k;
        }
    }
    return {best, best_k};
}

// finite field: the whole orbit is enumerable, take its minimum
CyclicScan cyclic_scan_p(const Mat2& u, const ProjPoint& d) {
    ProjPoint best = d;
    long best_k = 0;
    ProjPoint cur = d;
    long guard = static_cast<long>(u.field().characteristic()) + 2;
    for (long k = 1;; ++k) {
        cur = apply_mat(u, cur);
        if (cur == d) break;
        if (k > guard) internal_error("orbit walk failed to cycle");
        if (cur < best) {
            best = cur;
            best_k = k;
        }
    }
    return {best, best_k};
}

} // namespace

OrbitSection identity_section(const FieldSpec& f) {
    OrbitSection sec;
    sec.mode = OrbitSection::Mode::Identity;
    sec.rep = [](const ProjPoint& d) { return d; };
    sec.carrier = [f](const ProjPoint&) { return Mat2::identity(f); };
    return sec;
}

OrbitSection cyclic_exact_section(const Mat2& u) {
    require(!u.det().is_zero(), "SingularMatrix", "section generator must be invertible");
    const FieldSpec f = u.field();
    if (f.is_rationals()) {
        require(classify(u).unipotent, "BadShape",
                "cyclic exact section over the rationals needs a unipotent generator");
    }
    auto scan = [u, f](const ProjPoint& d) {
        return f.is_rationals() ? cyclic_scan_q(u, d) : cyclic_scan_p(u, d);
    };
    OrbitSection sec;
    sec.mode = OrbitSection::Mode::CyclicExact;
    sec.rep = [scan](const ProjPoint& d) { return scan(d).rep; };
    sec.carrier = [scan, u](const ProjPoint& d) { return u.pow(-scan(d).exponent); };
    return sec;
}

OrbitSection bounded_bfs_section(const SubgroupSpec& s, int depth) {
    require(depth >= 0, "BadShape", "negative search depth");
    std::vector<Mat2> edges = s.generators;
    for (const Mat2& g : s.generators) edges.push_back(g.inverse());
    auto scan = [edges, depth](const ProjPoint& d) {
        std::map<ProjPoint, Mat2> seen; // point -> h with point = h applied to d
        std::deque<std::pair<ProjPoint, int>> work;
        seen.emplace(d, Mat2::identity(d.field()));
        work.emplace_back(d, 0);
        while (!work.empty()) {
            auto [pt, dep] = work.front();
            work.pop_front();
            if (dep == depth) continue;
            Mat2 h = seen.at(pt);
            for (const Mat2& e : edges) {
                ProjPoint npt = apply_mat(e, pt);
                if (seen.count(npt)) continue;
                seen.emplace(npt, e * h);
                work.emplace_back(npt, dep + 1);
            }
        }
        return *seen.begin(); // ordered map: minimal point of the ball
    };
    OrbitSection sec;
    sec.mode = OrbitSection::Mode::BoundedBFS;
    sec.rep = [scan](const ProjPoint& d) { return scan(d).first; };
    sec.carrier = [scan](const ProjPoint& d) { return scan(d).second.inverse(); };
    return sec;
}

namespace {

// image of a shear factor through the section: pull the factor back to the
// orbit representative, map it, push the result forward again
MatPoly2 section_image(const TauFactor& u, const OrbitSection& sec) {
    ProjPoint r = sec.rep(u.delta);
    Mat2 g = sec.carrier(u.delta);
    require(apply_mat(g, r) == u.delta, "SectionInconsistency",
            "carrier fails to move the representative back to " + u.delta.str());
    TauFactor base = tau_conjugate(g.inverse(), u);
    if (base.delta != r) internal_error("conjugated factor landed off the representative line");
    return conj_const(g, psi_factor(base));
}

} // namespace

MatPoly2 rho_S(const PolyAut& phi, const SubgroupSpec& s, const OrbitSection& section) {
    require(phi.field() == s.field, "FieldMismatch", "map and subgroup over different fields");
    for (const Mat2& g : s.generators) {
        Classification c = classify(g);
        require(!c.k_reducible || c.unipotent, "HypothesisViolated",
                "reducible non-unipotent generator " + g.str());
    }
    require(fixes_origin(phi), "NotInAutS", "map does not fix the origin: " + phi.str());
    Mat2 d0 = differential_at_origin(phi);
    require(!d0.det().is_zero(), "NotInAutS", "singular differential at the origin");
    PolyAut u = compose(AffineAut::linear(d0.inverse()).to_poly(), phi);
    TauWord w = free_factorize(u);

    MatPoly2 acc = MatPoly2::from_mat(d0);
    for (const TauFactor& fac : w.factors) {
        for (const Mat2& g : s.generators) {
            if (apply_mat(g, fac.delta) == fac.delta) {
                TauFactor fixed = tau_conjugate(g, fac);
                require(fixed.delta == fac.delta && fixed.f == fac.f, "SectionInconsistency",
                        "stabilizing generator " + g.str() + " moves a shear factor at "
                            + fac.delta.str());
            }
            Mat2 gi = g.inverse();
            MatPoly2 lhs = section_image(tau_conjugate(gi, fac), section);
            MatPoly2 rhs = conj_const(gi, section_image(fac, section));
            require(lhs == rhs, "SectionInconsistency",
                    "twisted image not equivariant under " + g.str() + " at the factor over "
                        + fac.delta.str());
        }
        acc = acc * section_image(fac, section);
    }
    if (acc.eval0() != d0) internal_error("constant term drifted from the differential");
    return acc;
}

std::string HypothesisVerdict::str() const {
    if (!counterexample_found) return "no counterexample found";
    return "counterexample " + word + " = " + witness->str();
}

namespace {

HypothesisVerdict hypothesis_search(const SubgroupSpec& s, int bound, bool quasi) {
    HypothesisVerdict v;
    if (bound <= 0 || s.generators.empty()) return v;
    std::vector<Mat2> edges;
    std::vector<std::string> labels;
    for (size_t i = 0; i < s.generators.size(); ++i) {
        edges.push_back(s.generators[i]);
        labels.push_back("g" + std::to_string(i));
    }
    for (size_t i = 0; i < s.generators.size(); ++i) {
        edges.push_back(s.generators[i].inverse());
        labels.push_back("g" + std::to_string(i) + "^-1");
    }
    struct Node {
        Mat2 m;
        std::string word;
        int len;
    };
    std::set<std::string> seen;
    std::deque<Node> work;
    Mat2 id = Mat2::identity(s.field);
    seen.insert(id.str());
    work.push_back({id, "", 0});
    while (!work.empty()) {
        Node n = work.front();
        work.pop_front();
        if (n.len == bound) continue;
        for (size_t i = 0; i < edges.size(); ++i) {
            Mat2 m2 = n.m * edges[i];
            if (!seen.insert(m2.str()).second) continue;
            std::string w2 = n.word.empty() ? labels[i] : n.word + "*" + labels[i];
            Classification c = classify(m2);
            bool good = quasi ? c.quasi_unipotent : c.unipotent;
            if (c.k_reducible && !good) {
                v.counterexample_found = true;
                v.word = w2;
                v.witness = m2;
                return v;
            }
            work.push_back({m2, w2, n.len + 1});
        }
    }
    return v;
}

} // namespace

HypothesisVerdict check_hypothesis_U(const SubgroupSpec& s, int word_bound) {
    return hypothesis_search(s, word_bound, false);
}

HypothesisVerdict check_hypothesis_QU(const SubgroupSpec& s, int word_bound) {
    return hypothesis_search(s, word_bound, true);
}

long quasi_order_bound(const FieldSpec& f) {
    if (f.is_rationals()) return 12;
    long p = static_cast<long>(f.characteristic());
    return p * p - 1;
}

long quasi_order_bound(const SubgroupSpec& s) { return quasi_order_bound(s.field); }

UniPoly cyclotomic(long n, const FieldSpec& f) {
    require(n >= 1, "BadShape", "cyclotomic index must be positive");
    UniPoly acc = UniPoly::monomial(Scalar::one(f), static_cast<int>(n)) - UniPoly::one(f);
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = acc.divmod(cyclotomic(d, f));
        if (!r.is_zero()) internal_error("cyclotomic division left a remainder");
        acc = q;
    }
    return acc;
}

namespace {

// arithmetic in the quadratic extension F_p[X]/(X^2 + b X + c)
struct QuadExt {
    std::uint64_t p, b, c;

    using Elt = std::pair<std::uint64_t, std::uint64_t>; // a0 + a1 X

    Elt mul(const Elt& u, const Elt& v) const {
        std::uint64_t t0 = (u.first * v.first) % p;
        std::uint64_t t1 = (u.first * v.second + u.second * v.first) % p;
        std::uint64_t t2 = (u.second * v.second) % p;
        // X^2 = -b X - c
        std::uint64_t a0 = (t0 + t2 * ((p - c) % p)) % p;
        std::uint64_t a1 = (t1 + t2 * ((p - b) % p)) % p;
        return {a0, a1};
    }

    Elt pow(Elt z, long e) const {
        Elt acc{1, 0};
        while (e > 0) {
            if (e & 1) acc = mul(acc, z);
            z = mul(z, z);
            e >>= 1;
        }
        return acc;
    }
};

QuadExt quad_extension(std::uint64_t p) {
    for (std::uint64_t b = 0; b < p; ++b) {
        for (std::uint64_t c = 0; c < p; ++c) {
            bool has_root = false;
            for (std::uint64_t x = 0; x < p && !has_root; ++x) {
                if ((x * x + b * x + c) % p == 0) has_root = true;
            }
            if (!has_root) return {p, b, c};
        }
    }
    internal_error("no irreducible quadratic found");
}

} // namespace

std::vector<std::pair<Scalar, Scalar>> pair_set_C(long n, const FieldSpec& f) {
    require(n >= 1, "BadShape", "root-of-unity order must be positive");
    std::vector<std::pair<Scalar, Scalar>> out;
    if (f.is_rationals()) {
        UniPoly phi = cyclotomic(n, f);
        std::vector<UniPoly> xpow;
        for (long i = 0; i < n; ++i) {
            xpow.push_back(UniPoly::monomial(Scalar::one(f), static_cast<int>(i)).divmod(phi).second);
        }
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                UniPoly sum = xpow[static_cast<size_t>(i)] + xpow[static_cast<size_t>(j)];
                const UniPoly& prod = xpow[static_cast<size_t>((i + j) % n)];
                if (sum.degree() > 0 || prod.degree() > 0) continue;
                out.emplace_back(sum.coeff(0), prod.coeff(0));
            }
        }
    } else {
        QuadExt ext = quad_extension(f.characteristic());
        std::vector<QuadExt::Elt> mu;
        for (std::uint64_t a0 = 0; a0 < ext.p; ++a0) {
            for (std::uint64_t a1 = 0; a1 < ext.p; ++a1) {
                if (a0 == 0 && a1 == 0) continue;
                QuadExt::Elt z{a0, a1};
                if (ext.pow(z, n) == QuadExt::Elt{1, 0}) mu.push_back(z);
            }
        }
        for (const auto& z1 : mu) {
            for (const auto& z2 : mu) {
                std::uint64_t s0 = (z1.first + z2.first) % ext.p;
                std::uint64_t s1 = (z1.second + z2.second) % ext.p;
                QuadExt::Elt pr = ext.mul(z1, z2);
                if (s1 != 0 || pr.second != 0) continue;
                out.emplace_back(Scalar::residue(s0, f), Scalar::residue(pr.first, f));
            }
        }
    }
    auto less = [](const std::pair<Scalar, Scalar>& a, const std::pair<Scalar, Scalar>& b) {
        int c = a.first.cmp(b.first);
        if (c != 0) return c < 0;
        return a.second.cmp(b.second) < 0;
    };
    std::sort(out.begin(), out.end(), less);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) {
                              return a.first == b.first && a.second == b.second;
                          }),
              out.end());
    return out;
}

namespace {

std::uint64_t residue_of_rat(const mpq_class& x, std::uint64_t m) {
    mpz_class mod(static_cast<unsigned long>(m));
    mpz_class num = x.get_num() % mod;
    if (num < 0) num += mod;
    mpz_class den = x.get_den() % mod;
    mpz_class inv;
    int ok = mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    require(ok != 0, "BadShape",
            "denominator not invertible modulo " + std::to_string(m));
    mpz_class r = (num * inv) % mod;
    return static_cast<std::uint64_t>(r.get_ui());
}

std::array<std::uint64_t, 4> mat_residues(const Mat2& g, std::uint64_t m) {
    return {residue_of_rat(g.a.rat(), m), residue_of_rat(g.b.rat(), m),
            residue_of_rat(g.c.rat(), m), residue_of_rat(g.d.rat(), m)};
}

} // namespace

long congruence_modulus(const SubgroupSpec& s) {
    require(s.field.is_rationals(), "BadShape", "congruence machinery needs rational generators");
    mpz_class d(1);
    auto absorb = [&d](const Mat2& g) {
        for (const Scalar* e : {&g.a, &g.b, &g.c, &g.d}) {
            mpz_class den = e->rat().get_den();
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
        }
    };
    for (const Mat2& g : s.generators) {
        absorb(g);
        absorb(g.inverse());
    }
    auto pairs = pair_set_C(quasi_order_bound(s), s.field);
    Scalar two = Scalar::from_int(2, s.field), one = Scalar::one(s.field);
    for (std::uint64_t m = 2;; ++m) {
        if (!is_prime_u64(m)) continue;
        if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(m)) != 0) continue;
        bool ok = true;
        for (const auto& [sv, pv] : pairs) {
            if (sv == two && pv == one) continue;
            if (residue_of_rat(sv.rat(), m) == 2 % m && residue_of_rat(pv.rat(), m) == 1 % m) {
                ok = false;
                break;
            }
        }
        if (ok) return static_cast<long>(m);
    }
}

CongruenceData congruence_subgroup_gens(const SubgroupSpec& s, long m, long cap) {
    require(s.field.is_rationals(), "BadShape", "congruence machinery needs rational generators");
    require(m >= 2, "BadShape", "modulus must be at least 2");
    std::uint64_t mm = static_cast<std::uint64_t>(m);

    std::vector<Mat2> edges = s.generators;
    for (const Mat2& g : s.generators) edges.push_back(g.inverse());

    std::map<std::array<std::uint64_t, 4>, long> index_of;
    std::vector<Mat2> transversal;
    Mat2 id = Mat2::identity(s.field);
    index_of.emplace(mat_residues(id, mm), 0);
    transversal.push_back(id);
    for (size_t head = 0; head < transversal.size(); ++head) {
        Mat2 v = transversal[head];
        for (const Mat2& e : edges) {
            Mat2 w = v * e;
            auto key = mat_residues(w, mm);
            if (index_of.count(key)) continue;
            require(static_cast<long>(transversal.size()) < cap, "ImageCapExceeded",
                    "image mod " + std::to_string(m) + " exceeded " + std::to_string(cap)
                        + " elements");
            index_of.emplace(key, static_cast<long>(transversal.size()));
            transversal.push_back(w);
        }
    }

    CongruenceData out;
    out.modulus = m;
    out.index = static_cast<long>(transversal.size());
    out.transversal = transversal;
    auto id_key = mat_residues(id, mm);
    for (const Mat2& v : transversal) {
        for (const Mat2& e : edges) {
            Mat2 w = v * e;
            long j = index_of.at(mat_residues(w, mm));
            Mat2 schreier = w * transversal[static_cast<size_t>(j)].inverse();
            if (schreier.is_identity()) continue;
            Mat2 inv = schreier.inverse();
            bool dup = false;
            for (const Mat2& have : out.generators) {
                if (have == schreier || have == inv) {
                    dup = true;
                    break;
                }
            }
            if (dup) continue;
            if (mat_residues(schreier, mm) != id_key) {
                internal_error("Schreier generator escapes the congruence kernel");
            }
            out.generators.push_back(schreier);
        }
    }
    return out;
}

BlockMat::BlockMat(int n, const FieldSpec& f) : blocks(n) {
    require(n >= 1, "BadShape", "block matrix needs a positive size");
    entry.assign(static_cast<size_t>(n) * n, MatPoly2(f));
}

BlockMat BlockMat::operator*(const BlockMat& o) const {
    require(blocks == o.blocks, "BadShape", "block size mismatch");
    BlockMat out(blocks, entry.front().field());
    for (int i = 0; i < blocks; ++i) {
        for (int j = 0; j < blocks; ++j) {
            MatPoly2 acc = at(i, 0) * o.at(0, j);
            for (int k = 1; k < blocks; ++k) acc = acc + at(i, k) * o.at(k, j);
            out.at(i, j) = acc;
        }
    }
    return out;
}

bool BlockMat::operator==(const BlockMat& o) const {
    return blocks == o.blocks && entry == o.entry;
}

std::string BlockMat::str() const {
    std::string s = "[";
    for (int i = 0; i < blocks; ++i) {
        if (i) s += ",";
        s += "[";
        for (int j = 0; j < blocks; ++j) {
            if (j) s += ",";
            s += at(i, j).str();
        }
        s += "]";
    }
    s += "]";
    return s;
}

BlockMat induce_representation(const PolyAut& phi, const SubgroupSpec& s,
                               const CongruenceData& cong, const OrbitSection& section) {
    require(s.field.is_rationals(), "BadShape", "induction needs rational data");
    require(phi.field() == s.field, "FieldMismatch", "map and subgroup over different fields");
    long n = cong.index;
    require(n >= 1 && n == static_cast<long>(cong.transversal.size()), "BadShape",
            "inconsistent congruence data");
    require(fixes_origin(phi), "NotInAutS", "map does not fix the origin");
    Mat2 d0 = differential_at_origin(phi);
    require(!d0.det().is_zero(), "NotInAutS", "singular differential at the origin");

    std::uint64_t mm = static_cast<std::uint64_t>(cong.modulus);
    SubgroupSpec sub(cong.generators, s.field);
    std::vector<std::array<std::uint64_t, 4>> keys;
    for (const Mat2& r : cong.transversal) keys.push_back(mat_residues(r, mm));

    BlockMat out(static_cast<int>(n), s.field);
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (long j = 0; j < n; ++j) {
        auto target = mat_residues(d0 * cong.transversal[static_cast<size_t>(j)], mm);
        long i = -1;
        for (long k = 0; k < n; ++k) {
            if (keys[static_cast<size_t>(k)] == target) {
                i = k;
                break;
            }
        }
        require(i >= 0, "CosetError",
                "differential lands in no coset of the congruence subgroup");
        if (used[static_cast<size_t>(i)]) internal_error("two cosets mapped to one row");
        used[static_cast<size_t>(i)] = true;
        PolyAut conj = compose(
            AffineAut::linear(cong.transversal[static_cast<size_t>(i)].inverse()).to_poly(),
            compose(phi, AffineAut::linear(cong.transversal[static_cast<size_t>(j)]).to_poly()));
        out.at(static_cast<int>(i), static_cast<int>(j)) = rho_S(conj, sub, section);
    }
    return out;
}

} // namespace planekit
