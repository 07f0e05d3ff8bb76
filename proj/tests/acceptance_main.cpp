// Acceptance suite: one line per criterion, nonzero exit when any fails.
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "planekit/linmap.hpp"
#include "planekit/parse.hpp"
#include "planekit/witness.hpp"
#include "testutil.hpp"

using namespace planekit;
namespace tu = planekit::testutil;

namespace {

int failures = 0;

void run(int idx, const std::string& name, const std::function<std::string()>& body) {
    std::string detail;
    bool ok = false;
    try {
        detail = body();
        ok = true;
    } catch (const std::exception& e) {
        detail = e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

void check(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF7 = FieldSpec::prime_field(7);

std::string fmt_long(long v) { return std::to_string(v); }

// ---- criterion bodies ------------------------------------------------------

std::string c1_vdk_roundtrip() {
    long total = 0;
    for (const FieldSpec& f : {kQ, kF7}) {
        for (int i = 0; i < 500; ++i) {
            PolyAut phi = tu::random_aut(f, static_cast<int>(tu::pick(1, 6)), 4, 3);
            VdkWord w = vdk_factorize(phi);
            check(w.recompose() == phi, "recompose mismatch over " + f.str());
            std::vector<int> types = w.type_seq();
            for (std::size_t k = 1; k < types.size(); ++k)
                check(types[k] != types[k - 1], "non alternating word over " + f.str());
            check(membership(w.tail) == Membership::InB, "tail escaped B over " + f.str());
            ++total;
        }
    }
    return fmt_long(total) + " words reassembled over q and fp:7";
}

std::string c2_psi_isomorphism() {
    long total = 0;
    for (const FieldSpec& f : {kQ, kF7}) {
        for (int i = 0; i < 200; ++i) {
            // composition multiplies degrees, so each operand gets a tight budget
            PolyAut a = tu::random_aut1(f, static_cast<int>(tu::pick(0, 3)), 4, 2, 8);
            PolyAut b = tu::random_aut1(f, static_cast<int>(tu::pick(0, 3)), 4, 2, 8);
            MatPoly2 ga = psi(a), gb = psi(b);
            check(psi(compose(a, b)) == matpoly_mul(ga, gb), "not multiplicative over " + f.str());
            check(psi_inv(ga) == a, "left inverse failed over " + f.str());
            check(psi(psi_inv(gb)) == gb, "right inverse failed over " + f.str());
            ++total;
        }
    }
    return fmt_long(total) + " pairs, both round trips exact";
}

std::string c3_e_word_uniqueness() {
    long total = 0;
    for (const FieldSpec& f : {kQ, kF7}) {
        for (int i = 0; i < 300; ++i) {
            EWord w = tu::random_e_word(f, static_cast<int>(tu::pick(0, 4)));
            MatPoly2 g = w.recompose(f);
            std::vector<int> trace;
            EWord back = e_generation_factorize_traced(g, trace);
            check(back.length() == w.length(), "length changed over " + f.str());
            for (int k = 0; k < w.length(); ++k) {
                check(back.factors[k].delta == w.factors[k].delta, "line changed over " + f.str());
                check(back.factors[k].f == w.factors[k].f, "factor changed over " + f.str());
            }
            for (std::size_t k = 0; k + 1 < trace.size(); ++k)
                check(trace[k] > trace[k + 1], "degree trace not strictly decreasing");
            ++total;
        }
    }
    return fmt_long(total) + " words, unique factors, monotone degree traces";
}

std::string c4_degree_laws() {
    long total = 0;
    for (const FieldSpec& f : {kQ, kF7}) {
        for (int i = 0; i < 100; ++i) {
            TauWord w = tu::random_tau_word(f, static_cast<int>(tu::pick(0, 4)), 5);
            DegreeLawReport rep = degree_law_check(w, f);
            long prod = 1;
            int sum = 0;
            for (int m : rep.factor_degrees) {
                prod *= m;
                sum += m;
            }
            check(rep.aut_degree == prod, "map degree vs product over " + f.str());
            check(rep.mat_degree == sum - w.length(), "matrix degree vs sum over " + f.str());
            check(degree(w.recompose(f)) == rep.aut_degree, "reported map degree wrong");
            check(psi_of_word(w, f).degree() == std::max(rep.mat_degree, 0),
                  "reported matrix degree wrong");
            ++total;
        }
    }
    return fmt_long(total) + " reduced words satisfy both laws";
}

std::string c5_pingpong_grid() {
    FieldSpec f3 = FieldSpec::prime_field(3);
    std::map<ProjPoint, std::vector<EFactor>> samples;
    std::map<ProjPoint, std::vector<PolyVector>> vectors;
    for (const ProjPoint& d : all_proj_points(f3)) {
        LineFrame fr = line_frame(d);
        std::vector<EFactor> fs;
        fs.emplace_back(d, UniPoly::one(f3));
        fs.emplace_back(d, UniPoly::t(f3));
        fs.emplace_back(d, UniPoly::one(f3) + UniPoly::t(f3));
        samples.emplace(d, std::move(fs));

        std::vector<PolyVector> vs;
        vs.emplace_back(UniPoly::constant(fr.w1), UniPoly::constant(fr.w2));
        vs.emplace_back(UniPoly::monomial(fr.w1, 1), UniPoly::monomial(fr.w2, 1));
        vs.emplace_back(UniPoly::monomial(fr.w1, 2) + UniPoly::one(f3),
                        UniPoly::monomial(fr.w2, 2));
        vectors.emplace(d, std::move(vs));
    }
    PingPongReport rep = verify_pingpong(samples, vectors);
    check(rep.clean(), "violations: " + fmt_long(static_cast<long>(rep.violations.size())));
    check(rep.checks == 4 * 3 * 3 * 3, "unexpected check count " + fmt_long(rep.checks));
    return "all " + fmt_long(rep.checks) + " cone inclusions over fp:3 hold";
}

std::string c6_gamma_witness() {
    CheckReport rel = verify_gamma_relations();
    check(rel.all_pass(), "defining relations failed");

    CheckReport neg = verify_gamma_relations_with(PolyAut::from_text("(x ; y + x^3)", kQ));
    check(!neg.all_pass(), "negative control passed unexpectedly");

    Mat2 sp = parse_mat2("[[1,1],[1,0]]", kQ);
    for (int n = 1; n <= 12; ++n)
        for (const Mat2& m : {sp.pow(n), sp.pow(-n)})
            check(!m.b.is_zero() && !m.c.is_zero(),
                  "a power of the second generator became triangular");

    DistinctnessReport rep = distinctness_suite(6);
    check(rep.clean(), "collisions or mismatches among short words");
    check(rep.words_enumerated == 23436, "unexpected word count " + fmt_long(rep.words_enumerated));
    return fmt_long(rep.words_enumerated) + " words length <= 6, " +
           fmt_long(rep.normal_forms) + " normal forms, all consistent";
}

std::string c7_cornulier_grid() {
    std::vector<Scalar> alphas = {Scalar::one(kQ), Scalar::from_int(-1, kQ),
                                  Scalar::from_int(2, kQ), Scalar::fraction(1, 2, kQ),
                                  Scalar::fraction(-3, 5, kQ)};
    long cases = 0;
    for (int n = 0; n <= 4; ++n) {
        std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1, Scalar::zero(kQ));
        coeffs.back() = Scalar::one(kQ);
        BinomialPoly f(kQ, coeffs);
        for (const Scalar& alpha : alphas) {
            check(verify_cornulier_identity(f, alpha),
                  "identity failed at n=" + std::to_string(n) + " alpha=" + alpha.str());
            ++cases;
        }
    }
    return fmt_long(cases) + " series conjugation cases verified";
}

std::string c8_twisted_representation() {
    Mat2 u = parse_mat2("[[1,1],[0,1]]", kQ);
    SubgroupSpec s({u}, kQ);
    OrbitSection section = cyclic_exact_section(u);
    std::map<std::string, std::string> image; // rho -> aut, for injectivity

    auto sample = [&]() {
        PolyAut lin = AffineAut::linear(u.pow(tu::pick(-3, 3))).to_poly();
        return compose(lin, tu::random_aut1(kQ, static_cast<int>(tu::pick(0, 2)), 3));
    };
    long pairs = 0;
    for (int i = 0; i < 100; ++i) {
        PolyAut a = sample(), b = sample();
        MatPoly2 ra = rho_S(a, s, section), rb = rho_S(b, s, section);
        check(matpoly_mul(ra, rb) == rho_S(compose(a, b), s, section), "not multiplicative");

        auto inspect = [&](const PolyAut& phi, const MatPoly2& r) {
            Mat2 g0 = matpoly_eval0(r);
            check(g0 == differential_at_origin(phi), "constant term left the subgroup");
            check(g0.a == Scalar::one(kQ) && g0.d == Scalar::one(kQ) && g0.c.is_zero(),
                  "constant term is no power of the generator");
            auto [it, fresh] = image.emplace(r.str(), phi.str());
            if (!fresh) check(it->second == phi.str(), "two maps shared one image");
        };
        inspect(a, ra);
        inspect(b, rb);
        ++pairs;
    }
    return fmt_long(pairs) + " pairs multiplicative, image injective, constant terms in S";
}

std::string c9_congruence_induction() {
    SubgroupSpec s({parse_mat2("[[1,1],[0,1]]", kQ)}, kQ);
    long m = congruence_modulus(s);
    check(m == 5, "expected modulus 5, got " + fmt_long(m));

    CongruenceData cd = congruence_subgroup_gens(s, m);
    check(cd.index == 5, "expected index 5, got " + fmt_long(cd.index));
    for (const Mat2& g : cd.generators)
        for (const Scalar& e : {g.a - Scalar::one(kQ), g.b, g.c, g.d - Scalar::one(kQ)}) {
            mpq_class v = e.rat();
            check(v.get_den() == 1 && v.get_num() % 5 == 0, "generator not id mod 5");
        }

    SubgroupSpec mid({Mat2::scalar(Scalar::from_int(-1, kQ))}, kQ);
    CongruenceData cm = congruence_subgroup_gens(mid, congruence_modulus(mid));
    check(cm.index == 2, "expected index 2 for the sign subgroup");
    OrbitSection ident = identity_section(kQ);
    PolyAut flip = AffineAut::linear(Mat2::scalar(Scalar::from_int(-1, kQ))).to_poly();
    long pairs = 0;
    for (int i = 0; i < 50; ++i) {
        PolyAut a = compose(tu::pick(0, 1) ? flip : PolyAut::identity(kQ),
                            tu::random_aut1(kQ, static_cast<int>(tu::pick(0, 2)), 3));
        PolyAut b = compose(tu::pick(0, 1) ? flip : PolyAut::identity(kQ),
                            tu::random_aut1(kQ, static_cast<int>(tu::pick(0, 2)), 3));
        BlockMat pa = induce_representation(a, mid, cm, ident);
        BlockMat pb = induce_representation(b, mid, cm, ident);
        check(pa * pb == induce_representation(compose(a, b), mid, cm, ident),
              "induced blocks not multiplicative");
        ++pairs;
    }
    return "modulus 5, index 5 kernel generators, " + fmt_long(pairs) +
           " induced pairs multiplicative";
}

std::string c10_classification() {
    Classification c1 = classify(parse_mat2("[[1,1],[0,1]]", kQ));
    check(c1.unipotent && c1.k_reducible && c1.quasi_order == 1, "unipotent case wrong");

    Classification c2 = classify(parse_mat2("[[0,-1],[1,0]]", kQ));
    check(!c2.k_reducible && c2.quasi_unipotent && c2.quasi_order == 4, "rotation case wrong");

    Classification c3 = classify(parse_mat2("[[1,1],[1,0]]", kQ));
    check(!c3.k_reducible && !c3.quasi_unipotent && c3.quasi_order == 0,
          "irrational spectrum case wrong");
    return "all three spectral profiles match";
}

} // namespace

int main() {
    tu::rng(); // print the seed up front

    run(1, "alternating factorization round trip", c1_vdk_roundtrip);
    run(2, "matrix image is an isomorphism", c2_psi_isomorphism);
    run(3, "unipotent matrix words are unique", c3_e_word_uniqueness);
    run(4, "degree laws of reduced shear words", c4_degree_laws);
    run(5, "exhaustive cone inclusion grid", c5_pingpong_grid);
    run(6, "witness group relations and word separation", c6_gamma_witness);
    run(7, "series conjugation identity grid", c7_cornulier_grid);
    run(8, "twisted representation of the extended group", c8_twisted_representation);
    run(9, "congruence kernel and induced blocks", c9_congruence_induction);
    run(10, "spectral classification triples", c10_classification);

    if (failures == 0) {
        std::cout << "acceptance: all 10 criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
    return 1;
}
