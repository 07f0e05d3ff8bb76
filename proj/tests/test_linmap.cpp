#include <doctest.h>

#include "planekit/errors.hpp"
#include "planekit/linmap.hpp"
#include "planekit/parse.hpp"
#include "testutil.hpp"

using namespace planekit;
namespace tu = planekit::testutil;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Mat2 m2(const char* text, const FieldSpec& f = kQ) { return parse_mat2(text, f); }

} // namespace

TEST_SUITE("linmap") {

TEST_CASE("the matrix image of shear words") {
    CHECK(psi(PolyAut::identity(kQ)) == MatPoly2::identity(kQ));
    CHECK(psi(PolyAut::from_text("(x ; y + x^2)", kQ)).str() == "[[1,0],[t,1]]");
    CHECK(psi(PolyAut::from_text("(x + y^2 ; y + (x + y^2)^2)", kQ)).str()
          == "[[1,t],[t,t^2 + 1]]");
    CHECK_THROWS_WITH_AS(psi(AffineAut::linear(m2("[[1,1],[1,0]]")).to_poly()),
                         doctest::Contains("NotInAut1"), Error);
    CHECK_THROWS_AS(psi(PolyAut::from_text("(x + 1 ; y)", kQ)), Error);

    TauWord w{{TauFactor(ProjPoint::from_ints(0, 1, kQ), parse_unipoly("t^2", kQ))}};
    CHECK(psi_of_word(w, kQ) == psi(w.recompose(kQ)));
}

TEST_CASE("the inverse direction recovers the map") {
    CHECK(psi_inv(MatPoly2::identity(kQ)) == PolyAut::identity(kQ));
    CHECK(psi_inv(parse_matpoly("[[1,0],[t,1]]", kQ)) == PolyAut::from_text("(x ; y + x^2)", kQ));
    CHECK(psi_inv(parse_matpoly("[[1,t],[t,t^2+1]]", kQ))
          == PolyAut::from_text("(x + y^2 ; y + (x + y^2)^2)", kQ));
    CHECK_THROWS_AS(psi_inv(parse_matpoly("[[t,0],[0,t]]", kQ)), Error);
}

TEST_CASE("the image map is an isomorphism on random words") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
        for (int i = 0; i < 30; ++i) {
            // composition multiplies degrees, so each operand gets a tight budget
            PolyAut a = tu::random_aut1(f, static_cast<int>(tu::pick(0, 3)), 4, 2, 8);
            PolyAut b = tu::random_aut1(f, static_cast<int>(tu::pick(0, 3)), 4, 2, 8);
            CHECK(psi(compose(a, b)) == matpoly_mul(psi(a), psi(b)));
            CHECK(psi_inv(psi(a)) == a);
        }
    }
}

TEST_CASE("degree bookkeeping of reduced words") {
    DegreeLawReport empty = degree_law_check(TauWord{}, kQ);
    CHECK(empty.aut_degree == 1);
    CHECK(empty.mat_degree == 0);
    CHECK(empty.factor_degrees.empty());

    TauWord single{{TauFactor(ProjPoint::from_ints(0, 1, kQ), parse_unipoly("t^2", kQ))}};
    DegreeLawReport r1 = degree_law_check(single, kQ);
    CHECK(r1.aut_degree == 2);
    CHECK(r1.mat_degree == 1);
    CHECK(r1.factor_degrees == std::vector<int>{2});

    TauWord two{{TauFactor(ProjPoint::from_ints(0, 1, kQ), parse_unipoly("t^2", kQ)),
                 TauFactor(ProjPoint::from_ints(1, 0, kQ), parse_unipoly("t^2", kQ))}};
    DegreeLawReport r2 = degree_law_check(two, kQ);
    CHECK(r2.aut_degree == 4);
    CHECK(r2.mat_degree == 2);
    CHECK(r2.factor_degrees == std::vector<int>{2, 2});

    TauWord unreduced{{TauFactor(ProjPoint::from_ints(0, 1, kQ), parse_unipoly("t^2", kQ)),
                       TauFactor(ProjPoint::from_ints(0, 1, kQ), parse_unipoly("t^3", kQ))}};
    CHECK_THROWS_WITH_AS(degree_law_check(unreduced, kQ), doctest::Contains("BadShape"), Error);
}

TEST_CASE("spectral classification over the exact fields") {
    Classification c1 = classify(m2("[[1,1],[0,1]]"));
    CHECK(c1.k_reducible);
    CHECK(c1.unipotent);
    CHECK(c1.quasi_unipotent);
    CHECK(c1.quasi_order == 1);

    Classification c2 = classify(m2("[[0,-1],[1,0]]"));
    CHECK_FALSE(c2.k_reducible);
    CHECK_FALSE(c2.unipotent);
    CHECK(c2.quasi_unipotent);
    CHECK(c2.quasi_order == 4);

    Classification c3 = classify(m2("[[1,1],[1,0]]"));
    CHECK_FALSE(c3.k_reducible);
    CHECK_FALSE(c3.quasi_unipotent);
    CHECK(c3.quasi_order == 0);
    CHECK(c3.str().find("quasi_order=none") != std::string::npos);

    // the same rotation splits once -1 becomes a square
    Classification c4 = classify(m2("[[0,-1],[1,0]]", FieldSpec::prime_field(5)));
    CHECK(c4.k_reducible);
    CHECK_FALSE(c4.unipotent);
    CHECK(c4.quasi_order == 4);

    Classification c5 = classify(m2("[[2,0],[0,1/2]]"));
    CHECK(c5.k_reducible);
    CHECK_FALSE(c5.quasi_unipotent);

    CHECK(classify(Mat2::scalar(Scalar::from_int(-1, kQ))).quasi_order == 2);
    CHECK_THROWS_WITH_AS(classify(m2("[[1,2],[2,4]]")), doctest::Contains("SingularMatrix"),
                         Error);
}

TEST_CASE("quasi orders obey the uniform field bound") {
    CHECK(quasi_order_bound(kQ) == 12);
    CHECK(quasi_order_bound(FieldSpec::prime_field(5)) == 24);
    CHECK(quasi_order_bound(FieldSpec::prime_field(2)) == 3);

    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(3)}) {
        long bound = quasi_order_bound(f);
        for (int i = 0; i < 30; ++i) {
            Mat2 m = tu::random_invertible(f);
            Classification c = classify(m);
            if (c.quasi_unipotent) {
                CHECK(c.quasi_order >= 1);
                CHECK(bound % c.quasi_order == 0);
                Classification power = classify(m.pow(c.quasi_order));
                CHECK(power.unipotent);
            }
        }
    }
}

TEST_CASE("realizable trace determinant pairs") {
    auto pairs = pair_set_C(12, kQ);
    REQUIRE(pairs.size() == 6);
    auto has = [&](long s, long p) {
        return std::find(pairs.begin(), pairs.end(),
                         std::make_pair(Scalar::from_int(s, kQ), Scalar::from_int(p, kQ)))
               != pairs.end();
    };
    CHECK(has(2, 1));
    CHECK(has(-2, 1));
    CHECK(has(0, -1));
    CHECK(has(1, 1));
    CHECK(has(-1, 1));
    CHECK(has(0, 1));

    auto small = pair_set_C(2, kQ);
    CHECK(small.size() == 3);

    // in the prime field every realized pair names a quasi-unipotent matrix
    FieldSpec f3 = FieldSpec::prime_field(3);
    auto modp = pair_set_C(8, f3);
    CHECK(modp.size() == 6);
    for (const auto& [s, p] : modp) {
        Mat2 companion(Scalar::zero(f3), Scalar::zero(f3) - p, Scalar::one(f3), s);
        Classification c = classify(companion);
        CHECK(c.quasi_unipotent);
        CHECK(8 % c.quasi_order == 0);
    }
}

TEST_CASE("cyclotomic polynomials multiply out") {
    CHECK(cyclotomic(1, kQ).str() == "t - 1");
    CHECK(cyclotomic(6, kQ).str() == "t^2 - t + 1");
    CHECK(cyclotomic(12, kQ).str() == "t^4 - t^2 + 1");
    UniPoly prod = UniPoly::one(kQ);
    for (long d : {1, 2, 3, 6}) prod = prod * cyclotomic(d, kQ);
    CHECK(prod == parse_unipoly("t^6 - 1", kQ));
}

TEST_CASE("congruence modulus avoids the realizable pairs") {
    SubgroupSpec s({m2("[[1,1],[0,1]]")}, kQ);
    CHECK(congruence_modulus(s) == 5);

    // a generator with denominator 10 forces the next admissible prime
    SubgroupSpec dens({m2("[[1,1/10],[0,1]]")}, kQ);
    CHECK(congruence_modulus(dens) == 7);

    SubgroupSpec fp({m2("[[1,1],[0,1]]", FieldSpec::prime_field(5))}, FieldSpec::prime_field(5));
    CHECK_THROWS_AS(congruence_modulus(fp), Error);
}

TEST_CASE("congruence subgroups mod small primes") {
    SubgroupSpec s({m2("[[1,1],[0,1]]")}, kQ);
    CongruenceData cd = congruence_subgroup_gens(s, 5);
    CHECK(cd.modulus == 5);
    CHECK(cd.index == 5);
    REQUIRE(cd.generators.size() == 1);
    CHECK(cd.generators[0] == m2("[[1,5],[0,1]]"));
    REQUIRE(cd.transversal.size() == 5);
    CHECK(cd.transversal[0].is_identity());

    SubgroupSpec triv({Mat2::identity(kQ)}, kQ);
    CongruenceData ct = congruence_subgroup_gens(triv, 5);
    CHECK(ct.index == 1);
    CHECK(ct.generators.empty());

    SubgroupSpec rot({m2("[[0,-1],[1,0]]")}, kQ);
    CongruenceData cr = congruence_subgroup_gens(rot, 5);
    CHECK(cr.index == 4);
    CHECK(cr.generators.empty()); // the fourth power is the identity

    SubgroupSpec sl2({m2("[[1,1],[0,1]]"), m2("[[1,0],[1,1]]")}, kQ);
    CongruenceData cs = congruence_subgroup_gens(sl2, 5);
    CHECK(cs.index == 120); // the whole of SL2 over the 5 element field
    for (const Mat2& g : cs.generators) {
        for (const Scalar& entry : {g.a - Scalar::one(kQ), g.b, g.c, g.d - Scalar::one(kQ)}) {
            mpq_class v = entry.rat();
            CHECK(v.get_den() == 1);      // integral entries for these generators
            CHECK(v.get_num() % 5 == 0);  // and congruent to the identity mod 5
        }
    }

    CHECK_THROWS_WITH_AS(congruence_subgroup_gens(sl2, 5, 50),
                         doctest::Contains("ImageCapExceeded"), Error);
}

TEST_CASE("orbit sections place representatives consistently") {
    OrbitSection ident = identity_section(kQ);
    ProjPoint d = ProjPoint::from_ints(1, 3, kQ);
    CHECK(ident.rep(d) == d);
    CHECK(ident.carrier(d).is_identity());

    Mat2 u = m2("[[1,1],[0,1]]");
    OrbitSection cyc = cyclic_exact_section(u);
    CHECK(cyc.mode == OrbitSection::Mode::CyclicExact);
    for (int i = 0; i < 20; ++i) {
        ProjPoint p = tu::random_delta(kQ);
        CHECK(cyc.rep(p) == cyc.rep(apply_mat(u, p)));
        CHECK(apply_mat(cyc.carrier(p), cyc.rep(p)) == p);
    }
    CHECK_THROWS_AS(cyclic_exact_section(Mat2::scalar(Scalar::from_int(2, kQ))), Error);

    FieldSpec f5 = FieldSpec::prime_field(5);
    OrbitSection rotsec = cyclic_exact_section(m2("[[0,-1],[1,0]]", f5));
    for (const ProjPoint& p : all_proj_points(f5)) {
        CHECK(rotsec.rep(p) == rotsec.rep(apply_mat(m2("[[0,-1],[1,0]]", f5), p)));
        CHECK(apply_mat(rotsec.carrier(p), rotsec.rep(p)) == p);
    }

    SubgroupSpec s({u}, kQ);
    OrbitSection bfs = bounded_bfs_section(s, 6);
    for (int i = 0; i < 10; ++i) {
        ProjPoint p = tu::random_delta(kQ, 2);
        CHECK(bfs.rep(p) == bfs.rep(apply_mat(u, p)));
        CHECK(apply_mat(bfs.carrier(p), bfs.rep(p)) == p);
    }
}

TEST_CASE("twisted linear representation of the extended group") {
    SubgroupSpec s({m2("[[1,1],[0,1]]")}, kQ);
    OrbitSection cyc = cyclic_exact_section(m2("[[1,1],[0,1]]"));

    // on the kernel subgroup with a fixed line the twist disappears
    PolyAut fixedline = tau(ProjPoint::from_ints(1, 0, kQ), parse_unipoly("t^2", kQ));
    CHECK(rho_S(fixedline, s, identity_section(kQ)) == psi(fixedline));

    for (int i = 0; i < 15; ++i) {
        long ka = tu::pick(-2, 2), kb = tu::pick(-2, 2);
        PolyAut a = compose(AffineAut::linear(m2("[[1,1],[0,1]]").pow(ka)).to_poly(),
                            tu::random_aut1(kQ, static_cast<int>(tu::pick(0, 2)), 3));
        PolyAut b = compose(AffineAut::linear(m2("[[1,1],[0,1]]").pow(kb)).to_poly(),
                            tu::random_aut1(kQ, static_cast<int>(tu::pick(0, 2)), 3));
        MatPoly2 ra = rho_S(a, s, cyc);
        MatPoly2 rb = rho_S(b, s, cyc);
        CHECK(matpoly_mul(ra, rb) == rho_S(compose(a, b), s, cyc));
        CHECK(matpoly_eval0(ra) == differential_at_origin(a));
        if (!(a == b)) CHECK(ra != rb);
    }

    // generators failing the unipotence hypothesis are rejected up front
    FieldSpec f5 = FieldSpec::prime_field(5);
    SubgroupSpec badgen({m2("[[2,0],[0,3]]", f5)}, f5);
    PolyAut shear5 = tau(ProjPoint::from_ints(0, 1, f5), parse_unipoly("t^2", f5));
    CHECK_THROWS_WITH_AS(rho_S(shear5, badgen, identity_section(f5)),
                         doctest::Contains("HypothesisViolated"), Error);

    // a section whose carrier lies about the representative is caught
    OrbitSection lying;
    lying.mode = OrbitSection::Mode::BoundedBFS;
    lying.rep = [](const ProjPoint&) { return ProjPoint::from_ints(1, 0, kQ); };
    lying.carrier = [](const ProjPoint&) { return Mat2::identity(kQ); };
    PolyAut moving = tau(ProjPoint::from_ints(0, 1, kQ), parse_unipoly("t^2", kQ));
    CHECK_THROWS_WITH_AS(rho_S(moving, s, lying), doctest::Contains("SectionInconsistency"),
                         Error);
}

TEST_CASE("word searches for hypothesis counterexamples") {
    SubgroupSpec uni({m2("[[1,1],[0,1]]")}, kQ);
    CHECK_FALSE(check_hypothesis_U(uni, 6).counterexample_found);
    CHECK_FALSE(check_hypothesis_QU(uni, 6).counterexample_found);
    CHECK(check_hypothesis_U(uni, 6).str() == "no counterexample found");

    SubgroupSpec twoid({Mat2::scalar(Scalar::from_int(2, kQ))}, kQ);
    HypothesisVerdict v = check_hypothesis_U(twoid, 2);
    CHECK(v.counterexample_found);
    CHECK(v.word == "g0");
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == Mat2::scalar(Scalar::from_int(2, kQ)));
    CHECK(check_hypothesis_QU(twoid, 2).counterexample_found);

    // the quarter turn squares to -id, which splits without being unipotent,
    // yet every power is quasi-unipotent
    SubgroupSpec rot({m2("[[0,-1],[1,0]]")}, kQ);
    HypothesisVerdict vr = check_hypothesis_U(rot, 6);
    CHECK(vr.counterexample_found);
    REQUIRE(vr.witness.has_value());
    CHECK(*vr.witness == m2("[[-1,0],[0,-1]]"));
    CHECK_FALSE(check_hypothesis_QU(rot, 6).counterexample_found);

    FieldSpec f5 = FieldSpec::prime_field(5);
    SubgroupSpec rot5({m2("[[0,-1],[1,0]]", f5)}, f5);
    CHECK(check_hypothesis_U(rot5, 2).counterexample_found);   // splits, not unipotent
    CHECK_FALSE(check_hypothesis_QU(rot5, 4).counterexample_found); // fourth power is id

    SubgroupSpec sl2({m2("[[1,1],[0,1]]"), m2("[[1,0],[1,1]]")}, kQ);
    CHECK_FALSE(check_hypothesis_U(sl2, 3).counterexample_found);
}

TEST_CASE("block matrices multiply blockwise") {
    BlockMat a(2, kQ), b(2, kQ);
    a.at(0, 1) = parse_matpoly("[[1,t],[0,1]]", kQ);
    a.at(1, 0) = MatPoly2::identity(kQ);
    b.at(0, 1) = MatPoly2::identity(kQ);
    b.at(1, 0) = parse_matpoly("[[1,0],[t,1]]", kQ);
    BlockMat p = a * b;
    CHECK(p.at(0, 0) == parse_matpoly("[[1,t],[0,1]]", kQ) * parse_matpoly("[[1,0],[t,1]]", kQ));
    CHECK(p.at(1, 1) == MatPoly2::identity(kQ));
    CHECK(p.at(0, 1) == MatPoly2(kQ));
    CHECK(a != b);
}

TEST_CASE("induction across the coset transversal") {
    SubgroupSpec mid({Mat2::scalar(Scalar::from_int(-1, kQ))}, kQ);
    long m = congruence_modulus(mid);
    CHECK(m == 5);
    CongruenceData cm = congruence_subgroup_gens(mid, m);
    CHECK(cm.index == 2);
    OrbitSection ident = identity_section(kQ);

    PolyAut flip = AffineAut::linear(Mat2::scalar(Scalar::from_int(-1, kQ))).to_poly();
    PolyAut phi = compose(flip, tau(ProjPoint::from_ints(0, 1, kQ), parse_unipoly("t^2", kQ)));
    BlockMat bm = induce_representation(phi, mid, cm, ident);
    // differential -id swaps the two cosets: antidiagonal block layout
    CHECK(bm.at(0, 0) == MatPoly2(kQ));
    CHECK(bm.at(1, 1) == MatPoly2(kQ));
    CHECK_FALSE(bm.at(0, 1) == MatPoly2(kQ));
    CHECK_FALSE(bm.at(1, 0) == MatPoly2(kQ));

    for (int i = 0; i < 10; ++i) {
        PolyAut a = compose(tu::pick(0, 1) ? flip : PolyAut::identity(kQ),
                            tu::random_aut1(kQ, static_cast<int>(tu::pick(0, 2)), 3));
        PolyAut b = compose(tu::pick(0, 1) ? flip : PolyAut::identity(kQ),
                            tu::random_aut1(kQ, static_cast<int>(tu::pick(0, 2)), 3));
        CHECK(induce_representation(a, mid, cm, ident) * induce_representation(b, mid, cm, ident)
              == induce_representation(compose(a, b), mid, cm, ident));
    }

    CHECK_THROWS_WITH_AS(
        induce_representation(AffineAut::linear(m2("[[2,0],[0,1/2]]")).to_poly(), mid, cm, ident),
        doctest::Contains("CosetError"), Error);
}

} // TEST_SUITE
