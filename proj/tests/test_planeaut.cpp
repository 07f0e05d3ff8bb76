#include <doctest.h>

#include "planekit/errors.hpp"
#include "planekit/parse.hpp"
#include "planekit/planeaut.hpp"
#include "testutil.hpp"

using namespace planekit;
namespace tu = planekit::testutil;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

PolyAut aut(const char* text, const FieldSpec& f = kQ) { return PolyAut::from_text(text, f); }

} // namespace

TEST_SUITE("planeaut") {

TEST_CASE("composition acts right to left") {
    PolyAut T = aut("(x ; y + x^2)");
    CHECK(compose(PolyAut::identity(kQ), T) == T);
    CHECK(compose(T, PolyAut::identity(kQ)) == T);
    CHECK(compose(T, T) == aut("(x ; y + 2*x^2)"));

    // conjugating the quadratic shear by the halving homothety doubles it
    PolyAut S = AffineAut::linear(Mat2::scalar(Scalar::fraction(1, 2, kQ))).to_poly();
    PolyAut conj = compose(S, compose(T, inverse(S)));
    CHECK(conj == compose(T, T));
}

TEST_CASE("membership separates the four classes") {
    CHECK(membership(aut("(2*x + 1 ; 3*y + x - 4)")) == Membership::InB);
    CHECK(membership(aut("(3*y + x - 4 ; 2*x + 1)")) == Membership::Affine);
    CHECK(membership(aut("(x ; y + x^2)")) == Membership::Elementary);
    CHECK(membership(aut("(x + y^2 ; y)")) == Membership::General);
    CHECK(membership(PolyAut::identity(kQ)) == Membership::InB);
    CHECK(membership_name(Membership::General) == "General");
}

TEST_CASE("origin data of a map") {
    PolyAut T = aut("(x ; y + x^2)");
    CHECK(fixes_origin(T));
    CHECK(differential_at_origin(T).is_identity());
    CHECK_FALSE(fixes_origin(aut("(x + 1 ; y)")));
    CHECK(differential_at_origin(aut("(x + y ; x - y + x^2)")).str() == "[[1,1],[1,-1]]");

    CHECK(degree(PolyAut::identity(kQ)) == 1);
    CHECK(degree(aut("(2*x + 1 ; 3*y + x - 4)")) == 1);
    PolyAut two = aut("(x + y^2 ; y + (x + y^2)^2)");
    CHECK(degree(two) == 4);
    CHECK(membership(two) == Membership::General);
    CHECK(fixes_origin(two));
    CHECK(differential_at_origin(two).is_identity());
}

TEST_CASE("affine and elementary wrappers invert in closed form") {
    AffineAut a(Mat2::from_rows(1, 1, 1, 0, kQ), Scalar::from_int(2, kQ), Scalar::zero(kQ));
    PolyAut p = a.to_poly();
    CHECK(compose(p, a.inverse().to_poly()) == PolyAut::identity(kQ));
    CHECK(AffineAut::from_poly(p).lin == a.lin);
    CHECK_THROWS_AS(AffineAut::from_poly(aut("(x ; y + x^2)")), Error);

    ElementaryAut e = ElementaryAut::shear(parse_unipoly("t^2", kQ));
    CHECK(e.to_poly() == aut("(x ; y + x^2)"));
    CHECK(compose(e.to_poly(), e.inverse().to_poly()) == PolyAut::identity(kQ));
    CHECK_THROWS_AS(ElementaryAut::from_poly(aut("(x + y^2 ; y)")), Error);

    ElementaryAut full(Scalar::from_int(2, kQ), Scalar::from_int(3, kQ), Scalar::one(kQ),
                       parse_unipoly("t^3 - t", kQ));
    CHECK(compose(full.inverse().to_poly(), full.to_poly()) == PolyAut::identity(kQ));
}

TEST_CASE("inverse matches hand computations") {
    CHECK(inverse(PolyAut::identity(kQ)) == PolyAut::identity(kQ));
    CHECK(inverse(aut("(x ; y + x^2)")) == aut("(x ; y - x^2)"));

    PolyAut sp = AffineAut::linear(Mat2::from_rows(1, 1, 1, 0, kQ)).to_poly();
    CHECK(inverse(sp) == AffineAut::linear(Mat2::from_rows(0, 1, 1, -1, kQ)).to_poly());
    CHECK_THROWS_AS(inverse(aut("(x^2 ; y)")), Error);
}

TEST_CASE("canonical affine coset representatives") {
    CHECK(affine_coset_rep(ProjPoint::from_ints(1, 0, kQ)).str() == "[[0,1],[1,0]]");
    CHECK(affine_coset_rep(ProjPoint::from_ints(1, 2, kQ)).str() == "[[0,1],[1,2]]");
    CHECK_THROWS_AS(affine_coset_rep(ProjPoint::from_ints(0, 1, kQ)), Error);
    // second column carries the coset direction
    Mat2 rep = affine_coset_rep(ProjPoint::from_ints(1, -3, kQ));
    CHECK(ProjPoint(rep.b, rep.d) == ProjPoint::from_ints(1, -3, kQ));
    CHECK_FALSE(rep.det().is_zero());
}

TEST_CASE("factorization of simple maps") {
    VdkWord w = vdk_factorize(aut("(x ; y + x^3)"));
    CHECK(w.length() == 1);
    CHECK(w.type_seq() == std::vector<int>{2});
    CHECK(w.factors[0].value == aut("(x ; y + x^3)"));
    CHECK(w.tail == PolyAut::identity(kQ));

    VdkWord triv = vdk_factorize(aut("(2*x + 1 ; 3*y + x - 4)"));
    CHECK(triv.length() == 0);
    CHECK(triv.tail == aut("(2*x + 1 ; 3*y + x - 4)"));

    VdkWord quad = vdk_factorize(aut("(x + y^2 ; y)"));
    CHECK(quad.recompose() == aut("(x + y^2 ; y)"));
    CHECK(quad.type_seq().front() == 1); // needs an affine flip before the shear
}

TEST_CASE("factorization rejects non invertible maps") {
    CHECK_THROWS_WITH_AS(vdk_factorize(aut("(x^2 ; y)")),
                         doctest::Contains("NotAnAutomorphism"), Error);
    CHECK_THROWS_AS(vdk_factorize(aut("(x + y ; x + y + 1)")), Error); // singular affine part
    CHECK_THROWS_AS(vdk_factorize(aut("(x ; x*y)")), Error);
}

TEST_CASE("factorization round trips on random words") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
        for (int i = 0; i < 50; ++i) {
            PolyAut phi = tu::random_aut(f, static_cast<int>(tu::pick(1, 6)));
            VdkWord w = vdk_factorize(phi);
            CHECK(w.recompose() == phi);

            // alternating types, canonical factor shapes, tail in B
            std::vector<int> types = w.type_seq();
            long deg_product = 1;
            for (std::size_t k = 0; k < w.factors.size(); ++k) {
                if (k > 0) CHECK(types[k] != types[k - 1]);
                const VdkFactor& fac = w.factors[k];
                if (fac.kind == Membership::Affine) {
                    AffineAut a = AffineAut::from_poly(fac.value);
                    CHECK(a.tx.is_zero());
                    CHECK(a.ty.is_zero());
                    CHECK(a.lin == affine_coset_rep(ProjPoint(a.lin.b, a.lin.d)));
                } else {
                    ElementaryAut e = ElementaryAut::from_poly(fac.value);
                    CHECK(e.z1 == Scalar::one(f));
                    CHECK(e.z2 == Scalar::one(f));
                    CHECK(e.t0.is_zero());
                    CHECK(e.fx.valuation() >= 2);
                    deg_product *= e.fx.degree();
                }
            }
            CHECK(membership(w.tail) == Membership::InB);
            CHECK(degree(phi) == deg_product);

            // the canonical word is stable under refactorization
            VdkWord again = vdk_factorize(w.recompose());
            CHECK(again.type_seq() == types);

            // expanding phi . inv squares the degree, so the two-sided inverse
            // is verified pointwise; small words also get the exact expansion
            PolyAut inv = inverse(phi);
            CHECK(degree(inv) == degree(phi));
            for (long s = -2; s <= 2; ++s) {
                Scalar x = Scalar::from_int(s, f);
                Scalar y = Scalar::from_int(1 - 2 * s, f);
                Scalar u = phi.f().eval(x, y), v = phi.g().eval(x, y);
                CHECK(inv.f().eval(u, v) == x);
                CHECK(inv.g().eval(u, v) == y);
                Scalar p = inv.f().eval(x, y), q = inv.g().eval(x, y);
                CHECK(phi.f().eval(p, q) == x);
                CHECK(phi.g().eval(p, q) == y);
            }
            if (degree(phi) <= 8) {
                CHECK(compose(phi, inv) == PolyAut::identity(f));
                CHECK(compose(inv, phi) == PolyAut::identity(f));
            }
        }
    }
}

TEST_CASE("maps print and reparse") {
    for (int i = 0; i < 20; ++i) {
        PolyAut phi = tu::random_aut(kQ, 3);
        CHECK(PolyAut::from_text(phi.str(), kQ) == phi);
    }
    CHECK(aut("(x ; y + x^2)").str() == "(x ; x^2 + y)");
}

} // TEST_SUITE
