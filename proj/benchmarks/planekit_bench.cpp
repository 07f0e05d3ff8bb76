#include <benchmark/benchmark.h>

#include "planekit/freefactor.hpp"
#include "planekit/linmap.hpp"
#include "planekit/matpoly.hpp"

namespace {

using namespace planekit;

const FieldSpec kQ = FieldSpec::rationals();

PolyAut sample_general_aut() {
    UniPoly t = UniPoly::t(kQ);
    PolyAut swap = AffineAut(Mat2::from_rows(0, 1, 1, 0, kQ), Scalar::zero(kQ),
                             Scalar::one(kQ))
                       .to_poly();
    PolyAut phi = ElementaryAut::shear(t.pow(2) + t.scaled(Scalar::from_int(2, kQ))).to_poly();
    phi = compose(swap, phi);
    phi = compose(ElementaryAut::shear(t.pow(3)).to_poly(), phi);
    phi = compose(swap, phi);
    return compose(ElementaryAut::shear(t.pow(2)).to_poly(), phi);
}

TauWord sample_tau_word() {
    UniPoly t = UniPoly::t(kQ);
    TauWord w;
    w.factors.emplace_back(ProjPoint::from_ints(0, 1, kQ), t.pow(2));
    w.factors.emplace_back(ProjPoint::from_ints(1, 0, kQ), t.pow(3) + t.pow(2));
    w.factors.emplace_back(ProjPoint::from_ints(1, 1, kQ), t.pow(2).scaled(Scalar::from_int(-1, kQ)));
    return w;
}

EWord sample_e_word() {
    UniPoly t = UniPoly::t(kQ);
    EWord w;
    w.factors.emplace_back(ProjPoint::from_ints(0, 1, kQ), t.pow(2) + UniPoly::one(kQ));
    w.factors.emplace_back(ProjPoint::from_ints(1, 2, kQ), t);
    w.factors.emplace_back(ProjPoint::from_ints(1, 0, kQ), t.pow(2));
    w.factors.emplace_back(ProjPoint::from_ints(1, 1, kQ), UniPoly::one(kQ));
    return w;
}

void BM_Compose(benchmark::State& state) {
    // appending one factor to a long word is the inner step of every
    // factorization and recomposition loop
    PolyAut phi = sample_general_aut();
    PolyAut e = ElementaryAut::shear(UniPoly::t(kQ).pow(2)).to_poly();
    for (auto _ : state) benchmark::DoNotOptimize(compose(phi, e));
}
BENCHMARK(BM_Compose);

void BM_VdkFactorize(benchmark::State& state) {
    PolyAut phi = sample_general_aut();
    for (auto _ : state) benchmark::DoNotOptimize(vdk_factorize(phi));
}
BENCHMARK(BM_VdkFactorize);

void BM_FreeFactorize(benchmark::State& state) {
    PolyAut phi = sample_tau_word().recompose(kQ);
    for (auto _ : state) benchmark::DoNotOptimize(free_factorize(phi));
}
BENCHMARK(BM_FreeFactorize);

void BM_EGenerationFactorize(benchmark::State& state) {
    MatPoly2 g = sample_e_word().recompose(kQ);
    for (auto _ : state) benchmark::DoNotOptimize(e_generation_factorize(g));
}
BENCHMARK(BM_EGenerationFactorize);

void BM_PsiRoundtrip(benchmark::State& state) {
    PolyAut phi = sample_tau_word().recompose(kQ);
    for (auto _ : state) benchmark::DoNotOptimize(psi_inv(psi(phi)));
}
BENCHMARK(BM_PsiRoundtrip);

void BM_RhoSection(benchmark::State& state) {
    Mat2 u = Mat2::from_rows(1, 1, 0, 1, kQ);
    SubgroupSpec s({u}, kQ);
    OrbitSection section = cyclic_exact_section(u);
    PolyAut phi = compose(AffineAut::linear(u).to_poly(), sample_tau_word().recompose(kQ));
    for (auto _ : state) benchmark::DoNotOptimize(rho_S(phi, s, section));
}
BENCHMARK(BM_RhoSection);

} // namespace

BENCHMARK_MAIN();
