#include "cosetbound/dependence.hpp"
#include "cosetbound/search.hpp"
#include "cosetbound/series.hpp"
#include "cosetbound/unit_power.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

using namespace cosetbound;

TruncatedSeries random_series(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(order));
    c[0] = Rational(1);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = Rational(num(rng), den(rng));
    return TruncatedSeries(std::move(c));
}

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (const long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

void BM_SeriesMul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const int order = static_cast<int>(state.range(0));
    const TruncatedSeries a = random_series(rng, order);
    const TruncatedSeries b = random_series(rng, order);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(32)->Arg(64)->Arg(128);

void BM_SeriesPow(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const OnePlusSeries g{random_series(rng, static_cast<int>(state.range(0)))};
    const Rational u(3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(pow(g, u));
}
BENCHMARK(BM_SeriesPow)->Arg(16)->Arg(32);

void BM_RankExact(benchmark::State& state) {
    const std::vector<RationalFunction> fs = {
        {poly({1}), poly({1, -1})}, {poly({1}), poly({1, 1})},
        {poly({0, 1}), poly({1, 0, 1})}, {poly({1, 2, 1}), poly({1})}};
    for (auto _ : state) benchmark::DoNotOptimize(rank_exact(fs));
}
BENCHMARK(BM_RankExact);

void BM_RankSeries(benchmark::State& state) {
    const std::vector<RationalFunction> fs = {
        {poly({1}), poly({1, -1})}, {poly({1}), poly({1, 1})},
        {poly({0, 1}), poly({1, 0, 1})}, {poly({1, 2, 1}), poly({1})}};
    const long bound = wronskian_degree_bound(fs);
    std::vector<TruncatedSeries> expansions;
    for (const auto& f : fs) expansions.push_back(expand(f, static_cast<int>(bound) + 8));
    for (auto _ : state) benchmark::DoNotOptimize(rank_series(expansions, bound));
}
BENCHMARK(BM_RankSeries);

void BM_ClassicSweep(benchmark::State& state) {
    const FactoredRationalFunction z{Rational(1), {{poly({0, 1}), 1}}};
    const FactoredRationalFunction omz{Rational(-1), {{poly({-1, 1}), 1}}};
    const FactoredRationalFunction one{Rational(1), {}};
    GroupSpec group;
    group.n = 2;
    group.generators = {{z, one}, {omz, one}, {one, z}, {one, omz}};
    const EquationInstance inst =
        EquationInstance::create(group, {RationalFunction(Rational(1)), RationalFunction(Rational(1))}, 16);
    const long box = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(verify_bound(inst, box));
}
BENCHMARK(BM_ClassicSweep)->Arg(1)->Arg(2);

} // namespace

BENCHMARK_MAIN();
