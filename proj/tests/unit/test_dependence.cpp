#include "cosetbound/dependence.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cosetbound;
using testutil::q;
using testutil::rf;
using testutil::series;

namespace {

// a = (1, 1, -1), A = ((1+z), (1-z), (1)): probe functions are
// (1+z)^u, (1-z)^u, -1.
SystemInstance toy_system(int order = 24) {
    return SystemInstance::from_rational(
        {rf({1}), rf({1}), rf({-1})},
        {{rf({1, 1})}, {rf({1, -1})}, {rf({1})}},
        order);
}

ExponentVector u1(const Rational& u) {
    return ExponentVector({u});
}

std::vector<std::size_t> idx(std::initializer_list<std::size_t> list) {
    return {list};
}

bool relation_holds(const std::vector<RationalFunction>& fs, const RelationVector& rel) {
    RationalFunction total;
    for (std::size_t i = 0; i < fs.size(); ++i) total += RationalFunction(rel.xi[i]) * fs[i];
    if (!total.is_zero()) return false;
    // every proper nonempty subsum stays nonzero
    const std::uint32_t full = (1U << fs.size()) - 1U;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        RationalFunction s;
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (mask & (1U << i)) s += RationalFunction(rel.xi[i]) * fs[i];
        if (s.is_zero()) return false;
    }
    return true;
}

} // namespace

TEST_CASE("wronskian determinants") {
    CHECK(wronskian({series({1, 0, 0}), series({0, 1, 0})}) == series({1, 0}));
    CHECK(wronskian({series({1, 1, 0}), series({2, 2, 0})}) == series({0, 0}));
    CHECK(wronskian({series({1, 1, 0}), series({1, -1, 0})}) == series({-2, 0}));
    CHECK(wronskian({series({5, 1})}) == series({5, 1}));
    CHECK_THROWS_AS(wronskian({series({1}), series({1})}), std::invalid_argument);
}

TEST_CASE("exact rank of rational function families") {
    CHECK(rank_exact({rf({1, 1}), rf({2, 2})}) == 1);
    CHECK(rank_exact({rf({1}), rf({0, 1}), rf({1, 1})}) == 2);
    CHECK(rank_exact({rf({1}, {1, -1}), rf({1}, {1, 1}), rf({1})}) == 3);
    CHECK(rank_exact({}) == 0);
    CHECK(rank_exact({RationalFunction()}) == 0);
    // duplicates do not raise the rank
    CHECK(rank_exact({rf({1, 1}), rf({1, 1}), rf({1, 1})}) == 1);
}

TEST_CASE("series rank with and without certification") {
    const auto monomials = rank_series({series({1, 0, 0, 0}), series({0, 1, 0, 0}),
                                        series({0, 0, 1, 0})},
                                       1);
    CHECK(monomials.rank == 3);
    CHECK(monomials.certified);

    const auto proportional = rank_series({series({1, 1, 0}), series({2, 2, 0})});
    CHECK(proportional.rank == 1);
    CHECK_FALSE(proportional.certified); // no degree bound supplied

    const std::vector<RationalFunction> fs = {rf({1}, {1, -1}), rf({1}, {1, 1}), rf({1})};
    std::vector<TruncatedSeries> expansions;
    for (const auto& f : fs) expansions.push_back(expand(f, 32));
    const auto certified = rank_series(expansions, wronskian_degree_bound(fs));
    CHECK(certified.rank == rank_exact(fs));
    CHECK(certified.rank == 3);
    CHECK(certified.certified);
}

TEST_CASE("wronskian degree bound is h^2 (d+1)") {
    CHECK(wronskian_degree_bound({rf({1, 1}), rf({1}, {1, -1})}) == 8);
    CHECK(wronskian_degree_bound({}) == 0);
}

TEST_CASE("wronskian rank agrees with exact rank on random families") {
    testutil::Rng rng(79);
    for (int round = 0; round < 40; ++round) {
        std::vector<RationalFunction> fs;
        const int count = static_cast<int>(rng.integer(2, 4));
        const Polynomial den = [&] {
            while (true) {
                Polynomial p = rng.nonzero_polynomial(2, 3);
                if (!p.coeff(0).is_zero()) return p;
            }
        }();
        for (int i = 0; i < count; ++i) fs.emplace_back(rng.nonzero_polynomial(2, 3), den);
        if (round % 3 == 0 && fs.size() >= 3) fs[2] = fs[0] + fs[1]; // planted dependence
        const long bound = wronskian_degree_bound(fs);
        const int order = static_cast<int>(bound) + static_cast<int>(fs.size()) + 4;
        std::vector<TruncatedSeries> expansions;
        for (const auto& f : fs) expansions.push_back(expand(f, order));
        const auto sr = rank_series(expansions, bound);
        CHECK(sr.certified);
        CHECK(sr.rank == rank_exact(fs));
    }
}

TEST_CASE("membership in V(I, t) via probe ranks") {
    const SystemInstance sys = toy_system();
    CHECK(rank_at_most(sys, u1(q(1)), idx({0, 1, 2}), 2));
    CHECK_FALSE(rank_at_most(sys, u1(q(1)), idx({0, 1, 2}), 1));
    CHECK(rank_at_most(sys, u1(q(1)), idx({0}), 1));
    CHECK(rank_at_most(sys, u1(q(5, 2)), idx({1}), 1));
    CHECK_THROWS_AS(rank_at_most(sys, u1(q(1)), {}, 1), std::invalid_argument);

    // monotone in t, and trivially true once t >= |I|
    for (std::size_t t = 1; t <= 3; ++t) {
        if (rank_at_most(sys, u1(q(2)), idx({0, 1, 2}), t))
            CHECK(rank_at_most(sys, u1(q(2)), idx({0, 1, 2}), t + 1));
    }
    CHECK(rank_at_most(sys, u1(q(7, 3)), idx({0, 1, 2}), 3));
}

TEST_CASE("relation membership on the toy system") {
    const SystemInstance sys = toy_system();
    CHECK(admits_nondegenerate_relation(sys, u1(q(1))));
    CHECK(admits_nondegenerate_relation(sys, u1(q(0))));
    CHECK_FALSE(admits_nondegenerate_relation(sys, u1(q(2))));
    CHECK_FALSE(admits_nondegenerate_relation(sys, u1(q(1, 2))));
    CHECK_FALSE(admits_nondegenerate_relation(sys, u1(q(-1))));
}

TEST_CASE("subset rank subadditivity on probes") {
    const SystemInstance sys = toy_system();
    for (const Rational& u : {q(0), q(1), q(2), q(1, 2), q(-3, 2)}) {
        const std::size_t total = probe_rank(sys, u1(u), idx({0, 1, 2}));
        for (const auto& split : {std::pair{idx({0}), idx({1, 2})},
                                  std::pair{idx({1}), idx({0, 2})},
                                  std::pair{idx({2}), idx({0, 1})}}) {
            CHECK(probe_rank(sys, u1(u), split.first) + probe_rank(sys, u1(u), split.second) >=
                  total);
        }
    }
}

TEST_CASE("constructive relations match the spec examples") {
    const auto rel = find_nondegenerate_relation({rf({1, 1}), rf({1, -1}), rf({-1})});
    REQUIRE(rel.has_value());
    CHECK(rel->xi == std::vector<Rational>{q(1), q(1), q(2)});

    CHECK_FALSE(find_nondegenerate_relation({rf({1}), rf({0, 1}), rf({0, 0, 1})}).has_value());
    CHECK_FALSE(find_nondegenerate_relation({rf({1, 1}), rf({2, 2}), rf({0, 1})}).has_value());
}

TEST_CASE("series route finds the same toy relation") {
    const auto rel = find_nondegenerate_relation(
        std::vector<TruncatedSeries>{series({1, 1, 0, 0}), series({1, -1, 0, 0}),
                                     series({-1, 0, 0, 0})});
    REQUIRE(rel.has_value());
    CHECK(rel->xi == std::vector<Rational>{q(1), q(1), q(2)});
}

TEST_CASE("series route membership at fractional exponents") {
    // duplicate tuples force relations at every exponent, integral or not
    const SystemInstance sys = SystemInstance::from_rational(
        {rf({1}), rf({1}), rf({-2})},
        {{rf({1, 1})}, {rf({1, 1})}, {rf({1, 1})}},
        16);
    const ExponentVector u({q(1, 2)});
    CHECK(admits_nondegenerate_relation(sys, u));

    const std::vector<TruncatedSeries> probes = sys.probe_series(u, idx({0, 1, 2}));
    const auto rel = find_nondegenerate_relation(probes);
    REQUIRE(rel.has_value());
    TruncatedSeries total = TruncatedSeries::zero(16);
    for (std::size_t i = 0; i < probes.size(); ++i)
        total = total + probes[i].scaled(rel->xi[i]);
    CHECK(total.is_zero());
}

TEST_CASE("rank criterion and constructive search agree on random systems") {
    testutil::Rng rng(83);
    int true_verdicts = 0;
    for (int round = 0; round < 30; ++round) {
        const std::size_t h = static_cast<std::size_t>(rng.integer(2, 4));
        const std::size_t r = static_cast<std::size_t>(rng.integer(1, 2));
        std::vector<RationalFunction> a;
        std::vector<std::vector<RationalFunction>> alphas;
        for (std::size_t i = 0; i < h; ++i) {
            a.push_back(rng.unit_rational_function(2, 3));
            std::vector<RationalFunction> tuple;
            for (std::size_t j = 0; j < r; ++j) tuple.push_back(rng.unit_rational_function(1, 2));
            alphas.push_back(std::move(tuple));
        }
        // plant shared tuples and a summed coefficient to reach true verdicts
        if (round % 2 == 0 && h >= 3) {
            alphas[1] = alphas[0];
            alphas[2] = alphas[0];
            a[2] = a[0] + a[1];
            if (a[2].is_zero() || a[2].eval(Rational(0)).is_zero()) continue;
        }
        const SystemInstance sys = SystemInstance::from_rational(a, alphas, 24);

        std::vector<long long> w(r);
        for (std::size_t j = 0; j < r; ++j) w[j] = rng.integer(-3, 3);
        const ExponentVector u = ExponentVector::integers(w);

        std::vector<std::size_t> all(h);
        for (std::size_t i = 0; i < h; ++i) all[i] = i;
        const std::vector<RationalFunction> probes = sys.probe_rational(u, all);

        const bool member = admits_nondegenerate_relation(sys, u);
        const auto rel = find_nondegenerate_relation(probes);
        CHECK(member == rel.has_value());
        if (rel) {
            CHECK(relation_holds(probes, *rel));
            ++true_verdicts;
        }
    }
    CHECK(true_verdicts > 0);
}
