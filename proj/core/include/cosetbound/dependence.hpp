#pragma once

#include "cosetbound/rational_function.hpp"
#include "cosetbound/series.hpp"
#include "cosetbound/unit_power.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cosetbound {

// Wronskian determinant det( d^i/dz^i fs[j] ), i = 0..m-1, computed exactly
// through order M-(m-1) where M is the common order. Requires m >= 1 and
// common order >= m.
TruncatedSeries wronskian(const std::vector<TruncatedSeries>& fs);

// Dimension over Q of the span of the given functions, by exact row
// reduction of numerator coefficients over a common denominator.
std::size_t rank_exact(const std::vector<RationalFunction>& fs);

struct SeriesRank {
    std::size_t rank = 0;
    bool certified = false;
};

// Wronskian-based rank at truncation: the largest m for which some m-subset
// has a Wronskian with a nonzero coefficient. A nonzero Wronskian is an exact
// independence certificate. Vanishing ones certify dependence only when a
// degree bound D for the Wronskian numerators is supplied and every vanishing
// Wronskian was computed through at least D+1 coefficients; `certified`
// reports whether that held for every size above the returned rank.
SeriesRank rank_series(const std::vector<TruncatedSeries>& fs,
                       std::optional<long> degree_bound = std::nullopt);

// Conservative numerator-degree bound h^2 (d+1) for Wronskians of any subset
// of the given functions, d = max degree of any numerator or denominator.
long wronskian_degree_bound(const std::vector<RationalFunction>& fs);

// The h functions a_i paired with tuples A_i of 1-units, as truncated series,
// with optional exact rational-function backing. Probing at an exponent
// vector u yields the family a_i * A_i^u.
class SystemInstance {
public:
    struct RationalForms {
        std::vector<RationalFunction> a;                   // h entries
        std::vector<std::vector<RationalFunction>> alphas; // h x r, value 1 at origin
    };

    // From exact data: a_i nonzero at the origin, alpha_ij defined and nonzero
    // at the origin (each is scaled to value 1 there). Requires h >= 2, r >= 1.
    static SystemInstance from_rational(const std::vector<RationalFunction>& a,
                                        const std::vector<std::vector<RationalFunction>>& alphas,
                                        int order);

    // Series-only instance; no exact backing, so every probe runs through the
    // truncated Wronskian backend.
    static SystemInstance from_series(std::vector<TruncatedSeries> a,
                                      std::vector<SeriesTuple> tuples);

    std::size_t h() const { return a_.size(); }
    std::size_t tuple_length() const { return tuples_.front().size(); }
    int order() const { return a_.front().order(); }

    const TruncatedSeries& a(std::size_t i) const { return a_[i]; }
    const SeriesTuple& tuple(std::size_t i) const { return tuples_[i]; }
    const std::optional<RationalForms>& rational_forms() const { return rf_; }

    // a_i * A_i^u for i in the index set (0-based), as truncated series.
    std::vector<TruncatedSeries> probe_series(const ExponentVector& u,
                                              const std::vector<std::size_t>& index_set) const;

    // Exact probe family; requires rational forms and integral u.
    std::vector<RationalFunction> probe_rational(const ExponentVector& u,
                                                 const std::vector<std::size_t>& index_set) const;

private:
    SystemInstance(std::vector<TruncatedSeries> a, std::vector<SeriesTuple> tuples,
                   std::optional<RationalForms> rf);

    std::vector<TruncatedSeries> a_;
    std::vector<SeriesTuple> tuples_;
    std::optional<RationalForms> rf_;
};

// Rank of { a_i A_i^u : i in index_set }: exact when rational forms are
// present and u is integral, Wronskian-at-truncation otherwise.
std::size_t probe_rank(const SystemInstance& sys, const ExponentVector& u,
                       const std::vector<std::size_t>& index_set);

// Membership in V(index_set, t): probe_rank <= t. index_set must be nonempty.
bool rank_at_most(const SystemInstance& sys, const ExponentVector& u,
                  const std::vector<std::size_t>& index_set, std::size_t t);

// Whether u admits a full-support vanishing relation with no vanishing proper
// subsum, decided by the rank criterion: for every proper nonempty split
// I | I^c of {0..h-1}, rank_I + rank_{I^c} > rank_total.
bool admits_nondegenerate_relation(const SystemInstance& sys, const ExponentVector& u);

// Coefficients xi of a vanishing relation sum xi_i f_i = 0 whose proper
// subsums all stay nonzero; normalized so the first nonzero entry is 1.
struct RelationVector {
    std::vector<Rational> xi;
};

// Constructive counterpart of admits_nondegenerate_relation: computes a
// nullspace basis b_1..b_m and sweeps candidates xi_t = sum_j t^{j-1} b_j for
// t = 1 .. (m-1)(2^h - 2) + 1. Every proper subsum is a polynomial of degree
// <= m-1 in t, so either it vanishes identically on the nullspace (no valid
// relation exists) or some t in range avoids all 2^h - 2 of them.
std::optional<RelationVector> find_nondegenerate_relation(const std::vector<RationalFunction>& fs);

// Same sweep against truncated coefficient columns; vanishing means
// "vanishing through the common truncation order".
std::optional<RelationVector> find_nondegenerate_relation(const std::vector<TruncatedSeries>& fs);

} // namespace cosetbound
