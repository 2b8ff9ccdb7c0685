#pragma once

#include "cosetbound/bounds.hpp"
#include "cosetbound/rational_function.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cosetbound {

// Finitely generated group of n-tuples over Q(z)*, given modulo constants by
// r generator tuples in factored form.
struct GroupSpec {
    int n = 0;
    std::vector<std::vector<FactoredRationalFunction>> generators; // r entries of n coordinates

    std::size_t r() const { return generators.size(); }
};

// Validates shape: n >= 2, r >= 1, every generator has n coordinates.
// (Generator coordinates are nonzero by construction of the factored form.)
void validate(const GroupSpec& g);

// Rank of the exponent lattice of the generators modulo constants. Factor
// polynomials are refined into a pairwise-coprime basis by repeated gcd
// splitting, so the claimed factors need not be irreducible; each generator
// becomes an integer row indexed by (basis polynomial, coordinate) pairs.
std::size_t group_rank(const GroupSpec& g);

// Integer combination prod_j gen_j^{k_j} that is a constant tuple, when the
// generators are dependent. Used for diagnostics.
std::optional<std::vector<long>> generator_dependency(const GroupSpec& g);

// The equation sum_i a_i x_i = 1 over the group, with a basepoint shift c
// such that every coefficient and generator coordinate is defined and nonzero
// at the origin after z -> z + c.
class EquationInstance {
public:
    static EquationInstance create(GroupSpec group, std::vector<RationalFunction> coefficients,
                                   int truncation);

    const GroupSpec& group() const { return group_; }
    const std::vector<RationalFunction>& coefficients() const { return coefficients_; }
    const Rational& basepoint() const { return basepoint_; }
    int truncation() const { return truncation_; }
    int n() const { return group_.n; }
    std::size_t r() const { return group_.r(); }

private:
    EquationInstance() = default;

    GroupSpec group_;
    std::vector<RationalFunction> coefficients_;
    Rational basepoint_;
    int truncation_ = 0;
};

// True when the exponent lattice has full rank r, i.e. no nontrivial integer
// combination of the generators is a constant tuple.
bool independent_generators(const EquationInstance& inst);

// Positive-dimensional set of constant tuples solving one exponent vector.
struct AffineFamily {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> basis;
};

// One solution (or solution family) x_i = xi_i * m_i(w), with
// m_i(w) = prod_j gen_{j,i}^{w_j}. The stored xi is a representative member
// with every coordinate nonzero; family data is present when the constant
// tuples form an affine family of positive dimension.
struct SolutionRecord {
    std::vector<long long> exponents;
    std::vector<Rational> xi;
    std::optional<AffineFamily> family;
    std::vector<RationalFunction> x;
};

// Sweeps every integer exponent vector w in [-box, box]^r in lexicographic
// order and solves sum_i xi_i a_i m_i(w) = 1 for constants xi by exact
// coefficient matching. Emits one record per w whose solution set contains a
// member with all coordinates nonzero. Requires independent generators.
// Records are re-verified against the equation before being returned.
std::vector<SolutionRecord> enumerate_solutions(const EquationInstance& inst, long box,
                                                int threads = 1);

// No proper nonempty subsum sum_{i in I} a_i x_i vanishes; for a family,
// no subsum vanishes identically on the family.
bool is_nondegenerate(const SolutionRecord& sol, const EquationInstance& inst);

// Partition by the coset test: x ~ y iff x_i / y_i is constant for every i.
// Returns groups of indices into the input, ordered by first member.
std::vector<std::vector<std::size_t>> classify_cosets(const std::vector<SolutionRecord>& sols);

struct CosetReport {
    struct Entry {
        std::vector<long long> exponents;
        SolutionRecord representative;
        bool nondegenerate = false;
    };
    std::vector<Entry> cosets;
    std::size_t rank = 0;
    mpz_class bound;
    bool within_bound = false;
    long box = 0;
    std::string instance_digest;

    std::size_t nondegenerate_count() const;
};

// Full pipeline: enumerate, filter, classify, and compare the count of
// non-degenerate cosets against coset_count_bound(n, rank). A within_bound
// violation can only come from an implementation bug, never from bad input.
CosetReport verify_bound(const EquationInstance& inst, long box, int threads = 1);

} // namespace cosetbound
