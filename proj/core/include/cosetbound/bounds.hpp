#pragma once

#include <gmpxx.h>

#include <vector>

namespace cosetbound {

// Closed-form counting bounds for the unit equation a_1 x_1 + ... + a_n x_n = 1
// over a group of rank r modulo constants. All results are exact big integers;
// preconditions are n >= 2 (h >= 2) and r >= 1, violations throw
// std::domain_error.

// Upper bound on the number of (k*)^n-cosets containing the non-degenerate
// solutions: sum_{i=2}^{n+1} C(i,2)^r - n + 1.
mpz_class coset_count_bound(int n, int r);

// Upper bound on the number of exponent vectors admitting a full-support
// vanishing relation with no vanishing proper subsum, for h terms:
// sum_{p=2}^{h} C(p,2)^r - h + 2.
mpz_class relation_set_bound(int h, int r);

// Upper bound on the number of proper linear subspaces covering all solutions
// with (a_1 x_1, ..., a_n x_n) outside (k*)^n:
// sum_{i=2}^{n+1} C(i,2)^r + 2^n - 2n - 1.
mpz_class subspace_count_bound(int n, int r);

// All index subsets I of {1..n} with 2 <= |I| <= n-1, in lexicographic order
// of their ascending element lists. Exactly 2^n - n - 2 subsets; each one
// carries a potentially vanishing proper subsum with at least two terms.
std::vector<std::vector<int>> degenerate_index_subsets(int n);

// 2^n - n - 2 without materializing the subsets.
mpz_class degenerate_subset_count(int n);

} // namespace cosetbound
