#include "cosetbound/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosetbound {

namespace {

mpz_class pow_mpz(const mpz_class& base, int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// sum_{i=2}^{top} C(i,2)^r
mpz_class pair_power_sum(int top, int r) {
    mpz_class sum = 0;
    for (int i = 2; i <= top; ++i) {
        const mpz_class pairs = mpz_class(i) * (i - 1) / 2;
        sum += pow_mpz(pairs, r);
    }
    return sum;
}

void check(int n, int r, int n_min) {
    if (n < n_min || r < 1) throw std::domain_error("bound outside its domain");
}

} // namespace

mpz_class coset_count_bound(int n, int r) {
    check(n, r, 2);
    return pair_power_sum(n + 1, r) - n + 1;
}

mpz_class relation_set_bound(int h, int r) {
    check(h, r, 2);
    return pair_power_sum(h, r) - h + 2;
}

mpz_class subspace_count_bound(int n, int r) {
    check(n, r, 2);
    return pair_power_sum(n + 1, r) + pow_mpz(2, n) - 2 * n - 1;
}

std::vector<std::vector<int>> degenerate_index_subsets(int n) {
    if (n < 2) throw std::domain_error("bound outside its domain");
    if (n > 24) throw std::domain_error("subset enumeration limited to n <= 24");
    std::vector<std::vector<int>> subsets;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        const int size = __builtin_popcountl(mask);
        if (size < 2 || size > n - 1) continue;
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1UL << i)) subset.push_back(i + 1);
        subsets.push_back(std::move(subset));
    }
    std::sort(subsets.begin(), subsets.end());
    return subsets;
}

mpz_class degenerate_subset_count(int n) {
    if (n < 2) throw std::domain_error("bound outside its domain");
    return pow_mpz(2, n) - n - 2;
}

} // namespace cosetbound
