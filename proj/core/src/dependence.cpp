#include "cosetbound/dependence.hpp"

#include "cosetbound/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace cosetbound {

namespace {

constexpr std::size_t kMaxFamily = 16; // subset enumeration guard

// Determinant of a square series matrix by Laplace expansion memoized on the
// set of remaining columns; the row is determined by the popcount.
class SeriesDet {
public:
    SeriesDet(const std::vector<std::vector<TruncatedSeries>>& m, int order)
        : m_(m), order_(order) {}

    TruncatedSeries run() {
        const std::uint32_t full = (1U << m_.size()) - 1U;
        return minor_det(full);
    }

private:
    TruncatedSeries minor_det(std::uint32_t mask) {
        if (mask == 0) return TruncatedSeries::one(order_);
        const auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        const std::size_t row = m_.size() - static_cast<std::size_t>(__builtin_popcount(mask));
        TruncatedSeries det = TruncatedSeries::zero(order_);
        int sign = 1;
        for (std::size_t col = 0; col < m_.size(); ++col) {
            const std::uint32_t bit = 1U << col;
            if (!(mask & bit)) continue;
            const TruncatedSeries term = m_[row][col].truncated(order_) * minor_det(mask & ~bit);
            det = sign > 0 ? det + term : det - term;
            sign = -sign;
        }
        memo_.emplace(mask, det);
        return det;
    }

    const std::vector<std::vector<TruncatedSeries>>& m_;
    int order_;
    std::map<std::uint32_t, TruncatedSeries> memo_;
};

TruncatedSeries wronskian_at(const std::vector<TruncatedSeries>& fs, int target_order) {
    const std::size_t m = fs.size();
    std::vector<std::vector<TruncatedSeries>> rows;
    rows.reserve(m);
    rows.push_back(fs);
    for (std::size_t i = 1; i < m; ++i) {
        std::vector<TruncatedSeries> row;
        row.reserve(m);
        for (const auto& f : rows.back()) row.push_back(f.derivative());
        rows.push_back(std::move(row));
    }
    return SeriesDet(rows, target_order).run();
}

} // namespace

TruncatedSeries wronskian(const std::vector<TruncatedSeries>& fs) {
    if (fs.empty()) throw std::invalid_argument("wronskian of an empty family");
    if (fs.size() > kMaxFamily) throw std::invalid_argument("family too large");
    int order = fs.front().order();
    for (const auto& f : fs) order = std::min(order, f.order());
    const int m = static_cast<int>(fs.size());
    if (order < m) throw std::invalid_argument("wronskian needs common order >= family size");
    return wronskian_at(fs, order - (m - 1));
}

std::size_t rank_exact(const std::vector<RationalFunction>& fs) {
    if (fs.empty()) return 0;
    Polynomial common_den(Rational(1));
    for (const auto& f : fs) common_den = lcm(common_den, f.den());
    std::vector<std::vector<Rational>> columns;
    columns.reserve(fs.size());
    std::size_t height = 0;
    std::vector<Polynomial> nums;
    nums.reserve(fs.size());
    for (const auto& f : fs) {
        Polynomial n = f.num() * (common_den / f.den());
        height = std::max(height, static_cast<std::size_t>(n.degree() + 1));
        nums.push_back(std::move(n));
    }
    height = std::max<std::size_t>(height, 1);
    for (const auto& n : nums) {
        std::vector<Rational> col(height);
        for (std::size_t i = 0; i < height; ++i) col[i] = n.coeff(i);
        columns.push_back(std::move(col));
    }
    return QMatrix::from_columns(columns).rank();
}

SeriesRank rank_series(const std::vector<TruncatedSeries>& fs, std::optional<long> degree_bound) {
    if (fs.empty()) return {0, degree_bound.has_value()};
    if (fs.size() > kMaxFamily) throw std::invalid_argument("family too large");
    const std::size_t h = fs.size();
    int order = fs.front().order();
    for (const auto& f : fs) order = std::min(order, f.order());

    // Sizes beyond the common order cannot be examined at all.
    const std::size_t m_max = std::min<std::size_t>(h, static_cast<std::size_t>(order));

    std::size_t rank = 0;
    for (std::size_t m = m_max; m >= 1 && rank == 0; --m) {
        const int target = order - static_cast<int>(m) + 1;
        // Cheap pre-pass at a short order catches independent families early;
        // only families that vanish there pay for the full-order determinant.
        const std::vector<int> stages =
            target > 8 ? std::vector<int>{8, target} : std::vector<int>{target};
        std::vector<std::size_t> subset(m);
        for (std::size_t i = 0; i < m; ++i) subset[i] = i;
        while (true) {
            std::vector<TruncatedSeries> family;
            family.reserve(m);
            for (const std::size_t i : subset) family.push_back(fs[i]);
            for (const int stage : stages) {
                std::vector<TruncatedSeries> capped;
                capped.reserve(m);
                const int needed = stage + static_cast<int>(m) - 1;
                for (const auto& f : family) capped.push_back(f.truncated(std::min(f.order(), needed)));
                if (!wronskian_at(capped, stage).is_zero()) {
                    rank = m;
                    break;
                }
                if (stage == target) break; // vanished at full order too
            }
            if (rank != 0) break;
            // next m-subset in lexicographic order
            std::size_t k = m;
            while (k > 0 && subset[k - 1] == h - m + (k - 1)) --k;
            if (k == 0) break;
            ++subset[k - 1];
            for (std::size_t i = k; i < m; ++i) subset[i] = subset[i - 1] + 1;
        }
    }

    bool certified = degree_bound.has_value();
    if (certified && rank < h) {
        // Every size in (rank, h] must have been examined with at least D+1
        // coefficients: order - (m-1) >= D+1 for all m <= h.
        certified = m_max == h && order - (static_cast<int>(h) - 1) >= *degree_bound + 1;
    }
    return {rank, certified};
}

long wronskian_degree_bound(const std::vector<RationalFunction>& fs) {
    const long h = static_cast<long>(fs.size());
    long d = 0;
    for (const auto& f : fs) d = std::max(d, f.degree());
    return h * h * (d + 1);
}

SystemInstance::SystemInstance(std::vector<TruncatedSeries> a, std::vector<SeriesTuple> tuples,
                               std::optional<RationalForms> rf)
    : a_(std::move(a)), tuples_(std::move(tuples)), rf_(std::move(rf)) {
    if (a_.size() < 2) throw std::invalid_argument("system needs h >= 2");
    if (tuples_.size() != a_.size()) throw std::invalid_argument("one tuple per function required");
    for (const auto& f : a_) {
        if (f.order() != a_.front().order())
            throw std::invalid_argument("system series must share one order");
        if (f.at_origin().is_zero())
            throw std::invalid_argument("system function divisible by z");
    }
    for (const auto& t : tuples_) {
        if (t.size() != tuples_.front().size())
            throw std::invalid_argument("system tuples must share one length");
        if (t.order() != a_.front().order())
            throw std::invalid_argument("system series must share one order");
    }
}

SystemInstance SystemInstance::from_rational(const std::vector<RationalFunction>& a,
                                             const std::vector<std::vector<RationalFunction>>& alphas,
                                             int order) {
    if (a.size() != alphas.size()) throw std::invalid_argument("one tuple per function required");
    RationalForms rf;
    rf.a = a;
    std::vector<TruncatedSeries> a_series;
    std::vector<SeriesTuple> tuples;
    a_series.reserve(a.size());
    tuples.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a_series.push_back(expand(a[i], order));
        std::vector<RationalFunction> normalized;
        std::vector<OnePlusSeries> entries;
        normalized.reserve(alphas[i].size());
        entries.reserve(alphas[i].size());
        for (const auto& alpha : alphas[i]) {
            const Rational at0 = alpha.eval(Rational(0));
            if (at0.is_zero()) throw std::invalid_argument("tuple entry vanishing at the origin");
            // Scaling to value 1 at the origin moves the entry into 1+zQ[[z]]
            // without changing any rank or relation verdict.
            const RationalFunction unit = alpha * RationalFunction(at0.inverse());
            normalized.push_back(unit);
            entries.emplace_back(expand(unit, order));
        }
        rf.alphas.push_back(std::move(normalized));
        tuples.emplace_back(std::move(entries));
    }
    return {std::move(a_series), std::move(tuples), std::move(rf)};
}

SystemInstance SystemInstance::from_series(std::vector<TruncatedSeries> a,
                                           std::vector<SeriesTuple> tuples) {
    return {std::move(a), std::move(tuples), std::nullopt};
}

std::vector<TruncatedSeries> SystemInstance::probe_series(
    const ExponentVector& u, const std::vector<std::size_t>& index_set) const {
    std::vector<TruncatedSeries> family;
    family.reserve(index_set.size());
    for (const std::size_t i : index_set)
        family.push_back(a_[i] * pow(tuples_[i], u).series());
    return family;
}

std::vector<RationalFunction> SystemInstance::probe_rational(
    const ExponentVector& u, const std::vector<std::size_t>& index_set) const {
    if (!rf_) throw std::logic_error("no rational forms available");
    if (!u.is_integral()) throw std::logic_error("rational probe needs integral exponents");
    std::vector<RationalFunction> family;
    family.reserve(index_set.size());
    for (const std::size_t i : index_set) {
        RationalFunction g = rf_->a[i];
        for (std::size_t j = 0; j < u.size(); ++j)
            g *= rf_->alphas[i][j].pow(u.component(j).to_long());
        family.push_back(std::move(g));
    }
    return family;
}

std::size_t probe_rank(const SystemInstance& sys, const ExponentVector& u,
                       const std::vector<std::size_t>& index_set) {
    if (u.size() != sys.tuple_length())
        throw std::invalid_argument("exponent vector length does not match system");
    if (sys.rational_forms() && u.is_integral())
        return rank_exact(sys.probe_rational(u, index_set));
    return rank_series(sys.probe_series(u, index_set)).rank;
}

bool rank_at_most(const SystemInstance& sys, const ExponentVector& u,
                  const std::vector<std::size_t>& index_set, std::size_t t) {
    if (index_set.empty()) throw std::invalid_argument("index set must be nonempty");
    if (t >= index_set.size()) return true; // rank cannot exceed the family size
    return probe_rank(sys, u, index_set) <= t;
}

bool admits_nondegenerate_relation(const SystemInstance& sys, const ExponentVector& u) {
    const std::size_t h = sys.h();
    if (h > kMaxFamily) throw std::invalid_argument("family too large");

    std::map<std::uint32_t, std::size_t> rank_of;
    const auto subset_rank = [&](std::uint32_t mask) {
        const auto it = rank_of.find(mask);
        if (it != rank_of.end()) return it->second;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < h; ++i)
            if (mask & (1U << i)) idx.push_back(i);
        const std::size_t r = probe_rank(sys, u, idx);
        rank_of.emplace(mask, r);
        return r;
    };

    const std::uint32_t full = (1U << h) - 1U;
    const std::size_t total = subset_rank(full);
    // Each unordered split is visited once: the side containing index 0.
    for (std::uint32_t mask = 1; mask < full; mask += 2) {
        if (subset_rank(mask) + subset_rank(full & ~mask) <= total) return false;
    }
    return true;
}

namespace {

// Shared sweep over coefficient columns: column j holds the coefficient
// vector of fs[j] in some common basis (exact or truncated).
std::optional<RelationVector> relation_from_columns(
    const std::vector<std::vector<Rational>>& columns) {
    const std::size_t h = columns.size();
    if (h < 2) throw std::invalid_argument("relation search needs h >= 2");
    if (h > 16) throw std::invalid_argument("family too large");

    const std::vector<std::vector<Rational>> basis = QMatrix::from_columns(columns).nullspace();
    if (basis.empty()) return std::nullopt;
    const std::size_t m = basis.size();
    const std::size_t height = columns.front().size();

    // subsums[j][I] = sum_{i in I} basis_j[i] * column_i, built incrementally:
    // each mask extends the already-computed mask without its lowest set bit.
    const std::uint32_t full = (1U << h) - 1U;
    std::vector<std::vector<std::vector<Rational>>> subsums(m);
    for (std::size_t j = 0; j < m; ++j) {
        subsums[j].assign(full + 1, {});
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            std::vector<Rational> acc(height);
            const std::uint32_t low = mask & (mask - 1);
            if (low != 0) acc = subsums[j][low];
            const std::uint32_t bit = mask & ~low;
            std::size_t i = 0;
            while (!((bit >> i) & 1U)) ++i;
            for (std::size_t k = 0; k < height; ++k) acc[k] += basis[j][i] * columns[i][k];
            subsums[j][mask] = std::move(acc);
        }
    }

    const auto is_zero_vec = [](const std::vector<Rational>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); });
    };

    // A subsum identically zero on the whole nullspace rules out any relation
    // with that subsum nonzero; no candidate can fix it.
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        bool all_zero = true;
        for (std::size_t j = 0; j < m && all_zero; ++j) all_zero = is_zero_vec(subsums[j][mask]);
        if (all_zero) return std::nullopt;
    }

    const unsigned long t_max =
        static_cast<unsigned long>(m - 1) * ((1UL << h) - 2UL) + 1UL;
    for (unsigned long t = 1; t <= t_max; ++t) {
        bool good = true;
        for (std::uint32_t mask = 1; mask < full && good; ++mask) {
            std::vector<Rational> acc(height);
            Rational tp(1);
            for (std::size_t j = 0; j < m; ++j) {
                for (std::size_t k = 0; k < height; ++k) acc[k] += tp * subsums[j][mask][k];
                tp *= Rational(static_cast<long>(t));
            }
            good = !is_zero_vec(acc);
        }
        if (!good) continue;
        std::vector<Rational> xi(h);
        Rational tp(1);
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t i = 0; i < h; ++i) xi[i] += tp * basis[j][i];
            tp *= Rational(static_cast<long>(t));
        }
        std::size_t first = 0;
        while (first < h && xi[first].is_zero()) ++first;
        const Rational scale = xi[first].inverse();
        for (auto& c : xi) c *= scale;
        return RelationVector{std::move(xi)};
    }
    throw std::logic_error("relation sweep exhausted its deterministic range");
}

} // namespace

std::optional<RelationVector> find_nondegenerate_relation(const std::vector<RationalFunction>& fs) {
    Polynomial common_den(Rational(1));
    for (const auto& f : fs) common_den = lcm(common_den, f.den());
    std::size_t height = 1;
    std::vector<Polynomial> nums;
    nums.reserve(fs.size());
    for (const auto& f : fs) {
        Polynomial n = f.num() * (common_den / f.den());
        height = std::max(height, static_cast<std::size_t>(n.degree() + 1));
        nums.push_back(std::move(n));
    }
    std::vector<std::vector<Rational>> columns;
    columns.reserve(fs.size());
    for (const auto& n : nums) {
        std::vector<Rational> col(height);
        for (std::size_t i = 0; i < height; ++i) col[i] = n.coeff(i);
        columns.push_back(std::move(col));
    }
    return relation_from_columns(columns);
}

std::optional<RelationVector> find_nondegenerate_relation(const std::vector<TruncatedSeries>& fs) {
    int order = fs.empty() ? 1 : fs.front().order();
    for (const auto& f : fs) order = std::min(order, f.order());
    std::vector<std::vector<Rational>> columns;
    columns.reserve(fs.size());
    for (const auto& f : fs) {
        std::vector<Rational> col(f.coeffs().begin(), f.coeffs().begin() + order);
        columns.push_back(std::move(col));
    }
    return relation_from_columns(columns);
}

} // namespace cosetbound
