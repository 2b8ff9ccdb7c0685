#include "cosetbound/search.hpp"

#include "cosetbound/errors.hpp"
#include "cosetbound/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace cosetbound {

namespace {

constexpr int kMaxVariables = 16; // subset-mask guard

std::vector<Polynomial> coprime_basis(const std::vector<Polynomial>& inputs) {
    std::vector<Polynomial> basis;
    std::vector<Polynomial> queue;
    for (const auto& p : inputs)
        if (p.degree() > 0) queue.push_back(p.monic());
    // Splitting p and b by g = gcd(p, b) lowers the total degree in flight by
    // deg g, so the refinement terminates; the survivors are pairwise coprime.
    while (!queue.empty()) {
        Polynomial p = std::move(queue.back());
        queue.pop_back();
        if (p.degree() < 1) continue;
        bool split = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Polynomial g = gcd(p, basis[i]);
            if (g.degree() < 1) continue;
            const Polynomial b = basis[i];
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            queue.push_back(g);
            queue.push_back(b / g);
            queue.push_back(p / g);
            split = true;
            break;
        }
        if (!split) basis.push_back(std::move(p));
    }
    std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return basis;
}

long multiplicity(Polynomial& p, const Polynomial& q) {
    long count = 0;
    while (p.degree() >= q.degree()) {
        Polynomial quot, rem;
        Polynomial::divmod(p, q, quot, rem);
        if (!rem.is_zero()) break;
        p = std::move(quot);
        ++count;
    }
    return count;
}

// Rows of the generator exponent lattice over the coprime factor basis,
// one column per (basis polynomial, coordinate) pair.
QMatrix exponent_matrix(const GroupSpec& g) {
    std::vector<Polynomial> all_factors;
    for (const auto& gen : g.generators)
        for (const auto& coord : gen)
            for (const auto& f : coord.factors()) all_factors.push_back(f.poly);
    const std::vector<Polynomial> basis = coprime_basis(all_factors);

    const std::size_t cols = basis.size() * static_cast<std::size_t>(g.n);
    QMatrix m(g.generators.size(), std::max<std::size_t>(cols, 1));
    for (std::size_t j = 0; j < g.generators.size(); ++j) {
        for (std::size_t i = 0; i < static_cast<std::size_t>(g.n); ++i) {
            for (const auto& f : g.generators[j][i].factors()) {
                Polynomial rest = f.poly;
                for (std::size_t q = 0; q < basis.size(); ++q) {
                    const long v = multiplicity(rest, basis[q]);
                    if (v != 0)
                        m.at(j, q * static_cast<std::size_t>(g.n) + i) +=
                            Rational(f.exp * v);
                }
                if (rest.degree() > 0)
                    throw std::logic_error("factor did not resolve over the coprime basis");
            }
        }
    }
    return m;
}

std::vector<long long> decode_exponents(unsigned long long idx, std::size_t r, long box) {
    const unsigned long long base = static_cast<unsigned long long>(2 * box + 1);
    std::vector<long long> w(r);
    for (std::size_t j = r; j-- > 0;) {
        w[j] = static_cast<long long>(idx % base) - box;
        idx /= base;
    }
    return w;
}

struct SweepContext {
    const EquationInstance* inst = nullptr;
    long box = 0;
    std::vector<std::vector<std::vector<RationalFunction>>> powers; // [j][i][e+box]
};

// Representative with every coordinate nonzero and, where possible, every
// proper subsum nonzero: xi(t) = particular + sum_j t^{j+1} basis_j. Each
// violated condition is a nonzero polynomial in t of degree <= dim, so a
// bounded sweep finds a generic member.
std::vector<Rational> generic_member(const QMatrix::AffineSolution& sol,
                                     const std::vector<RationalFunction>& terms) {
    const std::size_t n = sol.particular.size();
    const std::size_t dim = sol.nullspace.size();
    if (dim == 0) return sol.particular;

    const std::uint32_t full = (1U << n) - 1U;
    // subsum coefficients: level 0 is the particular point, level j > 0 the
    // j-th basis vector
    std::vector<std::vector<RationalFunction>> levels(dim + 1);
    const auto subsum = [&](const std::vector<Rational>& xi, std::uint32_t mask) {
        RationalFunction acc;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1U << i)) acc += RationalFunction(xi[i]) * terms[i];
        return acc;
    };
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        levels[0].push_back(subsum(sol.particular, mask));
        for (std::size_t j = 0; j < dim; ++j) levels[j + 1].push_back(subsum(sol.nullspace[j], mask));
    }

    const unsigned long t_max = dim * (full - 1) + 1;
    for (unsigned long t = 0; t <= t_max; ++t) {
        std::vector<Rational> xi = sol.particular;
        Rational tp(1);
        for (std::size_t j = 0; j < dim; ++j) {
            tp *= Rational(static_cast<long>(t));
            for (std::size_t i = 0; i < n; ++i) xi[i] += tp * sol.nullspace[j][i];
        }
        bool good = true;
        for (std::size_t i = 0; i < n && good; ++i) good = !xi[i].is_zero();
        for (std::uint32_t mask = 1; mask < full && good; ++mask) {
            RationalFunction s = levels[0][mask - 1];
            Rational tq(1);
            bool identically_zero = s.is_zero();
            for (std::size_t j = 0; j < dim; ++j) {
                tq *= Rational(static_cast<long>(t));
                const RationalFunction& lv = levels[j + 1][mask - 1];
                identically_zero = identically_zero && lv.is_zero();
                s += RationalFunction(tq) * lv;
            }
            if (!identically_zero) good = !s.is_zero();
        }
        if (good) return xi;
    }
    throw std::logic_error("generic member sweep exhausted its range");
}

void sweep_range(const SweepContext& ctx, unsigned long long lo, unsigned long long hi,
                 std::vector<SolutionRecord>& out) {
    const EquationInstance& inst = *ctx.inst;
    const std::size_t n = static_cast<std::size_t>(inst.n());
    const std::size_t r = inst.r();
    const auto& a = inst.coefficients();

    for (unsigned long long idx = lo; idx < hi; ++idx) {
        const std::vector<long long> w = decode_exponents(idx, r, ctx.box);

        std::vector<RationalFunction> monomials(n, RationalFunction(Rational(1)));
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < n; ++i)
                monomials[i] *= ctx.powers[j][i][static_cast<std::size_t>(w[j] + ctx.box)];

        std::vector<RationalFunction> terms(n);
        for (std::size_t i = 0; i < n; ++i) terms[i] = a[i] * monomials[i];

        // coefficient matching for sum_i xi_i terms_i = 1
        Polynomial common_den(Rational(1));
        for (const auto& t : terms) common_den = lcm(common_den, t.den());
        std::vector<Polynomial> nums(n);
        std::size_t height = static_cast<std::size_t>(common_den.degree()) + 1;
        for (std::size_t i = 0; i < n; ++i) {
            nums[i] = terms[i].num() * (common_den / terms[i].den());
            height = std::max(height, static_cast<std::size_t>(nums[i].degree() + 1));
        }
        QMatrix system(height, n);
        std::vector<Rational> rhs(height);
        for (std::size_t k = 0; k < height; ++k) {
            for (std::size_t i = 0; i < n; ++i) system.at(k, i) = nums[i].coeff(k);
            rhs[k] = common_den.coeff(k);
        }
        const auto sol = system.solve(rhs);
        if (!sol) continue;

        // a coordinate identically zero on the solution set leaves K*
        bool coordinate_dead = false;
        for (std::size_t i = 0; i < n && !coordinate_dead; ++i) {
            bool dead = sol->particular[i].is_zero();
            for (const auto& b : sol->nullspace) dead = dead && b[i].is_zero();
            coordinate_dead = dead;
        }
        if (coordinate_dead) continue;

        SolutionRecord rec;
        rec.exponents = w;
        rec.xi = generic_member(*sol, terms);
        if (!sol->nullspace.empty()) rec.family = AffineFamily{sol->particular, sol->nullspace};
        rec.x.reserve(n);
        for (std::size_t i = 0; i < n; ++i) rec.x.push_back(RationalFunction(rec.xi[i]) * monomials[i]);

        RationalFunction check;
        for (std::size_t i = 0; i < n; ++i) check += a[i] * rec.x[i];
        if (!(check == RationalFunction(Rational(1))))
            throw std::logic_error("solution record failed re-verification");

        out.push_back(std::move(rec));
    }
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (const unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string digest_text(const EquationInstance& inst, long box) {
    std::ostringstream os;
    os << "n=" << inst.n() << ";box=" << box << ";trunc=" << inst.truncation() << ";a=";
    for (const auto& c : inst.coefficients()) os << c << ",";
    os << ";gens=";
    for (const auto& gen : inst.group().generators) {
        os << "[";
        for (const auto& coord : gen) {
            os << coord.constant().str() << ":";
            for (const auto& f : coord.factors()) os << "(" << f.poly << ")^" << f.exp << "*";
            os << "|";
        }
        os << "]";
    }
    return os.str();
}

} // namespace

void validate(const GroupSpec& g) {
    if (g.n < 2) throw std::invalid_argument("group needs n >= 2");
    if (g.n > kMaxVariables) throw std::invalid_argument("group limited to n <= 16");
    if (g.generators.empty()) throw std::invalid_argument("group needs r >= 1 generators");
    for (const auto& gen : g.generators)
        if (gen.size() != static_cast<std::size_t>(g.n))
            throw std::invalid_argument("every generator needs n coordinates");
}

std::size_t group_rank(const GroupSpec& g) {
    validate(g);
    return exponent_matrix(g).rank();
}

std::optional<std::vector<long>> generator_dependency(const GroupSpec& g) {
    validate(g);
    const QMatrix m = exponent_matrix(g);
    QMatrix transpose(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) transpose.at(j, i) = m.at(i, j);
    const auto kernel = transpose.nullspace();
    if (kernel.empty()) return std::nullopt;

    // scale the first kernel vector to coprime integers
    const auto& v = kernel.front();
    mpz_class den_lcm = 1;
    for (const auto& c : v) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
    }
    std::vector<mpz_class> scaled;
    mpz_class num_gcd = 0;
    for (const auto& c : v) {
        mpz_class s = c.num() * (den_lcm / c.den());
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), num_gcd.get_mpz_t(), s.get_mpz_t());
        num_gcd = gg;
        scaled.push_back(std::move(s));
    }
    std::vector<long> result;
    result.reserve(scaled.size());
    for (auto& s : scaled) {
        const mpz_class reduced = s / num_gcd;
        if (!reduced.fits_slong_p()) throw std::logic_error("dependency exponent out of range");
        result.push_back(reduced.get_si());
    }
    for (const long e : result) {
        if (e == 0) continue;
        if (e < 0)
            for (auto& v : result) v = -v;
        break;
    }
    return result;
}

EquationInstance EquationInstance::create(GroupSpec group,
                                          std::vector<RationalFunction> coefficients,
                                          int truncation) {
    validate(group);
    if (coefficients.size() != static_cast<std::size_t>(group.n))
        throw std::invalid_argument("one coefficient per variable required");
    for (const auto& c : coefficients)
        if (c.is_zero()) throw std::invalid_argument("equation coefficients must be nonzero");
    if (truncation < 2) throw std::invalid_argument("truncation order must be >= 2");

    std::vector<RationalFunction> all = coefficients;
    for (const auto& gen : group.generators)
        for (const auto& coord : gen) all.push_back(coord.expand());

    EquationInstance inst;
    inst.basepoint_ = choose_basepoint(all);
    inst.group_ = std::move(group);
    inst.coefficients_ = std::move(coefficients);
    inst.truncation_ = truncation;
    return inst;
}

bool independent_generators(const EquationInstance& inst) {
    return group_rank(inst.group()) == inst.r();
}

std::vector<SolutionRecord> enumerate_solutions(const EquationInstance& inst, long box,
                                                int threads) {
    if (box < 1) throw std::invalid_argument("box must be >= 1");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (!independent_generators(inst)) {
        std::string msg = "generators are multiplicatively dependent modulo constants";
        if (const auto dep = generator_dependency(inst.group())) {
            msg += ": constant tuple from exponents (";
            for (std::size_t j = 0; j < dep->size(); ++j) {
                if (j) msg += ",";
                msg += std::to_string((*dep)[j]);
            }
            msg += ")";
        }
        throw IndependenceError(msg);
    }

    const std::size_t n = static_cast<std::size_t>(inst.n());
    const std::size_t r = inst.r();

    SweepContext ctx;
    ctx.inst = &inst;
    ctx.box = box;
    ctx.powers.resize(r);
    for (std::size_t j = 0; j < r; ++j) {
        ctx.powers[j].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const RationalFunction base = inst.group().generators[j][i].expand();
            auto& cache = ctx.powers[j][i];
            cache.assign(static_cast<std::size_t>(2 * box + 1), RationalFunction(Rational(1)));
            for (long e = 1; e <= box; ++e) {
                cache[static_cast<std::size_t>(box + e)] =
                    cache[static_cast<std::size_t>(box + e - 1)] * base;
                cache[static_cast<std::size_t>(box - e)] =
                    cache[static_cast<std::size_t>(box - e + 1)] / base;
            }
        }
    }

    unsigned long long total = 1;
    const unsigned long long base = static_cast<unsigned long long>(2 * box + 1);
    for (std::size_t j = 0; j < r; ++j) {
        if (total > (1ULL << 62) / base) throw std::invalid_argument("exponent box too large");
        total *= base;
    }

    if (threads == 1 || total < 2) {
        std::vector<SolutionRecord> records;
        sweep_range(ctx, 0, total, records);
        return records;
    }

    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                      static_cast<std::size_t>(total));
    std::vector<std::vector<SolutionRecord>> chunks(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t k = 0; k < workers; ++k) {
        const unsigned long long lo = total * k / workers;
        const unsigned long long hi = total * (k + 1) / workers;
        pool.emplace_back([&, k, lo, hi] { sweep_range(ctx, lo, hi, chunks[k]); });
    }
    for (auto& t : pool) t.join();

    std::vector<SolutionRecord> records;
    for (auto& chunk : chunks)
        for (auto& rec : chunk) records.push_back(std::move(rec));
    return records;
}

bool is_nondegenerate(const SolutionRecord& sol, const EquationInstance& inst) {
    const std::size_t n = static_cast<std::size_t>(inst.n());
    if (n != sol.x.size()) throw std::invalid_argument("record does not match instance");
    const std::uint32_t full = (1U << n) - 1U;

    if (!sol.family) {
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            RationalFunction s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1U << i)) s += inst.coefficients()[i] * sol.x[i];
            if (s.is_zero()) return false;
        }
        return true;
    }

    // family: degenerate only when some subsum vanishes identically on it
    std::vector<RationalFunction> terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        RationalFunction monomial(Rational(1));
        for (std::size_t j = 0; j < inst.r(); ++j)
            monomial *= inst.group().generators[j][i].expand().pow(sol.exponents[j]);
        terms[i] = inst.coefficients()[i] * monomial;
    }
    const auto subsum = [&](const std::vector<Rational>& xi, std::uint32_t mask) {
        RationalFunction acc;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1U << i)) acc += RationalFunction(xi[i]) * terms[i];
        return acc;
    };
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        bool identically_zero = subsum(sol.family->particular, mask).is_zero();
        for (const auto& b : sol.family->basis)
            identically_zero = identically_zero && subsum(b, mask).is_zero();
        if (identically_zero) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> classify_cosets(const std::vector<SolutionRecord>& sols) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t idx = 0; idx < sols.size(); ++idx) {
        bool placed = false;
        for (auto& cls : classes) {
            const SolutionRecord& rep = sols[cls.front()];
            bool same = rep.x.size() == sols[idx].x.size();
            for (std::size_t i = 0; same && i < rep.x.size(); ++i)
                same = (sols[idx].x[i] / rep.x[i]).is_constant();
            if (same) {
                cls.push_back(idx);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({idx});
    }
    return classes;
}

std::size_t CosetReport::nondegenerate_count() const {
    std::size_t count = 0;
    for (const auto& e : cosets)
        if (e.nondegenerate) ++count;
    return count;
}

CosetReport verify_bound(const EquationInstance& inst, long box, int threads) {
    std::vector<SolutionRecord> records = enumerate_solutions(inst, box, threads);
    const auto classes = classify_cosets(records);

    CosetReport report;
    report.rank = group_rank(inst.group());
    report.bound = coset_count_bound(inst.n(), static_cast<int>(report.rank));
    report.box = box;
    report.instance_digest = [&] {
        std::ostringstream os;
        os << std::hex << fnv1a(digest_text(inst, box));
        return os.str();
    }();

    for (const auto& cls : classes) {
        CosetReport::Entry entry;
        entry.representative = records[cls.front()];
        entry.exponents = entry.representative.exponents;
        entry.nondegenerate = is_nondegenerate(entry.representative, inst);
        report.cosets.push_back(std::move(entry));
    }
    report.within_bound = mpz_class(report.nondegenerate_count()) <= report.bound;
    return report;
}

} // namespace cosetbound
