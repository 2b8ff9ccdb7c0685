// Command-line front end: bounds, power, rank, member, search.
//
// Exit codes: 0 success, 1 bound violation (internal-error sentinel),
// 2 malformed input, 3 precondition failure.

#include "cosetbound/bounds.hpp"
#include "cosetbound/dependence.hpp"
#include "cosetbound/errors.hpp"
#include "cosetbound/json_io.hpp"
#include "cosetbound/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace cosetbound;

constexpr int kExitOk = 0;
constexpr int kExitBoundViolation = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitPrecondition = 3;

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        values.push_back(Rational::parse(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.empty()) throw ParseError("empty value list");
    return values;
}

std::string rational_tuple_text(const std::vector<Rational>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += values[i].str();
    }
    return out + ")";
}

int run_bounds(int n, int r) {
    if (n < 2 || r < 1) {
        std::cerr << "bounds requires n >= 2 and r >= 1\n";
        return kExitPrecondition;
    }
    std::cout << "theorem=" << coset_count_bound(n, r).get_str()
              << " corollary=" << subspace_count_bound(n, r).get_str()
              << " degenerate_subsets=" << degenerate_subset_count(n).get_str() << "\n";
    return kExitOk;
}

int run_power(const std::string& num, const std::string& den, const std::string& u_text,
              int order) {
    const Polynomial num_poly{parse_rational_list(num)};
    const Polynomial den_poly{parse_rational_list(den)};
    const Rational u = Rational::parse(u_text);
    if (den_poly.is_zero()) throw ParseError("denominator polynomial is zero");
    const RationalFunction f{num_poly, den_poly};
    const auto [lead, unit] = decompose_unit(expand(f, order));
    std::cout << "lead=" << lead.str() << "\n";
    std::cout << "pow=[";
    const TruncatedSeries s = pow(unit, u).series();
    for (int i = 0; i < s.order(); ++i) {
        if (i) std::cout << ",";
        std::cout << '"' << s.coeff(i).str() << '"';
    }
    std::cout << "]\n";
    return kExitOk;
}

int run_rank(const std::string& file, int order) {
    const std::vector<RationalFunction> fs = load_functions_file(file);
    const std::size_t exact = rank_exact(fs);
    std::vector<TruncatedSeries> expansions;
    expansions.reserve(fs.size());
    for (const auto& f : fs) expansions.push_back(expand(f, order));
    const SeriesRank sr = rank_series(expansions, wronskian_degree_bound(fs));
    std::cout << "rank_exact=" << exact << " rank_series=" << sr.rank
              << " certified=" << (sr.certified ? "true" : "false") << "\n";
    return kExitOk;
}

int run_member(const std::string& file, const std::string& u_text, int order) {
    const ParsedSystem parsed = load_system_file(file);
    const std::vector<Rational> u_values = parse_rational_list(u_text);
    if (u_values.size() != parsed.tuples.front().size())
        throw ParseError("exponent vector length does not match the system tuples");
    const SystemInstance sys = SystemInstance::from_rational(parsed.a, parsed.tuples, order);
    const ExponentVector u{u_values};

    if (!admits_nondegenerate_relation(sys, u)) {
        std::cout << "member=false\n";
        return kExitOk;
    }
    std::vector<std::size_t> all(sys.h());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const auto witness = sys.rational_forms() && u.is_integral()
                             ? find_nondegenerate_relation(sys.probe_rational(u, all))
                             : find_nondegenerate_relation(sys.probe_series(u, all));
    std::cout << "member=true relation="
              << (witness ? rational_tuple_text(witness->xi) : "unavailable") << "\n";
    return kExitOk;
}

int run_search(const std::string& file, long box_override, int order_override,
               const std::string& out_path, int threads) {
    ParsedInstance parsed = load_instance_file(file);
    const long box = box_override > 0 ? box_override : parsed.default_box;
    EquationInstance inst =
        order_override > 0
            ? EquationInstance::create(parsed.instance.group(), parsed.instance.coefficients(),
                                       order_override)
            : parsed.instance;

    const CosetReport report = verify_bound(inst, box, threads);
    std::cout << report_table(report);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ParseError("cannot write report file: " + out_path);
        out << document_to_json(to_document(report));
    }
    if (!report.within_bound) {
        std::cerr << "bound violated: this indicates a bug, not bad input\n";
        return kExitBoundViolation;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coset-counting toolkit for unit equations over Q(z)"};
    app.require_subcommand(1);

    int n = 0, r = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form coset and subspace bounds");
    bounds_cmd->add_option("--n", n, "number of equation variables")->required();
    bounds_cmd->add_option("--r", r, "group rank modulo constants")->required();

    std::string num = "1", den = "1", u_text = "1";
    int order = 16;
    auto* power_cmd = app.add_subcommand("power", "rational power of the unit part of a series");
    power_cmd->add_option("--num", num, "numerator coefficients, ascending, comma-separated")
        ->required();
    power_cmd->add_option("--den", den, "denominator coefficients, ascending, comma-separated")
        ->required();
    power_cmd->add_option("--u", u_text, "rational exponent p/q")->required();
    power_cmd->add_option("--order", order, "truncation order");

    std::string file;
    int rank_order = 32;
    auto* rank_cmd = app.add_subcommand("rank", "exact and series rank of a function family");
    rank_cmd->add_option("--file", file, "functions file")->required();
    rank_cmd->add_option("--order", rank_order, "truncation order");

    std::string member_file, member_u;
    int member_order = 32;
    auto* member_cmd =
        app.add_subcommand("member", "non-degenerate relation membership for an exponent vector");
    member_cmd->add_option("--file", member_file, "system file")->required();
    member_cmd->add_option("--u", member_u, "exponent vector u1,...,ur")->required();
    member_cmd->add_option("--order", member_order, "truncation order");

    std::string search_file, out_path;
    long box = 0;
    int search_order = 0, threads = 1;
    auto* search_cmd = app.add_subcommand("search", "enumerate solutions and verify the bound");
    search_cmd->add_option("--file", search_file, "instance file")->required();
    search_cmd->add_option("--box", box, "exponent box half-width (defaults to the file value)");
    search_cmd->add_option("--order", search_order, "truncation order override");
    search_cmd->add_option("--out", out_path, "write the JSON report here");
    search_cmd->add_option("--threads", threads, "parallel sweep workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    try {
        if (bounds_cmd->parsed()) return run_bounds(n, r);
        if (power_cmd->parsed()) return run_power(num, den, u_text, order);
        if (rank_cmd->parsed()) return run_rank(file, rank_order);
        if (member_cmd->parsed()) return run_member(member_file, member_u, member_order);
        if (search_cmd->parsed()) return run_search(search_file, box, search_order, out_path, threads);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const IndependenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const PoleAtOriginError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NotAUnitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBoundViolation;
    }
    return kExitOk;
}
