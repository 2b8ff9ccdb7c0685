#include "cosetbound/json_io.hpp"

#include "cosetbound/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace cosetbound {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

long require_integer(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string("expected an integer for ") + what);
    return j.get<long>();
}

Rational rational_from(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("rationals must be strings or integers");
}

Json rational_to(const Rational& r) {
    return Json(r.str());
}

Polynomial polynomial_from(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomials must be coefficient arrays");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(rational_from(c));
    return Polynomial(std::move(coeffs));
}

Json polynomial_to(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rational_to(c));
    return arr;
}

RationalFunction rational_function_from(const Json& j) {
    const Polynomial num = polynomial_from(require(j, "num"));
    const Polynomial den = polynomial_from(require(j, "den"));
    try {
        return {num, den};
    } catch (const std::domain_error& e) {
        throw ParseError(std::string("invalid rational function: ") + e.what());
    }
}

Json rational_function_to(const RationalFunction& f) {
    Json j = Json::object();
    j["num"] = polynomial_to(f.num());
    j["den"] = polynomial_to(f.den());
    return j;
}

FactoredRationalFunction factored_from(const Json& j) {
    const Rational constant = rational_from(require(j, "constant"));
    const Json& factors = require(j, "factors");
    if (!factors.is_array()) throw ParseError("'factors' must be an array");
    std::vector<FactoredRationalFunction::Factor> fs;
    fs.reserve(factors.size());
    for (const auto& f : factors) {
        FactoredRationalFunction::Factor factor;
        factor.poly = polynomial_from(require(f, "poly"));
        factor.exp = require_integer(require(f, "exp"), "'exp'");
        fs.push_back(std::move(factor));
    }
    try {
        return {constant, std::move(fs)};
    } catch (const std::domain_error& e) {
        throw ParseError(std::string("invalid factored function: ") + e.what());
    }
}

Json factored_to(const FactoredRationalFunction& f) {
    Json j = Json::object();
    j["constant"] = rational_to(f.constant());
    Json factors = Json::array();
    for (const auto& [poly, exp] : f.factors()) {
        Json entry = Json::object();
        entry["poly"] = polynomial_to(poly);
        entry["exp"] = exp;
        factors.push_back(std::move(entry));
    }
    j["factors"] = std::move(factors);
    return j;
}

void require_version(const Json& j) {
    if (require_integer(require(j, "v"), "'v'") != 1)
        throw ParseError("unsupported schema version (expected v = 1)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

std::string series_to_json(const TruncatedSeries& s) {
    Json j = Json::object();
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(rational_to(c));
    j["coeffs"] = std::move(coeffs);
    j["order"] = s.order();
    return j.dump() + "\n";
}

TruncatedSeries series_from_json(const std::string& text) {
    const Json j = parse_json(text);
    const Json& coeffs = require(j, "coeffs");
    if (!coeffs.is_array()) throw ParseError("'coeffs' must be an array");
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) c.push_back(rational_from(e));
    const long order = require_integer(require(j, "order"), "'order'");
    if (order < 1 || static_cast<std::size_t>(order) != c.size())
        throw ParseError("series order must equal the coefficient count");
    return TruncatedSeries(std::move(c));
}

ParsedInstance parse_instance(const std::string& text) {
    const Json j = parse_json(text);
    require_version(j);

    const long n = require_integer(require(j, "n"), "'n'");
    if (n < 2) throw ParseError("instance needs n >= 2");

    const Json& coeffs = require(j, "coefficients");
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(n))
        throw ParseError("'coefficients' must list exactly n rational functions");
    std::vector<RationalFunction> a;
    a.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        a.push_back(rational_function_from(c));
        if (a.back().is_zero()) throw ParseError("equation coefficients must be nonzero");
    }

    const Json& gens = require(j, "generators");
    if (!gens.is_array() || gens.empty())
        throw ParseError("'generators' must list at least one generator tuple");
    GroupSpec group;
    group.n = static_cast<int>(n);
    for (const auto& gen : gens) {
        if (!gen.is_array() || gen.size() != static_cast<std::size_t>(n))
            throw ParseError("every generator needs exactly n coordinates");
        std::vector<FactoredRationalFunction> tuple;
        tuple.reserve(gen.size());
        for (const auto& coord : gen) tuple.push_back(factored_from(coord));
        group.generators.push_back(std::move(tuple));
    }

    const long box = require_integer(require(j, "box"), "'box'");
    if (box < 1) throw ParseError("'box' must be >= 1");
    const long truncation = require_integer(require(j, "truncation"), "'truncation'");
    if (truncation < 2) throw ParseError("'truncation' must be >= 2");

    try {
        ParsedInstance parsed{
            EquationInstance::create(std::move(group), std::move(a), static_cast<int>(truncation)),
            box};
        return parsed;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    } catch (const std::domain_error& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

ParsedInstance load_instance_file(const std::string& path) {
    return parse_instance(read_file(path));
}

std::string instance_to_json(const EquationInstance& inst, long box) {
    Json j = Json::object();
    j["v"] = 1;
    j["n"] = inst.n();
    Json coeffs = Json::array();
    for (const auto& c : inst.coefficients()) coeffs.push_back(rational_function_to(c));
    j["coefficients"] = std::move(coeffs);
    Json gens = Json::array();
    for (const auto& gen : inst.group().generators) {
        Json tuple = Json::array();
        for (const auto& coord : gen) tuple.push_back(factored_to(coord));
        gens.push_back(std::move(tuple));
    }
    j["generators"] = std::move(gens);
    j["box"] = box;
    j["truncation"] = inst.truncation();
    return j.dump() + "\n";
}

std::vector<RationalFunction> parse_functions(const std::string& text) {
    const Json j = parse_json(text);
    require_version(j);
    const Json& fns = require(j, "functions");
    if (!fns.is_array() || fns.empty())
        throw ParseError("'functions' must list at least one rational function");
    std::vector<RationalFunction> out;
    out.reserve(fns.size());
    for (const auto& f : fns) out.push_back(rational_function_from(f));
    return out;
}

std::vector<RationalFunction> load_functions_file(const std::string& path) {
    return parse_functions(read_file(path));
}

ParsedSystem parse_system(const std::string& text) {
    const Json j = parse_json(text);
    require_version(j);
    ParsedSystem sys;
    const Json& a = require(j, "a");
    if (!a.is_array() || a.size() < 2) throw ParseError("'a' must list at least two functions");
    for (const auto& f : a) sys.a.push_back(rational_function_from(f));
    const Json& tuples = require(j, "tuples");
    if (!tuples.is_array() || tuples.size() != sys.a.size())
        throw ParseError("'tuples' must list one tuple per function");
    for (const auto& tuple : tuples) {
        if (!tuple.is_array() || tuple.empty())
            throw ParseError("every tuple needs at least one entry");
        std::vector<RationalFunction> entries;
        entries.reserve(tuple.size());
        for (const auto& e : tuple) entries.push_back(rational_function_from(e));
        if (entries.size() != tuples.front().size())
            throw ParseError("tuples must share one length");
        sys.tuples.push_back(std::move(entries));
    }
    return sys;
}

ParsedSystem load_system_file(const std::string& path) {
    return parse_system(read_file(path));
}

ReportDocument to_document(const CosetReport& report) {
    ReportDocument doc;
    doc.rank = report.rank;
    doc.bound = report.bound;
    doc.within_bound = report.within_bound;
    doc.rows.reserve(report.cosets.size());
    for (const auto& entry : report.cosets) {
        ReportDocument::Row row;
        row.w = entry.exponents;
        if (!entry.representative.family) row.xi = entry.representative.xi;
        row.nondegenerate = entry.nondegenerate;
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

std::string document_to_json(const ReportDocument& doc) {
    Json j = Json::object();
    j["v"] = doc.v;
    j["rank"] = doc.rank;
    if (doc.bound.fits_slong_p())
        j["bound"] = doc.bound.get_si();
    else
        j["bound"] = doc.bound.get_str();
    Json rows = Json::array();
    for (const auto& row : doc.rows) {
        Json r = Json::object();
        r["w"] = row.w;
        if (row.xi) {
            Json xi = Json::array();
            for (const auto& c : *row.xi) xi.push_back(rational_to(c));
            r["xi"] = std::move(xi);
        } else {
            r["xi"] = "family";
        }
        r["nondegenerate"] = row.nondegenerate;
        rows.push_back(std::move(r));
    }
    j["cosets"] = std::move(rows);
    j["within_bound"] = doc.within_bound;
    return j.dump() + "\n";
}

ReportDocument document_from_json(const std::string& text) {
    const Json j = parse_json(text);
    require_version(j);
    ReportDocument doc;
    const long rank = require_integer(require(j, "rank"), "'rank'");
    if (rank < 0) throw ParseError("'rank' must be >= 0");
    doc.rank = static_cast<std::size_t>(rank);
    const Json& bound = require(j, "bound");
    if (bound.is_number_integer())
        doc.bound = mpz_class(bound.get<long>());
    else if (bound.is_string())
        doc.bound = mpz_class(bound.get<std::string>());
    else
        throw ParseError("'bound' must be an integer or a string");
    const Json& rows = require(j, "cosets");
    if (!rows.is_array()) throw ParseError("'cosets' must be an array");
    for (const auto& r : rows) {
        ReportDocument::Row row;
        const Json& w = require(r, "w");
        if (!w.is_array()) throw ParseError("'w' must be an array");
        for (const auto& e : w) row.w.push_back(require_integer(e, "'w' entry"));
        const Json& xi = require(r, "xi");
        if (xi.is_string()) {
            if (xi.get<std::string>() != "family") throw ParseError("'xi' must be an array or \"family\"");
        } else if (xi.is_array()) {
            std::vector<Rational> values;
            values.reserve(xi.size());
            for (const auto& c : xi) values.push_back(rational_from(c));
            row.xi = std::move(values);
        } else {
            throw ParseError("'xi' must be an array or \"family\"");
        }
        const Json& nd = require(r, "nondegenerate");
        if (!nd.is_boolean()) throw ParseError("'nondegenerate' must be a boolean");
        row.nondegenerate = nd.get<bool>();
        doc.rows.push_back(std::move(row));
    }
    const Json& wb = require(j, "within_bound");
    if (!wb.is_boolean()) throw ParseError("'within_bound' must be a boolean");
    doc.within_bound = wb.get<bool>();
    return doc;
}

namespace {

std::string pad(std::string text, std::size_t width) {
    if (text.size() < width) text.append(width - text.size(), ' ');
    else text.push_back(' ');
    return text;
}

std::string exponents_text(const std::vector<long long>& w) {
    std::string s = "(";
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(w[j]);
    }
    return s + ")";
}

std::string xi_text(const SolutionRecord& rec) {
    if (rec.family) return "family";
    std::string s = "(";
    for (std::size_t i = 0; i < rec.xi.size(); ++i) {
        if (i) s += ",";
        s += rec.xi[i].str();
    }
    return s + ")";
}

} // namespace

std::string report_table(const CosetReport& report) {
    std::string out = pad("coset", 6) + pad("w", 22) + pad("xi", 30) + "nondegenerate\n";
    for (std::size_t i = 0; i < report.cosets.size(); ++i) {
        const auto& entry = report.cosets[i];
        out += pad(std::to_string(i + 1), 6);
        out += pad(exponents_text(entry.exponents), 22);
        out += pad(xi_text(entry.representative), 30);
        out += entry.nondegenerate ? "yes" : "no";
        out += "\n";
    }
    out += "cosets=" + std::to_string(report.cosets.size());
    out += " nondegenerate=" + std::to_string(report.nondegenerate_count());
    out += " rank=" + std::to_string(report.rank);
    out += " bound=" + report.bound.get_str();
    out += " within_bound=";
    out += report.within_bound ? "true" : "false";
    out += "\n";
    return out;
}

} // namespace cosetbound
