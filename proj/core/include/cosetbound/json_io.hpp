#pragma once

#include "cosetbound/search.hpp"
#include "cosetbound/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cosetbound {

// Canonical JSON forms, shared by every file schema:
//   rational            "p/q" string, "/q" omitted when q = 1 (integers also
//                       accepted on input)
//   polynomial          ascending coefficient array
//   rational function   {"num":[...],"den":[...]}
//   factored function   {"constant":"p/q","factors":[{"poly":[...],"exp":e}]}
//   series              {"coeffs":["p/q",...],"order":M}
// All parsers throw ParseError on malformed input.

std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

// Instance file, schema v1:
// {"v":1,"n":2,"coefficients":[rf...],"generators":[[factored...]...],
//  "box":B,"truncation":M}
struct ParsedInstance {
    EquationInstance instance;
    long default_box = 0;
};

ParsedInstance parse_instance(const std::string& text);
ParsedInstance load_instance_file(const std::string& path);
std::string instance_to_json(const EquationInstance& inst, long box);

// Function list file: {"v":1,"functions":[rf...]}
std::vector<RationalFunction> parse_functions(const std::string& text);
std::vector<RationalFunction> load_functions_file(const std::string& path);

// System file: {"v":1,"a":[rf...],"tuples":[[rf...]...]}
struct ParsedSystem {
    std::vector<RationalFunction> a;
    std::vector<std::vector<RationalFunction>> tuples;
};

ParsedSystem parse_system(const std::string& text);
ParsedSystem load_system_file(const std::string& path);

// Report wire format, schema v1:
// {"v":1,"rank":r,"bound":N,"cosets":[{"w":[...],"xi":[...]|"family",
//  "nondegenerate":b}...],"within_bound":b}
// Emission is canonical (fixed key order, canonical rational strings, compact
// layout, trailing newline), so parse followed by re-emit is byte-identical.
struct ReportDocument {
    struct Row {
        std::vector<long long> w;
        std::optional<std::vector<Rational>> xi; // nullopt renders as "family"
        bool nondegenerate = false;
    };
    int v = 1;
    std::size_t rank = 0;
    mpz_class bound;
    std::vector<Row> rows;
    bool within_bound = false;
};

ReportDocument to_document(const CosetReport& report);
std::string document_to_json(const ReportDocument& doc);
ReportDocument document_from_json(const std::string& text);

// Fixed-column table for terminal output; stable across runs.
std::string report_table(const CosetReport& report);

} // namespace cosetbound
