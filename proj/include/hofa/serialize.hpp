#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hofa/brackets.hpp"
#include "hofa/equidist.hpp"
#include "hofa/fn_zn.hpp"
#include "hofa/fourier.hpp"
#include "hofa/nilmanifold.hpp"
#include "hofa/rbpl.hpp"

namespace hofa {

using Json = nlohmann::ordered_json;

// Canonical text forms. Rationals are written "p/q" (or "p" for integers)
// and parsed back exactly; round-trips are bit-exact.
Json to_json(const Rat& x);
Rat rat_from_json(const Json& j);
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);
Json to_json(const BracketTerm& t);
BracketTerm bracket_term_from_json(const Json& j);
Json to_json(const BracketExpr& e);
BracketExpr bracket_expr_from_json(const Json& j);
Json to_json(const ElemNilmanifold& m);
ElemNilmanifold nilmanifold_from_json(const Json& j);
Json to_json(const PolySeq& g);
PolySeq polyseq_from_json(const Json& j);
Json to_json(const RBPLInstance& inst);
RBPLInstance rbpl_instance_from_json(const Json& j);
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);
Json to_json(const FnZN& f);
FnZN fnzn_from_json(const Json& j);
Json to_json(const DichotomyResult& r);

/// Fixed-format floating point with 12 significant digits.
std::string format_double(double v);

/// Deterministic tabular output: fixed column order, exact fractions as
/// "p/q", floats with 12 significant digits.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
std::string emit_csv(const Table& t);
std::string emit_json(const Table& t);
/// format is "csv" or "json".
void write_table(const Table& t, const std::string& path, const std::string& format);

void write_text(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

Table expansion_table(const FourierExpansion& e);

}  // namespace hofa
