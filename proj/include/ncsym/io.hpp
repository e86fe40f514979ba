#pragma once

#include <string>

#include "json.hpp"
#include "ncsym/chromatic.hpp"
#include "ncsym/graph.hpp"
#include "ncsym/nc_expr.hpp"
#include "ncsym/set_partition.hpp"

namespace ncsym {

// Inverse of slash_string.  Accepts the compact digit form ("13/2") and the
// dotted form ("1.13/2") at any degree; elements must cover 1..d.
SetPartition parse_slash_string(const std::string& s);

// "3,2,2" -> Composition
Composition parse_composition(const std::string& csv);

// JSON schemas.  Partitions are lists of blocks; expressions are
// {degree, basis, terms: [{partition, coeff}]} with coefficients as reduced
// rational strings; class expansions are bare arrays of
// {shape, marked_block, coeff}; graphs are {d, edges: [[i,j]]}.
nlohmann::json partition_to_json(const SetPartition& p);
SetPartition partition_from_json(const nlohmann::json& j);

nlohmann::json ncexpr_to_json(const NCExpr& x);
NCExpr ncexpr_from_json(const nlohmann::json& j);

nlohmann::json cexpr_to_json(const CExpr& x);
CExpr cexpr_from_json(const nlohmann::json& j);

nlohmann::json classes_to_json(const EClassExpr& x);
EClassExpr classes_from_json(const nlohmann::json& j, int degree, int marked);

nlohmann::json poly_to_json(const UniPoly& p);
UniPoly poly_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const LabeledMultigraph& g);
LabeledMultigraph graph_from_json(const nlohmann::json& j);

// Expansion JSON plus provenance (the producing route) and the graph.
nlohmann::json yresult_to_json(const YResult& r);
YResult yresult_from_json(const nlohmann::json& j);

// Line-oriented graph format: "d 3" then "e 1 2" lines; '#' starts a comment.
LabeledMultigraph parse_graph_text(const std::string& text);
std::string graph_text(const LabeledMultigraph& g);

// Reads JSON or the text format, sniffed by the first non-space byte.
LabeledMultigraph load_graph_file(const std::string& path);

// Subscript style writes "1/2·e_{12/3}", compact style "1/2·e{12/3}".
enum class TermStyle { Subscript, Compact };

std::string render_expr(const NCExpr& x, TermStyle style = TermStyle::Subscript);
std::string render_cexpr(const CExpr& x);
std::string render_shape(const IntegerPartition& p);  // "(3,1)"
std::string render_poly(const UniPoly& p, const std::string& var = "n");

// Aligned text table of congruence classes, one row per class.
std::string render_class_table(const EClassExpr& x);

}  // namespace ncsym
