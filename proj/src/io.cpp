#include "ncsym/io.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ncsym {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

int get_int(const json& j, const char* field) {
    require(j.is_object() && j.contains(field) && j[field].is_number_integer(),
            std::string("expected integer field '") + field + "'");
    return j[field].get<int>();
}

const json& get_array(const json& j, const char* field) {
    require(j.is_object() && j.contains(field) && j[field].is_array(),
            std::string("expected array field '") + field + "'");
    return j[field];
}

std::string get_string(const json& j, const char* field) {
    require(j.is_object() && j.contains(field) && j[field].is_string(),
            std::string("expected string field '") + field + "'");
    return j[field].get<std::string>();
}

Basis basis_from_field(const json& j) {
    const std::string b = get_string(j, "basis");
    require(b.size() == 1, "basis must be one of m, p, e");
    return basis_from_char(b[0]);
}

int parse_element(const std::string& tok) {
    require(!tok.empty(), "slash string: empty element");
    for (char c : tok) require(std::isdigit(static_cast<unsigned char>(c)) != 0,
                               "slash string: bad element '" + tok + "'");
    return std::stoi(tok);
}

IntegerPartition shape_from_json(const json& arr, const char* what) {
    require(arr.is_array() && !arr.empty(), std::string(what) + ": expected a part list");
    std::vector<int> parts;
    for (const auto& v : arr) {
        require(v.is_number_integer(), std::string(what) + ": parts must be integers");
        parts.push_back(v.get<int>());
    }
    return IntegerPartition(std::move(parts));
}

}  // namespace

SetPartition parse_slash_string(const std::string& s) {
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t next = std::min(s.find('/', pos), s.size());
        const std::string tok = s.substr(pos, next - pos);
        require(!tok.empty(), "slash string: empty block in '" + s + "'");
        std::vector<int> block;
        if (tok.find('.') != std::string::npos) {
            std::size_t p = 0;
            while (p <= tok.size()) {
                const std::size_t q = std::min(tok.find('.', p), tok.size());
                block.push_back(parse_element(tok.substr(p, q - p)));
                p = q + 1;
            }
        } else {
            for (char c : tok) {
                require(c >= '1' && c <= '9', "slash string: bad digit in '" + s + "'");
                block.push_back(c - '0');
            }
        }
        blocks.push_back(std::move(block));
        pos = next + 1;
    }
    try {
        return SetPartition(blocks);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("slash string '" + s + "': " + e.what());
    }
}

Composition parse_composition(const std::string& csv) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t next = std::min(csv.find(',', pos), csv.size());
        parts.push_back(parse_element(csv.substr(pos, next - pos)));
        pos = next + 1;
    }
    return Composition(std::move(parts));
}

nlohmann::json partition_to_json(const SetPartition& p) {
    json out = json::array();
    for (const auto& b : p.blocks()) out.push_back(b);
    return out;
}

SetPartition partition_from_json(const nlohmann::json& j) {
    require(j.is_array(), "partition: expected a list of blocks");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j) {
        require(b.is_array(), "partition: blocks must be lists");
        std::vector<int> block;
        for (const auto& v : b) {
            require(v.is_number_integer(), "partition: elements must be integers");
            block.push_back(v.get<int>());
        }
        blocks.push_back(std::move(block));
    }
    return SetPartition(blocks);
}

nlohmann::json ncexpr_to_json(const NCExpr& x) {
    json terms = json::array();
    for (const auto& [idx, c] : x.terms())
        terms.push_back({{"partition", slash_string(idx)}, {"coeff", rat_str(c)}});
    return {{"degree", x.degree()},
            {"basis", std::string(1, basis_char(x.basis()))},
            {"terms", std::move(terms)}};
}

NCExpr ncexpr_from_json(const nlohmann::json& j) {
    const int degree = get_int(j, "degree");
    NCExpr x(degree, basis_from_field(j));
    for (const auto& t : get_array(j, "terms")) {
        const SetPartition idx = parse_slash_string(get_string(t, "partition"));
        require(idx.degree() == degree, "term partition degree mismatch");
        x.add_term(idx, parse_rat(get_string(t, "coeff")));
    }
    return x;
}

nlohmann::json cexpr_to_json(const CExpr& x) {
    json terms = json::array();
    for (const auto& [lam, c] : x.terms())
        terms.push_back({{"partition", lam.parts}, {"coeff", rat_str(c)}});
    return {{"degree", x.degree()},
            {"basis", std::string(1, basis_char(x.basis()))},
            {"terms", std::move(terms)}};
}

CExpr cexpr_from_json(const nlohmann::json& j) {
    const int degree = get_int(j, "degree");
    CExpr x(degree, basis_from_field(j));
    for (const auto& t : get_array(j, "terms")) {
        require(t.is_object() && t.contains("partition"), "term needs a partition");
        const IntegerPartition lam = shape_from_json(t["partition"], "cexpr");
        require(lam.sum() == degree, "term partition degree mismatch");
        x.add_term(lam, parse_rat(get_string(t, "coeff")));
    }
    return x;
}

nlohmann::json classes_to_json(const EClassExpr& x) {
    json out = json::array();
    for (const auto& [key, c] : x.terms())
        out.push_back({{"shape", key.shape.parts},
                       {"marked_block", key.marked_size},
                       {"coeff", rat_str(c)}});
    return out;
}

EClassExpr classes_from_json(const nlohmann::json& j, int degree, int marked) {
    require(j.is_array(), "classes: expected an array");
    EClassExpr x(degree, marked);
    for (const auto& t : j) {
        require(t.is_object() && t.contains("shape"), "class needs a shape");
        ClassKey key{shape_from_json(t["shape"], "classes"), get_int(t, "marked_block")};
        require(key.shape.sum() == degree, "class shape degree mismatch");
        x.add_term(key, parse_rat(get_string(t, "coeff")));
    }
    return x;
}

nlohmann::json poly_to_json(const UniPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rat_str(c));
    return {{"coeffs", std::move(coeffs)}};
}

UniPoly poly_from_json(const nlohmann::json& j) {
    std::vector<Rat> coeffs;
    for (const auto& v : get_array(j, "coeffs")) {
        require(v.is_string(), "poly coeffs must be rational strings");
        coeffs.push_back(parse_rat(v.get<std::string>()));
    }
    return UniPoly(std::move(coeffs));
}

nlohmann::json graph_to_json(const LabeledMultigraph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"d", g.vertex_count()}, {"edges", std::move(edges)}};
}

LabeledMultigraph graph_from_json(const nlohmann::json& j) {
    const int d = get_int(j, "d");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : get_array(j, "edges")) {
        require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                    e[1].is_number_integer(),
                "graph edges must be [i, j] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return LabeledMultigraph(d, std::move(edges));
}

nlohmann::json yresult_to_json(const YResult& r) {
    json out = ncexpr_to_json(r.expr);
    out["provenance"] = route_name(r.route);
    out["graph"] = graph_to_json(r.graph);
    return out;
}

YResult yresult_from_json(const nlohmann::json& j) {
    require(j.is_object() && j.contains("graph"), "expected a graph field");
    return YResult{graph_from_json(j["graph"]), ncexpr_from_json(j),
                   route_from_name(get_string(j, "provenance"))};
}

LabeledMultigraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int d = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        int a = 0, b = 0;
        if (tag == "d") {
            require(d < 0, "graph text: repeated d line");
            require(static_cast<bool>(ls >> d) && d >= 1, "graph text: bad d line");
        } else if (tag == "e") {
            require(d >= 1, "graph text: e line before d line");
            require(static_cast<bool>(ls >> a >> b), "graph text: bad e line");
            edges.emplace_back(a, b);
        } else {
            throw std::invalid_argument("graph text: unknown directive '" + tag + "'");
        }
        std::string extra;
        require(!(ls >> extra), "graph text: trailing tokens on '" + line + "'");
    }
    require(d >= 1, "graph text: missing d line");
    return LabeledMultigraph(d, std::move(edges));
}

std::string graph_text(const LabeledMultigraph& g) {
    std::string out = "d " + std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

LabeledMultigraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot read graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    require(first != std::string::npos, "graph file '" + path + "' is empty");
    if (text[first] != '{') return parse_graph_text(text);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("graph file '" + path + "': " + e.what());
    }
    return graph_from_json(j);
}

namespace {

// Shared sign/coefficient prefix; a unit coefficient contributes only its sign.
void append_term(std::string& out, bool first, const Rat& c, const std::string& body) {
    const bool neg = c < 0;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    const Rat mag = neg ? Rat(-c) : c;
    if (mag != 1) out += rat_str(mag) + "·";
    out += body;
}

}  // namespace

std::string render_expr(const NCExpr& x, TermStyle style) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : x.terms()) {
        std::string body(1, basis_char(x.basis()));
        body += style == TermStyle::Subscript ? "_{" : "{";
        body += slash_string(idx);
        body += '}';
        append_term(out, first, c, body);
        first = false;
    }
    return out;
}

std::string render_cexpr(const CExpr& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lam, c] : x.terms()) {
        append_term(out, first, c, std::string(1, basis_char(x.basis())) + "_" + render_shape(lam));
        first = false;
    }
    return out;
}

std::string render_shape(const IntegerPartition& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts[i]);
    }
    return out + ")";
}

std::string render_poly(const UniPoly& p, const std::string& var) {
    if (p.degree() < 0) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat c = p.coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (k == 0) {
            out += rat_str(mag);
        } else {
            if (mag != 1) out += rat_str(mag);
            out += var;
            if (k >= 2) out += "^" + std::to_string(k);
        }
        first = false;
    }
    return out.empty() ? "0" : out;
}

std::string render_class_table(const EClassExpr& x) {
    std::vector<std::array<std::string, 3>> rows = {{"shape", "marked", "coeff"}};
    for (const auto& [key, c] : x.terms())
        rows.push_back({render_shape(key.shape), std::to_string(key.marked_size), rat_str(c)});
    std::array<std::size_t, 3> width = {0, 0, 0};
    for (const auto& r : rows)
        for (int i = 0; i < 3; ++i) width[i] = std::max(width[i], r[i].size());
    std::string out;
    for (const auto& r : rows) {
        for (int i = 0; i < 3; ++i) {
            out += r[i];
            if (i < 2) out += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

}  // namespace ncsym
