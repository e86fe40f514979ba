#include "ncsym/io.hpp"

#include <cstdio>
#include <fstream>

#include "doctest.h"

using namespace ncsym;
using nlohmann::json;

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

struct TempFile {
    std::string path;
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("slash strings parse in both forms") {
    CHECK(parse_slash_string("13/2") == SetPartition({{1, 3}, {2}}));
    CHECK(parse_slash_string("13/2/4") == SetPartition({{1, 3}, {2}, {4}}));
    CHECK(parse_slash_string("1.3/2") == SetPartition({{1, 3}, {2}}));
    CHECK(parse_slash_string("123") == SetPartition::one_block(3));

    // round trip through the renderer at small and double-digit degree
    for (const auto& p : {SetPartition({{1, 4}, {2, 3}}), SetPartition::singletons(6)})
        CHECK(parse_slash_string(slash_string(p)) == p);
    SetPartition big({{1, 10, 11}, {2, 3}, {4, 5, 6, 7, 8, 9}});
    CHECK(slash_string(big) == "1.10.11/2.3/4.5.6.7.8.9");
    CHECK(parse_slash_string(slash_string(big)) == big);

    CHECK_THROWS_AS(parse_slash_string(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_slash_string("13//2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_slash_string("13/2x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_slash_string("13/3"), std::invalid_argument);   // skips 2
    CHECK_THROWS_AS(parse_slash_string("12/2"), std::invalid_argument);   // repeats 2
    CHECK_THROWS_AS(parse_slash_string("10/2"), std::invalid_argument);   // 0 in compact form
    CHECK_THROWS_AS(parse_slash_string("1./2"), std::invalid_argument);
}

TEST_CASE("compositions parse from comma lists") {
    CHECK(parse_composition("3,2,2") == Composition({3, 2, 2}));
    CHECK(parse_composition("5") == Composition({5}));
    CHECK_THROWS_AS(parse_composition("3,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("3,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("a"), std::invalid_argument);
}

TEST_CASE("partition JSON is a list of blocks") {
    SetPartition p({{1, 3}, {2}});
    json j = partition_to_json(p);
    CHECK(j == json::parse("[[1,3],[2]]"));
    CHECK(partition_from_json(j) == p);
    CHECK_THROWS_AS(partition_from_json(json::parse("[[1,\"x\"]]")), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(json::parse("{}")), std::invalid_argument);
}

TEST_CASE("NCExpr JSON round trip") {
    const NCExpr y = to_basis(y_stable(path_graph(3)), Basis::E);
    json j = ncexpr_to_json(y);
    CHECK(j["degree"] == 3);
    CHECK(j["basis"] == "e");
    CHECK(j["terms"].is_array());
    CHECK(j["terms"][0]["partition"] == "123");
    CHECK(j["terms"][0]["coeff"] == "1/2");
    CHECK(ncexpr_from_json(j) == y);

    CHECK_THROWS_AS(ncexpr_from_json(json::parse("{\"degree\":3,\"basis\":\"q\",\"terms\":[]}")),
                    std::invalid_argument);
    CHECK_THROWS_AS(ncexpr_from_json(json::parse("{\"degree\":3,\"basis\":\"m\"}")),
                    std::invalid_argument);
    // term degree must match the header
    json bad = ncexpr_to_json(y);
    bad["terms"][0]["partition"] = "12";
    CHECK_THROWS_AS(ncexpr_from_json(bad), std::invalid_argument);
}

TEST_CASE("CExpr JSON round trip") {
    const CExpr x = x_commutative(cycle_graph(4));
    json j = cexpr_to_json(x);
    CHECK(cexpr_from_json(j) == x);
    CHECK(j["basis"] == "e");
    for (const auto& t : j["terms"]) CHECK(t["partition"].is_array());
    CHECK_THROWS_AS(cexpr_from_json(json::parse(
                        "{\"degree\":3,\"basis\":\"e\",\"terms\":[{\"partition\":[2],\"coeff\":\"1\"}]}")),
                    std::invalid_argument);
}

TEST_CASE("class expansion JSON matches the documented shape") {
    const EClassExpr classes = e_class_expansion(complete_minus_edge(4));
    json j = classes_to_json(classes);
    REQUIRE(j.is_array());
    CHECK(j[0] == json::parse("{\"shape\":[3,1],\"marked_block\":1,\"coeff\":\"1/3\"}"));
    CHECK(j[1] == json::parse("{\"shape\":[4],\"marked_block\":4,\"coeff\":\"2/3\"}"));
    CHECK(classes_from_json(j, 4, 4) == classes);
    CHECK_THROWS_AS(classes_from_json(j, 5, 5), std::invalid_argument);
}

TEST_CASE("polynomial JSON and rendering") {
    const UniPoly chi = chromatic_polynomial(path_graph(3));
    json j = poly_to_json(chi);
    CHECK(j == json::parse("{\"coeffs\":[\"0\",\"1\",\"-2\",\"1\"]}"));
    CHECK(poly_from_json(j) == chi);
    CHECK(render_poly(chi) == "n^3 - 2n^2 + n");
    CHECK(render_poly(UniPoly()) == "0");
    CHECK(render_poly(UniPoly({ratio(5)})) == "5");
    CHECK(render_poly(UniPoly({ratio(0), ratio(-1), ratio(3)})) == "3n^2 - n");
    CHECK(render_poly(UniPoly({ratio(2), ratio(0), ratio(-1)}), "q") == "-q^2 + 2");
}

TEST_CASE("graph JSON round trip") {
    const auto g = k_alpha_chain(Composition({3, 2}));
    json j = graph_to_json(g);
    CHECK(j["d"] == 4);
    CHECK(graph_from_json(j) == g);
    CHECK_THROWS_AS(graph_from_json(json::parse("{\"d\":2,\"edges\":[[1]]}")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse("{\"d\":2,\"edges\":[[1,3]]}")),
                    std::invalid_argument);
}

TEST_CASE("graph text format") {
    const auto g = cycle_graph(4);
    CHECK(graph_text(g) == "d 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
    CHECK(parse_graph_text(graph_text(g)) == g);
    CHECK(parse_graph_text("# a loop\nd 2\n\ne 1 1  # with comment\n") ==
          LabeledMultigraph(2, {{1, 1}}));

    CHECK_THROWS_AS(parse_graph_text("e 1 2\nd 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_text("d 2\nd 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_text("d 2\nv 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_text("d 2\ne 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_text("d 2\ne 1 2 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_text(""), std::invalid_argument);
}

TEST_CASE("graph files are sniffed as JSON or text") {
    TempFile jf{"io_test_graph.json"}, tf{"io_test_graph.txt"}, bf{"io_test_bad.json"};
    write_file(jf.path, graph_to_json(path_graph(4)).dump());
    write_file(tf.path, graph_text(path_graph(4)));
    write_file(bf.path, "{\"d\": 3,");
    CHECK(load_graph_file(jf.path) == path_graph(4));
    CHECK(load_graph_file(tf.path) == path_graph(4));
    CHECK_THROWS_AS(load_graph_file(bf.path), std::invalid_argument);
    CHECK_THROWS_AS(load_graph_file("io_test_missing.json"), std::invalid_argument);
}

TEST_CASE("YResult JSON keeps the provenance and the graph") {
    const YResult r = compute_y(path_graph(3), Basis::M, YRoute::DelCon);
    json j = yresult_to_json(r);
    CHECK(j["provenance"] == "delcon");
    const YResult back = yresult_from_json(j);
    CHECK(back.graph == r.graph);
    CHECK(back.expr == r.expr);
    CHECK(back.route == r.route);
    j["provenance"] = "psychic";
    CHECK_THROWS_AS(yresult_from_json(j), std::invalid_argument);
}

TEST_CASE("expression rendering in both styles") {
    const NCExpr ym = y_stable(path_graph(3));
    CHECK(render_expr(ym) == "m_{13/2} + m_{1/2/3}");
    CHECK(render_expr(ym, TermStyle::Compact) == "m{13/2} + m{1/2/3}");
    const NCExpr ye = to_basis(ym, Basis::E);
    CHECK(render_expr(ye) ==
          "1/2·e_{123} + 1/2·e_{12/3} - 1/2·e_{13/2} + 1/2·e_{1/23}");
    CHECK(render_expr(NCExpr(3, Basis::P)) == "0");
    NCExpr neg(2, Basis::P);
    neg.add_term(SetPartition::one_block(2), ratio(-2));
    CHECK(render_expr(neg) == "-2·p_{12}");
}

TEST_CASE("commutative and class rendering") {
    CHECK(render_shape(IntegerPartition({3, 1})) == "(3,1)");
    CHECK(render_cexpr(closed_form_x_kd_minus_e(4)) == "2·e_(3,1) + 16·e_(4)");
    CHECK(render_cexpr(CExpr(3, Basis::E)) == "0");
    CHECK(render_class_table(e_class_expansion(complete_minus_edge(4))) ==
          "shape  marked  coeff\n"
          "(3,1)  1       1/3\n"
          "(4)    4       2/3\n");
}
