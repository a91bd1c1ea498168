#include <doctest.h>

#include <algorithm>

#include "dualgraph/classification.hpp"
#include "dualgraph/corpus.hpp"
#include "dualgraph/io.hpp"
#include "dualgraph/self_similarity.hpp"

using namespace dualgraph;

namespace {

const char* kA2Document =
    R"({
  "format_version": "1",
  "name": "A2",
  "vertices": [
    {
      "id": 0,
      "genus": 0,
      "weight": 2
    },
    {
      "id": 1,
      "genus": 0,
      "weight": 2
    }
  ],
  "edges": [
    [
      0,
      1
    ]
  ]
}
)";

}  // namespace

TEST_CASE("serialization is canonical and stable") {
  CHECK(serialize(named_graph("A2"), "A2") == kA2Document);
  CHECK(parse_graph(kA2Document) == named_graph("A2"));
  CHECK(parse_graph_name(kA2Document) == std::string("A2"));
  CHECK_FALSE(parse_graph_name(serialize(named_graph("A2"))).has_value());
}

TEST_CASE("parse then serialize is the identity on every named graph") {
  for (const std::string& name : named_graph_catalog()) {
    WeightedGraph g = named_graph(name);
    std::string doc = serialize(g, name);
    CHECK(parse_graph(doc) == g);
    CHECK(serialize(parse_graph(doc), name) == doc);
  }
}

TEST_CASE("serialization round trips random graphs") {
  Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    WeightedGraph g = random_connected_graph(rng, 8);
    CHECK(parse_graph(serialize(g)) == g);
  }
}

TEST_CASE("strict parsing rejects malformed documents") {
  auto message = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };

  CHECK(message("{") .find("parse error") != std::string::npos);
  CHECK(message(R"({"vertices":[],"edges":[]})") ==
        "graph document is missing \"format_version\"");
  CHECK(message(R"({"format_version":"2","vertices":[],"edges":[]})") ==
        "unsupported format_version in graph document");
  CHECK(message(
            R"({"format_version":"1","vertices":[],"edges":[],"extra":1})") ==
        "unknown key \"extra\" in graph document");
  CHECK(message(R"({"format_version":"1","vertices":{},"edges":[]})") ==
        "graph document: vertices is not an array");
  CHECK(message(
            R"({"format_version":"1","vertices":[{"id":0,"genus":0}],"edges":[]})") ==
        "graph document vertex is missing \"weight\"");
  CHECK(message(
            R"({"format_version":"1","vertices":[{"id":0.5,"genus":0,"weight":1}],"edges":[]})") ==
        "graph document vertex id is not an integer");
  CHECK(message(
            R"({"format_version":"1","vertices":[],"edges":[[0,1,2]]})") ==
        "graph document: edge is not a pair");
  CHECK(message(
            R"({"format_version":"1","name":7,"vertices":[],"edges":[]})") ==
        "graph document: name is not a string");
  CHECK(message(
            R"({"format_version":"1","vertices":[{"id":0,"genus":0,"weight":0}],"edges":[]})") ==
        "weight < 1 at vertex 0");
  CHECK(message(
            R"({"format_version":"1","vertices":[{"id":0,"genus":0,"weight":1}],"edges":[[0,0]]})") ==
        "loop at 0");
}

TEST_CASE("the raw parse keeps structurally sound but invalid graphs") {
  std::string doc =
      R"({"format_version":"1","vertices":[{"id":0,"genus":0,"weight":0}],"edges":[]})";
  WeightedGraph g = parse_graph_raw(doc);
  REQUIRE(g.validate());
  CHECK(g.validate()->message == "weight < 1 at vertex 0");
  CHECK_THROWS_AS(parse_graph_raw("{]"), ParseError);
}

TEST_CASE("sandwich witness documents round trip") {
  WeightedGraph g = named_graph("A3");
  SandwichResult r = is_sandwiched(g, 8);
  REQUIRE(r.witness);
  std::string doc = serialize_sandwich_witness(g, *r.witness);
  CHECK(doc.find("\"kind\": \"sandwich-witness\"") != std::string::npos);

  WitnessDocument parsed = parse_witness(doc);
  CHECK(parsed.kind == WitnessDocument::Kind::Sandwich);
  CHECK(parsed.graph == g);
  REQUIRE(parsed.sandwich);
  CHECK(parsed.sandwich->leaves == r.witness->leaves);
  CHECK(parsed.sandwich->augmented == r.witness->augmented);
  CHECK(parsed.sandwich->embedding == r.witness->embedding);
  CHECK(parsed.sandwich->regularity.blowdown_order ==
        r.witness->regularity.blowdown_order);
  CHECK_FALSE(verify_sandwich_witness(parsed.graph, *parsed.sandwich));
  CHECK(serialize_sandwich_witness(parsed.graph, *parsed.sandwich) == doc);
}

TEST_CASE("self similar witness documents round trip") {
  WeightedGraph g = named_graph("A2");
  SelfSimResult r = is_self_similar(g, 8);
  REQUIRE(r.witness);
  std::string doc = serialize_selfsim_witness(*r.witness);
  CHECK(doc.find("\"kind\": \"self-similar-witness\"") != std::string::npos);

  WitnessDocument parsed = parse_witness(doc);
  CHECK(parsed.kind == WitnessDocument::Kind::SelfSimilar);
  REQUIRE(parsed.selfsim);
  CHECK(parsed.selfsim->base == r.witness->base);
  CHECK(parsed.selfsim->seq == r.witness->seq);
  CHECK(parsed.selfsim->embedding == r.witness->embedding);
  CHECK_FALSE(verify_witness(*parsed.selfsim));
  CHECK(serialize_selfsim_witness(*parsed.selfsim) == doc);

  auto ex = extract_sandwich(*parsed.selfsim, kDefaultTowerCap);
  REQUIRE(ex);
  std::string exdoc = serialize_extraction(*ex);
  CHECK(exdoc.find("\"kind\": \"extraction\"") != std::string::npos);
  CHECK(exdoc.find("\"depth\": 1") != std::string::npos);
}

TEST_CASE("the json wrapper emitted by the tool is accepted too") {
  WeightedGraph g = named_graph("A2");
  SandwichResult r = is_sandwiched(g, 8);
  REQUIRE(r.witness);
  std::string doc = serialize_sandwich_witness(g, *r.witness);
  std::string wrapped = "{\"verdict\": \"yes\", \"witness\": " + doc + "}";
  WitnessDocument parsed = parse_witness(wrapped);
  CHECK(parsed.kind == WitnessDocument::Kind::Sandwich);
  CHECK(parsed.graph == g);
}

TEST_CASE("witness parsing rejects malformed documents") {
  auto message = [](const std::string& text) {
    try {
      parse_witness(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("{}") == "witness document is missing \"kind\"");
  CHECK(message(R"({"kind":"mystery"})") == "unknown witness kind");
  CHECK(message(R"({"kind":"self-similar-witness"})") ==
        "self-similar witness is missing \"base\"");

  WeightedGraph g = named_graph("A2");
  SelfSimResult r = is_self_similar(g, 8);
  std::string doc = serialize_selfsim_witness(*r.witness);
  std::string tampered = doc;
  auto pos = tampered.find("\"steps\": [");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 10, "\"steps\": 3");
  // The replacement leaves the steps array contents dangling, so the text
  // is no longer valid json at all; a structural error must come out.
  CHECK(message(tampered) != "no error");
}

TEST_CASE("the catalog covers the standard families") {
  auto names = named_graph_catalog();
  CHECK(names.size() == 23);
  for (const char* expect :
       {"point", "A1", "A9", "D4", "D8", "E6", "E7", "E8", "star-2-1",
        "star-5-4"})
    CHECK(std::find(names.begin(), names.end(), expect) != names.end());

  CHECK(named_graph("point") == point_graph());
  CHECK(named_graph("A1").vertex_count() == 1);
  CHECK(named_graph("A1").weight(0) == 2);
  WeightedGraph d4 = named_graph("D4");
  CHECK(d4.vertex_count() == 4);
  CHECK(d4.valency(1) == 3);
  WeightedGraph e8 = named_graph("E8");
  CHECK(e8.vertex_count() == 8);
  CHECK(e8.valency(2) == 3);
  for (const Vertex& v : e8.vertices()) CHECK(v.weight == 2);
  WeightedGraph s = named_graph("star-3-4");
  CHECK(s.vertex_count() == 5);
  CHECK(s.weight(0) == 3);
  CHECK(s.valency(0) == 4);

  for (const char* bad : {"A0", "D3", "E5", "B2", "star-0-2", "star-2-",
                          "star--1-2", "A", "point2", ""})
    CHECK_THROWS_AS(named_graph(bad), ParseError);
}

TEST_CASE("dot export is stable") {
  CHECK(export_dot(named_graph("star-2-1")) ==
        "graph G {\n"
        "  node [shape=circle];\n"
        "  v0 [label=\"0:(0,2)\"];\n"
        "  v1 [label=\"1:(0,1)\"];\n"
        "  v0 -- v1;\n"
        "}\n");
}
