#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualgraph/classification.hpp"
#include "dualgraph/graph.hpp"
#include "dualgraph/self_similarity.hpp"

namespace dualgraph {

// Raised on malformed documents; the message carries the byte offset for
// syntax errors and the violated invariant otherwise.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kFormatVersion = "1";

// Canonical graph document: format_version, optional name, vertices in
// ascending id order, edges sorted with the smaller endpoint first.
// serialize is a fixed point on parsed documents byte for byte.
std::string serialize(const WeightedGraph& g, const std::string& name = "");
WeightedGraph parse_graph(const std::string& text);
// Structural parse only: well-formed documents are accepted even when the
// graph violates its invariants, which callers surface via validate().
WeightedGraph parse_graph_raw(const std::string& text);
// Name recorded in the document, when present.
std::optional<std::string> parse_graph_name(const std::string& text);

std::string serialize_sandwich_witness(const WeightedGraph& g,
                                       const SandwichWitness& w);
std::string serialize_selfsim_witness(const SelfSimWitness& w);
std::string serialize_extraction(const Extraction& e);

// Either kind of witness document, recognized by its "kind" field.
struct WitnessDocument {
  enum class Kind { Sandwich, SelfSimilar };

  Kind kind{Kind::Sandwich};
  WeightedGraph graph;  // sandwich documents: the graph being witnessed
  std::optional<SandwichWitness> sandwich;
  std::optional<SelfSimWitness> selfsim;
};

WitnessDocument parse_witness(const std::string& text);

// Builders for the standard shapes: "point", chains "A<n>", forks "D<n>"
// (n >= 4), "E6" "E7" "E8" (all of those with every vertex (0,2)), and
// stars "star-<c>-<k>" (center (0,c) with k leaves). Throws ParseError on
// unknown names.
WeightedGraph named_graph(const std::string& name);
std::vector<std::string> named_graph_catalog();

// Graphviz rendering with vertices labeled "id:(genus,weight)".
std::string export_dot(const WeightedGraph& g);

}  // namespace dualgraph
