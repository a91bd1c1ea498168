#include "dualgraph/self_similarity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dualgraph {

std::optional<Violation> verify_witness(const SelfSimWitness& w) {
  if (auto violation = w.base.validate())
    return Violation{"base invalid: " + violation->message};
  if (w.base.vertex_count() == 0 || !w.base.is_connected())
    return Violation{"base is not connected"};
  if (w.seq.base != w.base)
    return Violation{"sequence is not based at the witness base"};
  if (w.seq.steps.empty())
    return Violation{"sequence is trivial"};
  WeightedGraph result;
  try {
    result = apply_sequence(w.seq).result;
  } catch (const std::invalid_argument& err) {
    return Violation{std::string("sequence does not replay: ") + err.what()};
  }
  if (auto violation = check_embedding(w.base, result, w.embedding))
    return Violation{"embedding invalid: " + violation->message};
  return std::nullopt;
}

SelfSimWitness plant_witness(const WeightedGraph& g,
                             const SandwichWitness& sand,
                             std::optional<VertexId> at) {
  if (auto violation = verify_sandwich_witness(g, sand))
    throw std::invalid_argument("sandwich witness invalid: " +
                                violation->message);
  VertexId center = at.value_or(g.vertices().front().id);
  g.vertex(center);

  SelfSimWitness w;
  w.base = g;
  w.seq.base = g;

  WeightedGraph cur = g;
  VertexId root = cur.fresh_id();
  w.seq.steps.push_back(ModStep::at_vertex(center, root));
  cur = apply_step(cur, w.seq.steps.back());

  // Replay the construction of the augmented graph on top of the root.
  // correspondence sends construction-side ids to their planted copies.
  VertexMap correspondence;
  correspondence.insert(sand.regularity.construction.base.vertices().front().id,
                        root);
  for (const ModStep& step : sand.regularity.construction.steps) {
    VertexId fresh = cur.fresh_id();
    ModStep planted =
        step.kind == ModStep::Kind::Vertex
            ? ModStep::at_vertex(correspondence.at(step.center_a), fresh)
            : ModStep::at_edge(correspondence.at(step.center_a),
                               correspondence.at(step.center_b), fresh);
    cur = apply_step(cur, planted);
    w.seq.steps.push_back(planted);
    correspondence.insert(step.new_id, fresh);
  }

  for (const Vertex& v : g.vertices())
    w.embedding.insert(v.id, correspondence.at(sand.embedding.at(v.id)));
  return w;
}

Tower build_tower(const SelfSimWitness& w, int k_max) {
  if (auto violation = verify_witness(w))
    throw std::invalid_argument("witness invalid: " + violation->message);
  if (k_max < 0) throw std::invalid_argument("negative stage cap");

  Tower tower;
  TowerStage stage0;
  stage0.graph = w.base;
  stage0.composite = VertexMap::identity(w.base);
  stage0.strict = VertexMap::identity(w.base);
  tower.stages.push_back(std::move(stage0));
  if (k_max == 0) return tower;

  TowerStage stage1;
  stage1.graph = apply_sequence(w.seq).result;
  stage1.seq_from_prev = w.seq;
  stage1.phi_prev = w.embedding;
  stage1.composite = w.embedding;
  stage1.strict = VertexMap::identity(w.base);
  tower.stages.push_back(stage1);

  ModSequence prev_seq = w.seq;
  VertexMap prev_phi = w.embedding;
  WeightedGraph cur = tower.stages.back().graph;
  for (int k = 2; k <= k_max; ++k) {
    InducedModification lift = induced_modification(prev_seq, prev_phi, cur);
    TowerStage stage;
    stage.graph = apply_sequence(lift.gamma_seq).result;
    stage.seq_from_prev = lift.gamma_seq;
    stage.phi_prev = lift.lifted_embedding;
    stage.composite =
        compose(lift.lifted_embedding, tower.stages.back().composite);
    stage.strict = VertexMap::identity(w.base);
    prev_seq = std::move(lift.gamma_seq);
    prev_phi = std::move(lift.lifted_embedding);
    cur = stage.graph;
    tower.stages.push_back(std::move(stage));
  }
  return tower;
}

namespace {

// True when no strict transform of a base vertex lies in the image of the
// composite embedding; pruning at such a stage severs the embedded copy
// from every base vertex.
bool stage_admissible(const WeightedGraph& base, const VertexMap& composite) {
  for (const Vertex& v : base.vertices())
    if (composite.maps_to(v.id)) return false;
  return true;
}

}  // namespace

std::optional<Extraction> extract_sandwich(const SelfSimWitness& w,
                                           int k_max) {
  if (k_max < 0) throw std::invalid_argument("negative stage cap");
  if (auto violation = verify_witness(w))
    throw std::invalid_argument("witness invalid: " + violation->message);

  std::vector<VertexId> base_ids;
  for (const Vertex& v : w.base.vertices()) base_ids.push_back(v.id);

  ModSequence prev_seq = w.seq;
  VertexMap prev_phi = w.embedding;
  WeightedGraph cur = apply_sequence(w.seq).result;
  VertexMap composite = w.embedding;
  for (int k = 1; k <= k_max; ++k) {
    if (stage_admissible(w.base, composite)) {
      WeightedGraph pruned = remove_vertices(cur, base_ids);
      VertexId anchor = composite.at(base_ids.front());
      WeightedGraph housing;
      for (WeightedGraph& comp : components(pruned)) {
        if (comp.has_vertex(anchor)) {
          housing = std::move(comp);
          break;
        }
      }
      for (VertexId id : base_ids) {
        if (!housing.has_vertex(composite.at(id)))
          throw std::logic_error(
              "internal inconsistency: embedded copy split across components");
      }
      if (!is_regular(housing))
        throw std::logic_error(
            "internal inconsistency: pruned component is not regular");
      return Extraction{std::move(housing), composite, k};
    }
    if (k == k_max) break;
    InducedModification lift = induced_modification(prev_seq, prev_phi, cur);
    cur = apply_sequence(lift.gamma_seq).result;
    composite = compose(lift.lifted_embedding, composite);
    prev_seq = std::move(lift.gamma_seq);
    prev_phi = std::move(lift.lifted_embedding);
  }
  return std::nullopt;
}

SelfSimResult is_self_similar(const WeightedGraph& g, int max_budget) {
  SandwichResult sand = is_sandwiched(g, max_budget);
  SelfSimResult out;
  out.budget = sand.budget;
  if (sand.verdict == Verdict::DefinitelyNot) {
    out.verdict = Verdict::DefinitelyNot;
    out.reason = "not sandwiched: " + sand.reason;
    return out;
  }
  if (sand.verdict == Verdict::NoWithinBudget) {
    out.verdict = Verdict::NoWithinBudget;
    out.reason = "sandwiched search exhausted the leaf budget";
    return out;
  }
  out.verdict = Verdict::Yes;
  out.witness = plant_witness(g, *sand.witness);
  out.sandwich = std::move(sand.witness);
  return out;
}

std::vector<WeightedGraph> residual_components(const ModSequence& seq) {
  WeightedGraph result = apply_sequence(seq).result;
  std::vector<VertexId> base_ids;
  for (const Vertex& v : seq.base.vertices()) base_ids.push_back(v.id);
  return components(remove_vertices(result, base_ids));
}

}  // namespace dualgraph
