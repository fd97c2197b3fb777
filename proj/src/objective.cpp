#include "h2mp/objective.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace h2mp {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double validity(std::span<const index_t> labels, std::size_t side_size) {
  std::vector<bool> chosen(side_size, false);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= side_size)
      throw Error("label " + std::to_string(labels[i]) + " out of range");
    chosen[labels[i]] = true;
  }
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (chosen[k] && labels[k] != k) return kNegInf;
  return 0.0;
}

double het_term(const HeteroGraph& g, const HetPotential& pot, index_t i, index_t j,
                bool self_image, bool self_tag) {
  auto id = g.find_assoc(i, j);
  if (!id)
    throw Error("(" + std::to_string(i) + ", " + std::to_string(j) +
                ") is not an association edge");
  if (self_image && self_tag) return pot.q_bar[*id];
  if (self_image) return pot.p_image[*id];
  if (self_tag) return pot.p_tag[*id];
  return pot.q[*id];
}

ObjectiveBreakdown evaluate(const HeteroGraph& g, const HetPotential& pot,
                            const Labeling& labeling) {
  if (!g.scaled()) throw Error("evaluate requires a scaled graph");
  ObjectiveBreakdown out;

  const auto fit = [](const SideGraph& side, std::span<const index_t> labels) {
    double sum = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto s = side.find_scaled(static_cast<index_t>(i), labels[i]);
      if (!s) return kNegInf;
      sum += *s;
    }
    return sum;
  };

  out.fit_image = fit(g.images(), labeling.images);
  out.fit_tag = fit(g.tags(), labeling.tags);
  out.validity_image = validity(labeling.images, g.image_count());
  out.validity_tag = validity(labeling.tags, g.tag_count());

  for (std::size_t id = 0; id < g.assoc_edges().size(); ++id) {
    const AssocEdge& e = g.assoc_edges()[id];
    const bool self_i = labeling.images[e.image] == e.image;
    const bool self_j = labeling.tags[e.tag] == e.tag;
    if (self_i && self_j)
      out.hetero += pot.q_bar[id];
    else if (self_i)
      out.hetero += pot.p_image[id];
    else if (self_j)
      out.hetero += pot.p_tag[id];
    else
      out.hetero += pot.q[id];
  }

  out.total = out.fit_image + out.fit_tag + out.validity_image + out.validity_tag + out.hetero;
  return out;
}

double visual_exemplarness(const HeteroGraph& g, std::span<const index_t> c) {
  if (c.empty()) throw Error("visual exemplarness of an empty labeling");
  double sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto s = g.images().find_raw(static_cast<index_t>(i), c[i]);
    if (!s)
      throw Error("no raw similarity stored for image pair (" + std::to_string(i) + ", " +
                  std::to_string(c[i]) + ")");
    sum += *s;
  }
  return sum / static_cast<double>(c.size());
}

namespace {

// Best raw tag similarity from t into the exemplar's tag set.
double best_match(const HeteroGraph& g, index_t t, std::span<const std::size_t> exemplar_edges) {
  double best = -std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::size_t id : exemplar_edges) {
    index_t u = g.assoc_edges()[id].tag;
    if (auto s = g.tags().find_raw(t, u); s) {
      found = true;
      best = std::max(best, *s);
    }
  }
  if (!found)
    throw Error("tag " + std::to_string(t) + " has no stored similarity to any exemplar tag");
  return best;
}

}  // namespace

double semantic_exemplarness(const HeteroGraph& g, std::span<const index_t> c) {
  double sum = 0.0;
  std::size_t contributing = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto own = g.image_assoc(static_cast<index_t>(i));
    auto ex = g.image_assoc(c[i]);
    if (own.empty() || ex.empty()) continue;
    double set_sim = 0.0;
    for (std::size_t id : own) set_sim += best_match(g, g.assoc_edges()[id].tag, ex);
    sum += set_sim / static_cast<double>(own.size());
    ++contributing;
  }
  if (contributing == 0)
    throw Error("semantic exemplarness undefined: no image/exemplar pair has tags");
  return sum / static_cast<double>(contributing);
}

bool semantic_defined(const HeteroGraph& g, std::span<const index_t> c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.image_assoc(static_cast<index_t>(i)).empty() && !g.image_assoc(c[i]).empty())
      return true;
  return false;
}

}  // namespace h2mp
