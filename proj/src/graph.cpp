#include "h2mp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace h2mp {

namespace {

std::string pair_str(index_t a, index_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// CSR-ify one side. Diagonal entries are routed to the preference array.
void build_side(SideGraph& side, std::vector<SimEdge>& edges, std::size_t n,
                const char* name) {
  side.size_ = n;
  side.raw_diag_.assign(n, std::numeric_limits<double>::quiet_NaN());

  for (const SimEdge& e : edges) {
    if (e.row >= n || e.col >= n)
      throw Error(std::string(name) + " similarity edge " + pair_str(e.row, e.col) +
                  " out of range for " + std::to_string(n) + " nodes");
    if (!std::isfinite(e.value))
      throw Error(std::string(name) + " similarity " + pair_str(e.row, e.col) +
                  " is not finite");
  }

  std::sort(edges.begin(), edges.end(), [](const SimEdge& a, const SimEdge& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  side.row_begin_.assign(n + 1, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e > 0 && edges[e].row == edges[e - 1].row && edges[e].col == edges[e - 1].col) {
      if (edges[e].value != edges[e - 1].value)
        throw Error(std::string(name) + " similarity " + pair_str(edges[e].row, edges[e].col) +
                    " given twice with conflicting values");
      continue;  // exact duplicate
    }
    if (edges[e].row == edges[e].col) {
      side.raw_diag_[edges[e].row] = edges[e].value;
      continue;
    }
    side.cols_.push_back(edges[e].col);
    side.raw_.push_back(edges[e].value);
    ++side.row_begin_[edges[e].row + 1];
  }
  for (std::size_t i = 0; i < n; ++i)
    side.row_begin_[i + 1] += side.row_begin_[i];
}

}  // namespace

bool SideGraph::has_preference(index_t i) const { return std::isfinite(raw_diag_[i]); }

std::optional<double> SideGraph::find_raw(index_t i, index_t k) const {
  if (i == k) return has_preference(i) ? std::optional<double>(raw_diag_[i]) : std::nullopt;
  auto nb = neighbors(i);
  auto it = std::lower_bound(nb.begin(), nb.end(), k);
  if (it == nb.end() || *it != k) return std::nullopt;
  return raw_[row_begin_[i] + static_cast<std::size_t>(it - nb.begin())];
}

std::optional<double> SideGraph::find_scaled(index_t i, index_t k) const {
  if (i == k) return scaled_diag_[i];
  auto nb = neighbors(i);
  auto it = std::lower_bound(nb.begin(), nb.end(), k);
  if (it == nb.end() || *it != k) return std::nullopt;
  return scaled_[row_begin_[i] + static_cast<std::size_t>(it - nb.begin())];
}

double SideGraph::off_diagonal_median() const {
  std::vector<double> vals(raw_);
  // lower-middle element, deterministic for even counts
  std::size_t mid = (vals.size() - 1) / 2;
  std::nth_element(vals.begin(), vals.begin() + mid, vals.end());
  return vals[mid];
}

std::span<const std::size_t> HeteroGraph::image_assoc(index_t i) const {
  return {image_assoc_ids_.data() + image_assoc_begin_[i],
          image_assoc_ids_.data() + image_assoc_begin_[i + 1]};
}

std::span<const std::size_t> HeteroGraph::tag_assoc(index_t j) const {
  return {tag_assoc_ids_.data() + tag_assoc_begin_[j],
          tag_assoc_ids_.data() + tag_assoc_begin_[j + 1]};
}

std::optional<std::size_t> HeteroGraph::find_assoc(index_t i, index_t j) const {
  for (std::size_t id : image_assoc(i))
    if (assoc_[id].tag == j) return id;
  return std::nullopt;
}

void HeteroGraph::set_preferences(double lambda_image, double lambda_tag) {
  if (scaled_) throw Error("set_preferences called after scale_similarities");
  const double lambdas[2] = {lambda_image, lambda_tag};
  for (Side s : {Side::images, Side::tags}) {
    SideGraph& side = mutable_side(s);
    if (side.size() == 0) continue;
    if (side.edge_count() == 0) {
      if (side.size() > 1)
        throw Error("cannot set preferences: side has no off-diagonal similarities");
      side.raw_diag_[0] = 0.0;  // singleton side, nothing to take a median over
      continue;
    }
    double med = side.off_diagonal_median();
    double pref = lambdas[s == Side::images ? 0 : 1] * med;
    std::fill(side.raw_diag_.begin(), side.raw_diag_.end(), pref);
  }
}

void HeteroGraph::scale_similarities() {
  if (scaled_) throw Error("scale_similarities called twice");
  for (Side s : {Side::images, Side::tags}) {
    SideGraph& side = mutable_side(s);
    double gamma = 1.0;
    if (side.size() > 0) {
      for (index_t i = 0; i < side.size(); ++i)
        if (!side.has_preference(i))
          throw Error("node " + std::to_string(i) +
                      " has no self-similarity; run set_preferences or supply diagonals");
      if (side.edge_count() > 0) {
        double med = side.off_diagonal_median();
        if (med == 0.0) throw Error("median similarity is zero; cannot derive balance weight");
        gamma = 1.0 / std::abs(med);
      }
    }
    side.scaled_.resize(side.raw_.size());
    for (std::size_t e = 0; e < side.raw_.size(); ++e) side.scaled_[e] = gamma * side.raw_[e];
    side.scaled_diag_.resize(side.size());
    for (index_t i = 0; i < side.size(); ++i) side.scaled_diag_[i] = gamma * side.raw_diag_[i];
    (s == Side::images ? gamma_image_ : gamma_tag_) = gamma;
  }
  scaled_ = true;
}

void HeteroGraph::perturb_scaled(std::uint64_t seed, double magnitude) {
  if (!scaled_) throw Error("perturb_scaled requires a scaled graph");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-magnitude, magnitude);
  for (Side s : {Side::images, Side::tags}) {
    SideGraph& side = mutable_side(s);
    for (double& v : side.scaled_) v += noise(rng);
    for (double& v : side.scaled_diag_) v += noise(rng);
  }
}

HeteroGraph build_graph(std::vector<SimEdge> image_edges, std::vector<SimEdge> tag_edges,
                        std::vector<AssocEdge> assoc, std::size_t n_images,
                        std::size_t n_tags) {
  HeteroGraph g;
  build_side(g.images_, image_edges, n_images, "image");
  build_side(g.tags_, tag_edges, n_tags, "tag");

  for (const AssocEdge& e : assoc) {
    if (e.image >= n_images || e.tag >= n_tags)
      throw Error("association edge " + pair_str(e.image, e.tag) + " out of range");
  }
  std::sort(assoc.begin(), assoc.end(), [](const AssocEdge& a, const AssocEdge& b) {
    return a.image != b.image ? a.image < b.image : a.tag < b.tag;
  });
  assoc.erase(std::unique(assoc.begin(), assoc.end(),
                          [](const AssocEdge& a, const AssocEdge& b) {
                            return a.image == b.image && a.tag == b.tag;
                          }),
              assoc.end());
  g.assoc_ = std::move(assoc);

  g.image_assoc_begin_.assign(n_images + 1, 0);
  g.tag_assoc_begin_.assign(n_tags + 1, 0);
  for (const AssocEdge& e : g.assoc_) {
    ++g.image_assoc_begin_[e.image + 1];
    ++g.tag_assoc_begin_[e.tag + 1];
  }
  for (std::size_t i = 0; i < n_images; ++i) g.image_assoc_begin_[i + 1] += g.image_assoc_begin_[i];
  for (std::size_t j = 0; j < n_tags; ++j) g.tag_assoc_begin_[j + 1] += g.tag_assoc_begin_[j];

  g.image_assoc_ids_.resize(g.assoc_.size());
  g.tag_assoc_ids_.resize(g.assoc_.size());
  std::vector<std::size_t> img_fill(g.image_assoc_begin_.begin(), g.image_assoc_begin_.end() - 1);
  std::vector<std::size_t> tag_fill(g.tag_assoc_begin_.begin(), g.tag_assoc_begin_.end() - 1);
  for (std::size_t id = 0; id < g.assoc_.size(); ++id) {
    g.image_assoc_ids_[img_fill[g.assoc_[id].image]++] = id;
    g.tag_assoc_ids_[tag_fill[g.assoc_[id].tag]++] = id;
  }
  return g;
}

HetPotential build_potentials(const HeteroGraph& g, double theta) {
  if (theta > 0.0) throw Error("theta must be non-positive (it is a penalty weight)");
  HetPotential pot;
  const std::size_t ne = g.assoc_edges().size();
  pot.p_image.resize(ne);
  pot.p_tag.resize(ne);
  pot.q.assign(ne, 0.0);
  pot.q_bar.assign(ne, 0.0);
  for (std::size_t id = 0; id < ne; ++id) {
    const AssocEdge& e = g.assoc_edges()[id];
    pot.p_image[id] = theta / static_cast<double>(g.image_degree(e.image));
    pot.p_tag[id] = theta / static_cast<double>(g.tag_degree(e.tag));
  }
  return pot;
}

}  // namespace h2mp
