#ifndef H2MP_GRAPH_HPP
#define H2MP_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "h2mp/types.hpp"

namespace h2mp {

struct SimEdge {
  index_t row;
  index_t col;
  double value;
};

struct AssocEdge {
  index_t image;
  index_t tag;
};

// One homogeneous similarity graph. Off-diagonal entries live in a CSR
// structure (columns ascending per row); self-similarities (preferences) are
// kept separately because set_preferences rewrites exactly the diagonal.
// Entries that are absent act as -inf: such a pair is never a candidate
// exemplar pair. Raw values survive scaling so report metrics can use them.
class SideGraph {
 public:
  SideGraph() = default;

  std::size_t size() const { return size_; }
  std::size_t edge_count() const { return cols_.size(); }

  std::span<const index_t> neighbors(index_t i) const {
    return {cols_.data() + row_begin_[i], cols_.data() + row_begin_[i + 1]};
  }
  std::span<const double> raw_values(index_t i) const {
    return {raw_.data() + row_begin_[i], raw_.data() + row_begin_[i + 1]};
  }
  std::span<const double> scaled_values(index_t i) const {
    return {scaled_.data() + row_begin_[i], scaled_.data() + row_begin_[i + 1]};
  }

  bool has_preference(index_t i) const;
  double raw_preference(index_t i) const { return raw_diag_[i]; }
  double scaled_preference(index_t i) const { return scaled_diag_[i]; }

  // Lookup including the diagonal; nullopt when the pair is not stored.
  std::optional<double> find_raw(index_t i, index_t k) const;
  std::optional<double> find_scaled(index_t i, index_t k) const;

  // Median of the stored off-diagonal multiset; for an even count the
  // lower-middle element is taken, so the result is always a stored value.
  double off_diagonal_median() const;

 private:
  friend class HeteroGraph;
  friend HeteroGraph build_graph(std::vector<SimEdge>, std::vector<SimEdge>,
                                 std::vector<AssocEdge>, std::size_t, std::size_t);

  std::size_t size_ = 0;
  std::vector<std::size_t> row_begin_;  // size_+1 offsets
  std::vector<index_t> cols_;           // off-diagonal columns, ascending
  std::vector<double> raw_;             // s' aligned with cols_
  std::vector<double> raw_diag_;        // s'(i,i); NaN until set
  std::vector<double> scaled_;          // s = gamma * s'; filled by scaling
  std::vector<double> scaled_diag_;
};

// The full heterogeneous graph: image and tag similarity graphs plus the
// association edges bridging them. Association edges are stored image-major
// and addressed by a dense edge id shared with HetPotential and the solver's
// cross-message tables.
//
// Lifecycle: build_graph -> set_preferences -> scale_similarities; after
// scaling the graph is immutable and safe to share across solver instances.
class HeteroGraph {
 public:
  const SideGraph& side(Side s) const { return s == Side::images ? images_ : tags_; }
  const SideGraph& images() const { return images_; }
  const SideGraph& tags() const { return tags_; }
  std::size_t image_count() const { return images_.size(); }
  std::size_t tag_count() const { return tags_.size(); }

  std::span<const AssocEdge> assoc_edges() const { return assoc_; }
  // Edge ids incident to one image / one tag.
  std::span<const std::size_t> image_assoc(index_t i) const;
  std::span<const std::size_t> tag_assoc(index_t j) const;
  std::size_t image_degree(index_t i) const { return image_assoc(i).size(); }
  std::size_t tag_degree(index_t j) const { return tag_assoc(j).size(); }
  std::optional<std::size_t> find_assoc(index_t i, index_t j) const;

  double gamma(Side s) const { return s == Side::images ? gamma_image_ : gamma_tag_; }
  bool scaled() const { return scaled_; }

  // Sets every self-similarity to lambda * median of the side's stored
  // off-diagonal values. A side whose only node has no off-diagonal entries
  // gets preference 0 (there is nothing to take a median over).
  void set_preferences(double lambda_image, double lambda_tag);

  // Applies s = gamma * s' with gamma = 1 / |median(off-diagonal s')| per
  // side. Requires preferences present on every node; rejects a zero median
  // and a second invocation.
  void scale_similarities();

  // Adds uniform noise from [-magnitude, magnitude] to every scaled entry.
  // Used by the CLI's --seed tie perturbation; not part of the core recipe.
  void perturb_scaled(std::uint64_t seed, double magnitude);

 private:
  friend HeteroGraph build_graph(std::vector<SimEdge>, std::vector<SimEdge>,
                                 std::vector<AssocEdge>, std::size_t, std::size_t);

  SideGraph& mutable_side(Side s) { return s == Side::images ? images_ : tags_; }

  SideGraph images_;
  SideGraph tags_;
  std::vector<AssocEdge> assoc_;              // sorted by (image, tag), unique
  std::vector<std::size_t> image_assoc_begin_;  // n+1
  std::vector<std::size_t> image_assoc_ids_;
  std::vector<std::size_t> tag_assoc_begin_;    // m+1
  std::vector<std::size_t> tag_assoc_ids_;
  double gamma_image_ = 1.0;
  double gamma_tag_ = 1.0;
  bool scaled_ = false;
};

// Validates indices, rejects NaN/inf similarities and duplicate edges with
// conflicting values. Exact duplicates are merged. Diagonal entries in the
// edge lists become user-supplied preferences (see --keep-user-diagonal).
HeteroGraph build_graph(std::vector<SimEdge> image_edges,
                        std::vector<SimEdge> tag_edges,
                        std::vector<AssocEdge> assoc,
                        std::size_t n_images, std::size_t n_tags);

// Four-valued coupling weights per association edge, aligned with
// HeteroGraph::assoc_edges(). p_image applies when only the image side
// self-selects, p_tag when only the tag does, q when neither, q_bar when both.
struct HetPotential {
  std::vector<double> p_image;
  std::vector<double> p_tag;
  std::vector<double> q;
  std::vector<double> q_bar;

  std::size_t edge_count() const { return p_image.size(); }
};

// p(i,j) = theta / image_degree(i), p(j,i) = theta / tag_degree(j); the
// division spreads one node's coupling budget evenly over its edges, so the
// per-node sum of p values is exactly theta. q and q_bar are zero. theta
// must be non-positive (it is a penalty).
HetPotential build_potentials(const HeteroGraph& g, double theta);

}  // namespace h2mp

#endif
