#ifndef H2MP_OBJECTIVE_HPP
#define H2MP_OBJECTIVE_HPP

#include <span>
#include <vector>

#include "h2mp/graph.hpp"
#include "h2mp/types.hpp"

namespace h2mp {

// Joint labeling: images[i] is the exemplar index of image i, tags[j] of
// tag j. A labeling is allowed to be invalid; validity is a queried property.
struct Labeling {
  std::vector<index_t> images;  // c
  std::vector<index_t> tags;    // b

  bool operator==(const Labeling&) const = default;
};

// Term-by-term value of the joint objective. Fit terms use the balance-scaled
// similarities, so total is the plain sum of the five parts. Validity terms
// are 0 or -inf.
struct ObjectiveBreakdown {
  double fit_image = 0.0;
  double fit_tag = 0.0;
  double validity_image = 0.0;
  double validity_tag = 0.0;
  double hetero = 0.0;
  double total = 0.0;
};

// 0 when every exemplar anyone selects also selects itself, else -inf.
double validity(std::span<const index_t> labels, std::size_t side_size);

// Coupling value of one association edge given the two self-selection
// indicators. Throws when (i, j) is not an association edge.
double het_term(const HeteroGraph& g, const HetPotential& pot, index_t i, index_t j,
                bool self_image, bool self_tag);

// Evaluates the joint objective exactly. A label pair with no stored
// similarity contributes -inf to its fit term (it is not a candidate pair).
// Requires a scaled graph.
ObjectiveBreakdown evaluate(const HeteroGraph& g, const HetPotential& pot,
                            const Labeling& labeling);

// Mean raw similarity between each image and its exemplar. Report metric:
// raw (unscaled) values, and a missing pair is an error rather than -inf.
double visual_exemplarness(const HeteroGraph& g, std::span<const index_t> c);

// Mean tag-set similarity between each image's tags and its exemplar's tags,
// where set similarity is the mean over the image's tags of the best raw
// similarity to any exemplar tag. Images whose pair has an empty tag set are
// skipped; it is an error when nothing contributes.
double semantic_exemplarness(const HeteroGraph& g, std::span<const index_t> c);

// True when semantic_exemplarness has at least one contributing image.
bool semantic_defined(const HeteroGraph& g, std::span<const index_t> c);

}  // namespace h2mp

#endif
