#ifndef H2MP_RESULT_HPP
#define H2MP_RESULT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "h2mp/objective.hpp"
#include "h2mp/types.hpp"

namespace h2mp {

// Knobs shared by both solvers. lambda_* and theta belong to graph
// preparation (set_preferences / build_potentials); they ride along here so
// one struct describes a full run.
struct SolverConfig {
  double damping = 0.5;                  // in [0, 1); blended as (1-d)*new + d*old
  std::size_t max_iterations = 1000;
  std::size_t convergence_window = 10;   // consecutive stable assignments required
  double lambda_image = 1.0;
  double lambda_tag = 1.0;
  double theta = -15.0;

  void validate() const;
};

struct SolveResult {
  std::vector<index_t> image_exemplars;   // sorted unique values of image_assignment
  std::vector<index_t> image_assignment;  // c, always valid (repaired)
  std::vector<index_t> tag_exemplars;
  std::vector<index_t> tag_assignment;    // b
  ObjectiveBreakdown objective;
  std::size_t iterations = 0;
  bool converged = false;
  std::optional<double> visual_exemplarness;
  std::optional<double> semantic_exemplarness;
};

}  // namespace h2mp

#endif
