#include "h2mp/result.hpp"

namespace h2mp {

void SolverConfig::validate() const {
  if (!(damping >= 0.0 && damping < 1.0)) throw Error("damping must lie in [0, 1)");
  if (max_iterations < 1) throw Error("max_iterations must be at least 1");
  if (convergence_window < 1) throw Error("convergence_window must be at least 1");
}

}  // namespace h2mp
