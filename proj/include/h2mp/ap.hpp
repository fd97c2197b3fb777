#ifndef H2MP_AP_HPP
#define H2MP_AP_HPP

#include <span>
#include <vector>

#include "h2mp/graph.hpp"
#include "h2mp/result.hpp"
#include "h2mp/types.hpp"

namespace h2mp {

namespace detail {

// Responsibility/availability state for one homogeneous side. Messages live
// on the candidate pairs: the stored off-diagonal edges plus every diagonal,
// in a CSR layout with ascending columns per row. The hybrid solver reuses
// this engine verbatim (with nonzero preference offsets), which is what makes
// its no-association degeneration to plain AP exact.
struct SideState {
  std::size_t n = 0;
  std::vector<std::size_t> row_begin;  // n+1
  std::vector<index_t> cols;           // candidates, ascending, self included
  std::vector<double> sims;            // scaled similarities aligned with cols
  std::vector<std::size_t> self_pos;   // flat index of (i, i) per row
  std::vector<double> r;
  std::vector<double> a;
  std::vector<double> col_sum;         // workspace for the availability pass

  std::span<const index_t> candidates(index_t i) const {
    return {cols.data() + row_begin[i], cols.data() + row_begin[i + 1]};
  }
  std::size_t find(index_t i, index_t k) const;  // flat index of (i, k)
  double belief(index_t i, index_t k) const {
    std::size_t e = find(i, k);
    return r[e] + a[e];
  }
};

SideState make_side_state(const SideGraph& side);

// r(i,k) = sbar(i,k) - max_{k' != k}[sbar(i,k') + a(i,k')], damped.
// sbar adds pref_offset[i] to the diagonal entry only. Rows whose sole
// candidate is the node itself are left untouched (forced self-exemplars).
void update_responsibilities(SideState& st, std::span<const double> pref_offset,
                             double damping);

// a(k,k) = sum_{i' != k} max(0, r(i',k));
// a(i,k) = min(0, r(k,k) + sum_{i' != i,k} max(0, r(i',k))), damped.
void update_availabilities(SideState& st, double damping);

// argmax_k r(i,k) + a(i,k) over the candidates, lowest index on ties.
std::vector<index_t> compute_assignment(const SideState& st);

// Makes an assignment valid: if no node selects itself, the one with the
// largest self belief is promoted; every node whose exemplar is not
// self-selecting moves to its best self-selecting candidate, or becomes an
// exemplar itself when it has none.
void repair_labels(const SideState& st, std::vector<index_t>& labels);

}  // namespace detail

// Plain single-domain affinity propagation over one side of the graph.
// One solver instance owns its state and is single-threaded; any number of
// instances may share the same immutable scaled graph.
class ApSolver {
 public:
  ApSolver(const HeteroGraph& g, const SolverConfig& cfg, Side side = Side::images);

  void update_responsibilities();
  void update_availabilities();
  void iterate();  // one synchronous sweep: all r, then all a

  std::size_t iteration() const { return iteration_; }
  const detail::SideState& state() const { return state_; }
  detail::SideState& state() { return state_; }

  std::vector<index_t> raw_assignment() const { return detail::compute_assignment(state_); }

  // Iterates until the assignment is stable for convergence_window
  // consecutive iterations or max_iterations is reached, then repairs and
  // packages the labeling of this side.
  SolveResult run();

 private:
  const HeteroGraph& graph_;
  SolverConfig cfg_;
  Side side_;
  detail::SideState state_;
  std::vector<double> zero_offset_;
  std::size_t iteration_ = 0;
};

SolveResult ap_run(const HeteroGraph& g, const SolverConfig& cfg, Side side = Side::images);

}  // namespace h2mp

#endif
