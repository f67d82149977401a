#ifndef SDLAB_POLARIZATION_HPP
#define SDLAB_POLARIZATION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdlab/monomial.hpp"
#include "sdlab/posetmaps.hpp"
#include "sdlab/stanley.hpp"

namespace sdlab {

/// The move X_i^2 | u  =>  u -> (Y / X_i) u applied to the generators of I
/// and J. The fresh variable Y is inserted right after X_i, at index i + 1.
struct PolarizationStep {
  std::size_t variable = 0;
  std::string fresh_name;
  /// (id, PolarStep(g_i), id) with respect to the canonical bound of the source.
  BoxedPosetMap map = BoxedPosetMap::identity({});
};

struct OneStepPolarization {
  ModuleSpec source;
  ModuleSpec target;
  PolarizationStep step;
};

/// Default fresh name: "<name>_<k>" with the least k >= 2 not in the ring.
OneStepPolarization one_step_polarize(const ModuleSpec& spec, std::size_t variable,
                                      std::optional<std::string> fresh_name = std::nullopt);

/// Source ring, the 1-step moves on the renamed ring, and the final
/// reordering into blocks x{j}_1, ..., x{j}_{max(g_j,1)}.
struct PolarizationTrace {
  RingContext source;
  RingContext renamed;
  std::vector<PolarizationStep> steps;
  /// target variable t is variable final_order[t] after the last step
  std::vector<std::size_t> final_order;
  RingContext target;
};

struct FullPolarization {
  ModuleSpec spec;
  PolarizationTrace trace;
};

/// Iterated 1-step polarization, variables processed in the given order
/// (ascending index by default).
FullPolarization full_polarize(const ModuleSpec& spec);
FullPolarization full_polarize(const ModuleSpec& spec, std::span<const std::size_t> variable_order);

/// The one-shot construction v = prod_j prod_{k <= a_j} X_{jk} with the same
/// naming scheme as full_polarize.
ModuleSpec direct_polarize(const ModuleSpec& spec);

/// Replays a trace; throws if the source ring does not match.
ModuleSpec replay_trace(const ModuleSpec& spec, const PolarizationTrace& trace);

/// Renames and reorders variables: variable t of the result is variable
/// order[t] of `spec`, called names[t].
ModuleSpec permute_variables(const ModuleSpec& spec, std::span<const std::size_t> order, std::vector<std::string> names);

/// Carries X^a K[Z] to Phi(X^a) K[Z'] with Z' = Z + {Y} when X_i is in Z and
/// Z + ({X_i, Y} - {Phi(X_i X^a) / Phi(X^a)}) otherwise.
StanleyDecomposition transfer_decomposition(const StanleyDecomposition& d, const OneStepPolarization& step);

/// Monomial-level check of Phi(X^a) K[Z'] meet Phi(R) == Phi(X^a K[Z]) up to
/// a degree bound on the target side.
bool star_condition_holds(const StanleyPart& source, const StanleyPart& target, const OneStepPolarization& step,
                          int degree_bound);

/// Pulls an interval partition of the polarized poset back along the step map.
IntervalPartition depolarize_partition(const IntervalPartition& p, const OneStepPolarization& step);

}  // namespace sdlab

#endif
