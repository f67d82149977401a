#ifndef SDLAB_STANLEY_HPP
#define SDLAB_STANLEY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdlab/monomial.hpp"

namespace sdlab {

/// The lattice interval [lo, hi] of N^n.
struct Interval {
  ExponentVector lo;
  ExponentVector hi;

  Interval(ExponentVector l, ExponentVector h);
  bool contains(const ExponentVector& c) const { return leq(lo, c) && leq(c, hi); }
  std::size_t size() const { return box_size(lo, hi); }
  std::vector<ExponentVector> points() const { return box_points(lo, hi); }

  friend auto operator<=>(const Interval&, const Interval&) = default;
  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& iv);

/// P^g_{I/J}: the points a <= g with X^a in I \ J, sorted lexicographically.
class CharacteristicPoset {
public:
  CharacteristicPoset(ModuleSpec spec, ExponentVector g);

  const ModuleSpec& spec() const { return spec_; }
  const ExponentVector& bound() const { return g_; }
  const std::vector<ExponentVector>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const ExponentVector& a) const;

private:
  ModuleSpec spec_;
  ExponentVector g_;
  std::vector<ExponentVector> points_;
};

CharacteristicPoset characteristic_poset(const ModuleSpec& spec, const ExponentVector& g);
CharacteristicPoset characteristic_poset(const ModuleSpec& spec);

/// Number of coordinates j with b_j == g_j.
int rho(const ExponentVector& b, const ExponentVector& g);

struct IntervalPartition {
  std::vector<Interval> intervals;
  ExponentVector bound;

  /// min over intervals of rho(hi, bound); the ring size for an empty partition.
  int sdepth() const;
};

/// Disjoint intervals contained in the poset whose union is the poset.
bool is_partition_of(const IntervalPartition& p, const CharacteristicPoset& poset);

/// One Stanley space X^a K[Z]; `vars` holds sorted variable indices.
struct StanleyPart {
  ExponentVector a;
  std::vector<std::size_t> vars;

  bool contains(const ExponentVector& m) const;
  friend auto operator<=>(const StanleyPart&, const StanleyPart&) = default;
  friend bool operator==(const StanleyPart&, const StanleyPart&) = default;
};

struct StanleyDecomposition {
  std::size_t nvars = 0;
  std::vector<StanleyPart> parts;

  int sdepth() const;
  HilbertSeries hilbert_series() const;
};

/// D(P): for each interval [a, b] one part (c, Z_b) per c in [a, b] with
/// c_j = a_j on every j in Z_b.
StanleyDecomposition partition_to_decomposition(const IntervalPartition& p);

struct DecompositionCheck {
  bool ok = true;
  std::string reason;
  std::optional<ExponentVector> witness;

  explicit operator bool() const { return ok; }
};

/// Checks disjointness, containment in I \ J, pointwise coverage of every
/// monomial of degree <= degree_bound, and the exact Hilbert-series identity.
DecompositionCheck validate_decomposition(const StanleyDecomposition& d, const ModuleSpec& spec,
                                          int degree_bound);
/// Same with degree_bound = |g| + 1.
DecompositionCheck validate_decomposition(const StanleyDecomposition& d, const ModuleSpec& spec);

struct CoverOptions {
  /// Remember uncovered sets that are known to admit no cover.
  bool memoize = false;
};

using TopPredicate = std::function<bool(const ExponentVector&)>;

/// Exact cover of `points` by intervals contained in `points` whose upper
/// endpoint satisfies `admissible_top`. Deterministic: the branch point is the
/// lexicographically least uncovered point and candidate tops are tried in
/// lexicographic order. Returns nullopt when no cover exists.
std::optional<std::vector<Interval>> exact_cover_by_intervals(std::span<const ExponentVector> points,
                                                              const TopPredicate& admissible_top,
                                                              CoverOptions options = {});

struct SdepthResult {
  int sdepth = 0;
  IntervalPartition witness;
};

SdepthResult sdepth(const ModuleSpec& spec, const ExponentVector& g, CoverOptions options = {});
SdepthResult sdepth(const ModuleSpec& spec, CoverOptions options = {});

}  // namespace sdlab

#endif
