#ifndef SDLAB_POSETMAPS_HPP
#define SDLAB_POSETMAPS_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sdlab/monomial.hpp"
#include "sdlab/stanley.hpp"

namespace sdlab {

/// A monotone map phi: [0, g] -> [0, g'] between boxes of N^n and N^n'.
///
/// Structured kinds evaluate by formula and are defined on all of N^n; the
/// box still bounds every check. OneDim and Table kinds are only known on
/// their box. Evaluation through operator() refuses points outside [0, g].
class BoxedPosetMap {
public:
  struct Identity {
    bool operator==(const Identity&) const = default;
  };
  /// table[i] = phi(i) for i = 0..g, nondecreasing.
  struct OneDim {
    std::vector<ExponentVector> table;
    bool operator==(const OneDim&) const = default;
  };
  struct Product {
    std::vector<BoxedPosetMap> factors;
    bool operator==(const Product&) const = default;
  };
  /// (a, b) -> min(a, b).
  struct Min2 {
    bool operator==(const Min2&) const = default;
  };
  /// i -> i for i < k, i + 1 for i >= k.
  struct ShiftUp {
    int k;
    bool operator==(const ShiftUp&) const = default;
  };
  /// i -> i for i <= k, i - 1 for i > k.
  struct ShiftDown {
    int k;
    bool operator==(const ShiftDown&) const = default;
  };
  /// 0 -> (0,0), 1 -> (1,0), i -> (i-1, 1) for i >= 2.
  struct PolarStep {
    bool operator==(const PolarStep&) const = default;
  };
  /// values[k] = phi(k-th point of [0, g] in lexicographic order).
  struct Table {
    std::vector<ExponentVector> values;
    bool operator==(const Table&) const = default;
  };
  using Kind = std::variant<Identity, OneDim, Product, Min2, ShiftUp, ShiftDown, PolarStep, Table>;

  static BoxedPosetMap identity(ExponentVector g);
  static BoxedPosetMap one_dim(std::vector<ExponentVector> table);
  static BoxedPosetMap product(std::vector<BoxedPosetMap> factors);
  static BoxedPosetMap min2(ExponentVector g);
  static BoxedPosetMap shift_up(int k, int g);
  static BoxedPosetMap shift_down(int k, int g);
  static BoxedPosetMap polar_step(int g);
  static BoxedPosetMap table(ExponentVector g, std::vector<ExponentVector> values);

  /// Same map with a larger codomain bound; must stay >= phi(g).
  BoxedPosetMap with_codomain(ExponentVector g_prime) const;

  const Kind& kind() const { return kind_; }
  std::string kind_name() const;
  const ExponentVector& domain_bound() const { return g_; }
  const ExponentVector& codomain_bound() const { return g_prime_; }
  std::size_t domain_dim() const { return g_.size(); }
  std::size_t codomain_dim() const { return n_prime_; }

  /// Throws std::out_of_range outside [0, g].
  ExponentVector operator()(const ExponentVector& a) const;
  /// nullopt where the map is not determined (tabulated kinds off their box).
  std::optional<ExponentVector> evaluate_unboxed(const ExponentVector& a) const;
  /// Whether domain coordinate j is only known up to g_j.
  bool tabulated(std::size_t j) const;

  friend bool operator==(const BoxedPosetMap&, const BoxedPosetMap&) = default;

private:
  BoxedPosetMap(Kind kind, ExponentVector g, std::size_t n_prime);

  Kind kind_;
  ExponentVector g_;
  std::size_t n_prime_ = 0;
  ExponentVector g_prime_;
};

ExponentVector evaluate_map(const BoxedPosetMap& phi, const ExponentVector& a);

struct MapClassification {
  bool monotone = true;
  bool preserves_joins = true;
  bool preserves_meets = true;
  std::optional<std::pair<ExponentVector, ExponentVector>> monotone_witness;
  std::optional<std::pair<ExponentVector, ExponentVector>> join_witness;
  std::optional<std::pair<ExponentVector, ExponentVector>> meet_witness;
};

/// Exhaustive over all pairs of [0, g].
MapClassification classify_map(const BoxedPosetMap& phi);

struct PreimageRecord {
  Interval target;
  std::vector<Interval> cover;
  /// min_i rho_g(b^i) - rho_g'(b'); nullopt for an empty preimage.
  std::optional<int> margin;
};

struct DepthChangeCertificate {
  int ell = 0;
  ExponentVector g;
  ExponentVector g_prime;
  std::vector<PreimageRecord> records;
};

struct DepthChangeResult {
  std::optional<DepthChangeCertificate> certificate;
  /// First interval of [0, g'] whose preimage admits no admissible cover.
  std::optional<Interval> failing;

  explicit operator bool() const { return certificate.has_value(); }
};

/// Checks that phi changes the Stanley depth by ell with respect to its
/// domain and codomain bounds, covering every interval of [0, g'].
DepthChangeResult verify_depth_change(const BoxedPosetMap& phi, int ell, unsigned threads = 1);

/// The restricted preimage of [lo, hi] inside [0, g], lexicographically sorted.
std::vector<ExponentVector> restricted_preimage(const BoxedPosetMap& phi, const Interval& target);

BoxedPosetMap product_map(const BoxedPosetMap& first, const BoxedPosetMap& second);
/// (id_before, phi, id_after); empty identity blocks are dropped.
BoxedPosetMap pad_with_identities(const BoxedPosetMap& phi, const ExponentVector& before, const ExponentVector& after);

class SplitError : public Error {
public:
  SplitError(const std::string& what, std::pair<ExponentVector, ExponentVector> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::pair<ExponentVector, ExponentVector>& witness() const { return witness_; }

private:
  std::pair<ExponentVector, ExponentVector> witness_;
};

/// phi(a)[codomain_order[t]] == product(a[domain_order[0]], ...)[t].
struct SplitResult {
  std::vector<BoxedPosetMap> factors;
  std::vector<std::size_t> domain_order;
  std::vector<std::size_t> codomain_order;

  ExponentVector reassemble(const ExponentVector& a) const;
};

/// Splits a join- and meet-preserving map into one-dimensional factors with
/// disjoint codomain supports, ordered by their least codomain coordinate.
SplitResult split_join_meet_map(const BoxedPosetMap& phi);

/// Minimal generators of {a : phi(a) in I'}.
MonomialIdeal pullback_ideal(const BoxedPosetMap& phi, const MonomialIdeal& target);
/// Ideal generated by phi of the minimal generators of I.
MonomialIdeal pushforward_ideal(const BoxedPosetMap& phi, const MonomialIdeal& source);

}  // namespace sdlab

#endif
