#ifndef SDLAB_VERIFY_HPP
#define SDLAB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sdlab/io.hpp"
#include "sdlab/monomial.hpp"
#include "sdlab/posetmaps.hpp"
#include "sdlab/stanley.hpp"

namespace sdlab {

struct SpecBounds {
  int max_n = 3;
  int max_deg = 3;
  int max_gens = 4;
};

/// I from 1..max_gens random generators; J = 0 with probability 1/2, else
/// generated by joins of generators of I with random vectors, redrawn until
/// J is strictly inside I.
ModuleSpec random_spec(std::mt19937_64& rng, const SpecBounds& bounds = {});
ModuleSpec random_spec(std::uint64_t seed, const SpecBounds& bounds = {});

/// A random spec and a variable to polarize at, preferring variables whose
/// bound is at least 2.
std::pair<ModuleSpec, std::size_t> random_polarization_instance(std::mt19937_64& rng, const SpecBounds& bounds = {});

/// Per-trial generator, independent of the other trials.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial);

/// Exhaustive search over all interval partitions of the characteristic
/// poset, branching on every interval through the least uncovered point.
int naive_sdepth(const ModuleSpec& spec, const ExponentVector& g);
int naive_sdepth(const ModuleSpec& spec);

/// Independent recheck of a certificate: the cover of each record is a set
/// of disjoint intervals inside [0, g] whose union is the restricted
/// preimage, every top clears the margin, and every interval of [0, g'] has
/// a record. Returns a description of the first problem found.
std::optional<std::string> audit_certificate(const BoxedPosetMap& phi, const DepthChangeCertificate& cert);

/// Random nondecreasing table [0, g] -> N^n_prime.
BoxedPosetMap random_one_dim_map(std::mt19937_64& rng, int max_g, int n_prime, int max_step);

/// One property applied to one instance. `instance` is replayable input (a
/// spec file or a map in JSON); `diagnostics` is empty on success.
struct TrialOutcome {
  std::string instance;
  std::string diagnostics;
  std::vector<std::string> notes;
};

std::optional<std::string> check_polarization_step(const ModuleSpec& spec, std::size_t variable);
std::optional<std::string> check_transfer(const ModuleSpec& spec, std::size_t variable);
std::optional<std::string> check_depth_step(const ModuleSpec& spec, std::size_t variable);
std::optional<std::string> check_hilbert_step(const ModuleSpec& spec, std::size_t variable);

struct HarnessOptions {
  int trials = 20;
  std::uint64_t seed = 0;
  SpecBounds bounds;
  unsigned threads = 0;
};

struct TrialFailure {
  std::size_t trial = 0;
  std::string instance;
  std::string diagnostics;
};

struct VerificationReport {
  std::string theorem;
  int trials = 0;
  std::uint64_t seed = 0;
  SpecBounds bounds;
  std::vector<TrialFailure> failures;
  std::vector<std::string> notes;
  double wall_time_seconds = 0;

  bool passed() const { return failures.empty(); }
  Json to_json() const;
  std::string to_text() const;
};

const std::vector<std::string>& theorem_tags();

/// Runs one trial of a tag; deterministic in (tag, seed, trial, bounds).
TrialOutcome run_trial(std::string_view tag, std::uint64_t seed, std::size_t trial, const SpecBounds& bounds);

VerificationReport run_verification(std::string_view tag, const HarnessOptions& options);

}  // namespace sdlab

#endif
