#include "sdlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "sdlab/homology.hpp"
#include "sdlab/parallel.hpp"
#include "sdlab/polarization.hpp"

namespace sdlab {

namespace {

constexpr unsigned kCheckPrime = 32003;

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

ExponentVector random_vector(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::vector<int> v(n);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return ExponentVector(std::move(v));
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));
  return names;
}

std::string fresh_name(const RingContext& ring, std::size_t variable) {
  for (int k = 2;; ++k) {
    std::string name = ring.name(variable) + "_" + std::to_string(k);
    if (ring.index_of(name) == ring.size()) return name;
  }
}

ExponentVector insert_at(const ExponentVector& a, std::size_t pos, int value) {
  std::vector<int> v(a.begin(), a.end());
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), value);
  return ExponentVector(std::move(v));
}

std::pair<ExponentVector, ExponentVector> split_around(const ExponentVector& g, std::size_t i) {
  std::vector<int> before(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<int> after(g.begin() + static_cast<std::ptrdiff_t>(i) + 1, g.end());
  return {ExponentVector(std::move(before)), ExponentVector(std::move(after))};
}

// number of intervals of [0, g]
std::size_t interval_count(const ExponentVector& g) {
  std::size_t c = 1;
  for (int x : g) c *= static_cast<std::size_t>(x + 1) * static_cast<std::size_t>(x + 2) / 2;
  return c;
}

std::string spec_instance(const ModuleSpec& spec, std::optional<std::size_t> variable = std::nullopt) {
  std::string text = format_module_spec(spec);
  if (variable) text += "# variable: " + spec.ring().name(*variable) + "\n";
  return text;
}

std::string map_instance(const BoxedPosetMap& phi, int ell) {
  return Json{{"map", map_to_json(phi)}, {"ell", ell}}.dump();
}

std::size_t polarized_size(const ModuleSpec& spec) {
  std::size_t n = 0;
  for (int x : canonical_bound(spec)) n += static_cast<std::size_t>(std::max(x, 1));
  return n;
}

std::optional<std::string> compare(const std::string& what, long long got, long long expected) {
  if (got == expected) return std::nullopt;
  return what + ": got " + std::to_string(got) + ", expected " + std::to_string(expected);
}

// ---------------------------------------------------------------------------
// per-tag trials

void trial_thm_main(std::mt19937_64& rng, const SpecBounds& bounds, TrialOutcome& out) {
  auto [spec, i] = random_polarization_instance(rng, bounds);
  out.instance = spec_instance(spec, i);
  if (auto e = check_polarization_step(spec, i))
    out.diagnostics = *e;
  else if (auto e2 = check_transfer(spec, i))
    out.diagnostics = *e2;
}

void trial_prop41(std::mt19937_64& rng, const SpecBounds& bounds, TrialOutcome& out) {
  auto [spec, i] = random_polarization_instance(rng, bounds);
  out.instance = spec_instance(spec, i);
  if (auto e = check_depth_step(spec, i))
    out.diagnostics = *e;
  else if (auto e2 = check_hilbert_step(spec, i))
    out.diagnostics = *e2;
  const auto step = one_step_polarize(spec, i);
  const bool agree = depth(spec, 0) == depth(spec, kCheckPrime) && depth(step.target, 0) == depth(step.target, kCheckPrime);
  if (!agree) out.notes.push_back("depth over Q and over GF(32003) differ on this instance");
}

void trial_cor_conj(std::mt19937_64& rng, const SpecBounds& bounds, TrialOutcome& out) {
  constexpr std::size_t kMaxVars = 7;
  std::optional<ModuleSpec> spec;
  for (int attempt = 0; attempt < 1000 && !spec; ++attempt) {
    ModuleSpec s = random_spec(rng, bounds);
    if (polarized_size(s) <= kMaxVars) spec = std::move(s);
  }
  if (!spec) {
    out.diagnostics = "no instance with a polarized ring of at most 7 variables within 1000 draws";
    return;
  }
  out.instance = spec_instance(*spec);

  const FullPolarization full = full_polarize(*spec);
  const ModuleSpec& pol = full.spec;
  auto fail = [&](std::string msg) {
    out.diagnostics = std::move(msg) + "\npolarization:\n" + format_module_spec(pol);
  };
  if (!pol.I().is_squarefree() || !pol.J().is_squarefree()) return fail("polarization is not squarefree");
  if (pol != direct_polarize(*spec)) return fail("iterated and direct polarization differ");
  if (replay_trace(*spec, full.trace) != pol) return fail("replaying the trace does not reproduce the polarization");

  const int steps = static_cast<int>(std::count_if(full.trace.steps.begin(), full.trace.steps.end(), [&](const auto& s) {
    return s.map.domain_bound()[s.variable] >= 2;
  }));
  const int s0 = sdepth(*spec).sdepth, d0 = depth(*spec);
  const int s1 = sdepth(pol).sdepth, d1 = depth(pol);
  if (s1 - d1 != s0 - d0)
    return fail("sdepth - depth changed: " + std::to_string(s0) + " - " + std::to_string(d0) + " before, " +
                std::to_string(s1) + " - " + std::to_string(d1) + " after");
  if (auto e = compare("sdepth increase over " + std::to_string(steps) + " proper steps", s1 - s0, steps)) return fail(*e);
  if (auto e = compare("depth increase over " + std::to_string(steps) + " proper steps", d1 - d0, steps)) return fail(*e);
}

void trial_hvz(std::mt19937_64& rng, const SpecBounds& bounds, TrialOutcome& out) {
  constexpr std::size_t kMaxPoints = 12;
  std::optional<ModuleSpec> spec;
  for (int attempt = 0; attempt < 1000 && !spec; ++attempt) {
    ModuleSpec s = random_spec(rng, bounds);
    if (characteristic_poset(s).size() <= kMaxPoints) spec = std::move(s);
  }
  if (!spec) {
    out.diagnostics = "no instance with at most 12 poset points within 1000 draws";
    return;
  }
  out.instance = spec_instance(*spec);
  const auto pruned = sdepth(*spec);
  const auto memo = sdepth(*spec, CoverOptions{true});
  const int naive = naive_sdepth(*spec);
  if (auto e = compare("pruned search against exhaustive enumeration", pruned.sdepth, naive))
    out.diagnostics = *e;
  else if (auto e2 = compare("memoized search against exhaustive enumeration", memo.sdepth, naive))
    out.diagnostics = *e2;
  else if (!is_partition_of(pruned.witness, characteristic_poset(*spec)))
    out.diagnostics = "witness is not an interval partition of the characteristic poset";
  else if (auto e3 = compare("witness sdepth", pruned.witness.sdepth(), pruned.sdepth))
    out.diagnostics = *e3;
}

// generators with u_i >= k are multiplied by X_i
MonomialIdeal shift_generators(const MonomialIdeal& ideal, std::size_t i, int k) {
  std::vector<ExponentVector> gens;
  for (const auto& u : ideal.generators()) gens.push_back(u[i] >= k ? u + ExponentVector::unit(u.size(), i) : u);
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

// X_i is replaced by X_i X_{i+1}, the new variable sitting at index i + 1
MonomialIdeal double_variable(const MonomialIdeal& ideal, std::size_t i) {
  std::vector<ExponentVector> gens;
  for (const auto& u : ideal.generators()) gens.push_back(insert_at(u, i + 1, u[i]));
  return MonomialIdeal(ideal.nvars() + 1, std::move(gens));
}

std::optional<std::string> certify(const BoxedPosetMap& phi, int ell, const std::string& label) {
  const auto result = verify_depth_change(phi, ell);
  if (!result) {
    std::string msg = label + ": no admissible cover at ell = " + std::to_string(ell);
    if (result.failing) msg += " for the preimage of " + to_string(*result.failing);
    return msg;
  }
  if (auto e = audit_certificate(phi, *result.certificate)) return label + ": certificate audit failed: " + *e;
  return std::nullopt;
}

void trial_prop51(std::mt19937_64& rng, const SpecBounds& bounds, TrialOutcome& out) {
  const ModuleSpec spec = random_spec(rng, bounds);
  const ExponentVector g = canonical_bound(spec);
  const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(g.size()) - 1));
  const int k = uniform(rng, 0, g[i]);
  out.instance = spec_instance(spec, i) + "# k: " + std::to_string(k) + "\n";

  const ModuleSpec lifted(spec.ring(), shift_generators(spec.I(), i, k), shift_generators(spec.J(), i, k));
  const ExponentVector g1 = canonical_bound(lifted);
  auto fail = [&](std::string msg) {
    out.diagnostics = std::move(msg) + "\nshifted module:\n" + format_module_spec(lifted);
  };
  if (g1 != g + ExponentVector::unit(g.size(), i)) return fail("shifted bound is " + to_string(g1));

  const auto [before, after] = split_around(g, i);
  const BoxedPosetMap up = pad_with_identities(BoxedPosetMap::shift_up(k, g[i]), before, after);
  if (pullback_ideal(up, lifted.I()) != spec.I() || pullback_ideal(up, lifted.J()) != spec.J())
    return fail("shift-up map does not pull the shifted ideals back to I and J");
  if (auto e = certify(BoxedPosetMap::shift_up(k, g[i]), 0, "shift-up")) return fail(*e);
  // Pulling I back along ShiftDown(k) keeps X^k when I = (X^k), so the
  // reverse map is ShiftDown(k - 1): i -> i for i < k, i - 1 for i >= k.
  // For k = 0 no map works and the shifted module is X_i I / X_i J.
  if (k == 0) {
    const ExponentVector x = ExponentVector::unit(g.size(), i);
    auto times_x = [&](const MonomialIdeal& ideal) {
      std::vector<ExponentVector> gens;
      for (const auto& u : ideal.generators()) gens.push_back(u + x);
      return MonomialIdeal(ideal.nvars(), std::move(gens));
    };
    if (lifted.I() != times_x(spec.I()) || lifted.J() != times_x(spec.J()))
      return fail("shift at k = 0 is not multiplication by the variable");
  } else {
    const BoxedPosetMap down = pad_with_identities(BoxedPosetMap::shift_down(k - 1, g[i] + 1), before, after);
    if (pullback_ideal(down, spec.I()) != lifted.I() || pullback_ideal(down, spec.J()) != lifted.J())
      return fail("shift-down map does not pull I and J back to the shifted ideals");
    if (auto e = certify(BoxedPosetMap::shift_down(k - 1, g[i] + 1), 0, "shift-down")) return fail(*e);
  }
  if (auto e = compare("sdepth after shifting", sdepth(lifted).sdepth, sdepth(spec).sdepth)) return fail(*e);
}

void trial_prop52(std::mt19937_64& rng, const SpecBounds& bounds, TrialOutcome& out) {
  const ModuleSpec spec = random_spec(rng, bounds);
  const ExponentVector g = canonical_bound(spec);
  const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(g.size()) - 1));
  out.instance = spec_instance(spec, i);

  std::vector<std::string> names = spec.ring().names();
  names.insert(names.begin() + static_cast<std::ptrdiff_t>(i) + 1, fresh_name(spec.ring(), i));
  const ModuleSpec doubled(RingContext(std::move(names), spec.ring().characteristic()), double_variable(spec.I(), i),
                           double_variable(spec.J(), i));
  auto fail = [&](std::string msg) {
    out.diagnostics = std::move(msg) + "\ndoubled module:\n" + format_module_spec(doubled);
  };

  const auto [before, after] = split_around(g, i);
  const BoxedPosetMap m = BoxedPosetMap::min2(ExponentVector{g[i], g[i]});
  const BoxedPosetMap padded = pad_with_identities(m, before, after);
  if (canonical_bound(doubled) != padded.domain_bound()) return fail("doubled bound is " + to_string(canonical_bound(doubled)));
  if (pullback_ideal(padded, spec.I()) != doubled.I() || pullback_ideal(padded, spec.J()) != doubled.J())
    return fail("min map does not pull I and J back to the doubled ideals");

  const int h = g[i];
  for (int a = 0; a <= h; ++a)
    for (int b = a; b <= h; ++b) {
      auto pre = restricted_preimage(m, Interval(ExponentVector{a}, ExponentVector{b}));
      auto expected = box_points(ExponentVector{a, a}, ExponentVector{b, h});
      if (b + 1 <= h)
        for (auto& p : box_points(ExponentVector{b + 1, a}, ExponentVector{h, b})) expected.push_back(std::move(p));
      std::sort(expected.begin(), expected.end());
      if (pre != expected) return fail("preimage of [" + std::to_string(a) + "," + std::to_string(b) + "] under min differs");
    }
  if (auto e = certify(m, 1, "min")) return fail(*e);
  if (auto e = compare("sdepth after doubling", sdepth(doubled).sdepth, sdepth(spec).sdepth + 1)) return fail(*e);
}

void trial_lem_1dim(std::mt19937_64& rng, const SpecBounds&, TrialOutcome& out) {
  const int n_prime = uniform(rng, 1, 3);
  const BoxedPosetMap phi = random_one_dim_map(rng, 6, n_prime, 1);
  const int ell = 1 - n_prime;
  out.instance = map_instance(phi, ell);
  if (auto e = certify(phi, ell, "one-dimensional map")) {
    out.diagnostics = *e;
    return;
  }
  for (const auto& lo : box_points(phi.codomain_bound()))
    for (const auto& hi : box_points(lo, phi.codomain_bound())) {
      const Interval target(lo, hi);
      const auto pre = restricted_preimage(phi, target);
      if (pre.empty()) continue;
      if (pre.back()[0] - pre.front()[0] + 1 != static_cast<int>(pre.size())) {
        out.diagnostics = "preimage of " + to_string(target) + " is not an interval";
        return;
      }
    }
}

struct CertifiedMap {
  BoxedPosetMap map;
  int ell;
};

CertifiedMap random_certified_map(std::mt19937_64& rng) {
  switch (uniform(rng, 0, 5)) {
    case 0: {
      const int n_prime = uniform(rng, 1, 2);
      return {random_one_dim_map(rng, 3, n_prime, 1), 1 - n_prime};
    }
    case 1:
      return {BoxedPosetMap::identity(random_vector(rng, static_cast<std::size_t>(uniform(rng, 1, 2)), 0, 2)), 0};
    case 2:
      return {BoxedPosetMap::polar_step(uniform(rng, 0, 4)), -1};
    case 3: {
      const int h = uniform(rng, 0, 3);
      return {BoxedPosetMap::min2(ExponentVector{h, h}), 1};
    }
    case 4: {
      const int g = uniform(rng, 0, 4);
      return {BoxedPosetMap::shift_up(uniform(rng, 0, g), g), 0};
    }
    default: {
      const int g = uniform(rng, 1, 4);
      return {BoxedPosetMap::shift_down(uniform(rng, 0, g - 1), g), 0};
    }
  }
}

void trial_lem_interval(std::mt19937_64& rng, const SpecBounds&, TrialOutcome& out) {
  constexpr std::size_t kMaxIntervals = 20000;
  CertifiedMap first = random_certified_map(rng), second = random_certified_map(rng);
  while (interval_count(concat(first.map.codomain_bound(), second.map.codomain_bound())) > kMaxIntervals) {
    first = random_certified_map(rng);
    second = random_certified_map(rng);
  }
  const BoxedPosetMap prod = product_map(first.map, second.map);
  out.instance = Json{{"first", Json::parse(map_instance(first.map, first.ell))},
                      {"second", Json::parse(map_instance(second.map, second.ell))}}
                     .dump();
  if (auto e = certify(first.map, first.ell, "first factor"))
    out.diagnostics = *e;
  else if (auto e2 = certify(second.map, second.ell, "second factor"))
    out.diagnostics = *e2;
  else if (auto e3 = certify(prod, first.ell + second.ell, "product"))
    out.diagnostics = *e3;
  if (!out.diagnostics.empty()) return;

  const ExponentVector before = random_vector(rng, static_cast<std::size_t>(uniform(rng, 0, 1)), 0, 2);
  const ExponentVector after = random_vector(rng, static_cast<std::size_t>(uniform(rng, 0, 1)), 0, 2);
  const BoxedPosetMap padded = pad_with_identities(first.map, before, after);
  if (interval_count(padded.codomain_bound()) <= kMaxIntervals)
    if (auto e = certify(padded, first.ell, "padded first factor " + to_string(before) + " / " + to_string(after)))
      out.diagnostics = *e;
}

// nonconstant codomain coordinates of a one-dimensional factor
std::vector<std::size_t> moving_coordinates(const BoxedPosetMap& f) {
  const ExponentVector lo = f(ExponentVector::zero(1)), hi = f(f.domain_bound());
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < lo.size(); ++c)
    if (lo[c] != hi[c]) out.push_back(c);
  return out;
}

void trial_thm_joinmeet(std::mt19937_64& rng, const SpecBounds&, TrialOutcome& out) {
  constexpr std::size_t kMaxIntervals = 20000;
  for (;;) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<BoxedPosetMap> parts;
    std::size_t n_prime = 0;
    for (std::size_t j = 0; j < n; ++j) {
      parts.push_back(random_one_dim_map(rng, 3, uniform(rng, 0, 2), 1));
      n_prime += parts.back().codomain_dim();
    }
    if (n_prime == 0 || n_prime > 4) continue;
    const BoxedPosetMap prod = BoxedPosetMap::product(parts);
    const ExponentVector offset = random_vector(rng, n_prime, 0, 1);

    std::vector<std::size_t> pi(n), sigma(n_prime);
    std::iota(pi.begin(), pi.end(), 0);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    std::shuffle(sigma.begin(), sigma.end(), rng);

    // phi(a) = sigma(P(a o pi) + offset)
    std::vector<int> gd(n);
    for (std::size_t t = 0; t < n; ++t) gd[t] = prod.domain_bound()[pi[t]];
    const ExponentVector g(gd);
    std::vector<ExponentVector> values;
    for (const auto& a : box_points(g)) {
      std::vector<int> b(n);
      for (std::size_t t = 0; t < n; ++t) b[pi[t]] = a[t];
      const ExponentVector v = prod(ExponentVector(b)) + offset;
      std::vector<int> w(n_prime);
      for (std::size_t s = 0; s < n_prime; ++s) w[sigma[s]] = v[s];
      values.emplace_back(std::move(w));
    }
    const BoxedPosetMap phi = BoxedPosetMap::table(g, std::move(values));
    if (interval_count(phi.codomain_bound()) > kMaxIntervals) continue;

    const int ell = static_cast<int>(n) - static_cast<int>(n_prime);
    out.instance = map_instance(phi, ell);

    const MapClassification cls = classify_map(phi);
    if (!cls.monotone || !cls.preserves_joins || !cls.preserves_meets) {
      out.diagnostics = "shuffled product is misclassified";
      return;
    }
    const SplitResult split = split_join_meet_map(phi);
    if (split.factors.size() != n) {
      out.diagnostics = "split produced " + std::to_string(split.factors.size()) + " factors, expected " + std::to_string(n);
      return;
    }
    // the moving coordinates of each factor are those of the original part
    std::size_t pos = 0;
    std::vector<std::size_t> block_start(n, 0);
    for (std::size_t j = 1; j < n; ++j) block_start[j] = block_start[j - 1] + parts[j - 1].codomain_dim();
    for (std::size_t t = 0; t < n; ++t) {
      const BoxedPosetMap& f = split.factors[t];
      const std::size_t j = pi[split.domain_order[t]];
      std::set<std::size_t> got, expected;
      for (std::size_t c : moving_coordinates(f)) got.insert(split.codomain_order[pos + c]);
      for (std::size_t c : moving_coordinates(parts[j])) expected.insert(sigma[block_start[j] + c]);
      if (f.domain_bound() != ExponentVector{g[split.domain_order[t]]} || got != expected) {
        out.diagnostics = "factor " + std::to_string(t) + " does not match the part on domain coordinate " +
                          std::to_string(split.domain_order[t]);
        return;
      }
      pos += f.codomain_dim();
    }
    for (const auto& a : box_points(g))
      if (split.reassemble(a) != phi(a)) {
        out.diagnostics = "reassembled split differs from the map at " + to_string(a);
        return;
      }
    if (auto e = certify(phi, ell, "shuffled product")) out.diagnostics = *e;
    return;
  }
}

using TrialFn = void (*)(std::mt19937_64&, const SpecBounds&, TrialOutcome&);

const std::map<std::string, TrialFn, std::less<>>& trial_table() {
  static const std::map<std::string, TrialFn, std::less<>> table = {
      {"thm-main", trial_thm_main},     {"prop-4.1", trial_prop41},         {"cor-conj", trial_cor_conj},
      {"prop-5.1", trial_prop51},       {"prop-5.2", trial_prop52},         {"lem-1dim", trial_lem_1dim},
      {"lem-interval", trial_lem_interval}, {"thm-joinmeet", trial_thm_joinmeet}, {"hvz", trial_hvz},
  };
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

ModuleSpec random_spec(std::mt19937_64& rng, const SpecBounds& bounds) {
  if (bounds.max_n < 1 || bounds.max_deg < 1 || bounds.max_gens < 1)
    throw std::invalid_argument("random_spec: bounds must be positive");
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, bounds.max_n));
  std::vector<ExponentVector> gens;
  for (int m = uniform(rng, 1, bounds.max_gens); m > 0; --m) gens.push_back(random_vector(rng, n, 0, bounds.max_deg));
  MonomialIdeal I(n, std::move(gens));

  MonomialIdeal J = MonomialIdeal::zero(n);
  if (uniform(rng, 0, 1) == 1) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<ExponentVector> jg;
      for (int m = uniform(rng, 1, bounds.max_gens); m > 0; --m) {
        const auto& u = I.generators()[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(I.generators().size()) - 1))];
        jg.push_back(join(u, random_vector(rng, n, 0, bounds.max_deg)));
      }
      MonomialIdeal candidate(n, std::move(jg));
      if (!candidate.contains(I)) {
        J = std::move(candidate);
        break;
      }
    }
  }
  return ModuleSpec(RingContext(default_names(n)), std::move(I), std::move(J));
}

std::pair<ModuleSpec, std::size_t> random_polarization_instance(std::mt19937_64& rng, const SpecBounds& bounds) {
  ModuleSpec spec = random_spec(rng, bounds);
  const ExponentVector g = canonical_bound(spec);
  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g[j] >= 2) live.push_back(j);
  const std::size_t i = live.empty() ? static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(g.size()) - 1))
                                     : live[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(live.size()) - 1))];
  return {std::move(spec), i};
}

ModuleSpec random_spec(std::uint64_t seed, const SpecBounds& bounds) {
  auto rng = trial_rng(seed, 0);
  return random_spec(rng, bounds);
}

int naive_sdepth(const ModuleSpec& spec, const ExponentVector& g) {
  const CharacteristicPoset poset = characteristic_poset(spec, g);
  const auto& pts = poset.points();
  const int n = static_cast<int>(spec.nvars());
  if (pts.empty()) return n;
  if (pts.size() > 64) throw std::invalid_argument("naive_sdepth: more than 64 poset points");

  struct Candidate {
    std::uint64_t members;
    int value;
  };
  // every interval of the poset, as a bitmask of its points
  std::vector<Candidate> intervals;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b) {
      if (!leq(pts[a], pts[b])) continue;
      std::uint64_t mask = 0;
      std::size_t count = 0;
      for (std::size_t c = 0; c < pts.size(); ++c)
        if (leq(pts[a], pts[c]) && leq(pts[c], pts[b])) {
          mask |= std::uint64_t{1} << c;
          ++count;
        }
      if (count == box_size(pts[a], pts[b])) intervals.push_back({mask, rho(pts[b], g)});
    }

  const std::uint64_t full = pts.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pts.size()) - 1;
  int best = -1;
  std::function<void(std::uint64_t, int)> rec = [&](std::uint64_t covered, int value) {
    if (covered == full) {
      best = std::max(best, value);
      return;
    }
    const std::uint64_t c = ~covered & full & (~(~covered & full) + 1);
    for (const auto& iv : intervals)
      if ((iv.members & c) && !(iv.members & covered)) rec(covered | iv.members, std::min(value, iv.value));
  };
  rec(0, n);
  return best;
}

int naive_sdepth(const ModuleSpec& spec) { return naive_sdepth(spec, canonical_bound(spec)); }

std::optional<std::string> audit_certificate(const BoxedPosetMap& phi, const DepthChangeCertificate& cert) {
  const ExponentVector& g = phi.domain_bound();
  const ExponentVector& gp = phi.codomain_bound();
  if (cert.g != g || cert.g_prime != gp) return "certificate bounds do not match the map";

  std::set<std::pair<ExponentVector, ExponentVector>> seen;
  for (const auto& rec : cert.records) {
    const Interval& t = rec.target;
    if (!leq(t.hi, gp)) return "record target " + to_string(t) + " leaves [0, g']";
    if (!seen.emplace(t.lo, t.hi).second) return "duplicate record for " + to_string(t);

    std::set<ExponentVector> pre;
    for (const auto& a : box_points(g))
      if (leq(t.lo, phi(a)) && leq(phi(a), t.hi)) pre.insert(a);

    std::set<ExponentVector> covered;
    std::optional<int> margin;
    const int need = rho(t.hi, gp) + cert.ell;
    for (const auto& iv : rec.cover) {
      if (!leq(iv.lo, iv.hi) || !leq(iv.hi, g)) return "cover interval " + to_string(iv) + " leaves [0, g]";
      if (rho(iv.hi, g) < need) return "cover interval " + to_string(iv) + " of " + to_string(t) + " is below the margin";
      const int m = rho(iv.hi, g) - rho(t.hi, gp);
      margin = margin ? std::min(*margin, m) : m;
      for (const auto& p : box_points(iv.lo, iv.hi)) {
        if (!pre.count(p)) return "cover of " + to_string(t) + " contains " + to_string(p) + " outside the preimage";
        if (!covered.insert(p).second) return "cover of " + to_string(t) + " overlaps at " + to_string(p);
      }
    }
    if (covered.size() != pre.size()) return "cover of " + to_string(t) + " misses part of the preimage";
    if (margin != rec.margin) return "recorded margin of " + to_string(t) + " is wrong";
  }
  if (seen.size() != interval_count(gp)) return "certificate does not cover every interval of [0, g']";
  return std::nullopt;
}

BoxedPosetMap random_one_dim_map(std::mt19937_64& rng, int max_g, int n_prime, int max_step) {
  const int g = uniform(rng, 0, max_g);
  std::vector<ExponentVector> table{random_vector(rng, static_cast<std::size_t>(n_prime), 0, 1)};
  for (int i = 1; i <= g; ++i) table.push_back(table.back() + random_vector(rng, static_cast<std::size_t>(n_prime), 0, max_step));
  return BoxedPosetMap::one_dim(std::move(table));
}

std::optional<std::string> check_polarization_step(const ModuleSpec& spec, std::size_t variable) {
  const auto step = one_step_polarize(spec, variable);
  const auto s = sdepth(spec);
  const auto t = sdepth(step.target);
  if (auto e = compare("sdepth after one polarization step", t.sdepth, s.sdepth + 1)) return e;
  if (!is_partition_of(s.witness, characteristic_poset(spec))) return "source witness is not an interval partition";

  const IntervalPartition back = depolarize_partition(t.witness, step);
  if (!is_partition_of(back, characteristic_poset(spec))) return "pulled-back witness is not an interval partition";
  if (back.sdepth() < t.sdepth - 1)
    return "pulled-back witness has sdepth " + std::to_string(back.sdepth()) + " < " + std::to_string(t.sdepth - 1);
  return std::nullopt;
}

std::optional<std::string> check_transfer(const ModuleSpec& spec, std::size_t variable) {
  const auto step = one_step_polarize(spec, variable);
  const StanleyDecomposition d = partition_to_decomposition(sdepth(spec).witness);
  const StanleyDecomposition d1 = transfer_decomposition(d, step);
  if (auto check = validate_decomposition(d1, step.target); !check) {
    std::string msg = "transferred decomposition is invalid: " + check.reason;
    if (check.witness) msg += " at " + to_string(*check.witness);
    return msg;
  }
  if (auto e = compare("transferred decomposition sdepth", d1.sdepth(), d.sdepth() + 1)) return e;
  const int bound = canonical_bound(step.target).degree() + 2;
  for (std::size_t k = 0; k < d.parts.size(); ++k)
    if (!star_condition_holds(d.parts[k], d1.parts[k], step, bound))
      return "transferred part " + std::to_string(k) + " fails the image condition";
  return std::nullopt;
}

std::optional<std::string> check_depth_step(const ModuleSpec& spec, std::size_t variable) {
  const auto step = one_step_polarize(spec, variable);
  return compare("depth after one polarization step", depth(step.target), depth(spec) + 1);
}

std::optional<std::string> check_hilbert_step(const ModuleSpec& spec, std::size_t variable) {
  const auto step = one_step_polarize(spec, variable);
  const HilbertSeries h = hilbert_series(spec), h1 = hilbert_series(step.target);
  if (h1.times_one_minus_t(1) == h) return std::nullopt;
  return "H1 (1 - t) = " + h1.times_one_minus_t(1).to_string() + " but H = " + h.to_string();
}

const std::vector<std::string>& theorem_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> t;
    for (const auto& [name, fn] : trial_table()) t.push_back(name);
    return t;
  }();
  return tags;
}

TrialOutcome run_trial(std::string_view tag, std::uint64_t seed, std::size_t trial, const SpecBounds& bounds) {
  const auto it = trial_table().find(tag);
  if (it == trial_table().end()) throw std::invalid_argument("unknown theorem tag '" + std::string(tag) + "'");
  auto rng = trial_rng(seed, trial);
  TrialOutcome out;
  try {
    it->second(rng, bounds, out);
  } catch (const std::exception& e) {
    out.diagnostics = std::string("exception: ") + e.what();
  }
  return out;
}

VerificationReport run_verification(std::string_view tag, const HarnessOptions& options) {
  if (!trial_table().count(tag)) throw std::invalid_argument("unknown theorem tag '" + std::string(tag) + "'");
  if (options.trials < 0) throw std::invalid_argument("trial count must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(options.trials));
  parallel_for(outcomes.size(), options.threads,
               [&](std::size_t t) { outcomes[t] = run_trial(tag, options.seed, t, options.bounds); });

  VerificationReport report;
  report.theorem = std::string(tag);
  report.trials = options.trials;
  report.seed = options.seed;
  report.bounds = options.bounds;
  std::size_t disagreements = 0;
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    if (!outcomes[t].diagnostics.empty()) report.failures.push_back({t, outcomes[t].instance, outcomes[t].diagnostics});
    disagreements += outcomes[t].notes.size();
  }
  if (tag == "prop-4.1")
    report.notes.push_back("depth over Q and over GF(32003) agreed on " + std::to_string(outcomes.size() - disagreements) +
                           " of " + std::to_string(outcomes.size()) + " instances");
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json VerificationReport::to_json() const {
  Json f = Json::array();
  for (const auto& x : failures) f.push_back({{"trial", x.trial}, {"instance", x.instance}, {"diagnostics", x.diagnostics}});
  return {{"theorem", theorem},
          {"trials", trials},
          {"seed", seed},
          {"bounds", {{"max_n", bounds.max_n}, {"max_deg", bounds.max_deg}, {"max_gens", bounds.max_gens}}},
          {"failures", f},
          {"notes", notes},
          {"wall_time_seconds", wall_time_seconds}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "theorem: " << theorem << "\n"
     << "trials: " << trials << "  seed: " << seed << "  bounds: n <= " << bounds.max_n << ", deg <= " << bounds.max_deg
     << ", gens <= " << bounds.max_gens << "\n"
     << "failures: " << failures.size() << "\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  for (const auto& x : failures)
    os << "\n--- trial " << x.trial << " ---\n" << x.diagnostics << "\ninstance:\n" << x.instance << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "wall time: %.2f s\n", wall_time_seconds);
  os << buf;
  return os.str();
}

}  // namespace sdlab
