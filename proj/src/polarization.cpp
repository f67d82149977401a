#include "sdlab/polarization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sdlab {

namespace {

ExponentVector insert_coordinate(const ExponentVector& a, std::size_t pos, int value) {
  std::vector<int> v(a.begin(), a.end());
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), value);
  return ExponentVector(std::move(v));
}

std::string default_fresh_name(const RingContext& ring, std::size_t variable) {
  const std::string& base = ring.name(variable);
  for (int k = 2;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (ring.index_of(candidate) == ring.size()) return candidate;
  }
}

std::string block_name(std::size_t j, std::size_t k) { return "x" + std::to_string(j + 1) + "_" + std::to_string(k); }

std::vector<ExponentVector> part_monomials(const StanleyPart& p, int degree_bound) {
  std::vector<ExponentVector> out;
  const int budget = degree_bound - p.a.degree();
  if (budget < 0) return out;
  ExponentVector cur = p.a;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == p.vars.size()) {
      out.push_back(cur);
      return;
    }
    const std::size_t j = p.vars[k];
    const int base = cur[j];
    for (int e = 0; e <= left; ++e) {
      cur[j] = base + e;
      rec(k + 1, left - e);
    }
    cur[j] = base;
  };
  rec(0, budget);
  return out;
}

// Inverse of the padded step map on its image; nullopt off the image.
std::optional<ExponentVector> step_preimage(const ExponentVector& m, std::size_t i) {
  const int p = m[i], q = m[i + 1];
  int original;
  if (q == 0 && p <= 1)
    original = p;
  else if (q == 1 && p >= 1)
    original = p + 1;
  else
    return std::nullopt;
  std::vector<int> v(m.begin(), m.end());
  v[i] = original;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  return ExponentVector(std::move(v));
}

}  // namespace

OneStepPolarization one_step_polarize(const ModuleSpec& spec, std::size_t variable, std::optional<std::string> fresh_name) {
  const std::size_t n = spec.nvars();
  if (variable >= n)
    throw std::invalid_argument("one_step_polarize: variable index " + std::to_string(variable) + " out of range");
  const std::string fresh = fresh_name ? *fresh_name : default_fresh_name(spec.ring(), variable);

  std::vector<std::string> names = spec.ring().names();
  names.insert(names.begin() + static_cast<std::ptrdiff_t>(variable) + 1, fresh);
  RingContext ring(std::move(names), spec.ring().characteristic());

  const ExponentVector g = canonical_bound(spec);
  std::vector<int> before(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(variable));
  std::vector<int> after(g.begin() + static_cast<std::ptrdiff_t>(variable) + 1, g.end());
  const BoxedPosetMap map = pad_with_identities(BoxedPosetMap::polar_step(g[variable]), ExponentVector(before),
                                                ExponentVector(after));

  // generator rule; coincides with pushing generators through the map
  auto polarize = [&](const MonomialIdeal& ideal) {
    std::vector<ExponentVector> gens;
    for (const auto& u : ideal.generators()) {
      if (u[variable] >= 2) {
        ExponentVector v = insert_coordinate(u, variable + 1, 1);
        v[variable] -= 1;
        gens.push_back(std::move(v));
      } else {
        gens.push_back(insert_coordinate(u, variable + 1, 0));
      }
    }
    return MonomialIdeal(n + 1, std::move(gens));
  };
  ModuleSpec target(ring, polarize(spec.I()), polarize(spec.J()));

  if (pullback_ideal(map, target.I()) != spec.I() || pullback_ideal(map, target.J()) != spec.J())
    throw std::logic_error("one_step_polarize: step map does not pull the polarized ideals back");
  return {spec, std::move(target), PolarizationStep{variable, fresh, map}};
}

ModuleSpec permute_variables(const ModuleSpec& spec, std::span<const std::size_t> order, std::vector<std::string> names) {
  const std::size_t n = spec.nvars();
  if (order.size() != n || names.size() != n) throw std::invalid_argument("permute_variables: size mismatch");
  std::vector<std::size_t> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t t = 0; t < n; ++t)
    if (sorted[t] != t) throw std::invalid_argument("permute_variables: not a permutation");
  auto permute = [&](const MonomialIdeal& ideal) {
    std::vector<ExponentVector> gens;
    for (const auto& u : ideal.generators()) {
      std::vector<int> v(n);
      for (std::size_t t = 0; t < n; ++t) v[t] = u[order[t]];
      gens.emplace_back(std::move(v));
    }
    return MonomialIdeal(n, std::move(gens));
  };
  return ModuleSpec(RingContext(std::move(names), spec.ring().characteristic()), permute(spec.I()), permute(spec.J()));
}

FullPolarization full_polarize(const ModuleSpec& spec) {
  std::vector<std::size_t> order(spec.nvars());
  std::iota(order.begin(), order.end(), 0);
  return full_polarize(spec, order);
}

FullPolarization full_polarize(const ModuleSpec& spec, std::span<const std::size_t> variable_order) {
  const std::size_t n = spec.nvars();
  {
    std::vector<std::size_t> sorted(variable_order.begin(), variable_order.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t t = 0; t < sorted.size(); ++t)
      if (sorted.size() != n || sorted[t] != t) throw std::invalid_argument("full_polarize: bad variable order");
  }

  std::vector<std::string> renamed_names;
  for (std::size_t j = 0; j < n; ++j) renamed_names.push_back(block_name(j, 1));
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  ModuleSpec cur = permute_variables(spec, identity, renamed_names);

  // labels[t] = (original variable, position k within its block)
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  for (std::size_t j = 0; j < n; ++j) labels.emplace_back(j, 1);

  std::vector<PolarizationStep> steps;
  for (std::size_t j : variable_order) {
    std::size_t k = 1;
    while (true) {
      const auto pos = static_cast<std::size_t>(
          std::find(labels.begin(), labels.end(), std::make_pair(j, std::size_t{1})) - labels.begin());
      if (canonical_bound(cur)[pos] < 2) break;
      ++k;
      OneStepPolarization s = one_step_polarize(cur, pos, block_name(j, k));
      labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(pos) + 1, {j, k});
      steps.push_back(std::move(s.step));
      cur = std::move(s.target);
    }
  }

  std::vector<std::size_t> final_order(labels.size());
  std::iota(final_order.begin(), final_order.end(), 0);
  std::sort(final_order.begin(), final_order.end(), [&](std::size_t x, std::size_t y) { return labels[x] < labels[y]; });
  std::vector<std::string> target_names;
  for (std::size_t t : final_order) target_names.push_back(block_name(labels[t].first, labels[t].second));
  ModuleSpec result = permute_variables(cur, final_order, target_names);

  PolarizationTrace trace{spec.ring(), RingContext(renamed_names, spec.ring().characteristic()), std::move(steps),
                          std::move(final_order), result.ring()};
  return {std::move(result), std::move(trace)};
}

ModuleSpec direct_polarize(const ModuleSpec& spec) {
  const std::size_t n = spec.nvars();
  const ExponentVector g = canonical_bound(spec);
  std::vector<std::string> names;
  std::vector<std::size_t> offset(n);
  for (std::size_t j = 0; j < n; ++j) {
    offset[j] = names.size();
    for (int k = 1; k <= std::max(g[j], 1); ++k) names.push_back(block_name(j, static_cast<std::size_t>(k)));
  }
  const std::size_t np = names.size();
  auto polarize = [&](const MonomialIdeal& ideal) {
    std::vector<ExponentVector> gens;
    for (const auto& u : ideal.generators()) {
      ExponentVector v = ExponentVector::zero(np);
      for (std::size_t j = 0; j < n; ++j)
        for (int k = 0; k < u[j]; ++k) v[offset[j] + static_cast<std::size_t>(k)] = 1;
      gens.push_back(std::move(v));
    }
    return MonomialIdeal(np, std::move(gens));
  };
  return ModuleSpec(RingContext(std::move(names), spec.ring().characteristic()), polarize(spec.I()), polarize(spec.J()));
}

ModuleSpec replay_trace(const ModuleSpec& spec, const PolarizationTrace& trace) {
  if (spec.ring().names() != trace.source.names()) throw Error("replay_trace: spec ring does not match trace source");
  std::vector<std::size_t> identity(spec.nvars());
  std::iota(identity.begin(), identity.end(), 0);
  ModuleSpec cur = permute_variables(spec, identity, trace.renamed.names());
  for (const auto& step : trace.steps) {
    OneStepPolarization s = one_step_polarize(cur, step.variable, step.fresh_name);
    if (!(s.step.map == step.map)) throw Error("replay_trace: step map differs from the recorded one");
    cur = std::move(s.target);
  }
  return permute_variables(cur, trace.final_order, trace.target.names());
}

// ---------------------------------------------------------------------------

StanleyDecomposition transfer_decomposition(const StanleyDecomposition& d, const OneStepPolarization& step) {
  if (auto check = validate_decomposition(d, step.source); !check)
    throw Error("transfer_decomposition: input is not a Stanley decomposition of I/J: " + check.reason);
  const std::size_t i = step.step.variable;
  const std::size_t y = i + 1;
  const BoxedPosetMap& phi = step.step.map;

  StanleyDecomposition out;
  out.nvars = d.nvars + 1;
  for (const auto& part : d.parts) {
    StanleyPart q;
    q.a = *phi.evaluate_unboxed(part.a);
    bool has_xi = false;
    for (std::size_t j : part.vars) {
      q.vars.push_back(j <= i ? j : j + 1);
      has_xi = has_xi || j == i;
    }
    if (has_xi) {
      q.vars.push_back(y);
    } else {
      // Phi(X_i X^a) / Phi(X^a) is Y when a_i == 1 and X_i otherwise
      const std::size_t ratio = part.a[i] == 1 ? y : i;
      ExponentVector shifted = part.a;
      shifted[i] += 1;
      const ExponentVector diff = *phi.evaluate_unboxed(shifted) - q.a;
      if (diff != ExponentVector::unit(out.nvars, ratio))
        throw std::logic_error("transfer_decomposition: ratio " + to_string(diff) + " disagrees with the closed form");
      q.vars.push_back(ratio == i ? y : i);
    }
    std::sort(q.vars.begin(), q.vars.end());
    out.parts.push_back(std::move(q));
  }
  return out;
}

bool star_condition_holds(const StanleyPart& source, const StanleyPart& target, const OneStepPolarization& step,
                          int degree_bound) {
  const std::size_t i = step.step.variable;
  const BoxedPosetMap& phi = step.step.map;
  if (*phi.evaluate_unboxed(source.a) != target.a) return false;
  for (const auto& m : part_monomials(target, degree_bound)) {
    auto b = step_preimage(m, i);
    if (b && !source.contains(*b)) return false;
  }
  // the step map preserves total degree
  for (const auto& b : part_monomials(source, degree_bound))
    if (!target.contains(*phi.evaluate_unboxed(b))) return false;
  return true;
}

IntervalPartition depolarize_partition(const IntervalPartition& p, const OneStepPolarization& step) {
  const BoxedPosetMap& phi = step.step.map;
  if (p.bound != phi.codomain_bound())
    throw std::invalid_argument("depolarize_partition: partition bound " + to_string(p.bound) +
                                " is not the image of the source bound");
  IntervalPartition out{{}, phi.domain_bound()};
  for (const auto& iv : p.intervals) {
    const auto pre = restricted_preimage(phi, iv);
    if (pre.empty()) continue;
    ExponentVector lo = pre.front(), hi = pre.front();
    for (const auto& a : pre) {
      lo = meet(lo, a);
      hi = join(hi, a);
    }
    if (box_size(lo, hi) != pre.size())
      throw std::logic_error("depolarize_partition: preimage of " + to_string(iv) + " is not an interval");
    out.intervals.emplace_back(std::move(lo), std::move(hi));
  }
  return out;
}

}  // namespace sdlab
