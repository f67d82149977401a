#include "sdlab/stanley.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace sdlab {

Interval::Interval(ExponentVector l, ExponentVector h) : lo(std::move(l)), hi(std::move(h)) {
  if (!leq(lo, hi)) throw std::invalid_argument("interval with lo > hi: " + to_string(lo) + " " + to_string(hi));
}

std::string to_string(const Interval& iv) { return "[" + to_string(iv.lo) + "," + to_string(iv.hi) + "]"; }

CharacteristicPoset::CharacteristicPoset(ModuleSpec spec, ExponentVector g) : spec_(std::move(spec)), g_(std::move(g)) {
  if (g_.size() != spec_.nvars()) throw SpecError("bound " + to_string(g_) + " has wrong length");
  auto check = [&](const MonomialIdeal& ideal, const char* name) {
    for (const auto& u : ideal.generators())
      if (!leq(u, g_))
        throw SpecError(std::string("bound ") + to_string(g_) + " is too small for generator " +
                        format_monomial(u, spec_.ring()) + " of " + name);
  };
  check(spec_.I(), "I");
  check(spec_.J(), "J");
  for (auto& a : box_points(g_))
    if (spec_.contains(a)) points_.push_back(std::move(a));
}

bool CharacteristicPoset::contains(const ExponentVector& a) const {
  return std::binary_search(points_.begin(), points_.end(), a);
}

CharacteristicPoset characteristic_poset(const ModuleSpec& spec, const ExponentVector& g) {
  return CharacteristicPoset(spec, g);
}

CharacteristicPoset characteristic_poset(const ModuleSpec& spec) { return CharacteristicPoset(spec, canonical_bound(spec)); }

int rho(const ExponentVector& b, const ExponentVector& g) {
  if (b.size() != g.size()) throw std::invalid_argument("rho: length mismatch");
  int r = 0;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j] == g[j]) ++r;
  return r;
}

int IntervalPartition::sdepth() const {
  int s = static_cast<int>(bound.size());
  for (const auto& iv : intervals) s = std::min(s, rho(iv.hi, bound));
  return s;
}

bool is_partition_of(const IntervalPartition& p, const CharacteristicPoset& poset) {
  std::vector<int> hits(poset.size(), 0);
  const auto& pts = poset.points();
  for (const auto& iv : p.intervals) {
    for (const auto& c : iv.points()) {
      auto it = std::lower_bound(pts.begin(), pts.end(), c);
      if (it == pts.end() || *it != c) return false;
      if (++hits[static_cast<std::size_t>(it - pts.begin())] > 1) return false;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool StanleyPart::contains(const ExponentVector& m) const {
  if (!leq(a, m)) return false;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (m[j] != a[j] && !std::binary_search(vars.begin(), vars.end(), j)) return false;
  return true;
}

int StanleyDecomposition::sdepth() const {
  int s = static_cast<int>(nvars);
  for (const auto& p : parts) s = std::min(s, static_cast<int>(p.vars.size()));
  return s;
}

HilbertSeries StanleyDecomposition::hilbert_series() const {
  // sum_i t^|a_i| (1-t)^(n-|Z_i|) / (1-t)^n
  HilbertSeries total({}, 0);
  for (const auto& p : parts) {
    IntPolynomial mono(static_cast<std::size_t>(p.a.degree()) + 1, 0);
    mono.back() = 1;
    total = total + HilbertSeries(mono, static_cast<int>(p.vars.size()));
  }
  return total;
}

StanleyDecomposition partition_to_decomposition(const IntervalPartition& p) {
  StanleyDecomposition d;
  d.nvars = p.bound.size();
  for (const auto& iv : p.intervals) {
    std::vector<std::size_t> z;
    ExponentVector top = iv.hi;
    for (std::size_t j = 0; j < d.nvars; ++j) {
      if (iv.hi[j] == p.bound[j]) {
        z.push_back(j);
        top[j] = iv.lo[j];
      }
    }
    for (auto& c : box_points(iv.lo, top)) d.parts.push_back({std::move(c), z});
  }
  return d;
}

// ---------------------------------------------------------------------------

namespace {

DecompositionCheck failure(std::string reason, std::optional<ExponentVector> witness = std::nullopt) {
  return {false, std::move(reason), std::move(witness)};
}

bool in_vars(const StanleyPart& p, std::size_t j) { return std::binary_search(p.vars.begin(), p.vars.end(), j); }

std::optional<ExponentVector> common_monomial(const StanleyPart& p, const StanleyPart& q) {
  for (std::size_t j = 0; j < p.a.size(); ++j) {
    const bool zp = in_vars(p, j), zq = in_vars(q, j);
    if (!zp && !zq && p.a[j] != q.a[j]) return std::nullopt;
    if (zp && !zq && q.a[j] < p.a[j]) return std::nullopt;
    if (!zp && zq && p.a[j] < q.a[j]) return std::nullopt;
  }
  return join(p.a, q.a);
}

void for_each_monomial_up_to(std::size_t n, int max_degree, const std::function<void(const ExponentVector&)>& fn) {
  ExponentVector cur = ExponentVector::zero(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int budget) {
    if (k == n) {
      fn(cur);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      cur[k] = e;
      rec(k + 1, budget - e);
    }
    cur[k] = 0;
  };
  rec(0, max_degree);
}

}  // namespace

DecompositionCheck validate_decomposition(const StanleyDecomposition& d, const ModuleSpec& spec, int degree_bound) {
  const std::size_t n = spec.nvars();
  if (d.nvars != n) return failure("decomposition lives in a ring of " + std::to_string(d.nvars) + " variables");
  for (const auto& p : d.parts) {
    if (p.a.size() != n) return failure("part with exponent of wrong length");
    if (!std::is_sorted(p.vars.begin(), p.vars.end()) ||
        std::adjacent_find(p.vars.begin(), p.vars.end()) != p.vars.end() ||
        std::any_of(p.vars.begin(), p.vars.end(), [&](std::size_t j) { return j >= n; }))
      return failure("part " + to_string(p.a) + " has a malformed variable set");
  }

  for (const auto& p : d.parts) {
    if (!spec.I().contains(p.a)) return failure("part generator not in I", p.a);
    for (const auto& v : spec.J().generators()) {
      bool reachable = true;
      ExponentVector m = p.a;
      for (std::size_t j = 0; j < n; ++j) {
        if (in_vars(p, j))
          m[j] = std::max(m[j], v[j]);
        else if (v[j] > p.a[j])
          reachable = false;
      }
      if (reachable) return failure("part " + to_string(p.a) + " meets J", m);
    }
  }

  for (std::size_t i = 0; i < d.parts.size(); ++i)
    for (std::size_t k = i + 1; k < d.parts.size(); ++k)
      if (auto m = common_monomial(d.parts[i], d.parts[k]))
        return failure("parts " + to_string(d.parts[i].a) + " and " + to_string(d.parts[k].a) + " overlap", m);

  std::optional<DecompositionCheck> coverage;
  for_each_monomial_up_to(n, degree_bound, [&](const ExponentVector& m) {
    if (coverage) return;
    const bool member = spec.contains(m);
    const auto hits = std::count_if(d.parts.begin(), d.parts.end(), [&](const StanleyPart& p) { return p.contains(m); });
    if (member && hits != 1)
      coverage = failure(hits == 0 ? "monomial not covered" : "monomial covered twice", m);
    else if (!member && hits != 0)
      coverage = failure("monomial outside I \\ J covered", m);
  });
  if (coverage) return *coverage;

  const HilbertSeries expected = hilbert_series(spec);
  const HilbertSeries got = d.hilbert_series();
  if (!(expected == got))
    return failure("Hilbert series mismatch: decomposition gives " + got.to_string() + ", module has " +
                   expected.to_string());
  return {};
}

DecompositionCheck validate_decomposition(const StanleyDecomposition& d, const ModuleSpec& spec) {
  return validate_decomposition(d, spec, canonical_bound(spec).degree() + 1);
}

// ---------------------------------------------------------------------------
// Exact cover by intervals

namespace {

class IntervalCoverSearch {
public:
  IntervalCoverSearch(std::span<const ExponentVector> points, const TopPredicate& admissible, CoverOptions options)
      : points_(points.begin(), points.end()), options_(options) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    if (points_.empty()) return;
    dim_ = points_.front().size();
    lo_ = points_.front();
    hi_ = points_.front();
    for (const auto& p : points_) {
      lo_ = meet(lo_, p);
      hi_ = join(hi_, p);
    }
    stride_.assign(dim_, 1);
    for (std::size_t k = dim_; k-- > 1;) stride_[k - 1] = stride_[k] * static_cast<std::size_t>(hi_[k] - lo_[k] + 1);
    index_.assign(box_size(lo_, hi_), -1);
    for (std::size_t i = 0; i < points_.size(); ++i) index_[code(points_[i])] = static_cast<int>(i);

    admissible_.resize(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) admissible_[i] = admissible(points_[i]);
    // points are lex sorted, so every componentwise upper bound has a larger index
    tops_.resize(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t k = i; k < points_.size(); ++k)
        if (admissible_[k] && leq(points_[i], points_[k])) tops_[i].push_back(static_cast<int>(k));
    covered_.assign(points_.size(), 0);
  }

  std::optional<std::vector<Interval>> run() {
    if (points_.empty()) return std::vector<Interval>{};
    if (!feasible()) return std::nullopt;
    if (!search(0)) return std::nullopt;
    std::vector<Interval> out;
    out.reserve(chosen_.size());
    for (auto [p, q] : chosen_) out.emplace_back(points_[p], points_[q]);
    return out;
  }

private:
  std::size_t code(const ExponentVector& v) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < dim_; ++k) c += static_cast<std::size_t>(v[k] - lo_[k]) * stride_[k];
    return c;
  }

  // Collects the indices of [p, q] if the whole interval is present and uncovered.
  bool collect_interval(int p, int q, std::vector<int>& members) const {
    members.clear();
    const ExponentVector& a = points_[p];
    const ExponentVector& b = points_[q];
    std::vector<int> cur(a.begin(), a.end());
    while (true) {
      std::size_t c = 0;
      for (std::size_t k = 0; k < dim_; ++k) c += static_cast<std::size_t>(cur[k] - lo_[k]) * stride_[k];
      const int idx = index_[c];
      if (idx < 0 || covered_[idx]) return false;
      members.push_back(idx);
      std::size_t k = dim_;
      while (true) {
        if (k == 0) return true;
        --k;
        if (cur[k] < b[k]) {
          ++cur[k];
          break;
        }
        cur[k] = a[k];
      }
    }
  }

  // Every uncovered point still needs an uncovered admissible top above it.
  bool feasible() const {
    for (std::size_t c = 0; c < points_.size(); ++c) {
      if (covered_[c]) continue;
      const auto& t = tops_[c];
      if (std::none_of(t.begin(), t.end(), [&](int q) { return !covered_[q]; })) return false;
    }
    return true;
  }

  bool search(std::size_t from) {
    // The least uncovered point in lex order is the lower endpoint of its
    // interval: the interval's minimum is componentwise below it, hence
    // lexicographically no larger, hence also uncovered.
    while (from < points_.size() && covered_[from]) ++from;
    if (from == points_.size()) return true;

    std::string key;
    if (options_.memoize) {
      key.assign(covered_.begin(), covered_.end());
      if (failed_.count(key)) return false;
    }

    const int p = static_cast<int>(from);
    std::vector<int> members;
    for (int q : tops_[from]) {
      if (covered_[q] || !collect_interval(p, q, members)) continue;
      for (int m : members) covered_[m] = 1;
      chosen_.emplace_back(p, q);
      if (feasible() && search(from + 1)) return true;
      chosen_.pop_back();
      for (int m : members) covered_[m] = 0;
    }
    if (options_.memoize) failed_.insert(std::move(key));
    return false;
  }

  std::vector<ExponentVector> points_;
  CoverOptions options_;
  std::size_t dim_ = 0;
  ExponentVector lo_, hi_;
  std::vector<std::size_t> stride_;
  std::vector<int> index_;
  std::vector<char> admissible_;
  std::vector<std::vector<int>> tops_;
  std::vector<char> covered_;
  std::vector<std::pair<int, int>> chosen_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<std::vector<Interval>> exact_cover_by_intervals(std::span<const ExponentVector> points,
                                                              const TopPredicate& admissible_top, CoverOptions options) {
  return IntervalCoverSearch(points, admissible_top, options).run();
}

SdepthResult sdepth(const ModuleSpec& spec, const ExponentVector& g, CoverOptions options) {
  const CharacteristicPoset poset(spec, g);
  for (int s = static_cast<int>(spec.nvars()); s >= 0; --s) {
    auto cover = exact_cover_by_intervals(
        poset.points(), [&](const ExponentVector& b) { return rho(b, g) >= s; }, options);
    if (cover) return {s, IntervalPartition{std::move(*cover), g}};
  }
  throw std::logic_error("sdepth: singleton partition rejected");
}

SdepthResult sdepth(const ModuleSpec& spec, CoverOptions options) { return sdepth(spec, canonical_bound(spec), options); }

}  // namespace sdlab
