#include "sdlab/posetmaps.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#include "sdlab/parallel.hpp"

namespace sdlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Lexicographic rank of a point of [0, g].
class BoxIndex {
public:
  explicit BoxIndex(const ExponentVector& g) : stride_(g.size(), 1) {
    for (std::size_t k = g.size(); k-- > 1;) stride_[k - 1] = stride_[k] * static_cast<std::size_t>(g[k] + 1);
  }
  std::size_t operator()(const ExponentVector& a) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < stride_.size(); ++k) c += static_cast<std::size_t>(a[k]) * stride_[k];
    return c;
  }

private:
  std::vector<std::size_t> stride_;
};

bool in_box(const ExponentVector& a, const ExponentVector& g) {
  if (a.size() != g.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < 0 || a[k] > g[k]) return false;
  return true;
}

ExponentVector slice(const ExponentVector& a, std::size_t from, std::size_t count) {
  return ExponentVector(std::vector<int>(a.begin() + static_cast<std::ptrdiff_t>(from),
                                         a.begin() + static_cast<std::ptrdiff_t>(from + count)));
}

ExponentVector scalar(int v) { return ExponentVector{v}; }

void require_scalar_bound(int g, const char* what) {
  if (g < 0) throw std::invalid_argument(std::string(what) + ": negative bound");
}

std::vector<ExponentVector> images(const BoxedPosetMap& phi, const std::vector<ExponentVector>& box) {
  std::vector<ExponentVector> out;
  out.reserve(box.size());
  for (const auto& a : box) out.push_back(phi(a));
  return out;
}

}  // namespace

BoxedPosetMap::BoxedPosetMap(Kind kind, ExponentVector g, std::size_t n_prime)
    : kind_(std::move(kind)), g_(std::move(g)), n_prime_(n_prime) {
  if (std::any_of(g_.begin(), g_.end(), [](int e) { return e < 0; }))
    throw std::invalid_argument("poset map with negative domain bound " + to_string(g_));
  if (auto* p = std::get_if<Product>(&kind_)) {
    ExponentVector gp;
    for (const auto& f : p->factors) gp = concat(gp, f.codomain_bound());
    g_prime_ = std::move(gp);
  } else {
    g_prime_ = *evaluate_unboxed(g_);
  }
}

BoxedPosetMap BoxedPosetMap::identity(ExponentVector g) {
  const std::size_t n = g.size();
  return BoxedPosetMap(Identity{}, std::move(g), n);
}

BoxedPosetMap BoxedPosetMap::one_dim(std::vector<ExponentVector> table) {
  if (table.empty()) throw std::invalid_argument("one-dimensional map needs a nonempty table");
  const std::size_t n_prime = table.front().size();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].size() != n_prime) throw std::invalid_argument("one-dimensional table with ragged entries");
    if (std::any_of(table[i].begin(), table[i].end(), [](int e) { return e < 0; }))
      throw std::invalid_argument("one-dimensional table with negative entry");
    if (i > 0 && !leq(table[i - 1], table[i]))
      throw std::invalid_argument("one-dimensional table is not nondecreasing at " + std::to_string(i));
  }
  const int g = static_cast<int>(table.size()) - 1;
  return BoxedPosetMap(OneDim{std::move(table)}, scalar(g), n_prime);
}

BoxedPosetMap BoxedPosetMap::product(std::vector<BoxedPosetMap> factors) {
  ExponentVector g;
  std::size_t n_prime = 0;
  for (const auto& f : factors) {
    g = concat(g, f.domain_bound());
    n_prime += f.codomain_dim();
  }
  return BoxedPosetMap(Product{std::move(factors)}, std::move(g), n_prime);
}

BoxedPosetMap BoxedPosetMap::min2(ExponentVector g) {
  if (g.size() != 2) throw std::invalid_argument("min map needs a two-dimensional bound");
  return BoxedPosetMap(Min2{}, std::move(g), 1);
}

BoxedPosetMap BoxedPosetMap::shift_up(int k, int g) {
  require_scalar_bound(g, "shift_up");
  if (k < 0) throw std::invalid_argument("shift_up: negative threshold");
  return BoxedPosetMap(ShiftUp{k}, scalar(g), 1);
}

BoxedPosetMap BoxedPosetMap::shift_down(int k, int g) {
  require_scalar_bound(g, "shift_down");
  if (k < 0) throw std::invalid_argument("shift_down: negative threshold");
  return BoxedPosetMap(ShiftDown{k}, scalar(g), 1);
}

BoxedPosetMap BoxedPosetMap::polar_step(int g) {
  require_scalar_bound(g, "polar_step");
  return BoxedPosetMap(PolarStep{}, scalar(g), 2);
}

BoxedPosetMap BoxedPosetMap::table(ExponentVector g, std::vector<ExponentVector> values) {
  const auto box = box_points(g);
  if (values.size() != box.size())
    throw std::invalid_argument("table map: expected " + std::to_string(box.size()) + " values, got " +
                                std::to_string(values.size()));
  const std::size_t n_prime = values.front().size();
  for (const auto& v : values) {
    if (v.size() != n_prime) throw std::invalid_argument("table map with ragged values");
    if (std::any_of(v.begin(), v.end(), [](int e) { return e < 0; }))
      throw std::invalid_argument("table map with negative value");
  }
  // monotone on a box iff monotone along every unit step
  const BoxIndex index(g);
  for (const auto& a : box) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] == 0) continue;
      ExponentVector b = a;
      b[j] -= 1;
      if (!leq(values[index(b)], values[index(a)]))
        throw std::invalid_argument("table map is not monotone between " + to_string(b) + " and " + to_string(a));
    }
  }
  return BoxedPosetMap(Table{std::move(values)}, std::move(g), n_prime);
}

BoxedPosetMap BoxedPosetMap::with_codomain(ExponentVector g_prime) const {
  if (g_prime.size() != n_prime_ || !leq((*this)(g_), g_prime))
    throw std::invalid_argument("codomain bound " + to_string(g_prime) + " does not contain phi(g) = " +
                                to_string((*this)(g_)));
  BoxedPosetMap copy = *this;
  copy.g_prime_ = std::move(g_prime);
  return copy;
}

std::string BoxedPosetMap::kind_name() const {
  return std::visit(overloaded{[](const Identity&) { return "Identity"; }, [](const OneDim&) { return "OneDim"; },
                               [](const Product&) { return "Product"; }, [](const Min2&) { return "Min2"; },
                               [](const ShiftUp&) { return "ShiftUp"; }, [](const ShiftDown&) { return "ShiftDown"; },
                               [](const PolarStep&) { return "PolarStep"; }, [](const Table&) { return "Table"; }},
                    kind_);
}

std::optional<ExponentVector> BoxedPosetMap::evaluate_unboxed(const ExponentVector& a) const {
  if (a.size() != g_.size())
    throw std::invalid_argument("poset map: argument " + to_string(a) + " has wrong length");
  if (std::any_of(a.begin(), a.end(), [](int e) { return e < 0; }))
    throw std::out_of_range("poset map: negative argument " + to_string(a));
  return std::visit(
      overloaded{
          [&](const Identity&) -> std::optional<ExponentVector> { return a; },
          [&](const OneDim& t) -> std::optional<ExponentVector> {
            if (a[0] > g_[0]) return std::nullopt;
            return t.table[static_cast<std::size_t>(a[0])];
          },
          [&](const Product& p) -> std::optional<ExponentVector> {
            ExponentVector out;
            std::size_t offset = 0;
            for (const auto& f : p.factors) {
              auto part = f.evaluate_unboxed(slice(a, offset, f.domain_dim()));
              if (!part) return std::nullopt;
              out = concat(out, *part);
              offset += f.domain_dim();
            }
            return out;
          },
          [&](const Min2&) -> std::optional<ExponentVector> { return scalar(std::min(a[0], a[1])); },
          [&](const ShiftUp& s) -> std::optional<ExponentVector> { return scalar(a[0] < s.k ? a[0] : a[0] + 1); },
          [&](const ShiftDown& s) -> std::optional<ExponentVector> { return scalar(a[0] <= s.k ? a[0] : a[0] - 1); },
          [&](const PolarStep&) -> std::optional<ExponentVector> {
            return a[0] >= 2 ? ExponentVector{a[0] - 1, 1} : ExponentVector{a[0], 0};
          },
          [&](const Table& t) -> std::optional<ExponentVector> {
            if (!in_box(a, g_)) return std::nullopt;
            return t.values[BoxIndex(g_)(a)];
          },
      },
      kind_);
}

ExponentVector BoxedPosetMap::operator()(const ExponentVector& a) const {
  if (!in_box(a, g_)) throw std::out_of_range("poset map: " + to_string(a) + " outside [0," + to_string(g_) + "]");
  return *evaluate_unboxed(a);
}

bool BoxedPosetMap::tabulated(std::size_t j) const {
  if (j >= g_.size()) throw std::out_of_range("poset map: coordinate out of range");
  if (std::holds_alternative<OneDim>(kind_) || std::holds_alternative<Table>(kind_)) return true;
  if (const auto* p = std::get_if<Product>(&kind_)) {
    for (const auto& f : p->factors) {
      if (j < f.domain_dim()) return f.tabulated(j);
      j -= f.domain_dim();
    }
  }
  return false;
}

ExponentVector evaluate_map(const BoxedPosetMap& phi, const ExponentVector& a) { return phi(a); }

// ---------------------------------------------------------------------------

MapClassification classify_map(const BoxedPosetMap& phi) {
  MapClassification c;
  const auto box = box_points(phi.domain_bound());
  const auto img = images(phi, box);
  const BoxIndex index(phi.domain_bound());
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (std::size_t k = i + 1; k < box.size(); ++k) {
      const auto& a = box[i];
      const auto& b = box[k];
      if (c.monotone && ((leq(a, b) && !leq(img[i], img[k])) || (leq(b, a) && !leq(img[k], img[i])))) {
        c.monotone = false;
        c.monotone_witness = {{a, b}};
      }
      if (c.preserves_joins && img[index(join(a, b))] != join(img[i], img[k])) {
        c.preserves_joins = false;
        c.join_witness = {{a, b}};
      }
      if (c.preserves_meets && img[index(meet(a, b))] != meet(img[i], img[k])) {
        c.preserves_meets = false;
        c.meet_witness = {{a, b}};
      }
      if (!c.monotone && !c.preserves_joins && !c.preserves_meets) return c;
    }
  }
  return c;
}

std::vector<ExponentVector> restricted_preimage(const BoxedPosetMap& phi, const Interval& target) {
  std::vector<ExponentVector> out;
  for (auto& a : box_points(phi.domain_bound()))
    if (target.contains(phi(a))) out.push_back(std::move(a));
  return out;
}

DepthChangeResult verify_depth_change(const BoxedPosetMap& phi, int ell, unsigned threads) {
  const ExponentVector& g = phi.domain_bound();
  const ExponentVector& gp = phi.codomain_bound();
  const auto box = box_points(g);
  const auto img = images(phi, box);
  const BoxIndex index(g);
  for (std::size_t i = 0; i < box.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (box[i][j] == 0) continue;
      ExponentVector b = box[i];
      b[j] -= 1;
      if (!leq(img[index(b)], img[i]))
        throw std::invalid_argument("verify_depth_change: map is not monotone at " + to_string(box[i]));
    }

  std::vector<Interval> targets;
  for (const auto& lo : box_points(gp))
    for (auto& hi : box_points(lo, gp)) targets.emplace_back(lo, std::move(hi));

  std::vector<std::optional<PreimageRecord>> records(targets.size());
  std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};
  parallel_for(targets.size(), threads, [&](std::size_t t) {
    if (t > first_failure.load()) return;
    const Interval& target = targets[t];
    std::vector<ExponentVector> pre;
    for (std::size_t i = 0; i < box.size(); ++i)
      if (target.contains(img[i])) pre.push_back(box[i]);
    const int need = rho(target.hi, gp) + ell;
    auto cover = exact_cover_by_intervals(pre, [&](const ExponentVector& b) { return rho(b, g) >= need; });
    if (!cover) {
      std::size_t cur = first_failure.load();
      while (t < cur && !first_failure.compare_exchange_weak(cur, t)) {
      }
      return;
    }
    PreimageRecord rec{target, std::move(*cover), std::nullopt};
    for (const auto& iv : rec.cover) {
      const int m = rho(iv.hi, g) - rho(target.hi, gp);
      rec.margin = rec.margin ? std::min(*rec.margin, m) : m;
    }
    records[t] = std::move(rec);
  });

  DepthChangeResult result;
  if (first_failure.load() != std::numeric_limits<std::size_t>::max()) {
    result.failing = targets[first_failure.load()];
    return result;
  }
  DepthChangeCertificate cert{ell, g, gp, {}};
  cert.records.reserve(records.size());
  for (auto& r : records) cert.records.push_back(std::move(*r));
  result.certificate = std::move(cert);
  return result;
}

BoxedPosetMap product_map(const BoxedPosetMap& first, const BoxedPosetMap& second) {
  return BoxedPosetMap::product({first, second});
}

BoxedPosetMap pad_with_identities(const BoxedPosetMap& phi, const ExponentVector& before, const ExponentVector& after) {
  std::vector<BoxedPosetMap> factors;
  if (!before.empty()) factors.push_back(BoxedPosetMap::identity(before));
  factors.push_back(phi);
  if (!after.empty()) factors.push_back(BoxedPosetMap::identity(after));
  if (factors.size() == 1) return phi;
  return BoxedPosetMap::product(std::move(factors));
}

// ---------------------------------------------------------------------------

ExponentVector SplitResult::reassemble(const ExponentVector& a) const {
  std::vector<int> out(codomain_order.size(), 0);
  std::size_t t = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const ExponentVector y = factors[k](ExponentVector{a[domain_order[k]]});
    for (int v : y) out[codomain_order[t++]] = v;
  }
  return ExponentVector(std::move(out));
}

SplitResult split_join_meet_map(const BoxedPosetMap& phi) {
  const MapClassification c = classify_map(phi);
  if (!c.preserves_joins) throw SplitError("map does not preserve joins", *c.join_witness);
  if (!c.preserves_meets) throw SplitError("map does not preserve meets", *c.meet_witness);
  if (!c.monotone) throw SplitError("map is not monotone", *c.monotone_witness);

  const ExponentVector& g = phi.domain_bound();
  const std::size_t n = g.size();
  const std::size_t n_prime = phi.codomain_dim();
  const ExponentVector base = phi(ExponentVector::zero(n));

  // support of phi(g_i e_i) - phi(0); monotonicity makes it the largest one
  std::vector<std::vector<std::size_t>> coords(n);
  std::vector<int> owner(n_prime, -1);
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector e = ExponentVector::zero(n);
    e[i] = g[i];
    const ExponentVector top = phi(e);
    for (std::size_t c2 = 0; c2 < n_prime; ++c2) {
      if (top[c2] == base[c2]) continue;
      if (owner[c2] >= 0) {
        ExponentVector other = ExponentVector::zero(n);
        other[static_cast<std::size_t>(owner[c2])] = g[static_cast<std::size_t>(owner[c2])];
        throw SplitError("codomain coordinate " + std::to_string(c2) + " is shared by two domain coordinates",
                         {other, e});
      }
      owner[c2] = static_cast<int>(i);
      coords[i].push_back(c2);
    }
  }
  // constant coordinates ride along with the first domain coordinate
  for (std::size_t c2 = 0; c2 < n_prime; ++c2)
    if (owner[c2] < 0) coords[0].push_back(c2);
  std::sort(coords[0].begin(), coords[0].end());

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (coords[x].empty() || coords[y].empty()) return !coords[x].empty() && coords[y].empty();
    return coords[x].front() < coords[y].front();
  });

  SplitResult result;
  for (std::size_t i : order) {
    std::vector<ExponentVector> table;
    for (int lambda = 0; lambda <= g[i]; ++lambda) {
      ExponentVector e = ExponentVector::zero(n);
      e[i] = lambda;
      const ExponentVector y = phi(e);
      std::vector<int> part;
      for (std::size_t c2 : coords[i]) part.push_back(y[c2]);
      table.emplace_back(std::move(part));
    }
    result.factors.push_back(BoxedPosetMap::one_dim(std::move(table)));
    result.domain_order.push_back(i);
    result.codomain_order.insert(result.codomain_order.end(), coords[i].begin(), coords[i].end());
  }

  for (const auto& a : box_points(g)) {
    const ExponentVector got = result.reassemble(a);
    if (got != phi(a)) throw SplitError("map is not a product of its one-dimensional restrictions", {a, got});
  }
  return result;
}

// ---------------------------------------------------------------------------

MonomialIdeal pullback_ideal(const BoxedPosetMap& phi, const MonomialIdeal& target) {
  if (target.nvars() != phi.codomain_dim()) throw std::invalid_argument("pullback_ideal: ring mismatch");
  const ExponentVector& g = phi.domain_bound();
  const std::size_t n = g.size();
  if (target.is_zero()) return MonomialIdeal::zero(n);

  int h = 0;
  for (const auto& u : target.generators()) h = std::max(h, *std::max_element(u.begin(), u.end()));
  // Structured coordinates: every kind here needs at most h + 1 in a
  // coordinate to reach height h, so the enlarged box holds all minima.
  ExponentVector window = g;
  for (std::size_t j = 0; j < n; ++j)
    if (!phi.tabulated(j)) window[j] = std::max(g[j], h + 1);

  std::vector<ExponentVector> pre;
  for (auto& a : box_points(window))
    if (target.contains(*phi.evaluate_unboxed(a))) pre.push_back(std::move(a));
  MonomialIdeal result(n, std::move(pre));

  for (const auto& m : result.generators())
    for (std::size_t j = 0; j < n; ++j)
      if (phi.tabulated(j) && g[j] >= 1 && m[j] == g[j])
        throw Error("pullback_ideal: preimage generator " + to_string(m) + " sits on the table boundary in coordinate " +
                    std::to_string(j) + "; the table does not determine the ideal beyond its box");
  return result;
}

MonomialIdeal pushforward_ideal(const BoxedPosetMap& phi, const MonomialIdeal& source) {
  if (source.nvars() != phi.domain_dim()) throw std::invalid_argument("pushforward_ideal: ring mismatch");
  std::vector<ExponentVector> gens;
  for (const auto& u : source.generators()) {
    auto v = phi.evaluate_unboxed(u);
    if (!v) throw Error("pushforward_ideal: map undefined at generator " + to_string(u));
    gens.push_back(std::move(*v));
  }
  return MonomialIdeal(phi.codomain_dim(), std::move(gens));
}

}  // namespace sdlab
