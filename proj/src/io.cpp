#include "sdlab/io.hpp"

namespace sdlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json vectors_to_json(const std::vector<ExponentVector>& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(to_json(a));
  return out;
}

std::vector<ExponentVector> vectors_from_json(const Json& j) {
  std::vector<ExponentVector> out;
  for (const auto& a : j) out.push_back(exponent_from_json(a));
  return out;
}

Json ring_to_json(const RingContext& r) { return {{"names", r.names()}, {"characteristic", r.characteristic()}}; }

RingContext ring_from_json(const Json& j) {
  return RingContext(j.at("names").get<std::vector<std::string>>(), j.value("characteristic", 0u));
}

}  // namespace

Json to_json(const ExponentVector& a) { return a.entries(); }

ExponentVector exponent_from_json(const Json& j) { return ExponentVector(j.get<std::vector<int>>()); }

Json partition_to_json(const IntervalPartition& p) {
  Json out = Json::array();
  for (const auto& iv : p.intervals) out.push_back({{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}});
  return out;
}

IntervalPartition partition_from_json(const Json& j, const ExponentVector& bound) {
  IntervalPartition p{{}, bound};
  for (const auto& iv : j) p.intervals.emplace_back(exponent_from_json(iv.at("lo")), exponent_from_json(iv.at("hi")));
  return p;
}

Json decomposition_to_json(const StanleyDecomposition& d, const RingContext& ring) {
  Json out = Json::array();
  for (const auto& part : d.parts) {
    Json z = Json::array();
    for (std::size_t v : part.vars) z.push_back(ring.name(v));
    out.push_back({{"a", to_json(part.a)}, {"monomial", format_monomial(part.a, ring)}, {"Z", z}});
  }
  return out;
}

Json hilbert_to_json(const HilbertSeries& h) {
  Json num = Json::array();
  for (const auto& c : h.numerator()) num.push_back(c.str());
  return {{"numerator", num}, {"denominator_exponent", h.denominator_exponent()}, {"text", h.to_string()}};
}

Json map_to_json(const BoxedPosetMap& phi) {
  Json j = {{"kind", phi.kind_name()}, {"g", to_json(phi.domain_bound())}, {"g_prime", to_json(phi.codomain_bound())}};
  std::visit(overloaded{
                 [](const BoxedPosetMap::Identity&) {},
                 [&](const BoxedPosetMap::OneDim& t) { j["table"] = vectors_to_json(t.table); },
                 [&](const BoxedPosetMap::Product& p) {
                   Json f = Json::array();
                   for (const auto& m : p.factors) f.push_back(map_to_json(m));
                   j["factors"] = f;
                 },
                 [](const BoxedPosetMap::Min2&) {},
                 [&](const BoxedPosetMap::ShiftUp& s) { j["k"] = s.k; },
                 [&](const BoxedPosetMap::ShiftDown& s) { j["k"] = s.k; },
                 [](const BoxedPosetMap::PolarStep&) {},
                 [&](const BoxedPosetMap::Table& t) { j["values"] = vectors_to_json(t.values); },
             },
             phi.kind());
  return j;
}

BoxedPosetMap map_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const ExponentVector g = exponent_from_json(j.at("g"));
  auto scalar_bound = [&] {
    if (g.size() != 1) throw Error("map_from_json: " + kind + " needs a one-dimensional bound");
    return g[0];
  };
  BoxedPosetMap phi = [&] {
    if (kind == "Identity") return BoxedPosetMap::identity(g);
    if (kind == "OneDim") return BoxedPosetMap::one_dim(vectors_from_json(j.at("table")));
    if (kind == "Product") {
      std::vector<BoxedPosetMap> factors;
      for (const auto& f : j.at("factors")) factors.push_back(map_from_json(f));
      return BoxedPosetMap::product(std::move(factors));
    }
    if (kind == "Min2") return BoxedPosetMap::min2(g);
    if (kind == "ShiftUp") return BoxedPosetMap::shift_up(j.at("k").get<int>(), scalar_bound());
    if (kind == "ShiftDown") return BoxedPosetMap::shift_down(j.at("k").get<int>(), scalar_bound());
    if (kind == "PolarStep") return BoxedPosetMap::polar_step(scalar_bound());
    if (kind == "Table") return BoxedPosetMap::table(g, vectors_from_json(j.at("values")));
    throw Error("map_from_json: unknown kind '" + kind + "'");
  }();
  if (phi.domain_bound() != g) throw Error("map_from_json: inconsistent domain bound");
  if (j.contains("g_prime")) {
    const ExponentVector gp = exponent_from_json(j.at("g_prime"));
    if (gp != phi.codomain_bound()) phi = phi.with_codomain(gp);
  }
  return phi;
}

Json trace_to_json(const PolarizationTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"variable", s.variable}, {"fresh", s.fresh_name}, {"map", map_to_json(s.map)}});
  return {{"source", ring_to_json(t.source)},
          {"renamed", ring_to_json(t.renamed)},
          {"steps", steps},
          {"final_order", t.final_order},
          {"target", ring_to_json(t.target)}};
}

PolarizationTrace trace_from_json(const Json& j) {
  std::vector<PolarizationStep> steps;
  for (const auto& s : j.at("steps"))
    steps.push_back({s.at("variable").get<std::size_t>(), s.at("fresh").get<std::string>(), map_from_json(s.at("map"))});
  return {ring_from_json(j.at("source")), ring_from_json(j.at("renamed")), std::move(steps),
          j.at("final_order").get<std::vector<std::size_t>>(), ring_from_json(j.at("target"))};
}

}  // namespace sdlab
