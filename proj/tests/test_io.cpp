#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdlab/io.hpp"
#include "sdlab/verify.hpp"

using namespace sdlab;

namespace {

Json round_trip(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("exponent vectors") {
  CHECK(to_json(ExponentVector{2, 0, 1}).dump() == "[2,0,1]");
  CHECK(exponent_from_json(Json::parse("[1,2]")) == ExponentVector{1, 2});
  CHECK_THROWS(exponent_from_json(Json::parse("[1,-2]")));
  CHECK_THROWS(exponent_from_json(Json::parse("{\"a\":1}")));
}

TEST_CASE("maps") {
  const std::vector<BoxedPosetMap> maps{
      BoxedPosetMap::identity({2, 1}),
      BoxedPosetMap::one_dim({{0, 1}, {1, 1}, {3, 2}}),
      BoxedPosetMap::min2({2, 3}),
      BoxedPosetMap::shift_up(1, 3),
      BoxedPosetMap::shift_down(2, 4),
      BoxedPosetMap::polar_step(3),
      BoxedPosetMap::table({1, 1}, {{0}, {1}, {1}, {2}}),
      pad_with_identities(BoxedPosetMap::polar_step(2), {1}, {3}),
      BoxedPosetMap::identity({1}).with_codomain({2}),
  };
  for (const auto& phi : maps) {
    CAPTURE(map_to_json(phi).dump());
    CHECK(map_from_json(round_trip(map_to_json(phi))) == phi);
  }
  CHECK(map_to_json(BoxedPosetMap::shift_up(1, 3)).at("kind") == "ShiftUp");
  CHECK_THROWS(map_from_json(Json::parse(R"({"kind":"Nope","g":[1]})")));
  CHECK_THROWS(map_from_json(Json::parse(R"({"kind":"PolarStep","g":[1,1]})")));
  CHECK_THROWS(map_from_json(Json::parse(R"({"kind":"Identity","g":[1],"g_prime":[0]})")));
}

TEST_CASE("partitions and decompositions") {
  const ModuleSpec s = parse_module_spec("ring: x,y\nI: x, y\nJ: 0");
  const auto best = sdepth(s);
  const auto back = partition_from_json(round_trip(partition_to_json(best.witness)), best.witness.bound);
  CHECK(back.intervals == best.witness.intervals);
  CHECK(back.bound == best.witness.bound);

  const StanleyDecomposition d{2, {{{1, 0}, {0}}, {{0, 1}, {0, 1}}}};
  const Json j = decomposition_to_json(d, s.ring());
  CHECK(j[0].at("monomial") == "x");
  CHECK(j[1].at("Z") == Json::parse(R"(["x","y"])"));
  CHECK(j[1].at("a") == Json::parse("[0,1]"));
}

TEST_CASE("hilbert series") {
  const auto h = hilbert_series(parse_module_spec("ring: x\nI: 1\nJ: x^2"));
  const Json j = hilbert_to_json(h);
  CHECK(j.at("numerator") == Json::parse(R"(["1","1"])"));
  CHECK(j.at("denominator_exponent") == 0);
  CHECK(j.at("text") == h.to_string());
}

TEST_CASE("traces") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 50; ++t) {
    const ModuleSpec s = random_spec(rng);
    const auto full = full_polarize(s);
    const PolarizationTrace back = trace_from_json(round_trip(trace_to_json(full.trace)));
    CHECK(trace_to_json(back) == trace_to_json(full.trace));
    CHECK(replay_trace(s, back) == full.spec);
  }
}
