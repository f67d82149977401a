#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sdlab/monomial.hpp"
#include "sdlab/verify.hpp"

using namespace sdlab;

namespace {

ModuleSpec spec(const char* text) { return parse_module_spec(text); }

IntPolynomial poly(std::initializer_list<int> c) {
  IntPolynomial p;
  for (int x : c) p.emplace_back(x);
  return p;
}

}  // namespace

TEST_CASE("exponent vectors") {
  const ExponentVector a{2, 0, 1}, b{1, 3, 1};
  CHECK(join(a, b) == ExponentVector{2, 3, 1});
  CHECK(meet(a, b) == ExponentVector{1, 0, 1});
  CHECK(a.degree() == 3);
  CHECK(leq(meet(a, b), a));
  CHECK_FALSE(leq(a, b));
  CHECK(to_string(a) == "(2,0,1)");
  CHECK(box_size(ExponentVector{0, 0}, ExponentVector{1, 2}) == 6);
  const auto pts = box_points(ExponentVector{1, 1});
  REQUIRE(pts.size() == 4);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK_THROWS(ExponentVector({1, -1}));
}

TEST_CASE("parsing") {
  SUBCASE("single variable") {
    const ModuleSpec s = spec("ring: x\nI: x^2\nJ: 0");
    CHECK(s.nvars() == 1);
    CHECK(s.I().generators() == std::vector<ExponentVector>{{2}});
    CHECK(s.J().is_zero());
  }
  SUBCASE("unit ideal") {
    const ModuleSpec s = spec("ring: x,y\nI: 1\nJ: x*y");
    CHECK(s.I().is_unit());
    CHECK(s.J().generators() == std::vector<ExponentVector>{{1, 1}});
  }
  SUBCASE("whitespace, comments and minimalization") {
    const ModuleSpec s = spec("# header\n ring : x , y \n I: x^2*y, x^3 * y^2 , y^4 # trailing\nJ: 0\n");
    CHECK(s.I().generators() == std::vector<ExponentVector>{{0, 4}, {2, 1}});
  }
  SUBCASE("repeated factors multiply") { CHECK(spec("ring: x\nI: x*x^2\nJ: 0").I().generators()[0] == ExponentVector{3}); }
  SUBCASE("errors") {
    CHECK_THROWS_AS(spec("ring: x\nI: x\nJ: x"), SpecError);
    CHECK_THROWS_AS(spec("ring: x\nI: x\nJ: 1"), SpecError);
    CHECK_THROWS_AS(spec("ring: x\nI: 0\nJ: 0"), SpecError);
    CHECK_THROWS_AS(spec("ring: x\nI: z\nJ: 0"), ParseError);
    CHECK_THROWS_AS(spec("ring: x\nI: x^\nJ: 0"), ParseError);
    CHECK_THROWS_AS(spec("ring: x\nI: x\n"), ParseError);
    CHECK_THROWS_AS(spec("ring: x, x\nI: x\nJ: 0"), ParseError);
    CHECK_THROWS_AS(spec("ring: x\nring: y\nI: x\nJ: 0"), ParseError);
    CHECK_THROWS_AS(spec("ring: x\nI: x\nJ: 0\nK: 1"), ParseError);
  }
}

TEST_CASE("format round-trips through the parser") {
  for (std::size_t t = 0; t < 200; ++t) {
    auto rng = trial_rng(3, t);
    const ModuleSpec s = random_spec(rng);
    CHECK(parse_module_spec(format_module_spec(s)) == s);
  }
}

TEST_CASE("minimal generators") {
  CHECK(minimal_generators({{2}, {3}}) == std::vector<ExponentVector>{{2}});
  CHECK(minimal_generators({{1, 1}, {2, 1}, {0, 3}}) == std::vector<ExponentVector>{{0, 3}, {1, 1}});
  CHECK(minimal_generators({}).empty());
  CHECK(minimal_generators({{1, 1}, {1, 1}}).size() == 1);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto gens = oracle::random_vectors(rng, 5, 3, 3);
    const auto m = minimal_generators(gens);
    CHECK(minimal_generators(m) == m);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(minimal_generators(gens) == m);
  }
}

TEST_CASE("ideal membership") {
  const MonomialIdeal x2(2, {{2, 0}});
  CHECK(ideal_contains(MonomialIdeal(1, {{2}}), ExponentVector{3}));
  CHECK_FALSE(ideal_contains(x2, ExponentVector{1, 1}));
  CHECK_FALSE(ideal_contains(MonomialIdeal::zero(1), ExponentVector{0}));
  CHECK(ideal_contains(MonomialIdeal::unit(1), ExponentVector{0}));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto gens = oracle::random_vectors(rng, 4, 3, 3);
    const MonomialIdeal ideal(3, gens);
    for (const auto& a : box_points(ExponentVector{4, 4, 4})) CHECK(ideal.contains(a) == oracle::in_ideal(gens, a));
  }
}

TEST_CASE("canonical bound") {
  CHECK(canonical_bound(spec("ring: x,y,z\nI: x^2*y, z^3\nJ: x^2*y*z")) == ExponentVector{2, 1, 3});
  CHECK(canonical_bound(spec("ring: x\nI: 1\nJ: x^2")) == ExponentVector{2});
  CHECK(canonical_bound(spec("ring: x\nI: x\nJ: 0")) == ExponentVector{1});
  CHECK(canonical_bound(spec("ring: x,y\nI: x\nJ: 0")) == ExponentVector{1, 0});
}

TEST_CASE("Hilbert series examples") {
  CHECK(hilbert_series(spec("ring: x\nI: 1\nJ: x^2")) == HilbertSeries(poly({1, 1}), 0));
  CHECK(hilbert_series(spec("ring: x,y\nI: x*y\nJ: 0")) == HilbertSeries(poly({0, 0, 1}), 2));
  CHECK(hilbert_series(spec("ring: x\nI: 1\nJ: 0")) == HilbertSeries(poly({1}), 1));
  CHECK(hilbert_series(spec("ring: x\nI: 1\nJ: x^2")).to_string() == "1 + t");
  CHECK(hilbert_series(spec("ring: x,y\nI: x*y\nJ: 0")).to_string() == "(t^2)/(1 - t)^2");
}

TEST_CASE("Hilbert series arithmetic") {
  const HilbertSeries free1(poly({1}), 1);
  CHECK(HilbertSeries(poly({1, -1}), 1) == HilbertSeries(poly({1}), 0));
  CHECK(free1.times_one_minus_t(1) == HilbertSeries(poly({1}), 0));
  CHECK(free1.times_one_minus_t(-1) == HilbertSeries(poly({1}), 2));
  CHECK(free1 - free1 == HilbertSeries(IntPolynomial{}, 0));
  CHECK((free1 + HilbertSeries(poly({1}), 2)).coefficients(3) == std::vector<BigInt>{2, 3, 4, 5});
  CHECK(format_polynomial(poly({1, 1, -3})) == "1 + t - 3*t^2");
}

TEST_CASE("Hilbert series coefficients match monomial counts") {
  for (std::size_t t = 0; t < 150; ++t) {
    auto rng = trial_rng(17, t);
    const ModuleSpec s = random_spec(rng);
    const int d = canonical_bound(s).degree() + 2;
    const auto counts = oracle::count_by_degree(s.nvars(), s.I().generators(), s.J().generators(), d);
    const auto coeffs = hilbert_series(s).coefficients(d);
    for (int k = 0; k <= d; ++k) CHECK(coeffs[static_cast<std::size_t>(k)] == counts[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("ring contexts") {
  CHECK_THROWS(RingContext({}));
  CHECK_THROWS(RingContext({"x", "x"}));
  CHECK_THROWS(RingContext({"x"}, 4));
  CHECK(RingContext({"x"}, 7).characteristic() == 7);
  CHECK(RingContext({"x", "y"}).index_of("y") == 1);
  CHECK(RingContext({"x", "y"}).index_of("z") == 2);
}
