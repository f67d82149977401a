#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sdlab/posetmaps.hpp"
#include "sdlab/verify.hpp"

using namespace sdlab;

namespace {

using Pair = std::pair<ExponentVector, ExponentVector>;

std::set<ExponentVector> as_set(const std::vector<ExponentVector>& v) { return {v.begin(), v.end()}; }

int count_rho(const ExponentVector& b, const ExponentVector& g) {
  int r = 0;
  for (std::size_t k = 0; k < b.size(); ++k) r += b[k] == g[k];
  return r;
}

// Recheck of a certificate written against the definition: all intervals of
// [0, g'] appear once, and each cover is an exact disjoint union of
// intervals equal to the preimage computed by evaluating phi pointwise.
bool certificate_is_sound(const BoxedPosetMap& phi, const DepthChangeCertificate& cert) {
  const ExponentVector& g = phi.domain_bound();
  const ExponentVector& gp = phi.codomain_bound();
  std::set<Pair> targets;
  for (const auto& lo : box_points(gp))
    for (const auto& hi : box_points(lo, gp)) targets.emplace(lo, hi);
  if (cert.records.size() != targets.size()) return false;
  for (const auto& rec : cert.records) {
    if (!targets.erase({rec.target.lo, rec.target.hi})) return false;
    std::multiset<ExponentVector> covered;
    for (const auto& iv : rec.cover) {
      if (count_rho(iv.hi, g) < count_rho(rec.target.hi, gp) + cert.ell) return false;
      for (const auto& p : box_points(iv.lo, iv.hi)) covered.insert(p);
    }
    std::multiset<ExponentVector> pre;
    for (const auto& a : box_points(g)) {
      const ExponentVector v = phi(a);
      if (oracle::divides(rec.target.lo, v) && oracle::divides(v, rec.target.hi)) pre.insert(a);
    }
    if (covered != pre) return false;
  }
  return targets.empty();
}

BoxedPosetMap one_dim(std::initializer_list<ExponentVector> t) { return BoxedPosetMap::one_dim(t); }

}  // namespace

TEST_CASE("evaluation") {
  const auto p = BoxedPosetMap::polar_step(3);
  CHECK(p({0}) == ExponentVector{0, 0});
  CHECK(p({1}) == ExponentVector{1, 0});
  CHECK(p({2}) == ExponentVector{1, 1});
  CHECK(p({3}) == ExponentVector{2, 1});
  CHECK(p.codomain_bound() == ExponentVector{2, 1});
  CHECK(BoxedPosetMap::min2({3, 3})({3, 1}) == ExponentVector{1});
  const auto up = BoxedPosetMap::shift_up(2, 4);
  CHECK(up({1}) == ExponentVector{1});
  CHECK(up({2}) == ExponentVector{3});
  CHECK(up.codomain_bound() == ExponentVector{5});
  const auto down = BoxedPosetMap::shift_down(2, 4);
  CHECK(down({2}) == ExponentVector{2});
  CHECK(down({3}) == ExponentVector{2});
  CHECK(evaluate_map(BoxedPosetMap::identity({2, 1}), {1, 1}) == ExponentVector{1, 1});
  CHECK_THROWS_AS(p({4}), std::out_of_range);
  CHECK(p.evaluate_unboxed({5}) == ExponentVector{4, 1});
  CHECK_FALSE(one_dim({{0}, {1}}).evaluate_unboxed({2}));
}

TEST_CASE("construction errors") {
  CHECK_THROWS(one_dim({{1}, {0}}));
  CHECK_THROWS(BoxedPosetMap::table({1, 1}, {{0}, {1}, {0}, {1}}).with_codomain({0}));
  CHECK_THROWS(BoxedPosetMap::table({1}, {{1}, {0}}));
  CHECK_THROWS(BoxedPosetMap::table({1}, {{0}}));
  CHECK_THROWS(BoxedPosetMap::min2({2}));
}

TEST_CASE("classification") {
  const auto m = classify_map(BoxedPosetMap::min2({2, 2}));
  CHECK(m.monotone);
  CHECK(m.preserves_meets);
  CHECK_FALSE(m.preserves_joins);
  REQUIRE(m.join_witness);
  CHECK(std::set<ExponentVector>{m.join_witness->first, m.join_witness->second} ==
        std::set<ExponentVector>{{1, 0}, {0, 1}});

  const auto id = classify_map(BoxedPosetMap::identity({2, 1}));
  CHECK((id.monotone && id.preserves_joins && id.preserves_meets));
  for (int g = 0; g <= 6; ++g) {
    const auto p = classify_map(BoxedPosetMap::polar_step(g));
    CHECK((p.monotone && p.preserves_joins && p.preserves_meets));
  }
  // a monotone map that fails meets: (a,b) -> a + b
  std::vector<ExponentVector> sums;
  for (const auto& a : box_points(ExponentVector{1, 1})) sums.push_back({a[0] + a[1]});
  const auto s = classify_map(BoxedPosetMap::table({1, 1}, sums));
  CHECK(s.monotone);
  CHECK_FALSE(s.preserves_meets);
  CHECK_FALSE(s.preserves_joins);
}

TEST_CASE("depth-change certificates") {
  SUBCASE("identity") {
    const auto phi = BoxedPosetMap::identity({2, 1});
    const auto r = verify_depth_change(phi, 0);
    REQUIRE(r);
    CHECK(certificate_is_sound(phi, *r.certificate));
    CHECK_FALSE(verify_depth_change(phi, 1));
  }
  SUBCASE("min map") {
    const auto m = BoxedPosetMap::min2({2, 2});
    CHECK(as_set(restricted_preimage(m, Interval({0}, {1}))) ==
          std::set<ExponentVector>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}});
    const auto r = verify_depth_change(m, 1);
    REQUIRE(r);
    CHECK(certificate_is_sound(m, *r.certificate));
    const auto bad = verify_depth_change(m, 2);
    CHECK_FALSE(bad);
    CHECK(bad.failing.has_value());
  }
  SUBCASE("one-dimensional maps into the plane") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 40; ++t) {
      const auto phi = random_one_dim_map(rng, 4, 2, 2);
      const auto r = verify_depth_change(phi, -1);
      REQUIRE(r);
      CHECK(certificate_is_sound(phi, *r.certificate));
      CHECK_FALSE(audit_certificate(phi, *r.certificate));
    }
  }
  SUBCASE("products add") {
    const auto a = one_dim({{0, 0}, {1, 0}, {1, 2}, {2, 2}});
    const auto b = one_dim({{0, 1}, {1, 1}, {1, 1}, {3, 2}});
    REQUIRE(verify_depth_change(a, -1));
    REQUIRE(verify_depth_change(b, -1));
    const auto ab = product_map(a, b);
    CHECK(ab.domain_bound() == ExponentVector{3, 3});
    const auto r = verify_depth_change(ab, -2);
    REQUIRE(r);
    CHECK(certificate_is_sound(ab, *r.certificate));
  }
  SUBCASE("threads do not change the certificate") {
    const auto phi = product_map(BoxedPosetMap::polar_step(3), BoxedPosetMap::min2({2, 2}));
    const auto one = verify_depth_change(phi, 0, 1);
    const auto four = verify_depth_change(phi, 0, 4);
    REQUIRE(one);
    REQUIRE(four);
    REQUIRE(one.certificate->records.size() == four.certificate->records.size());
    for (std::size_t k = 0; k < one.certificate->records.size(); ++k) {
      CHECK(one.certificate->records[k].target == four.certificate->records[k].target);
      CHECK(one.certificate->records[k].cover == four.certificate->records[k].cover);
    }
    CHECK(verify_depth_change(phi, 1, 1).failing == verify_depth_change(phi, 1, 4).failing);
  }
  SUBCASE("a larger codomain bound") {
    const auto phi = BoxedPosetMap::identity({1}).with_codomain({2});
    // [2,2] has an empty preimage, so only the nonempty records constrain
    CHECK(verify_depth_change(phi, 0));
  }
}

TEST_CASE("padding") {
  const auto p = BoxedPosetMap::polar_step(2);
  const auto padded = pad_with_identities(p, {1}, {2});
  const auto nested = product_map(product_map(BoxedPosetMap::identity({1}), p), BoxedPosetMap::identity({2}));
  CHECK(padded.domain_bound() == nested.domain_bound());
  CHECK(padded.codomain_bound() == nested.codomain_bound());
  for (const auto& a : box_points(padded.domain_bound())) CHECK(padded(a) == nested(a));
  CHECK(padded({1, 2, 2}) == ExponentVector{1, 1, 1, 2});
  CHECK(pad_with_identities(p, {}, {}) == p);
  REQUIRE(verify_depth_change(p, -1));
  CHECK(verify_depth_change(padded, -1));
}

TEST_CASE("splitting join- and meet-preserving maps") {
  SUBCASE("already split") {
    std::vector<ExponentVector> v;
    for (const auto& a : box_points(ExponentVector{2, 2})) v.push_back({a[0], 2 * a[1]});
    const auto s = split_join_meet_map(BoxedPosetMap::table({2, 2}, v));
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0] == one_dim({{0}, {1}, {2}}));
    CHECK(s.factors[1] == one_dim({{0}, {2}, {4}}));
    CHECK(s.domain_order == std::vector<std::size_t>{0, 1});
    CHECK(s.codomain_order == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("padded polarization step") {
    const auto phi = pad_with_identities(BoxedPosetMap::polar_step(3), {2}, {});
    const auto s = split_join_meet_map(phi);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0] == one_dim({{0}, {1}, {2}}));
    CHECK(s.factors[1] == one_dim({{0, 0}, {1, 0}, {1, 1}, {2, 1}}));
    for (const auto& a : box_points(phi.domain_bound())) CHECK(s.reassemble(a) == phi(a));
  }
  SUBCASE("shuffled coordinates and offsets") {
    // phi(a, b) = (b + 1, a, 2) rearranges to (a) x (b + 1), constant 2
    std::vector<ExponentVector> v;
    for (const auto& a : box_points(ExponentVector{1, 2})) v.push_back({a[1] + 1, a[0], 2});
    const auto phi = BoxedPosetMap::table({1, 2}, v);
    const auto s = split_join_meet_map(phi);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.domain_order == std::vector<std::size_t>{1, 0});
    for (const auto& a : box_points(phi.domain_bound())) CHECK(s.reassemble(a) == phi(a));
    CHECK(verify_depth_change(phi, 2 - 3));
  }
  SUBCASE("min is refused") {
    try {
      split_join_meet_map(BoxedPosetMap::min2({1, 1}));
      FAIL("expected a split error");
    } catch (const SplitError& e) {
      CHECK(std::set<ExponentVector>{e.witness().first, e.witness().second} == std::set<ExponentVector>{{1, 0}, {0, 1}});
    }
  }
}

TEST_CASE("pullback and pushforward") {
  const auto step = pad_with_identities(BoxedPosetMap::polar_step(2), {}, {});
  CHECK(pullback_ideal(step, MonomialIdeal(2, {{1, 1}})) == MonomialIdeal(1, {{2}}));
  CHECK(pushforward_ideal(step, MonomialIdeal(1, {{2}})) == MonomialIdeal(2, {{1, 1}}));
  const MonomialIdeal i(2, {{2, 1}, {0, 3}});
  CHECK(pullback_ideal(BoxedPosetMap::identity({2, 3}), i) == i);
  CHECK(pushforward_ideal(BoxedPosetMap::identity({2, 3}), i) == i);
  CHECK(pullback_ideal(BoxedPosetMap::min2({3, 3}), MonomialIdeal(1, {{2}})) == MonomialIdeal(2, {{2, 2}}));
  CHECK(pushforward_ideal(BoxedPosetMap::shift_up(2, 3), MonomialIdeal(1, {{3}})) == MonomialIdeal(1, {{4}}));
  CHECK(pullback_ideal(BoxedPosetMap::shift_up(2, 3), MonomialIdeal(1, {{4}})) == MonomialIdeal(1, {{3}}));
  CHECK(pullback_ideal(step, MonomialIdeal::zero(2)).is_zero());

  SUBCASE("tables refuse generators on their boundary") {
    const auto t = BoxedPosetMap::table({2}, {{0}, {1}, {2}});
    CHECK(pullback_ideal(t, MonomialIdeal(1, {{1}})) == MonomialIdeal(1, {{1}}));
    CHECK_THROWS_AS(pullback_ideal(t, MonomialIdeal(1, {{2}})), Error);
  }
  SUBCASE("pulling back a pushforward along a polarization step") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 100; ++t) {
      const auto gens = oracle::random_vectors(rng, 3, 2, 4);
      const MonomialIdeal ideal(2, gens);
      ExponentVector g = ExponentVector::zero(2);
      for (const auto& u : ideal.generators()) g = join(g, u);
      const auto phi = pad_with_identities(BoxedPosetMap::polar_step(g[0]), {}, {g[1]});
      CHECK(pullback_ideal(phi, pushforward_ideal(phi, ideal)) == ideal);
    }
  }
}
