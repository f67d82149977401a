#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "oracles.hpp"
#include "sdlab/homology.hpp"
#include "sdlab/verify.hpp"

using namespace sdlab;
using Rational = boost::multiprecision::cpp_rational;

namespace {

ModuleSpec spec(const char* text) { return parse_module_spec(text); }

IntMatrix matrix(std::size_t r, std::size_t c, std::initializer_list<int> v) {
  IntMatrix m(r, c);
  std::copy(v.begin(), v.end(), m.data.begin());
  return m;
}

// Gaussian elimination over Q with exact fractions.
std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Stanley-Reisner ring of the six-vertex triangulation of the real
// projective plane: all edges are faces, the minimal nonfaces are the ten
// triangles that are not facets.
ModuleSpec projective_plane() {
  const std::vector<std::vector<int>> facets = {{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                                                {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}};
  std::vector<ExponentVector> nonfaces;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) {
        if (std::find(facets.begin(), facets.end(), std::vector<int>{a, b, c}) != facets.end()) continue;
        std::vector<int> e(6, 0);
        e[a - 1] = e[b - 1] = e[c - 1] = 1;
        nonfaces.emplace_back(e);
      }
  REQUIRE(nonfaces.size() == 10);
  return ModuleSpec(RingContext({"x1", "x2", "x3", "x4", "x5", "x6"}), MonomialIdeal::unit(6), MonomialIdeal(6, nonfaces));
}

}  // namespace

TEST_CASE("matrix rank") {
  CHECK(matrix_rank(IntMatrix(0, 3), 0) == 0);
  CHECK(matrix_rank(IntMatrix(2, 2), 0) == 0);
  CHECK(matrix_rank(matrix(2, 2, {1, 2, 2, 4}), 0) == 1);
  CHECK(matrix_rank(matrix(2, 2, {1, 1, 1, -1}), 0) == 2);
  CHECK(matrix_rank(matrix(2, 2, {1, 1, 1, -1}), 2) == 1);
  CHECK(matrix_rank(matrix(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}), 0) == 2);
  CHECK(matrix_rank(matrix(2, 3, {3, 0, 3, 0, 3, 3}), 3) == 0);

  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int t = 0; t < 300; ++t) {
    IntMatrix m(dim(rng), dim(rng));
    // every third matrix is sparse
    for (auto& x : m.data) x = (t % 3 == 0 && entry(rng) != 0) ? 0 : entry(rng);
    CHECK(matrix_rank(m, 0) == rational_rank(m));
    CHECK(matrix_rank(m, 32003) == rational_rank(m));
  }
}

TEST_CASE("Koszul slices are complexes") {
  for (std::size_t t = 0; t < 60; ++t) {
    auto rng = trial_rng(43, t);
    const ModuleSpec s = random_spec(rng);
    const ExponentVector w = canonical_bound(s) + ExponentVector(std::vector<int>(s.nvars(), 1));
    for (const auto& a : box_points(w)) {
      const KoszulSlice k = koszul_slice(s, a);
      for (std::size_t i = 2; i < k.boundary.size(); ++i) CHECK(is_zero(k.boundary[i - 1] * k.boundary[i]));
    }
  }
}

TEST_CASE("slice homology examples") {
  CHECK(koszul_slice_ranks(spec("ring: x\nI: 1\nJ: x"), {1}) == std::vector<std::size_t>{0, 1});
  CHECK(koszul_slice_ranks(spec("ring: x\nI: 1\nJ: x"), {0}) == std::vector<std::size_t>{1, 0});
  for (const auto& a : box_points(ExponentVector{2, 2}))
    if (a != ExponentVector{0, 0}) CHECK(koszul_slice_ranks(spec("ring: x,y\nI: 1\nJ: 0"), a) == std::vector<std::size_t>(3, 0));
  CHECK(koszul_slice_ranks(spec("ring: x,y\nI: 1\nJ: x^2, x*y"), {2, 1})[2] == 1);
}

TEST_CASE("depth and projective dimension examples") {
  CHECK(projective_dimension(spec("ring: x\nI: 1\nJ: x^2")) == 1);
  CHECK(depth(spec("ring: x\nI: 1\nJ: x^2")) == 0);
  CHECK(depth(spec("ring: x,y\nI: 1\nJ: x*y")) == 1);
  CHECK(depth(spec("ring: x,y,z\nI: 1\nJ: 0")) == 3);
  CHECK(projective_dimension(spec("ring: x,y\nI: x^2*y\nJ: 0")) == 0);
  CHECK(depth(spec("ring: x,y\nI: 1\nJ: x^2, x*y")) == 0);
  CHECK(depth(spec("ring: x,y,z\nI: 1\nJ: x, y")) == 1);
  CHECK(depth(spec("ring: x,y,z\nI: 1\nJ: x*y, y*z")) == 1);
  // the maximal ideal has depth 1
  CHECK(depth(spec("ring: x,y,z\nI: x, y, z\nJ: 0")) == 1);
}

TEST_CASE("depth of the real projective plane depends on the characteristic") {
  const ModuleSpec rp2 = projective_plane();
  CHECK(depth(rp2, 0) == 3);
  CHECK(depth(rp2, 32003) == 3);
  CHECK(depth(rp2, 2) == 2);
  CHECK(depth(ModuleSpec(rp2.ring().with_characteristic(2), rp2.I(), rp2.J())) == 2);
}

TEST_CASE("graded Betti numbers reproduce the Hilbert series") {
  for (std::size_t t = 0; t < 80; ++t) {
    auto rng = trial_rng(47, t);
    const ModuleSpec s = random_spec(rng);
    const std::size_t n = s.nvars();
    const ExponentVector w = canonical_bound(s) + ExponentVector(std::vector<int>(n, 1));
    IntPolynomial k(static_cast<std::size_t>(w.degree()) + 1);
    for (const auto& a : box_points(w)) {
      const auto h = koszul_slice_ranks(s, a);
      for (std::size_t i = 0; i < h.size(); ++i)
        k[static_cast<std::size_t>(a.degree())] += (i % 2 == 0 ? 1 : -1) * static_cast<long>(h[i]);
    }
    while (!k.empty() && k.back() == 0) k.pop_back();
    CAPTURE(format_module_spec(s));
    CHECK(HilbertSeries(k, static_cast<int>(n)) == hilbert_series(s));
  }
}

TEST_CASE("depth stays within bounds and agrees across fields on small inputs") {
  for (std::size_t t = 0; t < 80; ++t) {
    auto rng = trial_rng(53, t);
    const ModuleSpec s = random_spec(rng);
    const int d = depth(s);
    CHECK(d >= 0);
    CHECK(d <= static_cast<int>(s.nvars()));
    CHECK(depth(s, 32003) == d);
    if (s.J().is_zero() && s.I().generators().size() == 1) CHECK(d == static_cast<int>(s.nvars()));
  }
}
