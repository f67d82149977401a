#include "sdlab/homology.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace sdlab {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

bool is_zero(const IntMatrix& m) {
  return std::all_of(m.data.begin(), m.data.end(), [](int x) { return x == 0; });
}

namespace {

std::size_t rank_rational(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = m(i, j);

  // Bareiss: after step k every entry of the trailing block is a k x k minor,
  // so the division by the previous pivot is exact.
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && a[piv][col] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      for (std::size_t j = col + 1; j < m.cols; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, unsigned p) {
  const auto mod = static_cast<std::int64_t>(p);
  std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = ((m(i, j) % mod) + mod) % mod;

  auto inverse = [mod](std::int64_t x) {
    std::int64_t r = 1, e = mod - 2;
    while (e > 0) {
      if (e & 1) r = r * x % mod;
      x = x * x % mod;
      e >>= 1;
    }
    return r;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && a[piv][col] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = inverse(a[rank][col]);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (a[i][col] == 0) continue;
      const std::int64_t f = a[i][col] * inv % mod;
      for (std::size_t j = col; j < m.cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % mod + mod) % mod;
    }
    ++rank;
  }
  return rank;
}

// a - e_S, or nullopt when it leaves N^n
std::optional<ExponentVector> minus_subset(const ExponentVector& a, std::uint32_t s) {
  ExponentVector r = a;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (s & (1u << j)) {
      if (r[j] == 0) return std::nullopt;
      r[j] -= 1;
    }
  return r;
}

}  // namespace

std::size_t matrix_rank(const IntMatrix& m, unsigned characteristic) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return characteristic == 0 ? rank_rational(m) : rank_mod_p(m, characteristic);
}

KoszulSlice koszul_slice(const ModuleSpec& spec, const ExponentVector& a) {
  const std::size_t n = spec.nvars();
  if (a.size() != n) throw std::invalid_argument("koszul_slice: multidegree of wrong length");
  if (n > 30) throw std::invalid_argument("koszul_slice: too many variables");

  KoszulSlice slice;
  slice.degree = a;
  slice.basis.resize(n + 1);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const auto b = minus_subset(a, s);
    if (b && spec.contains(*b)) slice.basis[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  }

  slice.boundary.resize(n + 1);
  slice.boundary[0] = IntMatrix(0, slice.basis[0].size());
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& src = slice.basis[i];
    const auto& dst = slice.basis[i - 1];
    IntMatrix d(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const std::uint32_t s = src[c];
      int position = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(s & (1u << j))) continue;
        // x_j * X^(a - e_S) = X^(a - e_{S \ j}); it vanishes in I/J exactly
        // when that subset is missing from the lower basis.
        const std::uint32_t t = s & ~(1u << j);
        auto it = std::lower_bound(dst.begin(), dst.end(), t);
        if (it != dst.end() && *it == t)
          d(static_cast<std::size_t>(it - dst.begin()), c) = (position % 2 == 0) ? 1 : -1;
        ++position;
      }
    }
    slice.boundary[i] = std::move(d);
  }
  return slice;
}

std::vector<std::size_t> koszul_slice_ranks(const ModuleSpec& spec, const ExponentVector& a, unsigned characteristic) {
  const KoszulSlice slice = koszul_slice(spec, a);
  const std::size_t n = spec.nvars();
  std::vector<std::size_t> rank_d(n + 2, 0);
  for (std::size_t i = 1; i <= n; ++i) rank_d[i] = matrix_rank(slice.boundary[i], characteristic);
  std::vector<std::size_t> h(n + 1);
  for (std::size_t i = 0; i <= n; ++i) h[i] = slice.basis[i].size() - rank_d[i] - rank_d[i + 1];
  return h;
}

std::vector<std::size_t> koszul_slice_ranks(const ModuleSpec& spec, const ExponentVector& a) {
  return koszul_slice_ranks(spec, a, spec.ring().characteristic());
}

int projective_dimension(const ModuleSpec& spec, unsigned characteristic) {
  // Tor_i(K, I/J) is concentrated in multidegrees below the lcm of all
  // generators (Taylor resolutions of I and J plus the long exact sequence),
  // so the window [0, g + 1] is more than enough.
  const std::size_t n = spec.nvars();
  ExponentVector window = canonical_bound(spec) + ExponentVector(std::vector<int>(n, 1));
  int pd = -1;
  for (const auto& a : box_points(window)) {
    const auto h = koszul_slice_ranks(spec, a, characteristic);
    for (std::size_t i = n + 1; i-- > 0;) {
      if (h[i] != 0) {
        pd = std::max(pd, static_cast<int>(i));
        break;
      }
    }
    if (pd == static_cast<int>(n)) break;
  }
  if (pd < 0) throw std::logic_error("projective_dimension: no homology found for a nonzero module");
  return pd;
}

int projective_dimension(const ModuleSpec& spec) { return projective_dimension(spec, spec.ring().characteristic()); }

int depth(const ModuleSpec& spec, unsigned characteristic) {
  return static_cast<int>(spec.nvars()) - projective_dimension(spec, characteristic);
}

int depth(const ModuleSpec& spec) { return depth(spec, spec.ring().characteristic()); }

}  // namespace sdlab
