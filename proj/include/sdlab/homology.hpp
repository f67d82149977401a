#ifndef SDLAB_HOMOLOGY_HPP
#define SDLAB_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "sdlab/monomial.hpp"

namespace sdlab {

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  int& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  int operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
bool is_zero(const IntMatrix& m);

/// Rank over Q (characteristic 0, fraction-free Bareiss elimination on
/// big integers) or over F_p.
std::size_t matrix_rank(const IntMatrix& m, unsigned characteristic);

/// The multidegree-a strand of the Koszul complex K(x; I/J).
/// basis[i] lists subsets S (bitmasks), |S| = i, with a - e_S >= 0 and
/// X^(a - e_S) in I \ J. boundary[i] maps degree i to degree i - 1
/// (boundary[0] is an empty 0 x dim matrix).
struct KoszulSlice {
  ExponentVector degree;
  std::vector<std::vector<std::uint32_t>> basis;
  std::vector<IntMatrix> boundary;
};

KoszulSlice koszul_slice(const ModuleSpec& spec, const ExponentVector& a);

/// dim H_i of the slice for i = 0..n.
std::vector<std::size_t> koszul_slice_ranks(const ModuleSpec& spec, const ExponentVector& a, unsigned characteristic);
std::vector<std::size_t> koszul_slice_ranks(const ModuleSpec& spec, const ExponentVector& a);

int projective_dimension(const ModuleSpec& spec, unsigned characteristic);
int projective_dimension(const ModuleSpec& spec);

/// n - pd (Auslander-Buchsbaum). Defaults to the ring's characteristic.
int depth(const ModuleSpec& spec, unsigned characteristic);
int depth(const ModuleSpec& spec);

}  // namespace sdlab

#endif
