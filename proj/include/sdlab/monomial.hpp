#ifndef SDLAB_MONOMIAL_HPP
#define SDLAB_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdlab {

using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Well-formed input that violates a structural invariant (J not in I, ...).
class SpecError : public Error {
public:
  using Error::Error;
};

/// A point of N^n, read multiplicatively as the monomial X^a.
/// Ordering (<, <=>) is lexicographic; use leq() for the componentwise order.
class ExponentVector {
public:
  ExponentVector() = default;
  /// Throws std::invalid_argument on a negative entry.
  ExponentVector(std::initializer_list<int> entries) : e_(entries) { check(); }
  explicit ExponentVector(std::vector<int> entries) : e_(std::move(entries)) { check(); }

  static ExponentVector zero(std::size_t n) { return ExponentVector(std::vector<int>(n, 0)); }
  static ExponentVector unit(std::size_t n, std::size_t i) {
    ExponentVector v = zero(n);
    v.e_[i] = 1;
    return v;
  }

  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<int>& entries() const { return e_; }

  int degree() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
  void check() const;

  std::vector<int> e_;
};

/// Componentwise a <= b, i.e. X^a divides X^b.
bool leq(const ExponentVector& a, const ExponentVector& b);
ExponentVector join(const ExponentVector& a, const ExponentVector& b);
ExponentVector meet(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
ExponentVector concat(const ExponentVector& a, const ExponentVector& b);
std::string to_string(const ExponentVector& a);

/// All points of [lo, hi] in lexicographic order.
std::vector<ExponentVector> box_points(const ExponentVector& lo, const ExponentVector& hi);
std::vector<ExponentVector> box_points(const ExponentVector& hi);
std::size_t box_size(const ExponentVector& lo, const ExponentVector& hi);

class RingContext {
public:
  explicit RingContext(std::vector<std::string> names, unsigned characteristic = 0);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  /// Returns size() when absent.
  std::size_t index_of(std::string_view name) const;
  unsigned characteristic() const { return characteristic_; }
  RingContext with_characteristic(unsigned p) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

private:
  std::vector<std::string> names_;
  unsigned characteristic_ = 0;
};

/// Divisibility-minimal subset, sorted lexicographically. Idempotent.
std::vector<ExponentVector> minimal_generators(std::vector<ExponentVector> gens);

class MonomialIdeal {
public:
  MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> gens);

  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }
  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {ExponentVector::zero(nvars)}); }

  std::size_t nvars() const { return nvars_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
  bool contains(const ExponentVector& a) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::size_t nvars_ = 0;
  std::vector<ExponentVector> gens_;
};

bool ideal_contains(const MonomialIdeal& ideal, const ExponentVector& a);

/// The quotient I/J of monomial ideals J strictly inside I.
class ModuleSpec {
public:
  ModuleSpec(RingContext ring, MonomialIdeal i, MonomialIdeal j);

  const RingContext& ring() const { return ring_; }
  const MonomialIdeal& I() const { return i_; }
  const MonomialIdeal& J() const { return j_; }
  std::size_t nvars() const { return ring_.size(); }
  /// X^a lies in I but not in J.
  bool contains(const ExponentVector& a) const { return i_.contains(a) && !j_.contains(a); }

  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;

private:
  RingContext ring_;
  MonomialIdeal i_;
  MonomialIdeal j_;
};

ModuleSpec parse_module_spec(std::string_view text);
std::string format_module_spec(const ModuleSpec& spec);
std::string format_monomial(const ExponentVector& a, const RingContext& ring);

/// Join of all minimal generators of I and J.
ExponentVector canonical_bound(const ModuleSpec& spec);

/// Integer polynomial in t, coefficient k at index k, no trailing zeros.
using IntPolynomial = std::vector<BigInt>;

/// numerator / (1 - t)^d, kept with numerator(1) != 0 unless d == 0.
class HilbertSeries {
public:
  HilbertSeries(IntPolynomial numerator, int denominator_exponent);

  const IntPolynomial& numerator() const { return num_; }
  int denominator_exponent() const { return den_; }
  /// Multiply by (1 - t)^k; k may be negative.
  HilbertSeries times_one_minus_t(int k) const;
  /// Power-series coefficients of degrees 0..max_degree.
  std::vector<BigInt> coefficients(int max_degree) const;
  std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

private:
  IntPolynomial num_;
  int den_ = 0;
};

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);

/// K-polynomial of an ideal: sum over nonempty generator subsets S of
/// (-1)^(|S|+1) t^deg(lcm S), so that H_I = K_I / (1 - t)^n.
IntPolynomial ideal_numerator(const MonomialIdeal& ideal);
HilbertSeries hilbert_series(const ModuleSpec& spec);

std::string format_polynomial(const IntPolynomial& p, std::string_view var = "t");

}  // namespace sdlab

#endif
