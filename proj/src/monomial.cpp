#include "sdlab/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sdlab {

void ExponentVector::check() const {
  for (int x : e_)
    if (x < 0) throw std::invalid_argument("negative exponent " + std::to_string(x));
}

int ExponentVector::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

namespace {

void require_same_size(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("exponent vectors of different length: " + to_string(a) + " vs " +
                                to_string(b));
}

}  // namespace

bool leq(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return ExponentVector(std::move(r));
}

ExponentVector meet(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return ExponentVector(std::move(r));
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return ExponentVector(std::move(r));
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  require_same_size(a, b);
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return ExponentVector(std::move(r));
}

ExponentVector concat(const ExponentVector& a, const ExponentVector& b) {
  std::vector<int> r(a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return ExponentVector(std::move(r));
}

std::string to_string(const ExponentVector& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

std::size_t box_size(const ExponentVector& lo, const ExponentVector& hi) {
  require_same_size(lo, hi);
  std::size_t n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    n *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  }
  return n;
}

std::vector<ExponentVector> box_points(const ExponentVector& lo, const ExponentVector& hi) {
  std::vector<ExponentVector> out;
  const std::size_t total = box_size(lo, hi);
  if (total == 0) return out;
  out.reserve(total);
  std::vector<int> cur(lo.begin(), lo.end());
  const std::size_t n = cur.size();
  while (true) {
    out.emplace_back(cur);
    // odometer with the last coordinate fastest gives lexicographic order
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        break;
      }
      cur[k] = lo[k];
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<ExponentVector> box_points(const ExponentVector& hi) {
  return box_points(ExponentVector::zero(hi.size()), hi);
}

// ---------------------------------------------------------------------------

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RingContext::RingContext(std::vector<std::string> names, unsigned characteristic)
    : names_(std::move(names)), characteristic_(characteristic) {
  if (names_.empty()) throw SpecError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw SpecError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw SpecError("duplicate variable name '" + n + "'");
  }
  if (characteristic_ == 1) throw SpecError("characteristic must be 0 or a prime");
  for (unsigned d = 2; characteristic_ != 0 && d * d <= characteristic_; ++d)
    if (characteristic_ % d == 0)
      throw SpecError("characteristic " + std::to_string(characteristic_) + " is not prime");
}

std::size_t RingContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

RingContext RingContext::with_characteristic(unsigned p) const { return RingContext(names_, p); }

std::vector<ExponentVector> minimal_generators(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // sorting by degree first means a divisor is always seen before its multiples
  std::stable_sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    return a.degree() < b.degree();
  });
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) { return leq(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> gens) : nvars_(nvars) {
  for (const auto& g : gens) {
    if (g.size() != nvars)
      throw SpecError("generator " + to_string(g) + " does not match ring of " + std::to_string(nvars) +
                      " variables");
    if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; }))
      throw SpecError("negative exponent in generator " + to_string(g));
  }
  gens_ = minimal_generators(std::move(gens));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().degree() == 0; }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const ExponentVector& g) {
    return std::all_of(g.begin(), g.end(), [](int e) { return e <= 1; });
  });
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
  if (a.size() != nvars_) throw std::invalid_argument("monomial " + to_string(a) + " has wrong length");
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return leq(g, a); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const ExponentVector& g) { return contains(g); });
}

bool ideal_contains(const MonomialIdeal& ideal, const ExponentVector& a) { return ideal.contains(a); }

ModuleSpec::ModuleSpec(RingContext ring, MonomialIdeal i, MonomialIdeal j)
    : ring_(std::move(ring)), i_(std::move(i)), j_(std::move(j)) {
  if (i_.nvars() != ring_.size() || j_.nvars() != ring_.size())
    throw SpecError("ideals do not live in the given ring");
  if (!i_.contains(j_)) throw SpecError("J is not contained in I");
  if (j_.contains(i_)) throw SpecError("J equals I, so I/J is the zero module");
}

ExponentVector canonical_bound(const ModuleSpec& spec) {
  ExponentVector g = ExponentVector::zero(spec.nvars());
  for (const auto& a : spec.I().generators()) g = join(g, a);
  for (const auto& a : spec.J().generators()) g = join(g, a);
  return g;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string strip_whitespace(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

ExponentVector parse_monomial(const std::string& text, const RingContext& ring) {
  ExponentVector a = ExponentVector::zero(ring.size());
  if (text == "1") return a;
  if (text.empty()) throw ParseError("empty monomial");
  for (const auto& factor : split(text, '*')) {
    if (factor.empty()) throw ParseError("empty factor in monomial '" + text + "'");
    std::string name = factor;
    int power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      const std::string exp = factor.substr(caret + 1);
      if (exp.empty() || !std::all_of(exp.begin(), exp.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          exp.size() > 6)
        throw ParseError("bad exponent in factor '" + factor + "'");
      power = std::stoi(exp);
    }
    const std::size_t idx = ring.index_of(name);
    if (idx == ring.size()) throw ParseError("unknown variable '" + name + "'");
    a[idx] += power;
  }
  return a;
}

MonomialIdeal parse_ideal(const std::string& text, const RingContext& ring) {
  if (text == "0") return MonomialIdeal::zero(ring.size());
  std::vector<ExponentVector> gens;
  for (const auto& m : split(text, ',')) gens.push_back(parse_monomial(m, ring));
  return MonomialIdeal(ring.size(), std::move(gens));
}

}  // namespace

ModuleSpec parse_module_spec(std::string_view text) {
  std::map<std::string, std::string> fields;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string compact = strip_whitespace(line);
    if (compact.empty()) continue;
    const auto colon = compact.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected '<key>: <value>'");
    const std::string key = compact.substr(0, colon);
    if (key != "ring" && key != "I" && key != "J")
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (!fields.emplace(key, compact.substr(colon + 1)).second)
      throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  for (const char* key : {"ring", "I", "J"})
    if (!fields.count(key)) throw ParseError(std::string("missing '") + key + ":' line");

  std::vector<std::string> names = split(fields["ring"], ',');
  RingContext ring = [&] {
    try {
      return RingContext(names);
    } catch (const SpecError& e) {
      throw ParseError(e.what());
    }
  }();
  MonomialIdeal i = parse_ideal(fields["I"], ring);
  MonomialIdeal j = parse_ideal(fields["J"], ring);
  if (i.is_zero()) throw SpecError("I is the zero ideal, so I/J is the zero module");
  return ModuleSpec(std::move(ring), std::move(i), std::move(j));
}

std::string format_monomial(const ExponentVector& a, const RingContext& ring) {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(k);
    if (a[k] > 1) s += "^" + std::to_string(a[k]);
  }
  return s.empty() ? "1" : s;
}

namespace {

std::string format_ideal(const MonomialIdeal& ideal, const RingContext& ring) {
  if (ideal.is_zero()) return "0";
  std::string s;
  for (const auto& g : ideal.generators()) {
    if (!s.empty()) s += ", ";
    s += format_monomial(g, ring);
  }
  return s;
}

}  // namespace

std::string format_module_spec(const ModuleSpec& spec) {
  std::string s = "ring: ";
  for (std::size_t k = 0; k < spec.nvars(); ++k) {
    if (k) s += ", ";
    s += spec.ring().name(k);
  }
  s += "\nI: " + format_ideal(spec.I(), spec.ring());
  s += "\nJ: " + format_ideal(spec.J(), spec.ring());
  return s + "\n";
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace {

void trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt value_at_one(const IntPolynomial& p) {
  BigInt s = 0;
  for (const auto& c : p) s += c;
  return s;
}

IntPolynomial multiply_one_minus_t(const IntPolynomial& p) {
  IntPolynomial r(p.size() + 1, 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    r[k] += p[k];
    r[k + 1] -= p[k];
  }
  trim(r);
  return r;
}

// Exact when p(1) == 0; otherwise yields the truncated prefix sums.
IntPolynomial divide_one_minus_t(const IntPolynomial& p) {
  IntPolynomial r;
  BigInt acc = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    acc += p[k];
    r.push_back(acc);
  }
  trim(r);
  return r;
}

IntPolynomial add(IntPolynomial a, const IntPolynomial& b, int sign) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += sign * b[k];
  trim(a);
  return a;
}

void accumulate_subsets(const std::vector<ExponentVector>& gens, std::size_t start, const ExponentVector& lcm,
                        int size, IntPolynomial& acc) {
  for (std::size_t k = start; k < gens.size(); ++k) {
    ExponentVector l = join(lcm, gens[k]);
    const auto deg = static_cast<std::size_t>(l.degree());
    if (acc.size() <= deg) acc.resize(deg + 1, 0);
    // |S| = size + 1, sign (-1)^(|S|+1)
    acc[deg] += (size % 2 == 0) ? 1 : -1;
    accumulate_subsets(gens, k + 1, l, size + 1, acc);
  }
}

}  // namespace

HilbertSeries::HilbertSeries(IntPolynomial numerator, int denominator_exponent)
    : num_(std::move(numerator)), den_(denominator_exponent) {
  if (den_ < 0) throw std::invalid_argument("negative denominator exponent");
  trim(num_);
  if (num_.empty()) den_ = 0;
  while (den_ > 0 && value_at_one(num_) == 0) {
    num_ = divide_one_minus_t(num_);
    --den_;
  }
}

HilbertSeries HilbertSeries::times_one_minus_t(int k) const {
  IntPolynomial num = num_;
  int den = den_ - k;
  while (den < 0) {
    num = multiply_one_minus_t(num);
    ++den;
  }
  return HilbertSeries(std::move(num), den);
}

std::vector<BigInt> HilbertSeries::coefficients(int max_degree) const {
  std::vector<BigInt> c(static_cast<std::size_t>(max_degree) + 1, 0);
  for (std::size_t k = 0; k < num_.size() && k < c.size(); ++k) c[k] = num_[k];
  for (int d = 0; d < den_; ++d)
    for (std::size_t k = 1; k < c.size(); ++k) c[k] += c[k - 1];
  return c;
}

std::string HilbertSeries::to_string() const {
  const std::string num = format_polynomial(num_);
  if (den_ == 0) return num;
  std::string s = "(" + num + ")/(1 - t)";
  if (den_ > 1) s += "^" + std::to_string(den_);
  return s;
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  const int d = std::max(a.denominator_exponent(), b.denominator_exponent());
  IntPolynomial pa = a.numerator(), pb = b.numerator();
  for (int k = a.denominator_exponent(); k < d; ++k) pa = multiply_one_minus_t(pa);
  for (int k = b.denominator_exponent(); k < d; ++k) pb = multiply_one_minus_t(pb);
  return HilbertSeries(add(pa, pb, 1), d);
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  IntPolynomial neg = b.numerator();
  for (auto& c : neg) c = -c;
  return a + HilbertSeries(neg, b.denominator_exponent());
}

IntPolynomial ideal_numerator(const MonomialIdeal& ideal) {
  IntPolynomial acc;
  accumulate_subsets(ideal.generators(), 0, ExponentVector::zero(ideal.nvars()), 0, acc);
  trim(acc);
  return acc;
}

HilbertSeries hilbert_series(const ModuleSpec& spec) {
  const IntPolynomial num = add(ideal_numerator(spec.I()), ideal_numerator(spec.J()), -1);
  return HilbertSeries(num, static_cast<int>(spec.nvars()));
}

std::string format_polynomial(const IntPolynomial& p, std::string_view var) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    BigInt c = p[k];
    const bool negative = c < 0;
    if (negative) c = -c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    const bool show_coeff = (c != 1) || k == 0;
    if (show_coeff) s += c.str();
    if (k > 0) {
      if (show_coeff) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace sdlab
