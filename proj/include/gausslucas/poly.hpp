#pragma once

// Sparse multivariate and dense univariate polynomials over complex doubles.
//
// Variable indices are 1-based throughout the public API so that index k
// always names the variable written "zk" in the text format.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gausslucas {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

inline bool all_finite(std::span<const Complex> v) {
  return std::all_of(v.begin(), v.end(), [](Complex c) { return is_finite(c); });
}

/// Exponent vector of a monomial; entry j is the power of z_{j+1}.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

/// Graded lexicographic order with the leading term first: higher total
/// degree sorts earlier, ties go to the larger power of z1, then z2, ...
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Complex, GradedLexOrder>;

  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {
    if (num_vars == 0) throw Error("polynomial needs at least one variable");
  }

  static MultiPoly constant(std::size_t num_vars, Complex c) {
    MultiPoly p(num_vars);
    p.add_term(Monomial(num_vars, 0), c);
    return p;
  }

  /// The polynomial z_k.
  static MultiPoly variable(std::size_t num_vars, std::size_t k) {
    MultiPoly p(num_vars);
    p.check_index(k);
    Monomial m(num_vars, 0);
    m[k - 1] = 1;
    p.add_term(std::move(m), 1.0);
    return p;
  }

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_null() const { return terms_.empty(); }

  /// Adds c to the coefficient of m, dropping the term if it cancels to zero.
  void add_term(Monomial m, Complex c) {
    if (m.size() != num_vars_) throw Error("monomial length does not match variable count");
    if (!is_finite(c)) throw Error("non-finite coefficient");
    if (c == Complex{}) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (!is_finite(it->second)) throw Error("non-finite coefficient");
      if (it->second == Complex{}) terms_.erase(it);
    }
  }

  Complex coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Complex{} : it->second;
  }

  unsigned total_degree() const {
    // graded order puts a highest-degree term first
    return terms_.empty() ? 0 : gausslucas::total_degree(terms_.begin()->first);
  }

  unsigned degree_in(std::size_t k) const {
    check_index(k);
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[k - 1]);
    return d;
  }

  /// Sum of coefficient magnitudes.
  double coefficient_norm() const {
    double s = 0;
    for (const auto& [m, c] : terms_) s += std::abs(c);
    return s;
  }

  void check_index(std::size_t k) const {
    if (k < 1 || k > num_vars_)
      throw Error("variable index " + std::to_string(k) + " out of range 1.." +
                  std::to_string(num_vars_));
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

/// Audit used by tests and the parser: no stored zeros, consistent monomial
/// lengths, finite coefficients.
inline bool is_canonical(const MultiPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (m.size() != p.num_vars() || c == Complex{} || !is_finite(c)) return false;
  }
  return true;
}

class UniPoly {
 public:
  UniPoly() = default;

  /// coeffs[j] is the coefficient of w^j. Trailing exact zeros are trimmed.
  explicit UniPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (!all_finite(coeffs_)) throw Error("non-finite coefficient");
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
  }

  /// -1 for the null polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_null() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex operator[](std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Complex{}; }

  Complex operator()(Complex w) const {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return UniPoly{};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = coeffs_[j] * static_cast<double>(j);
    return UniPoly(std::move(d));
  }

  double coefficient_norm() const {
    double s = 0;
    for (Complex c : coeffs_) s += std::abs(c);
    return s;
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  std::vector<Complex> coeffs_;
};

namespace detail {

inline void check_point(const MultiPoly& p, std::span<const Complex> point) {
  if (point.size() != p.num_vars())
    throw Error("point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                std::to_string(p.num_vars()) + " variables");
  if (!all_finite(point)) throw Error("non-finite coordinate");
}

// powers[j][e] = base[j]^e for e <= max exponent of variable j+1 in p
template <class T>
std::vector<std::vector<T>> power_table(const MultiPoly& p, std::span<const T> base) {
  std::vector<std::vector<T>> powers(p.num_vars());
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    const unsigned d = p.degree_in(j + 1);
    powers[j].resize(d + 1);
    powers[j][0] = T(1);
    for (unsigned e = 1; e <= d; ++e) powers[j][e] = powers[j][e - 1] * base[j];
  }
  return powers;
}

}  // namespace detail

/// Sums terms in graded-lex order.
inline Complex evaluate(const MultiPoly& p, std::span<const Complex> point) {
  detail::check_point(p, point);
  const auto powers = detail::power_table<Complex>(p, point);
  Complex sum{};
  for (const auto& [m, c] : p.terms()) {
    Complex term = c;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j] != 0) term *= powers[j][m[j]];
    sum += term;
  }
  return sum;
}

/// Sum over terms of |c| * prod max(1,|z_j|)^e_j. Reference magnitude for
/// relative residual tests at the given point.
inline double absolute_scale(const MultiPoly& p, std::span<const Complex> point) {
  detail::check_point(p, point);
  std::vector<double> mags(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) mags[j] = std::max(1.0, std::abs(point[j]));
  const auto powers = detail::power_table<double>(p, mags);
  double s = 0;
  for (const auto& [m, c] : p.terms()) {
    double t = std::abs(c);
    for (std::size_t j = 0; j < m.size(); ++j) t *= powers[j][m[j]];
    s += t;
  }
  return s;
}

inline MultiPoly partial_derivative(const MultiPoly& p, std::size_t k) {
  p.check_index(k);
  MultiPoly out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[k - 1];
    if (e == 0) continue;
    Monomial dm = m;
    dm[k - 1] = e - 1;
    out.add_term(std::move(dm), c * static_cast<double>(e));
  }
  return out;
}

/// Inserts w at slot k (1-based) of the (M-1)-vector `others`.
inline ComplexVector insert_coordinate(std::span<const Complex> others, std::size_t k, Complex w) {
  if (k < 1 || k > others.size() + 1) throw Error("coordinate slot out of range");
  ComplexVector z(others.begin(), others.end());
  z.insert(z.begin() + static_cast<std::ptrdiff_t>(k - 1), w);
  return z;
}

/// The M-1 coordinates of z with slot k (1-based) removed.
inline ComplexVector omit_coordinate(std::span<const Complex> z, std::size_t k) {
  if (k < 1 || k > z.size()) throw Error("coordinate slot out of range");
  ComplexVector out(z.begin(), z.end());
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(k - 1));
  return out;
}

inline constexpr double kDeadCoefficientRatio = 1e-14;

/// Restriction w -> p(..., w at slot k, ...) with the other coordinates
/// fixed. Highest-order coefficients below 1e-14 times the largest collected
/// magnitude are dropped; a restriction that vanishes identically is null.
inline UniPoly restrict_section(const MultiPoly& p, std::size_t k, std::span<const Complex> others) {
  p.check_index(k);
  if (others.size() + 1 != p.num_vars())
    throw Error("section needs " + std::to_string(p.num_vars() - 1) + " fixed coordinates, got " +
                std::to_string(others.size()));
  if (!all_finite(others)) throw Error("non-finite coordinate");

  const ComplexVector full = insert_coordinate(others, k, Complex{1.0, 0.0});
  const auto powers = detail::power_table<Complex>(p, full);
  std::vector<Complex> coeffs(p.degree_in(k) + 1);
  for (const auto& [m, c] : p.terms()) {
    Complex t = c;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != k - 1 && m[j] != 0) t *= powers[j][m[j]];
    coeffs[m[k - 1]] += t;
  }

  double largest = 0;
  for (Complex c : coeffs) largest = std::max(largest, std::abs(c));
  if (largest == 0) return UniPoly{};
  while (!coeffs.empty() && std::abs(coeffs.back()) < kDeadCoefficientRatio * largest) coeffs.pop_back();
  return UniPoly(std::move(coeffs));
}

inline MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) {
  if (p.num_vars() != q.num_vars()) throw Error("variable count mismatch in addition");
  MultiPoly out = p;
  for (const auto& [m, c] : q.terms()) out.add_term(m, c);
  return out;
}

inline MultiPoly poly_scale(const MultiPoly& p, Complex s) {
  MultiPoly out(p.num_vars());
  if (!is_finite(s)) throw Error("non-finite scale factor");
  for (const auto& [m, c] : p.terms()) out.add_term(m, c * s);
  return out;
}

inline MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) {
  if (p.num_vars() != q.num_vars()) throw Error("variable count mismatch in multiplication");
  MultiPoly out(p.num_vars());
  Monomial m(p.num_vars());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      for (std::size_t j = 0; j < m.size(); ++j) m[j] = mp[j] + mq[j];
      out.add_term(m, cp * cq);
    }
  }
  return out;
}

inline MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) { return poly_add(p, q); }
inline MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
  return poly_add(p, poly_scale(q, -1.0));
}
inline MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) { return poly_mul(p, q); }
inline MultiPoly operator*(Complex s, const MultiPoly& p) { return poly_scale(p, s); }

/// Monic polynomial with the given root multiset; the empty list gives 1.
inline UniPoly from_roots(std::span<const Complex> roots) {
  if (!all_finite(roots)) throw Error("non-finite root");
  std::vector<Complex> c{1.0};
  for (Complex r : roots) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= r * c[j];
    }
    c = std::move(next);
  }
  return UniPoly(std::move(c));
}

inline UniPoly from_roots(std::initializer_list<Complex> roots) {
  return from_roots(std::span<const Complex>(roots.begin(), roots.size()));
}

inline MultiPoly to_multi(const UniPoly& u) {
  MultiPoly p(1);
  for (std::size_t j = 0; j < u.coeffs().size(); ++j) p.add_term(Monomial{static_cast<unsigned>(j)}, u.coeffs()[j]);
  return p;
}

/// Requires every term to involve only z1.
inline UniPoly to_uni(const MultiPoly& p) {
  std::vector<Complex> coeffs(p.degree_in(1) + 1);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t j = 1; j < m.size(); ++j)
      if (m[j] != 0) throw Error("polynomial is not univariate in z1");
    coeffs[m[0]] += c;
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace gausslucas
