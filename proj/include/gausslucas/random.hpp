#pragma once

// Seeded random sources. Uniform doubles are built from raw engine bits so
// results do not depend on the standard library's distribution classes.

#include <cstdint>
#include <numbers>
#include <random>

#include "gausslucas/poly.hpp"

namespace gausslucas {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream seed for (seed, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on the open interval (0, 1).
  double open01() { return (static_cast<double>(bits() >> 11) + 0.5) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * open01(); }

  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(bits() % span);
  }

  bool coin(double p = 0.5) { return open01() < p; }

  Complex complex_in_box(double half_width) {
    const double re = uniform(-half_width, half_width);
    const double im = uniform(-half_width, half_width);
    return {re, im};
  }

  /// Uniform in the disk of the given radius.
  Complex complex_in_disk(double radius) {
    const double r = radius * std::sqrt(open01());
    return std::polar(r, uniform(0, 2 * std::numbers::pi));
  }

 private:
  std::mt19937_64 engine_;
};

/// Random dense polynomial of exact degree with coefficients in the disk of
/// radius max_magnitude.
inline UniPoly random_unipoly(Rng& rng, int degree, double max_magnitude) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = rng.complex_in_disk(max_magnitude);
  if (c.back() == Complex{}) c.back() = 1.0;
  return UniPoly(std::move(c));
}

/// Random sparse polynomial in num_vars variables with total degree at most
/// max_degree and up to max_terms terms.
inline MultiPoly random_multipoly(Rng& rng, std::size_t num_vars, unsigned max_degree, int max_terms,
                                  double max_magnitude) {
  MultiPoly p(num_vars);
  const int terms = rng.integer(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m(num_vars, 0);
    const unsigned deg = static_cast<unsigned>(rng.integer(0, static_cast<int>(max_degree)));
    for (unsigned e = 0; e < deg; ++e) ++m[static_cast<std::size_t>(rng.integer(0, static_cast<int>(num_vars) - 1))];
    p.add_term(std::move(m), rng.complex_in_disk(max_magnitude));
  }
  return p;
}

}  // namespace gausslucas
