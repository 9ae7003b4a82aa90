#ifndef SKEWRING_RANDOM_HPP
#define SKEWRING_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "skewring/poly.hpp"
#include "skewring/ring.hpp"

namespace skewring {

/// Seeded generator of small exact elements. Same seed, same sequence.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  bool coin(int percent) { return integer(0, 99) < percent; }

  /// Numerator in [-5, 5], denominator in [1, 3].
  Rational rational() { return Rational(integer(-5, 5), integer(1, 3)); }

  Rational nonzero_rational() {
    Rational q;
    while (q.is_zero()) q = rational();
    return q;
  }

  /// Exponent window [lo, hi] for polynomial rings (clamped at 0 for Ore
  /// shape); inner polynomial rings use the window [-1, 1].
  Element element(const Ring& ring, std::int64_t lo = -2, std::int64_t hi = 2, std::size_t max_terms = 3) {
    if (ring.kind() == RingKind::polynomial) {
      const auto& poly = static_cast<const SkewPolyRing&>(ring);
      if (poly.shape() == Shape::ore) lo = std::max<std::int64_t>(lo, 0);
      const auto n = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_terms)));
      std::vector<Term> terms;
      for (std::size_t k = 0; k < n; ++k)
        terms.push_back({integer(lo, hi), element(*poly.coefficients(), -1, 1, 2)});
      return poly.from_terms(std::move(terms));
    }
    std::vector<Rational> coords(*ring.dimension());
    for (auto& c : coords)
      if (coin(60)) c = rational();
    return ring.from_coordinates(coords);
  }

  Element nonzero(const Ring& ring, std::int64_t lo = -2, std::int64_t hi = 2, std::size_t max_terms = 3) {
    while (true) {
      Element e = element(ring, lo, hi, max_terms);
      if (!e.is_zero()) return e;
    }
  }

  /// A polynomial with exactly the given degree (nonzero top coefficient).
  Element polynomial_of_degree(const SkewPolyRing& ring, std::int64_t lo, std::int64_t degree) {
    std::vector<Term> terms{{degree, nonzero(*ring.coefficients(), -1, 1, 2)}};
    for (std::int64_t e = lo; e < degree; ++e)
      if (coin(50)) terms.push_back({e, element(*ring.coefficients(), -1, 1, 2)});
    return ring.from_terms(std::move(terms));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace skewring

#endif
