// Series inversion and polynomial reduction with replayable records.
#include <iostream>

#include "skewring/skewring.hpp"

using namespace skewring;

int main() {
  auto ring = skew_ring(q_twist(gaussian_rationals(), 2), Shape::ore);

  auto a = parse_series("1 - iX + O(X^5)", ring, SeriesKind::power);
  auto right = series_invert(a);
  auto left = series_left_inverse(a);
  std::cout << "a          = " << a << "\n";
  std::cout << "right inv  = " << right << "\n";
  std::cout << "left inv   = " << left << "\n";
  std::cout << "a * right  = " << a * right << "\n";

  auto r = right_reduce(parse_element("X^2", ring), {parse_element("X - i", ring)});
  std::cout << "X^2 reduced by X - i:\n";
  for (const auto& s : r.steps) std::cout << "  subtract g" << s.generator << " * (" << s.cofactor << ")\n";
  std::cout << "  remainder " << r.remainder << ", replay ok: " << (replay(r) == parse_element("X^2", ring)) << "\n";

  auto conj = skew_ring(conjugation(gaussian_rationals()), Shape::laurent);
  auto probe = simplicity_probe(parse_element("1 + X^4", conj), 5);
  std::cout << "probe on 1 + X^4 over conjugation: " << (probe.unit_reached ? "unit" : "inconclusive") << "\n";
}
