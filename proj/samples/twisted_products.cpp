// Products in a few twisted rings, printed in the text format the CLI reads.
#include <iostream>

#include "skewring/skewring.hpp"

using namespace skewring;

int main() {
  auto oct = octonions();
  auto e = [&](std::size_t p) { return oct->basis_element(p); };
  std::cout << "e1 e2 = " << e(1) * e(2) << "\n";
  std::cout << "(e1, e2, e4) = " << associator(e(1), e(2), e(4)) << "\n";

  // Q(i)[X; i -> 2i]: moving X past i doubles it
  auto ring = skew_ring(q_twist(gaussian_rationals(), 2), Shape::laurent);
  Element x = parse_element("X", ring), i = parse_element("i", ring);
  std::cout << "X i = " << x * i << "\n";
  std::cout << "(iX)(iX^-1) = " << parse_element("iX", ring) * parse_element("iX^-1", ring) << "\n";

  auto weyl = weyl_algebra(rationals());
  Element wx = parse_element("X", weyl), wy = parse_element("Y", weyl);
  std::cout << "Weyl: XY - YX = " << wx * wy - wy * wx << "\n";

  auto torus = quantum_torus(octonions(), 2);
  std::cout << "torus: XY = " << parse_element("X", torus) * parse_element("Y", torus) << "\n";
}
