#ifndef SKEWRING_TESTS_PROPERTY_HPP
#define SKEWRING_TESTS_PROPERTY_HPP

#include <gtest/gtest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "skewring/skewring.hpp"

namespace skewring::testing {

/// Runs `prop(rng, run)` for `runs` seeded runs; the run index is attached to
/// any failure so a case can be replayed.
template <class Prop>
void for_all(std::size_t runs, std::uint64_t seed, Prop prop) {
  Sampler rng(seed);
  for (std::size_t run = 0; run < runs; ++run) {
    SCOPED_TRACE("seed " + std::to_string(seed) + ", run " + std::to_string(run));
    prop(rng, run);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

struct LabeledRing {
  std::string label;
  PolyRingPtr ring;
};

/// Twisted rings covering every coefficient family and both shapes.
inline std::vector<LabeledRing> sample_rings() {
  auto m2 = matrix_algebra(rationals(), 2);
  return {
      {"qi_q2_ore", skew_ring(q_twist(gaussian_rationals(), 2), Shape::ore)},
      {"qi_q2_laurent", skew_ring(q_twist(gaussian_rationals(), 2), Shape::laurent)},
      {"qi_conj", skew_ring(conjugation(gaussian_rationals()), Shape::laurent)},
      {"h_inner", skew_ring(inner(quaternions(), quaternions()->element({1, 1, 0, 0})), Shape::laurent)},
      {"o_conj", skew_ring(conjugation(octonions()), Shape::laurent)},
      {"o_id_ore", skew_ring(identity_map(octonions()), Shape::ore)},
      {"m2_diag_swap", skew_ring(diag_swap(m2), Shape::laurent)},
      {"m2_transpose", skew_ring(transpose(m2), Shape::laurent)},
      {"hplus_conj", skew_ring(conjugation(jordan_quaternions()), Shape::laurent)},
      {"weyl", weyl_algebra(rationals())},
      {"o_torus", quantum_torus(octonions(), 2)},
  };
}

}  // namespace skewring::testing

#endif
