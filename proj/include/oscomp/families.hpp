#pragma once

#include <cstdint>

#include "oscomp/model.hpp"

namespace oscomp {

// Level n of the staircase family: <n+1, n+2> with algebraic order. The
// default element bound is 4*(n+1)*(n+2); raise it with with_element_bound
// for deeper sweeps.
SemigroupModel family_wn(const Int& n);

// Truncated tower: the direct sum of staircase levels 1..n_max. Elements of
// the untruncated tower have finite support, so every truncation embeds.
SemigroupModel family_womega(const Int& n_max);

// The non-negative integers, generated by 1.
SemigroupModel family_zplus(const Int& element_bound);

struct RandomModelParams {
  bool affine = false;
  std::uint64_t min_generators = 2;
  std::uint64_t max_generators = 4;
  std::uint64_t max_value = 30;  // numerical generator magnitude
  std::uint64_t dimension = 2;   // affine coordinate count
  std::uint64_t coord_cap = 4;   // affine generator coordinate magnitude
  Int element_bound = 60;
};

// Seeded model generator for the corpus. The engine stream is consumed
// through plain modular reduction, never distribution objects, so the same
// seed yields the same model on every platform.
SemigroupModel random_model(std::uint64_t seed, const RandomModelParams& params);

}  // namespace oscomp
