#include "oscomp/families.hpp"

#include <random>

namespace oscomp {

SemigroupModel family_wn(const Int& n) {
  if (n < 1) fail(Errc::PreconditionViolated, "the staircase starts at level 1");
  Int a = n + 1;
  Int b = n + 2;
  return SemigroupModel(NumericalKind{{a, b}}, OrderMode::Algebraic, 4 * a * b);
}

SemigroupModel family_womega(const Int& n_max) {
  if (n_max < 1) fail(Errc::PreconditionViolated, "the tower needs at least one level");
  DirectSumKind k;
  for (Int i = 1; i <= n_max; ++i) k.components.push_back(family_wn(i));
  return SemigroupModel(std::move(k), OrderMode::Algebraic, 4 * (n_max + 1) * (n_max + 2));
}

SemigroupModel family_zplus(const Int& element_bound) {
  return SemigroupModel(NumericalKind{{Int(1)}}, OrderMode::Algebraic, element_bound);
}

SemigroupModel random_model(std::uint64_t seed, const RandomModelParams& p) {
  if (p.min_generators < 1 || p.min_generators > p.max_generators)
    fail(Errc::PreconditionViolated, "generator count range is empty");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
  };
  if (!p.affine) {
    if (p.max_value < 1) fail(Errc::PreconditionViolated, "numerical generators need magnitude");
    std::size_t count = static_cast<std::size_t>(pick(p.min_generators, p.max_generators));
    std::vector<Int> gens;
    gens.reserve(count);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(Int(pick(1, p.max_value)));
    return SemigroupModel(NumericalKind{std::move(gens)}, OrderMode::Algebraic, p.element_bound);
  }
  if (p.dimension < 1) fail(Errc::PreconditionViolated, "affine models need a dimension");
  std::size_t count = static_cast<std::size_t>(pick(p.min_generators, p.max_generators));
  std::vector<std::vector<Int>> gens;
  gens.reserve(count);
  while (gens.size() < count) {
    std::vector<Int> g;
    bool nonzero = false;
    for (std::uint64_t i = 0; i < p.dimension; ++i) {
      Int c(pick(0, p.coord_cap));
      if (c > 0) nonzero = true;
      g.push_back(std::move(c));
    }
    if (nonzero) gens.push_back(std::move(g));
  }
  return SemigroupModel(AffineKind{static_cast<std::size_t>(p.dimension), std::move(gens)},
                        OrderMode::Algebraic, p.element_bound);
}

}  // namespace oscomp
