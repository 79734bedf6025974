#pragma once

#include <cstdint>
#include <random>

#include "algmono/groups.hpp"
#include "algmono/matrix.hpp"

namespace algmono::tools {

using Rng = std::mt19937_64;

struct RandomPresentationLimits {
  std::size_t max_generators = 3;
  std::size_t max_relators = 3;
  std::size_t max_length = 8;
};

/// Random word of unit letters with length in [1, max_length] before free reduction.
Word random_word(Rng& rng, std::size_t generators, std::size_t max_length);

Presentation random_presentation(Rng& rng, const RandomPresentationLimits& limits = {});

/// A presentation together with a candidate map to Z. Half of the draws fix
/// nu first and close every relator up with a generator of weight 1, the rest
/// draw both freely, so `nu` may fail validation.
struct RandomCase {
  Presentation presentation;
  ZMap nu;
};
RandomCase random_case(Rng& rng, const RandomPresentationLimits& limits = {});

/// Uniform-ish element of GL_n(Z): a product of elementary moves, sign flips
/// and permutations applied to the identity.
IntMatrix random_gl(Rng& rng, std::size_t n, int moves = 6);

}  // namespace algmono::tools
