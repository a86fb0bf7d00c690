#pragma once

#include <cstdint>
#include <random>

#include "adjrep/polytope.hpp"

namespace adjrep {

/// Simple 3-polytope {1 + <u_i, y> >= 0} with k facets. Normals are integer
/// vectors close to a sphere of the given radius; draws are repeated until the
/// result is bounded, irredundant and has a simple facet arrangement.
HPolytope random_simple_polytope3(std::size_t k, std::mt19937_64& rng, int radius = 12);

/// Convex polygon with integer vertices near a circle, counterclockwise.
Polygon random_convex_polygon(std::size_t n, std::mt19937_64& rng, int radius = 1000);

}  // namespace adjrep
