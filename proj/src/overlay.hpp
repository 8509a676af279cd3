#pragma once

#include <vector>

#include "polybel/geometry.hpp"

namespace polybel::geometry::detail {

enum class BoolPred {
    Intersect,  // w0 != 0 && w1 != 0
    Unite,      // w0 != 0 || w1 != 0
    Subtract,   // w0 != 0 && w1 == 0
    Regularize  // w0 != 0 (operand 1 unused)
};

// Exact boolean overlay of two ring collections. Inputs may touch at points
// or share boundary segments; proper crossings between input edges are
// resolved by snap-rounding to the integer grid. Output rings follow the
// CCW-positive / CW-hole convention and are interior-disjoint; they are not
// yet canonicalized.
std::vector<Ring> boolean_overlay(const std::vector<const std::vector<Ring>*>& operand0,
                                  const std::vector<const std::vector<Ring>*>& operand1,
                                  BoolPred pred);

// True if any two edges properly cross (shared endpoints, touches and
// collinear overlaps are not crossings).
bool has_proper_crossing(const std::vector<Ring>& rings);

}  // namespace polybel::geometry::detail
