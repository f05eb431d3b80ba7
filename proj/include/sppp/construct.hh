#pragma once

#include <sppp/plane.hh>

namespace sppp
{
    /// Saturated plane of odd order n >= 3 with n+2 lines in which every
    /// used point lies on exactly two lines: one point per pair of lines,
    /// numbered in lexicographic pair order.
    auto construct_odd_order_sppp(int n) -> PartialPlane;
}
