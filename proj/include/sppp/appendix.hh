#pragma once

#include <sppp/plane.hh>

#include <string_view>
#include <vector>

namespace sppp
{
    /// The four known classes of order-6 pure partial planes of size 25 in
    /// brace notation. The first three extend the case 1-1 seed, the fourth
    /// has 15 points on five lines and 25 on four.
    auto appendix_brace_text() -> std::string_view;

    auto appendix_planes() -> std::vector<PartialPlane>;
}
