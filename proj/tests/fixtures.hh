#pragma once

#include <sppp/plane.hh>

namespace fixtures
{
    inline auto fano() -> sppp::PartialPlane
    {
        using sppp::Line;
        return sppp::PartialPlane{sppp::Order{2},
            {Line{0, 1, 2}, Line{0, 3, 4}, Line{0, 5, 6}, Line{1, 3, 5}, Line{1, 4, 6}, Line{2, 3, 6}, Line{2, 4, 5}}};
    }
}
