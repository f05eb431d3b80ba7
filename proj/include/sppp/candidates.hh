#pragma once

#include <sppp/plane.hh>

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace sppp
{
    /// "Exactly `count_a` points from `set_a`, the rest from `set_b`."
    struct MembershipQuota
    {
        std::vector<Point> set_a;
        int count_a = 0;
        std::vector<Point> set_b;
    };

    /// Restrictions on which lines may enter a starting list.
    struct LineConstraints
    {
        /// Every candidate contains this point.
        std::optional<Point> required_point;
        /// The smallest point of every candidate is one of these.
        std::optional<std::vector<Point>> leading_points;
        /// Every candidate is lexicographically greater than this line.
        std::optional<Line> lexicographic_floor;
        /// Total appearances (existing plus the candidate) may not exceed the cap.
        std::map<Point, int> appearance_caps;
        std::optional<MembershipQuota> membership_quota;
    };

    /// Throws InvalidArgument if caps or quota sets are out of range for `order`.
    auto validate_constraints(const LineConstraints & c, const Order & order) -> void;

    /// Calls `visit` for every line compatible with all lines of `p` and
    /// satisfying `c`, in generation order (not sorted). Stops when `visit`
    /// returns false.
    auto for_each_compatible_line(const PartialPlane & p, const LineConstraints & c,
        const std::function<bool(const Line &)> & visit) -> void;

    /// All compatible lines satisfying `c`, sorted lexicographically.
    auto enumerate_compatible_lines(const PartialPlane & p, const LineConstraints & c = {}) -> std::vector<Line>;

    /// Some line that could be added to `p`, if any.
    auto find_compatible_line(const PartialPlane & p) -> std::optional<Line>;

    auto is_saturated(const PartialPlane & p) -> bool;
}
