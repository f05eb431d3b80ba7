#pragma once

#include <sppp/plane.hh>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sppp
{
    /// Text format:
    ///
    ///   ppp v1 order=<n>
    ///   <block>
    ///
    ///   <block>
    ///
    /// A block is one plane: one line per row as ascending point ids, rows in
    /// ascending order, '#' rows are comments. A block of only comments is an
    /// empty plane.
    struct PlaneFile
    {
        Order order{1};
        std::vector<PartialPlane> planes;
    };

    /// Throws ParseError (with line number) on malformed input and
    /// StructuralError when a block is not a pure partial plane.
    auto read_planes(std::istream & in) -> PlaneFile;
    auto read_planes(const std::filesystem::path & path) -> PlaneFile;

    /// Rows are written sorted. Throws InvalidArgument if a plane has another order.
    auto write_planes(std::ostream & out, Order order, const std::vector<PartialPlane> & planes) -> void;
    auto write_planes(const std::filesystem::path & path, Order order, const std::vector<PartialPlane> & planes)
        -> void;

    /// Imports set notation "{{0, 1, 2}, {0, 3, 4}, ...}", one plane per
    /// outermost brace group. The order defaults to the first line's size - 1.
    auto parse_brace_planes(std::string_view text, std::optional<int> order = std::nullopt)
        -> std::vector<PartialPlane>;
}
