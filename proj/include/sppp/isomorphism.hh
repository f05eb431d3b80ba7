#pragma once

#include <sppp/canonical.hh>
#include <sppp/plane.hh>

#include <optional>
#include <vector>

namespace sppp
{
    using MarkedPoints = std::optional<std::vector<Point>>;

    /// Point-line incidence graph. Vertices 0..P-1 are points, P..P+s-1 are
    /// lines in plane order, and the marker (if any) is last.
    struct IncidenceGraph
    {
        ColoredGraph graph;
        int point_count = 0;
        int line_count = 0;
        bool has_marker = false;

        auto vertex_count() const -> int { return graph.vertex_count(); }
        auto edge_count() const -> std::size_t { return graph.edge_count(); }
    };

    /// With `side_colored` false, points and lines share one colour (the
    /// plain bipartite graph); the marker always has its own colour.
    auto build_incidence_graph(const PartialPlane & p, const MarkedPoints & marked = std::nullopt,
        bool side_colored = true) -> IncidenceGraph;

    auto plane_certificate(const PartialPlane & p, const MarkedPoints & marked = std::nullopt) -> CanonicalCertificate;

    /// Throws InvalidArgument on mismatched orders.
    auto planes_isomorphic(const PartialPlane & a, const PartialPlane & b, const MarkedPoints & marked = std::nullopt)
        -> bool;

    /// One representative per isomorphism class (the first seen), sorted by certificate.
    auto dedupe(const std::vector<PartialPlane> & planes, const MarkedPoints & marked = std::nullopt,
        unsigned workers = 1) -> std::vector<PartialPlane>;
}
