#include <sppp/errors.hh>
#include <sppp/isomorphism.hh>

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace sppp
{
    namespace
    {
        constexpr int point_color = 0;
        constexpr int line_color = 1;
        constexpr int marker_color = 2;
    }

    auto build_incidence_graph(const PartialPlane & p, const MarkedPoints & marked, bool side_colored)
        -> IncidenceGraph
    {
        IncidenceGraph g;
        g.point_count = p.order().universe_size();
        g.line_count = static_cast<int>(p.size());
        g.has_marker = marked.has_value();

        int total = g.point_count + g.line_count + (g.has_marker ? 1 : 0);
        g.graph.adjacency.assign(total, {});
        g.graph.colors.assign(total, point_color);
        for (int l = 0; l < g.line_count; ++l) {
            int v = g.point_count + l;
            g.graph.colors[v] = side_colored ? line_color : point_color;
            for (auto pt : p.lines()[l].points()) {
                if (pt >= g.point_count)
                    throw InvalidArgument("line " + p.lines()[l].to_string() + " is outside the plane's universe");
                g.graph.add_edge(v, pt);
            }
        }
        if (g.has_marker) {
            int m = total - 1;
            g.graph.colors[m] = marker_color;
            std::vector<bool> seen(g.point_count, false);
            for (auto pt : *marked) {
                if (pt < 0 || pt >= g.point_count)
                    throw InvalidArgument("marked point " + std::to_string(pt) + " is out of range");
                if (seen[pt])
                    continue;
                seen[pt] = true;
                g.graph.add_edge(m, pt);
            }
        }
        return g;
    }

    auto plane_certificate(const PartialPlane & p, const MarkedPoints & marked) -> CanonicalCertificate
    {
        return canonical_form(build_incidence_graph(p, marked).graph);
    }

    auto planes_isomorphic(const PartialPlane & a, const PartialPlane & b, const MarkedPoints & marked) -> bool
    {
        if (a.order() != b.order())
            throw InvalidArgument("cannot compare planes of orders " + std::to_string(a.n()) + " and "
                + std::to_string(b.n()));
        if (a.size() != b.size())
            return false;
        return plane_certificate(a, marked) == plane_certificate(b, marked);
    }

    auto dedupe(const std::vector<PartialPlane> & planes, const MarkedPoints & marked, unsigned workers)
        -> std::vector<PartialPlane>
    {
        if (! planes.empty())
            for (const auto & p : planes)
                if (p.order() != planes.front().order())
                    throw InvalidArgument("dedupe needs planes of a single order");

        std::vector<CanonicalCertificate> certs(planes.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (auto i = next++; i < planes.size(); i = next++)
                certs[i] = plane_certificate(planes[i], marked);
        };
        workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(planes.size())));
        if (workers == 1)
            work();
        else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(work);
        }

        std::map<CanonicalCertificate, std::size_t> first_seen;
        for (std::size_t i = 0; i < planes.size(); ++i)
            first_seen.try_emplace(certs[i], i);

        std::vector<PartialPlane> out;
        out.reserve(first_seen.size());
        for (const auto & [cert, index] : first_seen)
            out.push_back(planes[index]);
        return out;
    }
}
