#pragma once

#include <sppp/candidates.hh>
#include <sppp/isomorphism.hh>
#include <sppp/plane.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <variant>
#include <vector>

namespace sppp
{
    /// Stop when no candidate remains compatible with the plane.
    struct ListEmpty
    {
    };

    /// Stop when the plane has exactly this many lines.
    struct TargetSize
    {
        std::size_t size = 0;
    };

    /// Stop when every listed point has at least its target appearance count.
    struct AppearanceTarget
    {
        std::vector<std::pair<Point, int>> targets;
    };

    using TerminatingPredicate = std::variant<ListEmpty, TargetSize, AppearanceTarget>;

    struct RecordAlways
    {
    };

    /// Record only planes with c[p0] >= c[p1] >= ... over the listed points.
    struct MonotoneAppearance
    {
        std::vector<Point> points;
    };

    using RecordingPredicate = std::variant<RecordAlways, MonotoneAppearance>;

    struct SearchConfig
    {
        TerminatingPredicate terminate = ListEmpty{};
        RecordingPredicate record = RecordAlways{};
        /// Every appearing point i > 0 needs point i-1 to appear as well.
        bool point_contiguity = false;
        /// Lines are added in increasing lexicographic order.
        bool lexicographic = true;
        /// A line may not push a point past its cap.
        std::map<Point, int> appearance_caps;
        /// Marker-vertex isomorphism for deduplication.
        MarkedPoints marked_points;
    };

    struct PhaseSpec
    {
        SearchConfig config;
        LineConstraints candidate_constraints;
    };

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t recorded = 0;
    };

    struct RunOptions
    {
        unsigned workers = 1;
        /// Line-oriented progress reports (nodes, recorded planes) go here when set.
        std::ostream * progress = nullptr;
        std::chrono::milliseconds progress_interval{10000};
        /// Filled in after the run.
        SearchStats * stats = nullptr;
    };

    /// Worker count from the SPPP_WORKERS environment variable, else 1.
    auto default_worker_count() -> unsigned;

    auto validate_config(const SearchConfig & config, const PartialPlane & start) -> void;

    /// Depth-first extension of `start` by lines from `candidates`. Returns
    /// every recorded plane, before isomorph rejection, in depth-first order.
    /// Throws InvalidArgument if a candidate is incompatible with `start`.
    auto dfs_extend(const PartialPlane & start, const std::vector<Line> & candidates, const SearchConfig & config,
        const RunOptions & options = {}) -> std::vector<PartialPlane>;

    /// Extends each input from its own starting list and returns one plane
    /// (lines sorted) per isomorphism class, ordered by certificate.
    auto run_phase(const std::vector<PartialPlane> & inputs, const PhaseSpec & spec, const RunOptions & options = {})
        -> std::vector<PartialPlane>;

    /// All saturated classes of order 2 or 3, grown from the line {0, ..., n}.
    auto exhaustive_small_order(int n, bool lexicographic = true, const RunOptions & options = {})
        -> std::vector<PartialPlane>;
}
