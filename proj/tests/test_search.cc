#include "fixtures.hh"
#include "oracles.hh"

#include <sppp/cases.hh>
#include <sppp/construct.hh>
#include <sppp/errors.hh>
#include <sppp/search.hh>

#include <doctest.h>

#include <sstream>

using namespace sppp;

namespace
{
    auto certificates(const std::vector<PartialPlane> & planes) -> std::set<CanonicalCertificate>
    {
        std::set<CanonicalCertificate> out;
        for (const auto & p : planes)
            out.insert(plane_certificate(p));
        return out;
    }

    auto extends(const PartialPlane & p, const PartialPlane & start) -> bool
    {
        return std::all_of(start.lines().begin(), start.lines().end(), [&](const Line & l) { return p.contains_line(l); });
    }

    auto first_line(int n) -> PartialPlane
    {
        std::vector<Point> pts(n + 1);
        std::iota(pts.begin(), pts.end(), 0);
        return PartialPlane{Order{n}, {Line{pts}}};
    }
}

TEST_CASE("dfs_extend trivial cases")
{
    auto start = first_line(2);
    auto out = dfs_extend(start, {}, SearchConfig{});
    REQUIRE(out.size() == 1);
    CHECK(out.front() == start);

    CHECK_THROWS_AS(dfs_extend(start, {Line{3, 4, 5}}, SearchConfig{}), InvalidArgument);

    SearchConfig too_small;
    too_small.terminate = TargetSize{1};
    CHECK_THROWS_AS(dfs_extend(start, {}, too_small), InvalidArgument);

    SearchConfig bad_cap;
    bad_cap.appearance_caps[0] = 4;
    CHECK_THROWS_AS(dfs_extend(start, {}, bad_cap), InvalidArgument);
}

TEST_CASE("dfs_extend from one order-2 line reaches the Fano plane")
{
    auto start = first_line(2);
    auto out = dfs_extend(start, enumerate_compatible_lines(start), SearchConfig{});
    REQUIRE_FALSE(out.empty());
    bool found = false;
    for (const auto & p : out) {
        CHECK(is_pure_partial_plane(p));
        CHECK(is_saturated(p));
        CHECK(extends(p, start));
        found = found || (p.size() == 7 && planes_isomorphic(p, fixtures::fano()));
    }
    CHECK(found);
}

TEST_CASE("order-2 exhaustive search matches the clique oracle")
{
    // Independent census: maximal cliques of the 35-line compatibility graph.
    auto all = oracle::all_pure_planes_order2();
    std::vector<PartialPlane> maximal;
    for (const auto & p : all)
        if (oracle::is_maximal_order2(p))
            maximal.push_back(p);
    auto oracle_classes = oracle::brute_force_classes(maximal);

    auto found = exhaustive_small_order(2);
    auto found_classes = oracle::brute_force_classes(found);
    CHECK(found.size() == found_classes.size());
    CHECK(found_classes.size() == oracle_classes.size());
    for (const auto & [key, p] : oracle_classes)
        CHECK(found_classes.contains(key));

    std::size_t largest = 0;
    for (const auto & p : found) {
        largest = std::max(largest, p.size());
        CHECK(appearance_profile(p).max_count() >= 3);
        CHECK(check_no_n_point(p));
    }
    CHECK(largest == 7);
}

TEST_CASE("lexicographic pruning loses no class at order 2")
{
    auto with = exhaustive_small_order(2, true);
    auto without = exhaustive_small_order(2, false);
    CHECK(certificates(with) == certificates(without));

    // Same on every pure plane reachable from two lines.
    PartialPlane start{Order{2}, {Line{0, 1, 2}, Line{0, 3, 4}}};
    auto candidates = enumerate_compatible_lines(start);
    SearchConfig lex, plain;
    plain.lexicographic = false;
    lex.terminate = plain.terminate = TargetSize{4};
    CHECK(certificates(dfs_extend(start, candidates, lex)) == certificates(dfs_extend(start, candidates, plain)));
}

TEST_CASE("order-3 exhaustive search")
{
    auto classes = exhaustive_small_order(3);
    auto small = construct_odd_order_sppp(3);
    bool found = false;
    for (const auto & p : classes) {
        CHECK(is_saturated(p));
        CHECK(check_no_n_point(p));
        if (p.size() == 5) {
            CHECK(appearance_profile(p).max_count() == 2);
            found = found || planes_isomorphic(p, small);
        }
    }
    CHECK(found);
    CHECK_THROWS_AS(exhaustive_small_order(4), Unsupported);
    CHECK_THROWS_AS(exhaustive_small_order(1), Unsupported);
}

TEST_CASE("soundness and caps at order 3")
{
    auto start = first_line(3);
    auto candidates = enumerate_compatible_lines(start);

    SearchConfig cfg;
    cfg.terminate = TargetSize{4};
    cfg.appearance_caps = {{0, 2}, {4, 1}, {5, 2}};
    auto out = dfs_extend(start, candidates, cfg);
    REQUIRE_FALSE(out.empty());
    for (const auto & p : out) {
        CHECK(p.size() == 4);
        CHECK(is_pure_partial_plane(p));
        CHECK(extends(p, start));
        auto c = appearance_profile(p).counts;
        CHECK(c[0] <= 2);
        CHECK(c[4] <= 1);
        CHECK(c[5] <= 2);
    }

    // With the same caps, no plane of size 4 is missed: brute-force all triples.
    std::size_t expected = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            for (std::size_t k = j + 1; k < candidates.size(); ++k) {
                PartialPlane p{Order{3}, {start.lines()[0], candidates[i], candidates[j], candidates[k]}};
                if (! is_pure_partial_plane(p))
                    continue;
                auto c = appearance_profile(p).counts;
                expected += c[0] <= 2 && c[4] <= 1 && c[5] <= 2 ? 1 : 0;
            }
    CHECK(out.size() == expected);
}

TEST_CASE("appearance-target termination")
{
    auto start = first_line(3);
    SearchConfig cfg;
    cfg.terminate = AppearanceTarget{{{0, 2}}};
    auto out = dfs_extend(start, enumerate_compatible_lines(start), cfg);
    // One more line through 0 avoiding 1, 2, 3: C(9, 3).
    CHECK(out.size() == 84);
    for (const auto & p : out)
        CHECK(appearance_profile(p).counts[0] == 2);

    cfg.terminate = AppearanceTarget{{{0, 2}, {1, 2}}};
    for (const auto & p : dfs_extend(start, enumerate_compatible_lines(start), cfg)) {
        auto c = appearance_profile(p).counts;
        CHECK(c[0] >= 2);
        CHECK(c[1] >= 2);
        CHECK(p.size() >= 3);
    }
}

TEST_CASE("point contiguity")
{
    auto start = first_line(3);
    SearchConfig cfg;
    cfg.point_contiguity = true;
    cfg.terminate = TargetSize{3};
    auto out = dfs_extend(start, enumerate_compatible_lines(start), cfg);
    REQUIRE_FALSE(out.empty());
    for (const auto & p : out) {
        auto c = appearance_profile(p).counts;
        auto first_zero = std::find(c.begin(), c.end(), 0);
        CHECK(std::all_of(first_zero, c.end(), [](int x) { return x == 0; }));
    }
    cfg.point_contiguity = false;
    CHECK(certificates(out) == certificates(dfs_extend(start, enumerate_compatible_lines(start), cfg)));
}

TEST_CASE("monotone recording")
{
    auto start = first_line(3);
    auto candidates = enumerate_compatible_lines(start);
    SearchConfig always, monotone;
    always.terminate = monotone.terminate = TargetSize{3};
    monotone.record = MonotoneAppearance{{4, 5, 6}};

    auto all = dfs_extend(start, candidates, always);
    auto filtered = dfs_extend(start, candidates, monotone);
    std::vector<PartialPlane> expected;
    for (const auto & p : all) {
        auto c = appearance_profile(p).counts;
        if (c[4] >= c[5] && c[5] >= c[6])
            expected.push_back(p);
    }
    CHECK(filtered == expected);
    CHECK(filtered.size() < all.size());
    // Points 4..12 are interchangeable here, so the class set is unchanged.
    CHECK(certificates(filtered) == certificates(all));
}

TEST_CASE("run_phase")
{
    PhaseSpec saturate;
    auto fano = fixtures::fano();
    auto out = run_phase({fano}, saturate);
    REQUIRE(out.size() == 1);
    CHECK(out.front() == fano);

    CHECK(run_phase({}, saturate).empty());

    // Output is independent of the worker count.
    auto seed = seed_configuration(CaseId::case1_2).planes;
    auto spec = phase_spec(CaseId::case1_2, 1);
    RunOptions one, three;
    three.workers = 3;
    SearchStats stats;
    one.stats = &stats;
    auto a = run_phase(seed, spec, one);
    auto b = run_phase(seed, spec, three);
    CHECK(a == b);
    CHECK(a.size() == 2);
    CHECK(stats.recorded >= a.size());
    for (const auto & p : a)
        CHECK(p == p.sorted());
}

TEST_CASE("progress lines")
{
    std::ostringstream log;
    RunOptions options;
    options.progress = &log;
    options.progress_interval = std::chrono::milliseconds{1};
    auto out = exhaustive_small_order(3, true, options);
    CHECK_FALSE(out.empty());
    CHECK(log.str().rfind("progress", 0) == 0);
}
