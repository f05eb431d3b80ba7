#include <sppp/cases.hh>
#include <sppp/errors.hh>

#include <doctest.h>

using namespace sppp;

TEST_CASE("case ids")
{
    for (auto id : all_cases)
        CHECK(parse_case_id(to_string(id)) == id);
    CHECK_THROWS_AS(parse_case_id("case6"), InvalidArgument);
    CHECK_THROWS_AS(parse_case_id(""), InvalidArgument);
    CHECK(phase_file_name(CaseId::case1_1, 2) == "case1-1-phase2.ppp");
}

TEST_CASE("seed configurations")
{
    auto c11 = seed_configuration(CaseId::case1_1);
    REQUIRE(c11.planes.size() == 1);
    const auto & s = c11.planes.front();
    CHECK(s.size() == 14);
    auto c = appearance_profile(s).counts;
    CHECK(c[0] == 7);
    CHECK(c[1] == 7);
    CHECK(c[2] == 2);
    CHECK(s.contains_line(Line{2, 7, 14, 21, 28, 35, 42}));
    CHECK(c11.phase_constraints.size() == 2);

    auto c3 = seed_configuration(CaseId::case3).planes.front();
    CHECK(c3.size() == 12);
    CHECK(appearance_profile(c3).counts[1] == 5);
    CHECK(c3.contains_line(Line{2, 7, 14, 21, 28, 35, 41}));

    auto c4 = seed_configuration(CaseId::case4).planes.front();
    CHECK(c4.size() == 9);
    auto c4c = appearance_profile(c4).counts;
    CHECK(c4c[0] == 5);
    CHECK(c4c[1] == 5);
    CHECK(c4c[2] == 1);

    auto c5 = seed_configuration(CaseId::case5);
    REQUIRE(c5.planes.size() == 2);
    CHECK(c5.planes[0].size() == 6);
    CHECK(c5.planes[0].contains_line(Line{1, 3, 5, 27, 31, 35, 36}));
    CHECK(c5.planes[1].contains_line(Line{1, 3, 11, 23, 27, 31, 35}));
    REQUIRE(c5.phase_constraints[0].membership_quota);
    CHECK(c5.phase_constraints[0].membership_quota->count_a == 3);
    CHECK(c5.phase_constraints[0].membership_quota->set_a.size() == 15);
    CHECK(c5.phase_constraints[0].membership_quota->set_b.size() == 25);

    for (auto id : all_cases)
        for (const auto & p : seed_configuration(id).planes) {
            CHECK(is_pure_partial_plane(p));
            CHECK(p.size() == phase_input_size(id, 1));
        }
}

TEST_CASE("phase specs")
{
    CHECK(phase_count(CaseId::case1_1) == 2);
    CHECK(phase_count(CaseId::case2) == 1);
    CHECK(phase_count(CaseId::case4) == 3);
    CHECK_THROWS_AS(phase_spec(CaseId::case2, 2), InvalidArgument);
    CHECK_THROWS_AS(phase_spec(CaseId::case1_1, 0), InvalidArgument);

    auto p11 = phase_spec(CaseId::case1_1, 1);
    CHECK(p11.candidate_constraints.required_point == 2);
    CHECK(std::get<TargetSize>(p11.config.terminate).size == 19);
    CHECK(p11.config.appearance_caps.empty());

    auto p12 = phase_spec(CaseId::case1_2, 2);
    CHECK(p12.config.appearance_caps.size() == 15);
    CHECK(std::holds_alternative<ListEmpty>(p12.config.terminate));

    auto p2 = phase_spec(CaseId::case2, 1);
    CHECK(p2.config.appearance_caps.size() == 41);
    CHECK_FALSE(p2.config.appearance_caps.contains(0));
    CHECK(std::get<MonotoneAppearance>(p2.config.record).points == std::vector<Point>{3, 4, 5, 6});

    auto p3 = phase_spec(CaseId::case3, 1);
    CHECK(p3.config.appearance_caps.size() == 42);
    CHECK_FALSE(p3.config.appearance_caps.contains(1));

    auto p43 = phase_spec(CaseId::case4, 3);
    CHECK(p43.config.appearance_caps.size() == 43);

    for (int phase = 1; phase <= 3; ++phase) {
        auto p5 = phase_spec(CaseId::case5, phase);
        REQUIRE(p5.config.marked_points);
        CHECK(p5.config.marked_points->size() == 15);
    }
    auto p53 = phase_spec(CaseId::case5, 3);
    CHECK(p53.config.appearance_caps.at(14) == 5);
    CHECK(p53.config.appearance_caps.at(15) == 4);
    CHECK(std::get<TargetSize>(p53.config.terminate).size == 25);
}

TEST_CASE("run_case input validation")
{
    auto seed = seed_configuration(CaseId::case1_1).planes;
    CHECK_THROWS_AS(run_case(CaseId::case1_1, 2, seed), InvalidArgument);
    CHECK_THROWS_AS(run_case(CaseId::case1_1, 3, seed), InvalidArgument);
    CHECK_THROWS_AS(run_case(CaseId::case3, 1, seed), InvalidArgument);

    PartialPlane wrong_order{Order{5}, {}};
    CHECK_THROWS_AS(run_case(CaseId::case4, 1, {wrong_order}), InvalidArgument);

    // Right size, missing a seed line.
    auto other = seed_configuration(CaseId::case4).planes.front();
    auto lines = other.lines();
    lines.back() = Line{1, 11, 17, 23, 29, 37, 38};
    CHECK_THROWS_AS(run_case(CaseId::case4, 1, {PartialPlane{Order{6}, lines}}), InvalidArgument);

    CHECK(run_case(CaseId::case1_1, 1, {}).empty());
}

TEST_CASE("expected count manifest")
{
    CHECK(expected_counts().size() == 13);
    CHECK(expected_count(CaseId::case1_1, 1).classes == 12);
    CHECK(expected_count(CaseId::case1_1, 2).classes == 36);
    CHECK(expected_count(CaseId::case1_1, 2).size_25 == 3u);
    CHECK(expected_count(CaseId::case1_2, 2).classes == 30);
    CHECK(expected_count(CaseId::case2, 1).classes == 2166);
    CHECK(expected_count(CaseId::case2, 1).max_size == 23u);
    CHECK(expected_count(CaseId::case3, 1).soft);
    CHECK(expected_count(CaseId::case3, 2).soft);
    CHECK(expected_count(CaseId::case4, 3).classes == 18);
    CHECK(expected_count(CaseId::case5, 2).classes == 620);
    CHECK(expected_count(CaseId::case5, 3).classes == 1);
    CHECK_FALSE(expected_count(CaseId::case1_2, 1).extended);
    CHECK(expected_count(CaseId::case2, 1).extended);
    CHECK_THROWS_AS(expected_count(CaseId::case2, 2), InvalidArgument);
}
