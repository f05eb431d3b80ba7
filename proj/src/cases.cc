#include <sppp/cases.hh>
#include <sppp/errors.hh>

#include <algorithm>
#include <numeric>

namespace sppp
{
    namespace
    {
        constexpr int case_order = 6;

        auto range(Point from, Point to) -> std::vector<Point>
        {
            std::vector<Point> out(to - from + 1);
            std::iota(out.begin(), out.end(), from);
            return out;
        }

        auto caps_except(std::initializer_list<Point> excluded, int cap) -> std::map<Point, int>
        {
            std::map<Point, int> caps;
            for (Point pt = 0; pt < Order{case_order}.universe_size(); ++pt)
                if (std::find(excluded.begin(), excluded.end(), pt) == excluded.end())
                    caps[pt] = cap;
            return caps;
        }

        // {0, 6k+1, ..., 6k+6} for k = 0..6: the seven lines through 0.
        auto lines_through_zero() -> std::vector<Line>
        {
            std::vector<Line> lines;
            for (int k = 0; k <= 6; ++k)
                lines.push_back(Line{0, 6 * k + 1, 6 * k + 2, 6 * k + 3, 6 * k + 4, 6 * k + 5, 6 * k + 6});
            return lines;
        }

        // {1, k+7, k+13, k+19, k+25, k+31, k+37} for k = 0..count-1.
        auto lines_through_one(int count) -> std::vector<Line>
        {
            std::vector<Line> lines;
            for (int k = 0; k < count; ++k)
                lines.push_back(Line{1, k + 7, k + 13, k + 19, k + 25, k + 31, k + 37});
            return lines;
        }

        auto case1_seed() -> PartialPlane
        {
            auto lines = lines_through_zero();
            for (auto & l : lines_through_one(6))
                lines.push_back(l);
            lines.push_back(Line{2, 7, 14, 21, 28, 35, 42});
            return PartialPlane{Order{case_order}, std::move(lines)};
        }

        auto case3_seed() -> PartialPlane
        {
            auto lines = lines_through_zero();
            for (auto & l : lines_through_one(4))
                lines.push_back(l);
            lines.push_back(Line{2, 7, 14, 21, 28, 35, 41});
            return PartialPlane{Order{case_order}, std::move(lines)};
        }

        auto case4_seed() -> PartialPlane
        {
            return PartialPlane{Order{case_order},
                {
                    Line{0, 1, 2, 3, 4, 5, 6},
                    Line{0, 7, 8, 9, 10, 11, 12},
                    Line{0, 13, 14, 15, 16, 17, 18},
                    Line{0, 19, 20, 21, 22, 23, 24},
                    Line{0, 25, 26, 27, 28, 29, 30},
                    Line{1, 7, 13, 19, 25, 31, 32},
                    Line{1, 8, 14, 20, 26, 33, 34},
                    Line{1, 9, 15, 21, 27, 35, 36},
                    Line{1, 10, 16, 22, 28, 37, 38},
                }};
        }

        auto case5_base() -> std::vector<Line>
        {
            return {
                Line{0, 1, 2, 15, 16, 17, 18},
                Line{0, 3, 4, 19, 20, 21, 22},
                Line{0, 5, 6, 23, 24, 25, 26},
                Line{0, 7, 8, 27, 28, 29, 30},
                Line{0, 9, 10, 31, 32, 33, 34},
            };
        }

        auto case5_seeds() -> std::vector<PartialPlane>
        {
            std::vector<PartialPlane> seeds;
            for (const auto & branch : {Line{1, 3, 5, 27, 31, 35, 36}, Line{1, 3, 11, 23, 27, 31, 35}}) {
                auto lines = case5_base();
                lines.push_back(branch);
                seeds.emplace_back(Order{case_order}, std::move(lines));
            }
            return seeds;
        }

        auto case5_quota() -> MembershipQuota
        {
            return MembershipQuota{range(0, 14), 3, range(15, 39)};
        }

        auto case5_caps() -> std::map<Point, int>
        {
            std::map<Point, int> caps;
            for (Point pt = 0; pt <= 14; ++pt)
                caps[pt] = 5;
            for (Point pt = 15; pt <= 39; ++pt)
                caps[pt] = 4;
            return caps;
        }

        auto check_phase(CaseId id, int phase) -> void
        {
            if (phase < 1 || phase > phase_count(id))
                throw InvalidArgument(to_string(id) + " has no phase " + std::to_string(phase));
        }

        // Lines every input of the case must contain.
        auto required_lines(CaseId id) -> std::vector<Line>
        {
            switch (id) {
                case CaseId::case1_1:
                case CaseId::case1_2:
                case CaseId::case2: return case1_seed().lines();
                case CaseId::case3: return case3_seed().lines();
                case CaseId::case4: return case4_seed().lines();
                case CaseId::case5: return case5_base();
            }
            return {};
        }
    }

    auto to_string(CaseId id) -> std::string
    {
        switch (id) {
            case CaseId::case1_1: return "case1-1";
            case CaseId::case1_2: return "case1-2";
            case CaseId::case2: return "case2";
            case CaseId::case3: return "case3";
            case CaseId::case4: return "case4";
            case CaseId::case5: return "case5";
        }
        return "unknown";
    }

    auto parse_case_id(std::string_view text) -> CaseId
    {
        for (auto id : all_cases)
            if (to_string(id) == text)
                return id;
        throw InvalidArgument("unknown case id '" + std::string(text)
            + "' (expected case1-1, case1-2, case2, case3, case4 or case5)");
    }

    auto phase_count(CaseId id) -> int
    {
        switch (id) {
            case CaseId::case1_1:
            case CaseId::case1_2: return 2;
            case CaseId::case2: return 1;
            case CaseId::case3: return 2;
            case CaseId::case4: return 3;
            case CaseId::case5: return 3;
        }
        return 0;
    }

    auto phase_spec(CaseId id, int phase) -> PhaseSpec
    {
        check_phase(id, phase);
        PhaseSpec spec;
        auto & c = spec.candidate_constraints;
        auto & cfg = spec.config;
        cfg.lexicographic = true;

        switch (id) {
            case CaseId::case1_1:
                if (phase == 1) {
                    c.required_point = 2;
                    cfg.terminate = TargetSize{19};
                }
                else
                    cfg.terminate = ListEmpty{};
                break;

            case CaseId::case1_2:
                if (phase == 1) {
                    c.required_point = 7;
                    cfg.terminate = TargetSize{18};
                }
                else {
                    cfg.terminate = ListEmpty{};
                    for (Point pt : {2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 19, 25, 31, 37})
                        cfg.appearance_caps[pt] = 5;
                }
                break;

            case CaseId::case2:
                cfg.terminate = ListEmpty{};
                cfg.appearance_caps = caps_except({0, 1}, 5);
                cfg.record = MonotoneAppearance{{3, 4, 5, 6}};
                break;

            case CaseId::case3:
                cfg.appearance_caps = caps_except({1}, 5);
                if (phase == 1) {
                    c.leading_points = std::vector<Point>{2, 3, 4};
                    cfg.terminate = AppearanceTarget{{{2, 5}, {3, 5}, {4, 4}}};
                }
                else
                    cfg.terminate = ListEmpty{};
                break;

            case CaseId::case4:
                if (phase == 1) {
                    c.required_point = 2;
                    cfg.terminate = TargetSize{11};
                }
                else if (phase == 2) {
                    c.leading_points = std::vector<Point>{2, 3, 4};
                    cfg.terminate = AppearanceTarget{{{2, 5}, {3, 5}, {4, 5}}};
                    cfg.appearance_caps = {{2, 5}, {3, 5}, {4, 5}};
                }
                else {
                    cfg.terminate = ListEmpty{};
                    cfg.appearance_caps = caps_except({}, 5);
                }
                break;

            case CaseId::case5:
                cfg.marked_points = range(0, 14);
                c.membership_quota = case5_quota();
                if (phase == 1) {
                    c.leading_points = std::vector<Point>{1};
                    cfg.terminate = TargetSize{9};
                }
                else if (phase == 2) {
                    c.leading_points = std::vector<Point>{2};
                    cfg.terminate = TargetSize{10};
                }
                else {
                    c.appearance_caps = case5_caps();
                    cfg.appearance_caps = case5_caps();
                    cfg.terminate = TargetSize{25};
                }
                break;
        }
        return spec;
    }

    auto seed_configuration(CaseId id) -> CaseSeed
    {
        CaseSeed seed;
        switch (id) {
            case CaseId::case1_1:
            case CaseId::case1_2:
            case CaseId::case2: seed.planes = {case1_seed()}; break;
            case CaseId::case3: seed.planes = {case3_seed()}; break;
            case CaseId::case4: seed.planes = {case4_seed()}; break;
            case CaseId::case5: seed.planes = case5_seeds(); break;
        }
        for (int phase = 1; phase <= phase_count(id); ++phase)
            seed.phase_constraints.push_back(phase_spec(id, phase).candidate_constraints);
        return seed;
    }

    auto phase_input_size(CaseId id, int phase) -> std::size_t
    {
        check_phase(id, phase);
        switch (id) {
            case CaseId::case1_1: return phase == 1 ? 14 : 19;
            case CaseId::case1_2: return phase == 1 ? 14 : 18;
            case CaseId::case2: return 14;
            case CaseId::case3: return phase == 1 ? 12 : 22;
            case CaseId::case4: return phase == 1 ? 9 : (phase == 2 ? 11 : 21);
            case CaseId::case5: return phase == 1 ? 6 : (phase == 2 ? 9 : 10);
        }
        return 0;
    }

    auto run_case(CaseId id, int phase, const std::vector<PartialPlane> & inputs, const RunOptions & options)
        -> std::vector<PartialPlane>
    {
        check_phase(id, phase);
        auto expected_size = phase_input_size(id, phase);
        auto required = required_lines(id);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            const auto & p = inputs[i];
            auto where = to_string(id) + " phase " + std::to_string(phase) + " input " + std::to_string(i);
            if (p.n() != case_order)
                throw InvalidArgument(where + " has order " + std::to_string(p.n()) + ", expected 6");
            if (p.size() != expected_size)
                throw InvalidArgument(where + " has " + std::to_string(p.size()) + " lines, expected "
                    + std::to_string(expected_size));
            for (const auto & l : required)
                if (! p.contains_line(l))
                    throw InvalidArgument(where + " lacks the seed line " + l.to_string());
            auto purity = purity_report(p);
            if (! purity.pure)
                throw InvalidArgument(where + " is not pure: " + purity.diagnostic);
        }
        return run_phase(inputs, phase_spec(id, phase), options);
    }

    auto expected_counts() -> const std::vector<ExpectedCount> &
    {
        static const std::vector<ExpectedCount> manifest{
            {CaseId::case1_1, 1, 12, 19, std::nullopt, false, false},
            {CaseId::case1_1, 2, 36, 25, 3, false, false},
            {CaseId::case1_2, 1, 2, 18, std::nullopt, false, false},
            {CaseId::case1_2, 2, 30, std::nullopt, 0, false, false},
            {CaseId::case2, 1, 2166, 23, 0, false, true},
            {CaseId::case3, 1, 26, 22, std::nullopt, true, true},
            {CaseId::case3, 2, 23, std::nullopt, 0, true, true},
            {CaseId::case4, 1, 29, 11, std::nullopt, false, true},
            {CaseId::case4, 2, 30, 21, std::nullopt, false, true},
            {CaseId::case4, 3, 18, std::nullopt, 0, false, true},
            {CaseId::case5, 1, 13, 9, std::nullopt, false, true},
            {CaseId::case5, 2, 620, 10, std::nullopt, false, true},
            {CaseId::case5, 3, 1, 25, 1, false, true},
        };
        return manifest;
    }

    auto expected_count(CaseId id, int phase) -> const ExpectedCount &
    {
        for (const auto & e : expected_counts())
            if (e.id == id && e.phase == phase)
                return e;
        throw InvalidArgument(to_string(id) + " has no phase " + std::to_string(phase));
    }

    auto phase_file_name(CaseId id, int phase) -> std::string
    {
        return to_string(id) + "-phase" + std::to_string(phase) + ".ppp";
    }
}
