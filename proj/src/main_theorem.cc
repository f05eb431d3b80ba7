#include <sppp/appendix.hh>
#include <sppp/feasibility.hh>
#include <sppp/main_theorem.hh>
#include <sppp/plane_io.hh>

#include <algorithm>
#include <sstream>

namespace sppp
{
    namespace
    {
        constexpr std::size_t max_size = 25;
        constexpr std::size_t expected_classes = 4;

        auto pass(std::string name, std::string detail) -> CheckResult
        {
            return {std::move(name), CheckStatus::pass, std::move(detail)};
        }

        auto fail(std::string name, std::string detail) -> CheckResult
        {
            return {std::move(name), CheckStatus::fail, std::move(detail)};
        }

        struct Found
        {
            CaseId id;
            std::size_t index;
            const PartialPlane * plane;
            CanonicalCertificate certificate;
        };

        auto describe(const Found & f) -> std::string
        {
            return to_string(f.id) + " plane " + std::to_string(f.index);
        }

        auto manifest_checks(const CaseResults & results) -> std::vector<CheckResult>
        {
            std::vector<CheckResult> checks;
            for (const auto & e : expected_counts()) {
                auto name = "count " + to_string(e.id) + " phase " + std::to_string(e.phase);
                auto it = results.find({e.id, e.phase});
                if (it == results.end()) {
                    checks.push_back({name, CheckStatus::skip, "no stored output"});
                    continue;
                }
                const auto & planes = it->second;
                std::size_t largest = 0, of_25 = 0;
                for (const auto & p : planes) {
                    largest = std::max(largest, p.size());
                    of_25 += p.size() == max_size ? 1 : 0;
                }
                std::ostringstream detail;
                detail << planes.size() << " classes (expected " << e.classes << ")";
                bool ok = planes.size() == e.classes;
                if (e.max_size) {
                    detail << ", max size " << largest << " (expected " << *e.max_size << ")";
                    ok = ok && largest == *e.max_size;
                }
                if (e.size_25) {
                    detail << ", " << of_25 << " of size 25 (expected " << *e.size_25 << ")";
                    ok = ok && of_25 == *e.size_25;
                }
                auto status = ok ? CheckStatus::pass : (e.soft ? CheckStatus::warn : CheckStatus::fail);
                checks.push_back({name, status, detail.str()});
            }
            return checks;
        }
    }

    auto to_string(CheckStatus status) -> std::string
    {
        switch (status) {
            case CheckStatus::pass: return "PASS";
            case CheckStatus::fail: return "FAIL";
            case CheckStatus::warn: return "WARN";
            case CheckStatus::skip: return "SKIP";
        }
        return "?";
    }

    auto MainTheoremReport::passed() const -> bool
    {
        return std::none_of(checks.begin(), checks.end(), [](const auto & c) { return c.status == CheckStatus::fail; });
    }

    auto MainTheoremReport::to_string() const -> std::string
    {
        std::ostringstream out;
        for (const auto & c : checks)
            out << sppp::to_string(c.status) << " " << c.name << ": " << c.detail << '\n';
        out << (passed() ? "PASS" : "FAIL") << " main theorem\n";
        return out.str();
    }

    auto final_phase(CaseId id) -> int
    {
        return phase_count(id);
    }

    auto check_feasibility_cases() -> std::vector<CheckResult>
    {
        std::vector<CheckResult> checks;

        FeasibilityProblem first;
        first.size_min = first.size_max = 26;
        first.fixed = {{7, 0}, {1, 0}, {2, 0}, {3, 0}};
        auto r1 = feasibility_solve(first);
        if (r1.feasible())
            checks.push_back(fail("feasibility size 26", "found " + r1.profiles.front().to_string()));
        else
            checks.push_back(pass("feasibility size 26", "infeasible, " + r1.sizes.front().reason));

        FeasibilityProblem second;
        second.size_min = second.size_max = 25;
        second.fixed = {{7, 0}, {1, 0}, {2, 0}};
        second.constraints = {parse_linear_constraint("3*a3<=s")};
        auto r2 = feasibility_solve(second);
        bool unique = r2.profiles.size() == 1 && r2.profiles[0].a[5] == 15 && r2.profiles[0].a[4] == 25
            && r2.profiles[0].a[3] == 0;
        std::string found;
        for (const auto & p : r2.profiles)
            found += (found.empty() ? "" : "; ") + p.to_string();
        checks.push_back(unique ? pass("feasibility size 25", "unique profile " + found)
                                : fail("feasibility size 25", "expected a5=15 a4=25 a3=0, found "
                                      + (found.empty() ? std::string("none") : found)));

        FeasibilityProblem third;
        third.size_min = 25;
        third.size_max = 43;
        third.fixed = {{7, 1}, {0, 0}, {1, 0}, {2, 0}};
        auto r3 = feasibility_solve(third);
        if (r3.feasible())
            checks.push_back(fail("feasibility a7=1", "found " + r3.profiles.front().to_string()));
        else
            checks.push_back(pass("feasibility a7=1", "infeasible for every size 25..43"));
        return checks;
    }

    auto verify_main_theorem(const CaseResults & results, const MainTheoremOptions & options) -> MainTheoremReport
    {
        MainTheoremReport report;

        std::vector<std::string> missing;
        std::vector<std::pair<CaseId, const std::vector<PartialPlane> *>> finals;
        for (auto id : all_cases) {
            auto it = results.find({id, final_phase(id)});
            if (it == results.end())
                missing.push_back(to_string(id));
            else
                finals.emplace_back(id, &it->second);
        }
        if (missing.empty())
            report.checks.push_back(pass("complete", "final outputs of all six cases present"));
        else {
            std::string list;
            for (const auto & m : missing)
                list += (list.empty() ? "" : ", ") + m;
            report.checks.push_back({"complete", options.require_all_cases ? CheckStatus::fail : CheckStatus::skip,
                "missing final outputs: " + list});
        }

        std::size_t impure = 0, unsaturated = 0, total = 0, largest = 0;
        std::string first_problem;
        std::vector<Found> size_25;
        for (const auto & [id, planes] : finals)
            for (std::size_t i = 0; i < planes->size(); ++i) {
                const auto & p = (*planes)[i];
                ++total;
                largest = std::max(largest, p.size());
                if (! is_pure_partial_plane(p)) {
                    ++impure;
                    if (first_problem.empty())
                        first_problem = to_string(id) + " plane " + std::to_string(i) + " is not pure";
                }
                else if (! is_saturated(p)) {
                    ++unsaturated;
                    if (first_problem.empty())
                        first_problem = to_string(id) + " plane " + std::to_string(i) + " is not saturated";
                }
                if (p.size() == max_size)
                    size_25.push_back({id, i, &p, plane_certificate(p)});
            }

        if (impure == 0 && unsaturated == 0)
            report.checks.push_back(pass("saturated", std::to_string(total) + " final planes pure and saturated"));
        else
            report.checks.push_back(fail("saturated", std::to_string(impure) + " impure, " + std::to_string(unsaturated)
                + " unsaturated; first: " + first_problem));

        if (largest <= max_size)
            report.checks.push_back(pass("max size", "largest final plane has " + std::to_string(largest) + " lines"));
        else
            report.checks.push_back(fail("max size", "found a plane with " + std::to_string(largest) + " lines"));

        std::map<CanonicalCertificate, std::vector<const Found *>> classes;
        for (const auto & f : size_25)
            classes[f.certificate].push_back(&f);

        if (classes.size() == expected_classes)
            report.checks.push_back(pass("size-25 classes", "found 4 classes"));
        else
            report.checks.push_back(fail("size-25 classes", "expected 4 classes, found " + std::to_string(classes.size())));

        std::string duplicates;
        for (const auto & [cert, members] : classes)
            for (std::size_t k = 1; k < members.size(); ++k)
                duplicates += (duplicates.empty() ? "" : "; ") + describe(*members[0]) + " is isomorphic to "
                    + describe(*members[k]);
        if (duplicates.empty())
            report.checks.push_back(pass("pairwise non-isomorphic", std::to_string(size_25.size())
                + " size-25 planes in distinct classes"));
        else
            report.checks.push_back(fail("pairwise non-isomorphic", duplicates));

        std::map<CaseId, std::size_t> per_case;
        for (const auto & [cert, members] : classes)
            ++per_case[members.front()->id];
        auto from_1_1 = per_case[CaseId::case1_1], from_5 = per_case[CaseId::case5];
        auto elsewhere = classes.size() - from_1_1 - from_5;
        auto sources = std::to_string(from_1_1) + " from case1-1, " + std::to_string(from_5) + " from case5, "
            + std::to_string(elsewhere) + " elsewhere";
        if (from_1_1 == 3 && from_5 == 1 && elsewhere == 0)
            report.checks.push_back(pass("sources", sources));
        else
            report.checks.push_back(fail("sources", "expected 3 from case1-1 and 1 from case5, found " + sources));

        auto appendix = appendix_planes();
        std::vector<CanonicalCertificate> known;
        for (const auto & p : appendix)
            known.push_back(plane_certificate(p));
        std::string unmatched;
        std::vector<bool> hit(known.size(), false);
        for (const auto & [cert, members] : classes) {
            auto at = std::find(known.begin(), known.end(), cert);
            if (at == known.end())
                unmatched += (unmatched.empty() ? "" : "; ") + describe(*members.front());
            else
                hit[at - known.begin()] = true;
        }
        if (unmatched.empty())
            report.checks.push_back(pass("appendix", "every size-25 class matches an appendix plane"));
        else
            report.checks.push_back(fail("appendix", "not isomorphic to any appendix plane: " + unmatched));
        for (std::size_t k = 0; k < hit.size(); ++k)
            if (! hit[k] && missing.empty())
                report.checks.push_back(fail("appendix plane " + std::to_string(k + 1), "not found by the search"));

        for (auto & c : check_feasibility_cases())
            report.checks.push_back(std::move(c));

        if (options.compare_manifest_counts)
            for (auto & c : manifest_checks(results))
                report.checks.push_back(std::move(c));

        return report;
    }

    auto load_case_results(const std::filesystem::path & dir) -> CaseResults
    {
        CaseResults results;
        for (auto id : all_cases)
            for (int phase = 1; phase <= phase_count(id); ++phase) {
                auto path = dir / phase_file_name(id, phase);
                if (std::filesystem::exists(path))
                    results[{id, phase}] = read_planes(path).planes;
            }
        return results;
    }
}
