#pragma once

#include <sppp/cases.hh>

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sppp
{
    /// Outputs per (case, phase).
    using CaseResults = std::map<std::pair<CaseId, int>, std::vector<PartialPlane>>;

    enum class CheckStatus
    {
        pass,
        fail,
        /// A soft expectation that did not hold.
        warn,
        skip,
    };

    auto to_string(CheckStatus status) -> std::string;

    struct CheckResult
    {
        std::string name;
        CheckStatus status = CheckStatus::pass;
        std::string detail;
    };

    struct MainTheoremReport
    {
        std::vector<CheckResult> checks;

        auto passed() const -> bool;
        /// One "STATUS name: detail" row per check.
        auto to_string() const -> std::string;
    };

    struct MainTheoremOptions
    {
        /// Compare every stored phase against the published class counts.
        bool compare_manifest_counts = false;
        /// Missing final outputs fail the report instead of being skipped.
        bool require_all_cases = true;
    };

    /// Final phase of each case: its outputs are the saturated planes.
    auto final_phase(CaseId id) -> int;

    /// The three integer-infeasibility arguments bounding the size at 25.
    auto check_feasibility_cases() -> std::vector<CheckResult>;

    /// Checks that the final outputs contain no plane above 25 lines, exactly
    /// four classes of size 25 (three from case1-1, one from case5), each
    /// isomorphic to an appendix plane, plus the feasibility arguments.
    auto verify_main_theorem(const CaseResults & results, const MainTheoremOptions & options = {})
        -> MainTheoremReport;

    /// Reads every "<case>-phase<k>.ppp" present in `dir`.
    auto load_case_results(const std::filesystem::path & dir) -> CaseResults;
}
