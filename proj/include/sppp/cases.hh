#pragma once

#include <sppp/search.hh>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sppp
{
    /// The order-6 search cases:
    ///   case1-1  points 0, 1, 2 on seven lines each
    ///   case1-2  points 0, 1, 7 on seven lines each
    ///   case2    exactly 0 and 1 on seven lines
    ///   case3    0 on seven lines, 1, 2, 3 on five, 4 on at least four
    ///   case4    0..4 on five lines each
    ///   case5    0..14 on five lines, 15..39 on four, 40..42 unused
    enum class CaseId
    {
        case1_1,
        case1_2,
        case2,
        case3,
        case4,
        case5,
    };

    inline constexpr std::array all_cases{
        CaseId::case1_1, CaseId::case1_2, CaseId::case2, CaseId::case3, CaseId::case4, CaseId::case5};

    auto to_string(CaseId id) -> std::string;
    /// Accepts "case1-1", "case1-2", "case2", ... ; throws InvalidArgument otherwise.
    auto parse_case_id(std::string_view text) -> CaseId;

    auto phase_count(CaseId id) -> int;

    struct CaseSeed
    {
        /// Phase-1 inputs. Case 5 has two, one per choice of the first line through 1.
        std::vector<PartialPlane> planes;
        /// Starting-list constraints, index 0 = phase 1.
        std::vector<LineConstraints> phase_constraints;
    };

    auto seed_configuration(CaseId id) -> CaseSeed;

    /// Search configuration for one phase (1-based).
    auto phase_spec(CaseId id, int phase) -> PhaseSpec;

    /// Number of lines every input of the phase must have.
    auto phase_input_size(CaseId id, int phase) -> std::size_t;

    /// Runs one phase. Throws InvalidArgument for an unknown phase or inputs
    /// that do not fit it (wrong order or size, impure, missing seed lines).
    auto run_case(CaseId id, int phase, const std::vector<PartialPlane> & inputs, const RunOptions & options = {})
        -> std::vector<PartialPlane>;

    /// Published class counts per case and phase.
    struct ExpectedCount
    {
        CaseId id;
        int phase;
        std::size_t classes;
        /// Largest plane size among the outputs, when stated.
        std::optional<std::size_t> max_size;
        /// Number of output classes of size 25, when stated.
        std::optional<std::size_t> size_25;
        /// Reported but under-determined; mismatches are warnings.
        bool soft = false;
        /// Expected runtime tier: true = days-scale, not run by default.
        bool extended = false;
    };

    auto expected_counts() -> const std::vector<ExpectedCount> &;
    auto expected_count(CaseId id, int phase) -> const ExpectedCount &;

    /// Conventional file name for a phase's output, e.g. "case1-1-phase2.ppp".
    auto phase_file_name(CaseId id, int phase) -> std::string;
}
