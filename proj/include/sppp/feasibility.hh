#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sppp
{
    enum class Relation
    {
        less_equal,
        greater_equal,
        equal,
    };

    /// sum(coefficients[k] * a_k) + size_coefficient * s + constant  <rel>  0
    struct LinearConstraint
    {
        std::map<int, long> coefficients;
        long size_coefficient = 0;
        long constant = 0;
        Relation relation = Relation::less_equal;
        std::string text;

        auto holds(const std::vector<long> & a, int size) const -> bool;
    };

    /// Parses e.g. "3*a3<=s", "a5 + a4 >= 2*s - 10", "a0 = 0".
    auto parse_linear_constraint(std::string_view text) -> LinearConstraint;

    /// Parses "a7=1" into {7, 1}.
    auto parse_fixed_value(std::string_view text) -> std::pair<int, long>;

    /// Integer profiles (a_0, ..., a_{n+1}) of a size-s pure partial plane of
    /// order n, constrained by the two counting identities
    ///   sum k a_k = (n+1) s,   sum k^2 a_k = s^2 + n s
    /// and a_0 = n^2+n+1 - sum_{k>=1} a_k >= 0.
    struct FeasibilityProblem
    {
        int order = 6;
        int size_min = 0;
        int size_max = 0;
        std::map<int, long> fixed;
        /// Every point appears at least once: a_0 = 0.
        bool total_points = false;
        /// No point lies on exactly n lines, as in any saturated plane.
        bool assume_saturated = true;
        std::vector<LinearConstraint> constraints;
    };

    struct FeasibilityProfile
    {
        int size = 0;
        std::vector<long> a;

        auto to_string() const -> std::string;
    };

    struct SizeOutcome
    {
        int size = 0;
        std::size_t profiles = 0;
        /// Why the size is infeasible; empty when it is not.
        std::string reason;
    };

    struct FeasibilityResult
    {
        std::vector<FeasibilityProfile> profiles;
        std::vector<SizeOutcome> sizes;

        auto feasible() const -> bool { return ! profiles.empty(); }
    };

    /// Throws InvalidArgument for a bad order, size range or fixed index,
    /// Unsupported for orders above 9.
    auto feasibility_solve(const FeasibilityProblem & problem) -> FeasibilityResult;
}
