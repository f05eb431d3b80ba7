#pragma once

#include <sppp/point_set.hh>

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sppp
{
    /// Plane order n: lines have n+1 points drawn from {0, ..., n^2+n}.
    class Order
    {
    public:
        static constexpr int max_supported = 10;

        explicit Order(int n);

        auto n() const -> int { return n_; }
        auto points_per_line() const -> int { return n_ + 1; }
        auto universe_size() const -> int { return n_ * n_ + n_ + 1; }

        auto operator<=>(const Order &) const = default;

    private:
        int n_;
    };

    /// A strictly increasing list of point ids. The order is implied by the length.
    class Line
    {
    public:
        /// Sorts the points; throws InvalidArgument on duplicates, negative ids,
        /// ids beyond the supported universe, or fewer than two points.
        explicit Line(std::vector<Point> points);
        Line(std::initializer_list<Point> points) : Line(std::vector<Point>(points)) {}

        auto order() const -> int { return static_cast<int>(points_.size()) - 1; }
        auto points() const -> const std::vector<Point> & { return points_; }
        auto mask() const -> const PointSet & { return mask_; }
        auto size() const -> std::size_t { return points_.size(); }
        auto contains(Point p) const -> bool { return mask_.test(p); }
        auto front() const -> Point { return points_.front(); }

        auto to_string() const -> std::string;

        auto operator==(const Line & o) const -> bool { return points_ == o.points_; }
        /// Elementwise comparison of the sorted point lists.
        auto operator<=>(const Line & o) const -> std::strong_ordering { return points_ <=> o.points_; }

    private:
        std::vector<Point> points_;
        PointSet mask_;
    };

    /// An order plus an ordered list of lines. Purity is not enforced here;
    /// see is_pure_partial_plane.
    class PartialPlane
    {
    public:
        explicit PartialPlane(Order order, std::vector<Line> lines = {});

        auto order() const -> const Order & { return order_; }
        auto n() const -> int { return order_.n(); }
        auto lines() const -> const std::vector<Line> & { return lines_; }
        auto size() const -> std::size_t { return lines_.size(); }

        auto add_line(Line line) -> void;
        auto with_line(Line line) const -> PartialPlane;
        auto contains_line(const Line & line) const -> bool;

        /// Same lines, sorted lexicographically.
        auto sorted() const -> PartialPlane;

        auto operator==(const PartialPlane &) const -> bool = default;

    private:
        Order order_;
        std::vector<Line> lines_;
    };

    struct AppearanceProfile
    {
        /// counts[i] = number of lines through point i.
        std::vector<int> counts;
        /// histogram[k] = number of points on exactly k lines.
        std::vector<int> histogram;

        auto a(int k) const -> int
        {
            return k >= 0 && k < static_cast<int>(histogram.size()) ? histogram[k] : 0;
        }
        auto max_count() const -> int;
    };

    struct PurityReport
    {
        bool pure = true;
        std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
        std::string diagnostic;
    };

    auto lines_compatible(const Line & a, const Line & b) -> bool;

    auto purity_report(const PartialPlane & p) -> PurityReport;
    auto is_pure_partial_plane(const PartialPlane & p) -> bool;

    auto appearance_profile(const PartialPlane & p) -> AppearanceProfile;

    /// sum_k k a_k == (n+1) s and sum_k k^2 a_k == s^2 + n s.
    auto check_sum_identities(const PartialPlane & p) -> bool;

    /// Sum of appearance counts over the points of `line` equals s + n.
    /// Throws InvalidArgument if `line` is not a line of `p`.
    auto check_line_sum(const PartialPlane & p, const Line & line) -> bool;

    /// No point lies on exactly n lines. Meaningful for saturated planes.
    auto check_no_n_point(const PartialPlane & p) -> bool;
}
