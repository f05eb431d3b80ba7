#include <sppp/errors.hh>
#include <sppp/plane.hh>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sppp
{
    Order::Order(int n) : n_(n)
    {
        if (n < 1)
            throw InvalidArgument("plane order must be at least 1, got " + std::to_string(n));
        if (n > max_supported)
            throw Unsupported("plane order " + std::to_string(n) + " exceeds the supported maximum "
                + std::to_string(max_supported));
    }

    Line::Line(std::vector<Point> points) : points_(std::move(points))
    {
        if (points_.size() < 2)
            throw InvalidArgument("a line needs at least two points");
        std::sort(points_.begin(), points_.end());
        if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
            throw InvalidArgument("duplicate point in line " + to_string());
        if (points_.front() < 0 || points_.back() >= PointSet::capacity)
            throw InvalidArgument("point id out of range in line " + to_string());
        mask_ = PointSet::of(points_);
    }

    auto Line::to_string() const -> std::string
    {
        std::ostringstream out;
        out << '{';
        for (std::size_t i = 0; i < points_.size(); ++i)
            out << (i ? "," : "") << points_[i];
        out << '}';
        return out.str();
    }

    PartialPlane::PartialPlane(Order order, std::vector<Line> lines) : order_(order), lines_(std::move(lines))
    {
    }

    auto PartialPlane::add_line(Line line) -> void
    {
        lines_.push_back(std::move(line));
    }

    auto PartialPlane::with_line(Line line) const -> PartialPlane
    {
        auto result = *this;
        result.add_line(std::move(line));
        return result;
    }

    auto PartialPlane::contains_line(const Line & line) const -> bool
    {
        return std::find(lines_.begin(), lines_.end(), line) != lines_.end();
    }

    auto PartialPlane::sorted() const -> PartialPlane
    {
        auto lines = lines_;
        std::sort(lines.begin(), lines.end());
        return PartialPlane{order_, std::move(lines)};
    }

    auto AppearanceProfile::max_count() const -> int
    {
        return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
    }

    auto lines_compatible(const Line & a, const Line & b) -> bool
    {
        if (a.size() != b.size())
            throw InvalidArgument("cannot compare lines of different orders: " + a.to_string() + " and "
                + b.to_string());
        return a.mask().common(b.mask()) == 1;
    }

    auto purity_report(const PartialPlane & p) -> PurityReport
    {
        PurityReport report;
        const auto & lines = p.lines();
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const auto & line = lines[i];
            if (static_cast<int>(line.size()) != p.order().points_per_line()) {
                report.pure = false;
                report.diagnostic = "line " + std::to_string(i) + " " + line.to_string() + " has "
                    + std::to_string(line.size()) + " points, expected "
                    + std::to_string(p.order().points_per_line());
                return report;
            }
            if (line.points().back() >= p.order().universe_size()) {
                report.pure = false;
                report.diagnostic = "line " + std::to_string(i) + " " + line.to_string()
                    + " uses a point outside 0.." + std::to_string(p.order().universe_size() - 1);
                return report;
            }
        }

        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                auto shared = lines[i].mask().common(lines[j].mask());
                if (shared != 1) {
                    report.pure = false;
                    report.offending_pair = std::pair{i, j};
                    report.diagnostic = "lines " + std::to_string(i) + " " + lines[i].to_string() + " and "
                        + std::to_string(j) + " " + lines[j].to_string() + " share "
                        + std::to_string(shared) + " points";
                    return report;
                }
            }
        return report;
    }

    auto is_pure_partial_plane(const PartialPlane & p) -> bool
    {
        return purity_report(p).pure;
    }

    auto appearance_profile(const PartialPlane & p) -> AppearanceProfile
    {
        AppearanceProfile profile;
        profile.counts.assign(p.order().universe_size(), 0);
        for (const auto & line : p.lines())
            for (auto pt : line.points())
                if (pt < p.order().universe_size())
                    ++profile.counts[pt];

        profile.histogram.assign(std::max(p.order().points_per_line(), profile.max_count()) + 1, 0);
        for (auto c : profile.counts)
            ++profile.histogram[c];
        return profile;
    }

    auto check_sum_identities(const PartialPlane & p) -> bool
    {
        auto profile = appearance_profile(p);
        long long first = 0, second = 0;
        for (std::size_t k = 0; k < profile.histogram.size(); ++k) {
            auto kk = static_cast<long long>(k);
            first += kk * profile.histogram[k];
            second += kk * kk * profile.histogram[k];
        }
        long long s = static_cast<long long>(p.size()), n = p.n();
        return first == (n + 1) * s && second == s * s + n * s;
    }

    auto check_line_sum(const PartialPlane & p, const Line & line) -> bool
    {
        if (! p.contains_line(line))
            throw InvalidArgument("line " + line.to_string() + " is not a line of the plane");
        auto profile = appearance_profile(p);
        long long sum = 0;
        for (auto pt : line.points())
            sum += profile.counts[pt];
        return sum == static_cast<long long>(p.size()) + p.n();
    }

    auto check_no_n_point(const PartialPlane & p) -> bool
    {
        auto profile = appearance_profile(p);
        return std::none_of(profile.counts.begin(), profile.counts.end(), [&](int c) { return c == p.n(); });
    }
}
