#include <sppp/candidates.hh>
#include <sppp/errors.hh>

#include <algorithm>

namespace sppp
{
    namespace
    {
        // Backtracking over the existing lines: each line must end up meeting the
        // candidate exactly once, so for a line not yet met we pick which of its
        // points the candidate takes. Points on no existing line fill the rest.
        class Generator
        {
        public:
            Generator(const PartialPlane & plane, const LineConstraints & c,
                const std::function<bool(const Line &)> & visit) :
                plane_(plane),
                constraints_(c),
                visit_(visit),
                width_(plane.order().points_per_line()),
                universe_(plane.order().universe_size()),
                first_line_(universe_, -1),
                counts_(universe_, 0),
                allowed_(universe_, true)
            {
                const auto & lines = plane_.lines();
                for (int i = 0; i < static_cast<int>(lines.size()); ++i)
                    for (auto pt : lines[i].points()) {
                        if (first_line_[pt] < 0)
                            first_line_[pt] = i;
                        ++counts_[pt];
                    }

                for (auto [pt, cap] : c.appearance_caps)
                    if (counts_[pt] + 1 > cap)
                        allowed_[pt] = false;

                if (c.membership_quota) {
                    in_a_ = PointSet::of(c.membership_quota->set_a);
                    in_b_ = PointSet::of(c.membership_quota->set_b);
                    for (Point pt = 0; pt < universe_; ++pt)
                        if (! in_a_.test(pt) && ! in_b_.test(pt))
                            allowed_[pt] = false;
                }

                for (Point pt = 0; pt < universe_; ++pt)
                    if (counts_[pt] == 0 && allowed_[pt])
                        fresh_.push_back(pt);
            }

            auto run() -> void
            {
                chosen_.reserve(width_);
                if (constraints_.required_point) {
                    auto r = *constraints_.required_point;
                    if (r < 0 || r >= universe_ || ! allowed_[r])
                        return;
                    push(r);
                }
                over_lines(0);
            }

        private:
            auto push(Point pt) -> void
            {
                chosen_.push_back(pt);
                mask_.set(pt);
                if (in_a_.test(pt))
                    ++from_a_;
                else if (in_b_.test(pt))
                    ++from_b_;
            }

            auto pop() -> void
            {
                auto pt = chosen_.back();
                chosen_.pop_back();
                mask_.reset(pt);
                if (in_a_.test(pt))
                    --from_a_;
                else if (in_b_.test(pt))
                    --from_b_;
            }

            auto quota_ok() const -> bool
            {
                if (! constraints_.membership_quota)
                    return true;
                const auto & q = *constraints_.membership_quota;
                return from_a_ <= q.count_a && from_b_ <= width_ - q.count_a;
            }

            auto over_lines(std::size_t i) -> bool
            {
                const auto & lines = plane_.lines();
                if (i == lines.size())
                    return fill(0, width_ - static_cast<int>(chosen_.size()));

                const auto & line = lines[i];
                auto met = mask_.common(line.mask());
                if (met > 1)
                    return true;
                if (met == 1)
                    return over_lines(i + 1);
                if (static_cast<int>(chosen_.size()) == width_)
                    return true;

                for (auto pt : line.points()) {
                    // a point on an earlier line would meet that line a second time
                    if (first_line_[pt] != static_cast<int>(i) || ! allowed_[pt])
                        continue;
                    push(pt);
                    bool go_on = ! quota_ok() || over_lines(i + 1);
                    pop();
                    if (! go_on)
                        return false;
                }
                return true;
            }

            auto fill(std::size_t from, int remaining) -> bool
            {
                if (remaining == 0)
                    return emit();
                for (auto k = from; k + remaining <= fresh_.size(); ++k) {
                    auto pt = fresh_[k];
                    if (mask_.test(pt))
                        continue;
                    push(pt);
                    bool go_on = ! quota_ok() || fill(k + 1, remaining - 1);
                    pop();
                    if (! go_on)
                        return false;
                }
                return true;
            }

            auto emit() -> bool
            {
                if (constraints_.membership_quota && from_a_ != constraints_.membership_quota->count_a)
                    return true;
                Line line{chosen_};
                if (constraints_.leading_points) {
                    const auto & lead = *constraints_.leading_points;
                    if (std::find(lead.begin(), lead.end(), line.front()) == lead.end())
                        return true;
                }
                if (constraints_.lexicographic_floor && ! (*constraints_.lexicographic_floor < line))
                    return true;
                return visit_(line);
            }

            const PartialPlane & plane_;
            const LineConstraints & constraints_;
            const std::function<bool(const Line &)> & visit_;
            int width_;
            int universe_;
            std::vector<int> first_line_;
            std::vector<int> counts_;
            std::vector<bool> allowed_;
            std::vector<Point> fresh_;
            PointSet in_a_, in_b_;
            int from_a_ = 0, from_b_ = 0;
            std::vector<Point> chosen_;
            PointSet mask_;
        };
    }

    auto validate_constraints(const LineConstraints & c, const Order & order) -> void
    {
        auto in_range = [&](Point pt) { return pt >= 0 && pt < order.universe_size(); };
        if (c.required_point && ! in_range(*c.required_point))
            throw InvalidArgument("required point out of range");
        for (auto [pt, cap] : c.appearance_caps) {
            if (! in_range(pt))
                throw InvalidArgument("appearance cap on out-of-range point " + std::to_string(pt));
            if (cap < 0 || cap > order.points_per_line())
                throw InvalidArgument("appearance cap " + std::to_string(cap) + " outside [0, n+1]");
        }
        if (c.lexicographic_floor && c.lexicographic_floor->order() != order.n())
            throw InvalidArgument("lexicographic floor has the wrong order");
        if (c.membership_quota) {
            const auto & q = *c.membership_quota;
            if (q.count_a < 0 || q.count_a > order.points_per_line())
                throw InvalidArgument("membership quota count outside [0, n+1]");
            PointSet a;
            for (auto pt : q.set_a) {
                if (! in_range(pt))
                    throw InvalidArgument("membership quota point out of range");
                a.set(pt);
            }
            for (auto pt : q.set_b) {
                if (! in_range(pt))
                    throw InvalidArgument("membership quota point out of range");
                if (a.test(pt))
                    throw InvalidArgument("membership quota sets are not disjoint");
            }
        }
    }

    auto for_each_compatible_line(const PartialPlane & p, const LineConstraints & c,
        const std::function<bool(const Line &)> & visit) -> void
    {
        validate_constraints(c, p.order());
        for (const auto & line : p.lines())
            if (line.order() != p.n())
                throw InvalidArgument("line " + line.to_string() + " does not match the plane order");
        Generator{p, c, visit}.run();
    }

    auto enumerate_compatible_lines(const PartialPlane & p, const LineConstraints & c) -> std::vector<Line>
    {
        std::vector<Line> out;
        for_each_compatible_line(p, c, [&](const Line & line) {
            out.push_back(line);
            return true;
        });
        std::sort(out.begin(), out.end());
        return out;
    }

    auto find_compatible_line(const PartialPlane & p) -> std::optional<Line>
    {
        std::optional<Line> found;
        for_each_compatible_line(p, {}, [&](const Line & line) {
            found = line;
            return false;
        });
        return found;
    }

    auto is_saturated(const PartialPlane & p) -> bool
    {
        return ! find_compatible_line(p).has_value();
    }
}
