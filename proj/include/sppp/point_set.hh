#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace sppp
{
    using Point = int;

    /// Fixed-width set of point ids. Orders up to 10 fit (111 points).
    class PointSet
    {
    public:
        static constexpr int capacity = 128;

        constexpr PointSet() = default;

        static auto of(const std::vector<Point> & points) -> PointSet
        {
            PointSet s;
            for (auto p : points)
                s.set(p);
            return s;
        }

        constexpr auto set(Point p) -> void { words_[p >> 6] |= std::uint64_t{1} << (p & 63); }
        constexpr auto reset(Point p) -> void { words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }
        constexpr auto test(Point p) const -> bool { return (words_[p >> 6] >> (p & 63)) & 1U; }

        constexpr auto count() const -> int
        {
            return std::popcount(words_[0]) + std::popcount(words_[1]);
        }

        constexpr auto empty() const -> bool { return (words_[0] | words_[1]) == 0; }

        /// Size of the intersection, without materialising it.
        constexpr auto common(const PointSet & other) const -> int
        {
            return std::popcount(words_[0] & other.words_[0]) + std::popcount(words_[1] & other.words_[1]);
        }

        constexpr auto operator&(const PointSet & o) const -> PointSet
        {
            PointSet r;
            r.words_ = {words_[0] & o.words_[0], words_[1] & o.words_[1]};
            return r;
        }

        constexpr auto operator|(const PointSet & o) const -> PointSet
        {
            PointSet r;
            r.words_ = {words_[0] | o.words_[0], words_[1] | o.words_[1]};
            return r;
        }

        constexpr auto operator|=(const PointSet & o) -> PointSet &
        {
            words_[0] |= o.words_[0];
            words_[1] |= o.words_[1];
            return *this;
        }

        /// Smallest member, or -1 when empty.
        constexpr auto first() const -> Point
        {
            if (words_[0])
                return std::countr_zero(words_[0]);
            if (words_[1])
                return 64 + std::countr_zero(words_[1]);
            return -1;
        }

        /// True iff the set is {0, 1, ..., k} for some k (or empty).
        constexpr auto is_prefix() const -> bool
        {
            if (words_[1] == 0)
                return (words_[0] & (words_[0] + 1)) == 0;
            return words_[0] == ~std::uint64_t{0} && (words_[1] & (words_[1] + 1)) == 0;
        }

        auto members() const -> std::vector<Point>
        {
            std::vector<Point> out;
            for (int w = 0; w < 2; ++w)
                for (auto bits = words_[w]; bits; bits &= bits - 1)
                    out.push_back(w * 64 + std::countr_zero(bits));
            return out;
        }

        constexpr auto operator==(const PointSet &) const -> bool = default;

    private:
        std::array<std::uint64_t, 2> words_{};
    };
}
