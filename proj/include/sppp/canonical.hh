#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sppp
{
    /// Undirected simple graph with an initial vertex colouring. Colours are
    /// compared by value: a canonical labeling places lower colours first.
    struct ColoredGraph
    {
        std::vector<std::vector<int>> adjacency;
        std::vector<int> colors;

        auto vertex_count() const -> int { return static_cast<int>(adjacency.size()); }
        auto edge_count() const -> std::size_t;
        auto add_edge(int u, int v) -> void;
    };

    /// Total-order key of a coloured graph's isomorphism class: the colour
    /// class sizes followed by the upper-triangular adjacency bits of the
    /// canonically relabeled graph.
    class CanonicalCertificate
    {
    public:
        CanonicalCertificate() = default;
        explicit CanonicalCertificate(std::vector<std::uint64_t> words) : words_(std::move(words)) {}

        auto words() const -> const std::vector<std::uint64_t> & { return words_; }
        auto bytes() const -> std::string;
        auto hex() const -> std::string;

        auto operator<=>(const CanonicalCertificate &) const = default;

    private:
        std::vector<std::uint64_t> words_;
    };

    struct CanonicalLabeling
    {
        CanonicalCertificate certificate;
        /// labeling[position] = vertex placed at that position.
        std::vector<int> labeling;
        std::size_t nodes = 0;
        std::size_t automorphisms_found = 0;
    };

    /// Colour refinement to an equitable partition, then individualization of
    /// vertices in the first largest non-singleton cell, keeping the least
    /// leaf under (refinement trace, adjacency encoding).
    auto canonical_labeling(const ColoredGraph & g) -> CanonicalLabeling;
    auto canonical_form(const ColoredGraph & g) -> CanonicalCertificate;
}
