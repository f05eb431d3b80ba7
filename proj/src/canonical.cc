#include <sppp/canonical.hh>
#include <sppp/errors.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace sppp
{
    auto ColoredGraph::edge_count() const -> std::size_t
    {
        std::size_t twice = 0;
        for (const auto & nbrs : adjacency)
            twice += nbrs.size();
        return twice / 2;
    }

    auto ColoredGraph::add_edge(int u, int v) -> void
    {
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }

    auto CanonicalCertificate::bytes() const -> std::string
    {
        std::string out;
        out.reserve(words_.size() * 8);
        for (auto w : words_)
            for (int b = 7; b >= 0; --b)
                out.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
        return out;
    }

    auto CanonicalCertificate::hex() const -> std::string
    {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        for (auto c : bytes()) {
            auto u = static_cast<unsigned char>(c);
            out.push_back(digits[u >> 4]);
            out.push_back(digits[u & 15]);
        }
        return out;
    }

    namespace
    {
        using Trace = std::vector<std::uint32_t>;

        // Ordered partition: cells are contiguous ranges of `elems`, named by
        // their start index.
        struct Partition
        {
            std::vector<int> elems;
            std::vector<int> pos;
            std::vector<int> cell_of;
            std::vector<int> cell_end;
            int cells = 0;

            auto discrete() const -> bool { return cells == static_cast<int>(elems.size()); }
        };

        struct Leaf
        {
            std::vector<Trace> traces;
            CanonicalCertificate certificate;
            std::vector<int> elems;
            std::vector<int> path;
        };

        class UnionFind
        {
        public:
            explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

            auto find(int x) -> int
            {
                while (parent_[x] != x)
                    x = parent_[x] = parent_[parent_[x]];
                return x;
            }

            auto unite(int a, int b) -> void
            {
                a = find(a), b = find(b);
                if (a != b)
                    parent_[std::max(a, b)] = std::min(a, b);
            }

        private:
            std::vector<int> parent_;
        };

        class Canonizer
        {
        public:
            explicit Canonizer(const ColoredGraph & g) :
                g_(g),
                size_(g.vertex_count()),
                count_(size_, 0),
                cell_marked_(size_, 0),
                queued_(size_, 0)
            {
            }

            auto run() -> CanonicalLabeling
            {
                auto root = initial_partition();
                Trace trace;
                std::vector<int> queue;
                for (int c = 0; c < size_; c = root.cell_end[c])
                    queue.push_back(c);
                refine(root, queue, trace);
                traces_.push_back(std::move(trace));
                add_twin_generators();

                search(root, 0);

                CanonicalLabeling result;
                result.certificate = best_->certificate;
                result.labeling = best_->elems;
                result.nodes = nodes_;
                result.automorphisms_found = found_automorphisms_;
                return result;
            }

        private:
            auto initial_partition() -> Partition
            {
                Partition p;
                p.elems.resize(size_);
                std::iota(p.elems.begin(), p.elems.end(), 0);
                std::stable_sort(p.elems.begin(), p.elems.end(),
                    [&](int a, int b) { return g_.colors[a] < g_.colors[b]; });
                p.pos.resize(size_);
                p.cell_of.resize(size_);
                p.cell_end.assign(size_, 0);
                for (int i = 0; i < size_;) {
                    int j = i;
                    while (j < size_ && g_.colors[p.elems[j]] == g_.colors[p.elems[i]])
                        ++j;
                    for (int k = i; k < j; ++k) {
                        p.pos[p.elems[k]] = k;
                        p.cell_of[p.elems[k]] = i;
                    }
                    p.cell_end[i] = j;
                    ++p.cells;
                    i = j;
                }
                return p;
            }

            // Equitable refinement. Splitters are processed FIFO; pieces of a
            // split cell are ordered by neighbour count, so the result and the
            // trace depend only on the isomorphism type of the input.
            auto refine(Partition & p, std::vector<int> queue, Trace & trace) -> void
            {
                for (auto c : queue)
                    queued_[c] = 1;

                std::vector<int> touched, touched_cells;
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    int w = queue[head];
                    queued_[w] = 0;

                    touched.clear();
                    for (int i = w; i < p.cell_end[w]; ++i)
                        for (int y : g_.adjacency[p.elems[i]])
                            if (count_[y]++ == 0)
                                touched.push_back(y);

                    touched_cells.clear();
                    for (int y : touched) {
                        int c = p.cell_of[y];
                        if (! cell_marked_[c]) {
                            cell_marked_[c] = 1;
                            touched_cells.push_back(c);
                        }
                    }
                    std::sort(touched_cells.begin(), touched_cells.end());

                    for (int c : touched_cells) {
                        cell_marked_[c] = 0;
                        int e = p.cell_end[c];
                        if (e - c == 1)
                            continue;
                        auto first = p.elems.begin() + c, last = p.elems.begin() + e;
                        int head_count = count_[p.elems[c]];
                        if (std::all_of(first, last, [&](int v) { return count_[v] == head_count; }))
                            continue;
                        std::sort(first, last, [&](int a, int b) { return count_[a] < count_[b]; });

                        bool was_queued = queued_[c];
                        std::vector<int> starts;
                        int largest = c, largest_size = 0;
                        for (int i = c; i < e;) {
                            int j = i;
                            while (j < e && count_[p.elems[j]] == count_[p.elems[i]])
                                ++j;
                            for (int k = i; k < j; ++k) {
                                p.pos[p.elems[k]] = k;
                                p.cell_of[p.elems[k]] = i;
                            }
                            p.cell_end[i] = j;
                            starts.push_back(i);
                            if (j - i > largest_size) {
                                largest_size = j - i;
                                largest = i;
                            }
                            i = j;
                        }
                        p.cells += static_cast<int>(starts.size()) - 1;

                        trace.push_back(static_cast<std::uint32_t>(c));
                        trace.push_back(static_cast<std::uint32_t>(starts.size()));
                        for (auto s : starts) {
                            trace.push_back(static_cast<std::uint32_t>(count_[p.elems[s]]));
                            trace.push_back(static_cast<std::uint32_t>(p.cell_end[s] - s));
                        }

                        for (auto s : starts) {
                            if (queued_[s])
                                continue;
                            if (! was_queued && s == largest)
                                continue;
                            queued_[s] = 1;
                            queue.push_back(s);
                        }
                    }

                    for (int y : touched)
                        count_[y] = 0;
                }
            }

            auto individualize(Partition & p, int v) -> int
            {
                int c = p.cell_of[v], e = p.cell_end[c];
                int at = p.pos[v];
                std::swap(p.elems[c], p.elems[at]);
                p.pos[p.elems[at]] = at;
                p.pos[v] = c;
                p.cell_end[c] = c + 1;
                p.cell_end[c + 1] = e;
                for (int k = c + 1; k < e; ++k)
                    p.cell_of[p.elems[k]] = c + 1;
                ++p.cells;
                return c;
            }

            auto target_cell(const Partition & p) const -> int
            {
                int best = -1, best_size = 1;
                for (int c = 0; c < size_; c = p.cell_end[c])
                    if (p.cell_end[c] - c > best_size) {
                        best_size = p.cell_end[c] - c;
                        best = c;
                    }
                return best;
            }

            // Vertices of equal colour with identical neighbourhoods can be
            // swapped freely; seed the generator set with those transpositions.
            auto add_twin_generators() -> void
            {
                std::map<std::pair<int, std::vector<int>>, std::vector<int>> classes;
                for (int v = 0; v < size_; ++v) {
                    auto nbrs = g_.adjacency[v];
                    std::sort(nbrs.begin(), nbrs.end());
                    classes[{g_.colors[v], std::move(nbrs)}].push_back(v);
                }
                for (const auto & [key, members] : classes)
                    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
                        std::vector<int> perm(size_);
                        std::iota(perm.begin(), perm.end(), 0);
                        std::swap(perm[members[i]], perm[members[i + 1]]);
                        generators_.push_back(std::move(perm));
                    }
            }

            auto certificate(const Partition & p) const -> CanonicalCertificate
            {
                std::vector<std::uint64_t> words;
                std::vector<std::pair<int, int>> class_sizes;
                for (int i = 0; i < size_; ++i) {
                    int color = g_.colors[p.elems[i]];
                    if (class_sizes.empty() || class_sizes.back().first != color)
                        class_sizes.emplace_back(color, 0);
                    ++class_sizes.back().second;
                }
                words.push_back(static_cast<std::uint64_t>(size_));
                words.push_back(class_sizes.size());
                for (auto [color, count] : class_sizes)
                    words.push_back((static_cast<std::uint64_t>(static_cast<std::uint32_t>(color)) << 32)
                        | static_cast<std::uint32_t>(count));

                auto header = words.size();
                std::size_t bits = static_cast<std::size_t>(size_) * (size_ - 1) / 2;
                words.resize(header + (bits + 63) / 64, 0);
                for (int i = 0; i < size_; ++i) {
                    auto row = static_cast<std::size_t>(i) * size_ - static_cast<std::size_t>(i) * (i + 1) / 2;
                    for (int w : g_.adjacency[p.elems[i]]) {
                        int j = p.pos[w];
                        if (j <= i)
                            continue;
                        auto bit = row + (j - i - 1);
                        words[header + bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
                    }
                }
                return CanonicalCertificate{std::move(words)};
            }

            auto compare_traces(const std::vector<Trace> & a, const std::vector<Trace> & b) const -> int
            {
                auto c = a <=> b;
                return c < 0 ? -1 : (c > 0 ? 1 : 0);
            }

            // Compare the current path's traces with the best leaf's traces at
            // the same depths. A longer current prefix than the best leaf counts
            // as greater.
            auto compare_prefix_with_best() const -> int
            {
                for (std::size_t i = 0; i < traces_.size(); ++i) {
                    if (i >= best_->traces.size())
                        return 1;
                    auto c = traces_[i] <=> best_->traces[i];
                    if (c != 0)
                        return c < 0 ? -1 : 1;
                }
                return 0;
            }

            auto common_prefix(const std::vector<int> & other) const -> int
            {
                std::size_t k = 0;
                while (k < path_.size() && k < other.size() && path_[k] == other[k])
                    ++k;
                return static_cast<int>(k);
            }

            auto record_automorphism(const Partition & p, const Leaf & match) -> void
            {
                std::vector<int> perm(size_);
                for (int v = 0; v < size_; ++v)
                    perm[v] = match.elems[p.pos[v]];
                generators_.push_back(std::move(perm));
                ++found_automorphisms_;
            }

            // Returns the depth at which the search should resume.
            auto leaf(const Partition & p, int depth) -> int
            {
                auto cert = certificate(p);
                if (! first_) {
                    first_ = Leaf{traces_, std::move(cert), p.elems, path_};
                    best_ = first_;
                    return depth;
                }
                if (cert == first_->certificate) {
                    record_automorphism(p, *first_);
                    return common_prefix(first_->path);
                }
                int c = compare_traces(traces_, best_->traces);
                if (c == 0)
                    c = cert < best_->certificate ? -1 : (cert == best_->certificate ? 0 : 1);
                if (c == 0) {
                    record_automorphism(p, *best_);
                    return common_prefix(best_->path);
                }
                if (c < 0)
                    best_ = Leaf{traces_, std::move(cert), p.elems, path_};
                return depth;
            }

            auto fixes_path(const std::vector<int> & perm) const -> bool
            {
                return std::all_of(path_.begin(), path_.end(), [&](int v) { return perm[v] == v; });
            }

            auto search(const Partition & p, int depth) -> int
            {
                ++nodes_;
                if (p.discrete())
                    return leaf(p, depth);

                int cell = target_cell(p);
                std::vector<int> candidates(p.elems.begin() + cell, p.elems.begin() + p.cell_end[cell]);
                std::sort(candidates.begin(), candidates.end());

                std::vector<int> explored;
                std::optional<UnionFind> orbits;
                std::size_t orbit_generators = 0;

                for (int v : candidates) {
                    if (! explored.empty()) {
                        if (! orbits || orbit_generators != generators_.size()) {
                            orbits.emplace(size_);
                            for (const auto & perm : generators_)
                                if (fixes_path(perm))
                                    for (int x = 0; x < size_; ++x)
                                        orbits->unite(x, perm[x]);
                            orbit_generators = generators_.size();
                        }
                        int root = orbits->find(v);
                        if (std::any_of(explored.begin(), explored.end(), [&](int u) { return orbits->find(u) == root; }))
                            continue;
                    }

                    Partition child = p;
                    Trace trace;
                    int start = individualize(child, v);
                    refine(child, {start}, trace);

                    path_.push_back(v);
                    traces_.push_back(std::move(trace));
                    int resume = depth + 1;
                    if (! best_ || compare_prefix_with_best() <= 0)
                        resume = search(child, depth + 1);
                    path_.pop_back();
                    traces_.pop_back();

                    if (resume < depth)
                        return resume;
                    explored.push_back(v);
                }
                return depth;
            }

            const ColoredGraph & g_;
            int size_;
            std::vector<int> count_;
            std::vector<char> cell_marked_;
            std::vector<char> queued_;

            std::vector<int> path_;
            std::vector<Trace> traces_;
            std::optional<Leaf> first_, best_;
            std::vector<std::vector<int>> generators_;
            std::size_t nodes_ = 0;
            std::size_t found_automorphisms_ = 0;
        };
    }

    auto canonical_labeling(const ColoredGraph & g) -> CanonicalLabeling
    {
        if (g.colors.size() != g.adjacency.size())
            throw InvalidArgument("colour vector does not match the vertex count");
        if (g.vertex_count() == 0)
            return CanonicalLabeling{CanonicalCertificate{{0, 0}}, {}, 0, 0};
        return Canonizer{g}.run();
    }

    auto canonical_form(const ColoredGraph & g) -> CanonicalCertificate
    {
        return canonical_labeling(g).certificate;
    }
}
