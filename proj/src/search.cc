#include <sppp/errors.hh>
#include <sppp/search.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

namespace sppp
{
    namespace
    {
        using Word = std::uint64_t;

        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };
        template <class... Ts>
        overloaded(Ts...) -> overloaded<Ts...>;

        struct SharedCounters
        {
            std::atomic<std::uint64_t> nodes{0};
            std::atomic<std::uint64_t> recorded{0};
        };

        class ProgressReporter
        {
        public:
            ProgressReporter(const RunOptions & options, const SharedCounters & counters, std::string label) :
                counters_(counters)
            {
                if (! options.progress)
                    return;
                thread_ = std::jthread([this, out = options.progress, every = options.progress_interval,
                                           label = std::move(label)](std::stop_token stop) {
                    auto started = std::chrono::steady_clock::now();
                    std::unique_lock lock(mutex_);
                    while (! stop.stop_requested()) {
                        wake_.wait_for(lock, stop, every, [] { return false; });
                        auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                            std::chrono::steady_clock::now() - started)
                                        .count();
                        *out << "progress " << label << " elapsed=" << secs << "s nodes=" << counters_.nodes.load()
                             << " recorded=" << counters_.recorded.load() << '\n'
                             << std::flush;
                    }
                });
            }

        private:
            const SharedCounters & counters_;
            std::mutex mutex_;
            std::condition_variable_any wake_;
            std::jthread thread_;
        };

        // Receives (worker, top-level branch, plane) for every recorded plane.
        using Emit = std::function<void(unsigned, std::size_t, const PartialPlane &)>;

        class DepthFirstSearch
        {
        public:
            DepthFirstSearch(const PartialPlane & start, std::vector<Line> candidates, const SearchConfig & config) :
                start_(start),
                config_(config),
                candidates_(std::move(candidates)),
                universe_(start.order().universe_size()),
                words_((candidates_.size() + 63) / 64)
            {
                validate_config(config_, start_);
                std::sort(candidates_.begin(), candidates_.end());
                candidates_.erase(std::unique(candidates_.begin(), candidates_.end()), candidates_.end());
                words_ = (candidates_.size() + 63) / 64;

                for (const auto & c : candidates_) {
                    if (c.order() != start_.n() || c.points().back() >= universe_)
                        throw InvalidArgument("candidate " + c.to_string() + " does not fit the plane order");
                    for (const auto & l : start_.lines())
                        if (c.mask().common(l.mask()) != 1)
                            throw InvalidArgument("candidate " + c.to_string()
                                + " is not compatible with starting line " + l.to_string());
                }

                auto m = candidates_.size();
                compat_.assign(m * words_, 0);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j)
                        if (candidates_[i].mask().common(candidates_[j].mask()) == 1)
                            compat_[i * words_ + j / 64] |= Word{1} << (j % 64);

                base_counts_.assign(universe_, 0);
                for (const auto & l : start_.lines()) {
                    base_appearing_ |= l.mask();
                    for (auto pt : l.points())
                        ++base_counts_[pt];
                }

                caps_.assign(universe_, std::numeric_limits<int>::max());
                for (auto [pt, cap] : config_.appearance_caps)
                    caps_[pt] = cap;

                if (auto * target = std::get_if<AppearanceTarget>(&config_.terminate))
                    for (auto [pt, count] : target->targets) {
                        std::vector<Word> bits(words_, 0);
                        for (std::size_t j = 0; j < m; ++j)
                            if (candidates_[j].contains(pt))
                                bits[j / 64] |= Word{1} << (j % 64);
                        containing_.push_back(std::move(bits));
                    }
            }

            auto candidates() const -> const std::vector<Line> & { return candidates_; }

            auto run(const RunOptions & options, SharedCounters & counters, const Emit & emit) -> void
            {
                Worker root{*this, 0, counters};
                std::vector<Word> all(words_, 0);
                for (std::size_t j = 0; j < candidates_.size(); ++j)
                    all[j / 64] |= Word{1} << (j % 64);

                if (root.terminal(all.data())) {
                    ++counters.nodes;
                    if (root.recordable()) {
                        ++counters.recorded;
                        emit(0, 0, start_);
                    }
                    return;
                }
                if (root.bound_fails(all.data(), -1)) {
                    ++counters.nodes;
                    return;
                }

                std::atomic<std::size_t> next{0};
                auto work = [&](unsigned id) {
                    Worker w{*this, id, counters};
                    for (auto i = next++; i < candidates_.size(); i = next++)
                        w.branch(i, all.data(), emit);
                    w.flush();
                };
                auto workers = std::max(1U, std::min<unsigned>(options.workers,
                                                static_cast<unsigned>(std::max<std::size_t>(1, candidates_.size()))));
                if (workers == 1)
                    work(0);
                else {
                    std::vector<std::jthread> pool;
                    for (unsigned id = 0; id < workers; ++id)
                        pool.emplace_back(work, id);
                }
            }

        private:
            class Worker
            {
            public:
                Worker(const DepthFirstSearch & s, unsigned id, SharedCounters & counters) :
                    s_(s), id_(id), counters_(counters), counts_(s.base_counts_), appearing_(s.base_appearing_)
                {
                }

                auto flush() -> void
                {
                    counters_.nodes += local_nodes_;
                    local_nodes_ = 0;
                }

                auto terminal(const Word * full) const -> bool
                {
                    return std::visit(overloaded{
                                          [&](const ListEmpty &) {
                                              return std::all_of(full, full + s_.words_, [](Word w) { return w == 0; });
                                          },
                                          [&](const TargetSize & t) { return plane_size() == t.size; },
                                          [&](const AppearanceTarget & t) {
                                              return std::all_of(t.targets.begin(), t.targets.end(),
                                                  [&](const auto & pc) { return counts_[pc.first] >= pc.second; });
                                          },
                                      },
                        s_.config_.terminate);
                }

                auto recordable() const -> bool
                {
                    if (auto * mono = std::get_if<MonotoneAppearance>(&s_.config_.record))
                        for (std::size_t k = 0; k + 1 < mono->points.size(); ++k)
                            if (counts_[mono->points[k]] < counts_[mono->points[k + 1]])
                                return false;
                    return true;
                }

                // Admissible bounds on what the remaining candidates can still achieve.
                auto bound_fails(const Word * full, long last) const -> bool
                {
                    if (auto * t = std::get_if<TargetSize>(&s_.config_.terminate)) {
                        if (plane_size() > t->size)
                            return true;
                        return plane_size() + forward_count(full, last, nullptr) < t->size;
                    }
                    if (auto * t = std::get_if<AppearanceTarget>(&s_.config_.terminate)) {
                        for (std::size_t k = 0; k < t->targets.size(); ++k) {
                            auto [pt, target] = t->targets[k];
                            int deficit = target - counts_[pt];
                            if (deficit > 0
                                && forward_count(full, last, s_.containing_[k].data())
                                    < static_cast<std::size_t>(deficit))
                                return true;
                        }
                    }
                    return false;
                }

                auto branch(std::size_t i, const Word * all, const Emit & emit) -> void
                {
                    branch_ = i;
                    try_child(0, all, i, emit);
                }

            private:
                auto plane_size() const -> std::size_t { return s_.start_.size() + chosen_.size(); }

                auto forward_count(const Word * full, long last, const Word * filter) const -> std::size_t
                {
                    std::size_t first_bit = s_.config_.lexicographic ? static_cast<std::size_t>(last + 1) : 0;
                    std::size_t total = 0;
                    for (std::size_t w = first_bit / 64; w < s_.words_; ++w) {
                        Word bits = full[w];
                        if (w == first_bit / 64 && first_bit % 64)
                            bits &= ~Word{0} << (first_bit % 64);
                        if (filter)
                            bits &= filter[w];
                        total += std::popcount(bits);
                    }
                    return total;
                }

                auto buffer(std::size_t depth) -> Word *
                {
                    while (buffers_.size() <= depth)
                        buffers_.emplace_back(s_.words_, 0);
                    return buffers_[depth].data();
                }

                // Add candidate i to the node at `depth` whose compatible set is `full`.
                auto try_child(std::size_t depth, const Word * full, std::size_t i, const Emit & emit) -> void
                {
                    const auto & line = s_.candidates_[i];
                    for (auto pt : line.points())
                        if (counts_[pt] + 1 > s_.caps_[pt])
                            return;

                    auto previous_appearing = appearing_;
                    appearing_ |= line.mask();
                    if (s_.config_.point_contiguity && ! appearing_.is_prefix()) {
                        appearing_ = previous_appearing;
                        return;
                    }

                    Word * child = buffer(depth + 1);
                    const Word * row = s_.compat_.data() + i * s_.words_;
                    for (std::size_t w = 0; w < s_.words_; ++w)
                        child[w] = full[w] & row[w];

                    for (auto pt : line.points())
                        ++counts_[pt];
                    chosen_.push_back(i);

                    visit(depth + 1, child, static_cast<long>(i), emit);

                    chosen_.pop_back();
                    for (auto pt : line.points())
                        --counts_[pt];
                    appearing_ = previous_appearing;
                }

                auto visit(std::size_t depth, const Word * full, long last, const Emit & emit) -> void
                {
                    if (++local_nodes_ >= 4096)
                        flush();

                    if (terminal(full)) {
                        if (recordable()) {
                            ++counters_.recorded;
                            emit(id_, branch_, current_plane());
                        }
                        return;
                    }
                    if (bound_fails(full, last))
                        return;

                    std::size_t first_bit = s_.config_.lexicographic ? static_cast<std::size_t>(last + 1) : 0;
                    for (std::size_t w = first_bit / 64; w < s_.words_; ++w) {
                        Word bits = full[w];
                        if (w == first_bit / 64 && first_bit % 64)
                            bits &= ~Word{0} << (first_bit % 64);
                        while (bits) {
                            std::size_t i = w * 64 + std::countr_zero(bits);
                            bits &= bits - 1;
                            try_child(depth, full, i, emit);
                        }
                    }
                }

                auto current_plane() const -> PartialPlane
                {
                    auto plane = s_.start_;
                    for (auto i : chosen_)
                        plane.add_line(s_.candidates_[i]);
                    return plane;
                }

                const DepthFirstSearch & s_;
                unsigned id_;
                SharedCounters & counters_;
                std::vector<int> counts_;
                PointSet appearing_;
                std::vector<std::size_t> chosen_;
                std::vector<std::vector<Word>> buffers_;
                std::size_t branch_ = 0;
                std::uint64_t local_nodes_ = 0;
            };

            const PartialPlane & start_;
            const SearchConfig & config_;
            std::vector<Line> candidates_;
            int universe_;
            std::size_t words_;
            std::vector<Word> compat_;
            std::vector<int> base_counts_;
            PointSet base_appearing_;
            std::vector<int> caps_;
            std::vector<std::vector<Word>> containing_;
        };

        auto fill_stats(const RunOptions & options, const SharedCounters & counters) -> void
        {
            if (options.stats) {
                options.stats->nodes = counters.nodes.load();
                options.stats->recorded = counters.recorded.load();
            }
        }
    }

    auto default_worker_count() -> unsigned
    {
        if (const char * env = std::getenv("SPPP_WORKERS")) {
            char * end = nullptr;
            auto value = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && value > 0)
                return static_cast<unsigned>(value);
        }
        return 1;
    }

    auto validate_config(const SearchConfig & config, const PartialPlane & start) -> void
    {
        auto universe = start.order().universe_size();
        auto in_range = [&](Point pt) { return pt >= 0 && pt < universe; };
        for (auto [pt, cap] : config.appearance_caps) {
            if (! in_range(pt))
                throw InvalidArgument("appearance cap on out-of-range point " + std::to_string(pt));
            if (cap < 0 || cap > start.order().points_per_line())
                throw InvalidArgument("appearance cap " + std::to_string(cap) + " outside [0, n+1]");
        }
        if (auto * t = std::get_if<TargetSize>(&config.terminate))
            if (t->size <= start.size())
                throw InvalidArgument("target size " + std::to_string(t->size)
                    + " does not exceed the starting size " + std::to_string(start.size()));
        if (auto * t = std::get_if<AppearanceTarget>(&config.terminate))
            for (auto [pt, count] : t->targets)
                if (! in_range(pt) || count < 0 || count > start.order().points_per_line())
                    throw InvalidArgument("bad appearance target for point " + std::to_string(pt));
        if (auto * mono = std::get_if<MonotoneAppearance>(&config.record))
            for (auto pt : mono->points)
                if (! in_range(pt))
                    throw InvalidArgument("monotone recording on out-of-range point " + std::to_string(pt));
        if (config.marked_points)
            for (auto pt : *config.marked_points)
                if (! in_range(pt))
                    throw InvalidArgument("marked point " + std::to_string(pt) + " is out of range");
    }

    auto dfs_extend(const PartialPlane & start, const std::vector<Line> & candidates, const SearchConfig & config,
        const RunOptions & options) -> std::vector<PartialPlane>
    {
        DepthFirstSearch search{start, candidates, config};
        SharedCounters counters;
        std::vector<std::vector<PartialPlane>> per_branch(std::max<std::size_t>(1, search.candidates().size()));
        {
            ProgressReporter reporter{options, counters, "dfs"};
            search.run(options, counters, [&](unsigned, std::size_t branch, const PartialPlane & plane) {
                per_branch[branch].push_back(plane);
            });
        }
        fill_stats(options, counters);

        std::vector<PartialPlane> out;
        for (auto & planes : per_branch)
            for (auto & p : planes)
                out.push_back(std::move(p));
        return out;
    }

    auto run_phase(const std::vector<PartialPlane> & inputs, const PhaseSpec & spec, const RunOptions & options)
        -> std::vector<PartialPlane>
    {
        struct Seen
        {
            std::size_t input;
            std::size_t branch;
            std::uint64_t serial;
            PartialPlane plane;

            auto key() const { return std::tuple{input, branch, serial}; }
        };
        using Classes = std::map<CanonicalCertificate, Seen>;

        auto keep_first = [](Classes & into, const CanonicalCertificate & cert, Seen seen) {
            auto [it, inserted] = into.try_emplace(cert, seen);
            if (! inserted && seen.key() < it->second.key())
                it->second = std::move(seen);
        };

        SharedCounters counters;
        ProgressReporter reporter{options, counters, "phase"};
        unsigned workers = std::max(1U, options.workers);
        Classes merged;

        for (std::size_t input = 0; input < inputs.size(); ++input) {
            const auto & start = inputs[input];
            if (start.order() != inputs.front().order())
                throw InvalidArgument("phase inputs have mixed orders");
            auto candidates = enumerate_compatible_lines(start, spec.candidate_constraints);
            DepthFirstSearch search{start, std::move(candidates), spec.config};

            std::vector<Classes> local(workers);
            std::vector<std::uint64_t> serial(workers, 0);
            search.run(options, counters, [&](unsigned worker, std::size_t branch, const PartialPlane & plane) {
                auto normalized = plane.sorted();
                auto cert = plane_certificate(normalized, spec.config.marked_points);
                keep_first(local[worker], cert, Seen{input, branch, serial[worker]++, std::move(normalized)});
            });
            for (auto & classes : local)
                for (auto & [cert, seen] : classes)
                    keep_first(merged, cert, std::move(seen));
        }
        fill_stats(options, counters);

        std::vector<PartialPlane> out;
        out.reserve(merged.size());
        for (auto & [cert, seen] : merged)
            out.push_back(std::move(seen.plane));
        return out;
    }

    auto exhaustive_small_order(int n, bool lexicographic, const RunOptions & options) -> std::vector<PartialPlane>
    {
        if (n != 2 && n != 3)
            throw Unsupported("exhaustive search is only offered for orders 2 and 3");
        std::vector<Point> first(n + 1);
        for (int i = 0; i <= n; ++i)
            first[i] = i;
        PartialPlane start{Order{n}, {Line{first}}};

        PhaseSpec spec;
        spec.config.terminate = ListEmpty{};
        spec.config.lexicographic = lexicographic;
        return run_phase({start}, spec, options);
    }
}
