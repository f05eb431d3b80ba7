#include <sppp/appendix.hh>
#include <sppp/cases.hh>
#include <sppp/construct.hh>
#include <sppp/errors.hh>
#include <sppp/feasibility.hh>
#include <sppp/main_theorem.hh>
#include <sppp/plane_io.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace sppp;

namespace
{
    constexpr int exit_pass = 0;
    constexpr int exit_failure = 1;
    constexpr int exit_usage = 2;

    // "0..14", "0,3,5", "0..4,9"
    auto parse_point_list(const std::string & text) -> std::vector<Point>
    {
        std::vector<Point> points;
        std::stringstream in{text};
        std::string part;
        while (std::getline(in, part, ',')) {
            auto dots = part.find("..");
            try {
                if (dots == std::string::npos)
                    points.push_back(std::stoi(part));
                else {
                    int from = std::stoi(part.substr(0, dots)), to = std::stoi(part.substr(dots + 2));
                    if (to < from)
                        throw InvalidArgument("empty range '" + part + "'");
                    for (int p = from; p <= to; ++p)
                        points.push_back(p);
                }
            }
            catch (const std::logic_error &) {
                throw InvalidArgument("bad point list '" + text + "'");
            }
        }
        return points;
    }

    auto profile_summary(const PartialPlane & p) -> std::string
    {
        auto profile = appearance_profile(p);
        std::ostringstream out;
        out << "s=" << p.size();
        for (int k = static_cast<int>(profile.histogram.size()) - 1; k >= 0; --k)
            if (profile.a(k) != 0)
                out << " a" << k << "=" << profile.a(k);
        return out.str();
    }

    auto write_output(const std::string & path, Order order, const std::vector<PartialPlane> & planes) -> void
    {
        if (path == "-")
            write_planes(std::cout, order, planes);
        else
            write_planes(std::filesystem::path{path}, order, planes);
    }

    auto read_input(const std::string & path) -> PlaneFile
    {
        if (path == "-")
            return read_planes(std::cin);
        return read_planes(std::filesystem::path{path});
    }

    struct SeedArgs
    {
        std::string case_id, out = "-";
    };

    auto cmd_seed(const SeedArgs & args) -> int
    {
        auto seed = seed_configuration(parse_case_id(args.case_id));
        write_output(args.out, Order{6}, seed.planes);
        return exit_pass;
    }

    struct RunArgs
    {
        std::string case_id, in, out = "-";
        int phase = 1;
        unsigned workers = 0;
        bool progress = false;
        double progress_seconds = 10;
    };

    auto cmd_run(const RunArgs & args) -> int
    {
        auto id = parse_case_id(args.case_id);
        auto inputs = args.in.empty() ? seed_configuration(id).planes : read_input(args.in).planes;
        SearchStats stats;
        RunOptions options;
        options.workers = args.workers == 0 ? default_worker_count() : args.workers;
        options.stats = &stats;
        if (args.progress) {
            options.progress = &std::cerr;
            options.progress_interval = std::chrono::milliseconds{static_cast<long>(args.progress_seconds * 1000)};
        }
        auto out = run_case(id, args.phase, inputs, options);
        write_output(args.out, Order{6}, out);
        std::cerr << to_string(id) << " phase " << args.phase << ": " << inputs.size() << " inputs, " << stats.nodes
                  << " nodes, " << stats.recorded << " recorded, " << out.size() << " classes\n";
        return exit_pass;
    }

    struct VerifyArgs
    {
        std::string file;
        bool saturated = false, distinct = false;
        int order = 0;
        std::string marked;
    };

    auto cmd_verify(const VerifyArgs & args) -> int
    {
        PlaneFile file;
        try {
            file = read_input(args.file);
        }
        catch (const ParseError & e) {
            std::cout << "FAIL " << e.what() << '\n';
            return exit_failure;
        }
        catch (const StructuralError & e) {
            std::cout << "FAIL " << e.what() << '\n';
            return exit_failure;
        }

        bool ok = true;
        if (args.order != 0 && file.order.n() != args.order) {
            std::cout << "FAIL file has order " << file.order.n() << ", expected " << args.order << '\n';
            ok = false;
        }
        for (std::size_t i = 0; i < file.planes.size(); ++i) {
            const auto & p = file.planes[i];
            std::cout << "plane " << i << ": " << profile_summary(p);
            if (args.saturated) {
                bool sat = is_saturated(p);
                std::cout << (sat ? " saturated" : " NOT saturated");
                ok = ok && sat;
            }
            std::cout << '\n';
        }
        if (args.distinct) {
            MarkedPoints marked;
            if (! args.marked.empty())
                marked = parse_point_list(args.marked);
            std::map<CanonicalCertificate, std::size_t> seen;
            for (std::size_t i = 0; i < file.planes.size(); ++i) {
                auto [it, fresh] = seen.try_emplace(plane_certificate(file.planes[i], marked), i);
                if (! fresh) {
                    std::cout << "FAIL plane " << i << " is isomorphic to plane " << it->second << '\n';
                    ok = false;
                }
            }
        }
        std::cout << (ok ? "PASS " : "FAIL ") << file.planes.size() << " planes\n";
        return ok ? exit_pass : exit_failure;
    }

    auto cmd_stats(const std::string & path) -> int
    {
        auto file = read_input(path);
        std::map<std::size_t, std::size_t> sizes;
        bool ok = true;
        for (std::size_t i = 0; i < file.planes.size(); ++i) {
            const auto & p = file.planes[i];
            ++sizes[p.size()];
            bool sums = check_sum_identities(p);
            bool line_sums = std::all_of(p.lines().begin(), p.lines().end(),
                [&](const Line & l) { return check_line_sum(p, l); });
            ok = ok && sums && line_sums;
            std::cout << "plane " << i << ": " << profile_summary(p) << " sum-identities="
                      << (sums ? "ok" : "FAILED") << " line-sums=" << (line_sums ? "ok" : "FAILED") << '\n';
        }
        std::cout << "order " << file.order.n() << ", " << file.planes.size() << " planes";
        for (auto [s, count] : sizes)
            std::cout << ", " << count << " of size " << s;
        std::cout << '\n';
        return ok ? exit_pass : exit_failure;
    }

    struct FeasibilityArgs
    {
        int order = 6;
        std::string size;
        std::vector<std::string> fix, constraint;
        bool total_points = false, unsaturated = false, list = false;
    };

    auto cmd_feasibility(const FeasibilityArgs & args) -> int
    {
        FeasibilityProblem problem;
        problem.order = args.order;
        auto dots = args.size.find("..");
        try {
            problem.size_min = std::stoi(args.size.substr(0, dots));
            problem.size_max = dots == std::string::npos ? problem.size_min : std::stoi(args.size.substr(dots + 2));
        }
        catch (const std::logic_error &) {
            throw InvalidArgument("bad size '" + args.size + "', expected S or A..B");
        }
        for (const auto & f : args.fix) {
            auto [k, v] = parse_fixed_value(f);
            problem.fixed[k] = v;
        }
        for (const auto & c : args.constraint)
            problem.constraints.push_back(parse_linear_constraint(c));
        problem.total_points = args.total_points;
        problem.assume_saturated = ! args.unsaturated;

        auto result = feasibility_solve(problem);
        for (const auto & s : result.sizes) {
            if (s.reason.empty())
                std::cout << "size " << s.size << ": " << s.profiles << " profiles\n";
            else
                std::cout << "size " << s.size << ": INFEASIBLE (" << s.reason << ")\n";
        }
        if (args.list || result.profiles.size() <= 20)
            for (const auto & p : result.profiles)
                std::cout << "  " << p.to_string() << '\n';
        std::cout << (result.feasible() ? "FEASIBLE " + std::to_string(result.profiles.size()) + " profiles"
                                        : std::string("INFEASIBLE"))
                  << '\n';
        return exit_pass;
    }

    auto cmd_oracle(int order, bool no_lex) -> int
    {
        auto classes = exhaustive_small_order(order, ! no_lex);
        std::map<std::pair<std::size_t, int>, std::size_t> census;
        for (const auto & p : classes)
            ++census[{p.size(), appearance_profile(p).max_count()}];
        std::cout << "order " << order << ": " << classes.size() << " saturated classes\n";
        for (auto [key, count] : census)
            std::cout << "  size " << key.first << ", max multiplicity " << key.second << ": " << count << '\n';
        return exit_pass;
    }

    auto cmd_check_main(const std::string & dir, bool counts, bool allow_missing) -> int
    {
        if (! std::filesystem::is_directory(dir))
            throw InvalidArgument(dir + " is not a directory");
        MainTheoremOptions options;
        options.compare_manifest_counts = counts;
        options.require_all_cases = ! allow_missing;
        auto report = verify_main_theorem(load_case_results(dir), options);
        std::cout << report.to_string();
        return report.passed() ? exit_pass : exit_failure;
    }

    auto cmd_import(const std::string & in, const std::string & out, int order) -> int
    {
        std::string text;
        if (in == "-")
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        else {
            std::ifstream file{in};
            if (! file)
                throw InvalidArgument("cannot open " + in);
            text.assign(std::istreambuf_iterator<char>(file), {});
        }
        auto planes = parse_brace_planes(text, order == 0 ? std::nullopt : std::optional<int>{order});
        if (planes.empty())
            throw InvalidArgument("no planes found in " + in);
        write_output(out, planes.front().order(), planes);
        return exit_pass;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Search and verification of saturated pure partial planes"};
    app.require_subcommand(1);

    SeedArgs seed;
    auto seed_cmd = app.add_subcommand("seed", "Write a case's seed configuration");
    seed_cmd->add_option("case", seed.case_id, "case1-1, case1-2, case2, case3, case4 or case5")->required();
    seed_cmd->add_option("--out,-o", seed.out, "Output file, - for stdout");

    RunArgs run;
    auto run_cmd = app.add_subcommand("run", "Run one phase of a case");
    run_cmd->add_option("case", run.case_id, "Case id")->required();
    run_cmd->add_option("--phase,-p", run.phase, "Phase number")->check(CLI::PositiveNumber);
    run_cmd->add_option("--in,-i", run.in, "Input planes (defaults to the seed)");
    run_cmd->add_option("--out,-o", run.out, "Output file, - for stdout");
    run_cmd->add_option("--workers,-w", run.workers, "Worker threads (default: SPPP_WORKERS or 1)");
    run_cmd->add_flag("--progress", run.progress, "Progress lines on stderr");
    run_cmd->add_option("--progress-interval", run.progress_seconds, "Seconds between progress lines")
        ->check(CLI::PositiveNumber);

    VerifyArgs verify;
    auto verify_cmd = app.add_subcommand("verify", "Check purity, and optionally saturation and distinctness");
    verify_cmd->add_option("file", verify.file, "Plane file, - for stdin")->required();
    verify_cmd->add_flag("--saturated", verify.saturated, "Require every plane to be saturated");
    verify_cmd->add_flag("--distinct", verify.distinct, "Require pairwise non-isomorphic planes");
    verify_cmd->add_option("--order", verify.order, "Required order");
    verify_cmd->add_option("--marked", verify.marked, "Marked points for --distinct, e.g. 0..14");

    std::string stats_file;
    auto stats_cmd = app.add_subcommand("stats", "Sizes, appearance histograms and counting identities");
    stats_cmd->add_option("file", stats_file, "Plane file, - for stdin")->required();

    FeasibilityArgs feas;
    auto feas_cmd = app.add_subcommand("feasibility", "Enumerate integer appearance profiles");
    feas_cmd->add_option("--order", feas.order, "Plane order");
    feas_cmd->add_option("--size", feas.size, "Size S or range A..B")->required();
    feas_cmd->add_option("--fix", feas.fix, "Fixed value such as a7=1")->take_all();
    feas_cmd->add_option("--constraint", feas.constraint, "Linear constraint such as 3*a3<=s")->take_all();
    feas_cmd->add_flag("--total-points", feas.total_points, "Every point appears (a0 = 0)");
    feas_cmd->add_flag("--unsaturated", feas.unsaturated, "Allow points on exactly n lines");
    feas_cmd->add_flag("--list", feas.list, "Print every profile");

    int oracle_order = 2;
    bool oracle_no_lex = false;
    auto oracle_cmd = app.add_subcommand("oracle", "Exhaustive census of saturated classes at order 2 or 3");
    oracle_cmd->add_option("--order", oracle_order, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
    oracle_cmd->add_flag("--no-lex", oracle_no_lex, "Disable lexicographic line ordering");

    std::string results_dir;
    bool main_counts = false, main_allow_missing = false;
    auto main_cmd = app.add_subcommand("check-main", "Verify the order-6 maximum from stored case outputs");
    main_cmd->add_option("--results-dir", results_dir, "Directory with <case>-phase<k>.ppp files")->required();
    main_cmd->add_flag("--counts", main_counts, "Also compare every phase against the published counts");
    main_cmd->add_flag("--allow-missing", main_allow_missing, "Skip cases without stored output");

    std::string import_in, import_out = "-";
    int import_order = 0;
    auto import_cmd = app.add_subcommand("import", "Convert brace notation to a plane file");
    import_cmd->add_option("file", import_in, "Brace-notation text, - for stdin")->required();
    import_cmd->add_option("--out,-o", import_out, "Output file, - for stdout");
    import_cmd->add_option("--order", import_order, "Order (default: inferred from the first line)");

    int construct_order = 3;
    std::string construct_out = "-";
    auto construct_cmd = app.add_subcommand("construct", "Saturated plane of odd order n with n+2 lines");
    construct_cmd->add_option("--order", construct_order, "Odd order >= 3")->required();
    construct_cmd->add_option("--out,-o", construct_out, "Output file, - for stdout");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*seed_cmd)
            return cmd_seed(seed);
        if (*run_cmd)
            return cmd_run(run);
        if (*verify_cmd)
            return cmd_verify(verify);
        if (*stats_cmd)
            return cmd_stats(stats_file);
        if (*feas_cmd)
            return cmd_feasibility(feas);
        if (*oracle_cmd)
            return cmd_oracle(oracle_order, oracle_no_lex);
        if (*main_cmd)
            return cmd_check_main(results_dir, main_counts, main_allow_missing);
        if (*import_cmd)
            return cmd_import(import_in, import_out, import_order);
        if (*construct_cmd) {
            auto p = construct_odd_order_sppp(construct_order);
            write_output(construct_out, p.order(), {p});
            return exit_pass;
        }
    }
    catch (const InvalidArgument & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const Unsupported & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
