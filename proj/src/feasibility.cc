#include <sppp/errors.hh>
#include <sppp/feasibility.hh>

#include <cctype>
#include <numeric>
#include <sstream>

namespace sppp
{
    namespace
    {
        constexpr int max_order = 9;

        struct Side
        {
            std::map<int, long> coefficients;
            long size_coefficient = 0;
            long constant = 0;
        };

        class ConstraintParser
        {
        public:
            explicit ConstraintParser(std::string_view text) : text_(text) {}

            auto parse() -> LinearConstraint
            {
                auto left = side();
                auto rel = relation();
                auto right = side();
                skip_space();
                if (at_ < text_.size())
                    fail("unexpected '" + std::string(1, text_[at_]) + "'");

                LinearConstraint c;
                c.relation = rel;
                c.text = std::string(text_);
                c.coefficients = left.coefficients;
                for (auto [k, v] : right.coefficients)
                    c.coefficients[k] -= v;
                std::erase_if(c.coefficients, [](const auto & kv) { return kv.second == 0; });
                c.size_coefficient = left.size_coefficient - right.size_coefficient;
                c.constant = left.constant - right.constant;
                return c;
            }

        private:
            std::string_view text_;
            std::size_t at_ = 0;

            [[noreturn]] auto fail(const std::string & what) const -> void
            {
                throw InvalidArgument("bad constraint '" + std::string(text_) + "': " + what);
            }

            auto skip_space() -> void
            {
                while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_])))
                    ++at_;
            }

            auto peek() -> char
            {
                skip_space();
                return at_ < text_.size() ? text_[at_] : '\0';
            }

            auto number() -> long
            {
                skip_space();
                std::size_t start = at_;
                while (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at_])))
                    ++at_;
                if (start == at_)
                    fail("expected a number");
                return std::stol(std::string(text_.substr(start, at_ - start)));
            }

            auto relation() -> Relation
            {
                skip_space();
                auto rest = text_.substr(at_);
                if (rest.starts_with("<=")) {
                    at_ += 2;
                    return Relation::less_equal;
                }
                if (rest.starts_with(">=")) {
                    at_ += 2;
                    return Relation::greater_equal;
                }
                if (rest.starts_with("==")) {
                    at_ += 2;
                    return Relation::equal;
                }
                if (rest.starts_with("=")) {
                    at_ += 1;
                    return Relation::equal;
                }
                fail("expected <=, >= or =");
            }

            // Adds coefficient * variable to the side; variable is "s", "aK" or absent.
            auto variable(Side & side, long coefficient) -> bool
            {
                char c = peek();
                if (c == 's') {
                    ++at_;
                    side.size_coefficient += coefficient;
                    return true;
                }
                if (c == 'a') {
                    ++at_;
                    if (at_ >= text_.size() || ! std::isdigit(static_cast<unsigned char>(text_[at_])))
                        fail("expected an index after 'a'");
                    side.coefficients[static_cast<int>(number())] += coefficient;
                    return true;
                }
                return false;
            }

            auto side() -> Side
            {
                Side side;
                long sign = 1;
                if (peek() == '-') {
                    ++at_;
                    sign = -1;
                }
                else if (peek() == '+')
                    ++at_;
                while (true) {
                    if (std::isdigit(static_cast<unsigned char>(peek()))) {
                        long value = sign * number();
                        if (peek() == '*') {
                            ++at_;
                            if (! variable(side, value))
                                fail("expected a variable after '*'");
                        }
                        else
                            side.constant += value;
                    }
                    else if (! variable(side, sign))
                        fail("expected a term");

                    char c = peek();
                    if (c == '+')
                        sign = 1;
                    else if (c == '-')
                        sign = -1;
                    else
                        break;
                    ++at_;
                }
                return side;
            }
        };

        // One linear equation sum c_k a_k = rhs over the free variables.
        struct Equation
        {
            std::map<int, long> coefficients;
            long rhs = 0;
        };

        auto format_equation(const Equation & e) -> std::string
        {
            std::ostringstream out;
            bool first = true;
            for (auto it = e.coefficients.rbegin(); it != e.coefficients.rend(); ++it) {
                auto [k, c] = *it;
                if (c == 0)
                    continue;
                out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
                if (std::abs(c) != 1)
                    out << std::abs(c) << "*";
                out << "a" << k;
                first = false;
            }
            if (first)
                out << "0";
            out << " = " << e.rhs;
            return out.str();
        }

        // Empty when the equation may have an integer solution.
        auto integrality_obstruction(Equation e) -> std::string
        {
            long g = 0;
            for (auto [k, c] : e.coefficients)
                g = std::gcd(g, c);
            if (g == 0)
                return e.rhs == 0 ? "" : format_equation(e) + " is false";
            if (e.rhs % g == 0)
                return "";
            long common = std::gcd(g, e.rhs);
            for (auto & [k, c] : e.coefficients)
                c /= common;
            e.rhs /= common;
            return format_equation(e) + " has no integer solution";
        }

        struct Solver
        {
            const FeasibilityProblem & problem;
            int n;
            long universe;
            int size;
            std::vector<int> free_vars;
            std::vector<long> a;
            std::size_t identity_solutions = 0;
            std::vector<std::size_t> rejected_by;
            std::vector<FeasibilityProfile> found;

            auto leaf() -> void
            {
                long used = 0;
                for (int k = 1; k <= n + 1; ++k)
                    used += a[k];
                a[0] = universe - used;
                if (a[0] < 0)
                    return;
                if (auto f = problem.fixed.find(0); f != problem.fixed.end() && f->second != a[0])
                    return;
                if (problem.total_points && a[0] != 0)
                    return;
                ++identity_solutions;
                for (std::size_t i = 0; i < problem.constraints.size(); ++i)
                    if (! problem.constraints[i].holds(a, size)) {
                        ++rejected_by[i];
                        return;
                    }
                found.push_back(FeasibilityProfile{size, a});
            }

            // r1, r2: what remains of the two identities; budget: points left.
            auto descend(std::size_t index, long r1, long r2, long budget) -> void
            {
                if (index == free_vars.size()) {
                    if (r1 == 0 && r2 == 0)
                        leaf();
                    return;
                }
                int k = free_vars[index];
                int k_min = free_vars.back();
                long limit = std::min({r1 / k, r2 / (static_cast<long>(k) * k), budget});
                for (long v = 0; v <= limit; ++v) {
                    long n1 = r1 - v * k, n2 = r2 - v * k * k;
                    if (index + 1 < free_vars.size()) {
                        // Remaining variables have weights in [k_min, next k].
                        long k_next = free_vars[index + 1];
                        if (n2 > k_next * n1 || n2 < k_min * n1)
                            continue;
                    }
                    a[k] = v;
                    descend(index + 1, n1, n2, budget - v);
                }
                a[k] = 0;
            }
        };

        auto solve_size(const FeasibilityProblem & problem, int size, std::vector<FeasibilityProfile> & profiles)
            -> SizeOutcome
        {
            int n = problem.order;
            long universe = static_cast<long>(n) * n + n + 1;
            SizeOutcome outcome{size, 0, ""};

            std::map<int, long> fixed = problem.fixed;
            if (problem.assume_saturated)
                fixed.try_emplace(n, 0);
            if (problem.total_points) {
                if (auto f = fixed.find(0); f != fixed.end() && f->second != 0) {
                    outcome.reason = "bounds: a0 is fixed to " + std::to_string(f->second)
                        + " but every point must appear";
                    return outcome;
                }
            }

            Solver solver{problem, n, universe, size, {}, std::vector<long>(n + 2, 0), 0,
                std::vector<std::size_t>(problem.constraints.size(), 0), {}};

            long r1 = static_cast<long>(n + 1) * size;
            long r2 = static_cast<long>(size) * size + static_cast<long>(n) * size;
            long budget = universe;
            for (auto [k, v] : fixed) {
                if (k == 0)
                    continue;
                solver.a[k] = v;
                r1 -= k * v;
                r2 -= static_cast<long>(k) * k * v;
                budget -= v;
            }
            if (budget < 0) {
                outcome.reason = "bounds: fixed values exceed the " + std::to_string(universe) + " points";
                return outcome;
            }
            if (auto f = fixed.find(0); f != fixed.end())
                budget -= f->second;
            if (budget < 0) {
                outcome.reason = "bounds: fixed a0 leaves a negative number of points";
                return outcome;
            }

            for (int k = n + 1; k >= 1; --k)
                if (! fixed.contains(k))
                    solver.free_vars.push_back(k);

            // Integrality of the two identities and of their combination
            // sum k (n-1-k) a_k = (n-1)(n+1) s - s^2 - n s, where the a_{n-1} term vanishes.
            Equation first, second, combined;
            first.rhs = r1;
            second.rhs = r2;
            combined.rhs = static_cast<long>(n - 1) * r1 - r2;
            for (int k : solver.free_vars) {
                first.coefficients[k] = k;
                second.coefficients[k] = static_cast<long>(k) * k;
                combined.coefficients[k] = static_cast<long>(k) * (n - 1 - k);
            }
            std::erase_if(combined.coefficients, [](const auto & kv) { return kv.second == 0; });
            for (const auto * e : {&first, &second, &combined}) {
                auto obstruction = integrality_obstruction(*e);
                if (! obstruction.empty()) {
                    outcome.reason = "integrality: " + obstruction;
                    return outcome;
                }
            }

            if (solver.free_vars.empty()) {
                if (r1 == 0 && r2 == 0)
                    solver.leaf();
            }
            else if (r1 >= 0 && r2 >= 0)
                solver.descend(0, r1, r2, budget);

            outcome.profiles = solver.found.size();
            if (solver.found.empty()) {
                if (solver.identity_solutions == 0)
                    outcome.reason = "identities: no nonnegative profile satisfies both counting identities";
                else {
                    std::size_t worst = 0;
                    for (std::size_t i = 1; i < solver.rejected_by.size(); ++i)
                        if (solver.rejected_by[i] > solver.rejected_by[worst])
                            worst = i;
                    outcome.reason = "constraint: '" + problem.constraints[worst].text + "' excludes "
                        + std::to_string(solver.rejected_by[worst]) + " of "
                        + std::to_string(solver.identity_solutions) + " profiles";
                }
            }
            profiles.insert(profiles.end(), solver.found.begin(), solver.found.end());
            return outcome;
        }
    }

    auto LinearConstraint::holds(const std::vector<long> & a, int size) const -> bool
    {
        long value = size_coefficient * size + constant;
        for (auto [k, c] : coefficients)
            value += c * (k < static_cast<int>(a.size()) ? a[k] : 0);
        switch (relation) {
            case Relation::less_equal: return value <= 0;
            case Relation::greater_equal: return value >= 0;
            case Relation::equal: return value == 0;
        }
        return false;
    }

    auto parse_linear_constraint(std::string_view text) -> LinearConstraint
    {
        return ConstraintParser{text}.parse();
    }

    auto parse_fixed_value(std::string_view text) -> std::pair<int, long>
    {
        auto c = parse_linear_constraint(text);
        if (c.relation != Relation::equal || c.size_coefficient != 0 || c.coefficients.size() != 1
            || c.coefficients.begin()->second != 1)
            throw InvalidArgument("bad fixed value '" + std::string(text) + "': expected aK=V");
        return {c.coefficients.begin()->first, -c.constant};
    }

    auto FeasibilityProfile::to_string() const -> std::string
    {
        std::ostringstream out;
        out << "s=" << size;
        for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k)
            if (a[k] != 0)
                out << " a" << k << "=" << a[k];
        return out.str();
    }

    auto feasibility_solve(const FeasibilityProblem & problem) -> FeasibilityResult
    {
        int n = problem.order;
        if (n < 1)
            throw InvalidArgument("order must be at least 1");
        if (n > max_order)
            throw Unsupported("feasibility enumeration supports orders up to " + std::to_string(max_order));
        long universe = static_cast<long>(n) * n + n + 1;
        if (problem.size_min < 0 || problem.size_max < problem.size_min || problem.size_max > universe)
            throw InvalidArgument("size range must satisfy 0 <= min <= max <= " + std::to_string(universe));
        for (auto [k, v] : problem.fixed) {
            if (k < 0 || k > n + 1)
                throw InvalidArgument("a" + std::to_string(k) + " is not a histogram entry at order " + std::to_string(n));
            if (v < 0 || v > universe)
                throw InvalidArgument("a" + std::to_string(k) + "=" + std::to_string(v) + " is out of range");
        }
        for (const auto & c : problem.constraints)
            for (auto [k, v] : c.coefficients)
                if (k < 0 || k > n + 1)
                    throw InvalidArgument("constraint '" + c.text + "' uses a" + std::to_string(k)
                        + ", not a histogram entry at order " + std::to_string(n));

        FeasibilityResult result;
        for (int s = problem.size_min; s <= problem.size_max; ++s)
            result.sizes.push_back(solve_size(problem, s, result.profiles));
        return result;
    }
}
