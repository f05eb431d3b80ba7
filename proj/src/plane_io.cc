#include <sppp/errors.hh>
#include <sppp/plane_io.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

namespace sppp
{
    namespace
    {
        auto trim(std::string_view s) -> std::string_view
        {
            auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
            while (! s.empty() && is_space(s.front()))
                s.remove_prefix(1);
            while (! s.empty() && is_space(s.back()))
                s.remove_suffix(1);
            return s;
        }

        auto parse_row(std::string_view text, Order order, int line_number) -> Line
        {
            std::vector<Point> points;
            std::size_t at = 0;
            while (at < text.size()) {
                while (at < text.size() && (text[at] == ' ' || text[at] == '\t'))
                    ++at;
                if (at == text.size())
                    break;
                int value = 0;
                auto [end, ec] = std::from_chars(text.data() + at, text.data() + text.size(), value);
                if (ec != std::errc{} || (end != text.data() + text.size() && *end != ' ' && *end != '\t'))
                    throw ParseError(line_number, "expected space-separated integers, got '" + std::string(text) + "'");
                if (value < 0 || value >= order.universe_size())
                    throw ParseError(line_number, "point " + std::to_string(value) + " is outside 0.."
                        + std::to_string(order.universe_size() - 1));
                if (! points.empty() && value <= points.back())
                    throw ParseError(line_number, "points in a row must be strictly ascending");
                points.push_back(value);
                at = end - text.data();
            }
            if (static_cast<int>(points.size()) != order.points_per_line())
                throw ParseError(line_number, "row has " + std::to_string(points.size()) + " points, expected "
                    + std::to_string(order.points_per_line()));
            return Line{std::move(points)};
        }

        struct Block
        {
            std::vector<Line> rows;
            std::vector<int> line_numbers;
            int first_line = 0;
        };

        auto finish_block(const Block & block, Order order) -> PartialPlane
        {
            PartialPlane plane{order, block.rows};
            auto report = purity_report(plane);
            if (! report.pure) {
                auto [i, j] = *report.offending_pair;
                throw StructuralError("plane starting at line " + std::to_string(block.first_line)
                    + " is not pure: rows at lines " + std::to_string(block.line_numbers[i]) + " and "
                    + std::to_string(block.line_numbers[j]) + " (" + block.rows[i].to_string() + ", "
                    + block.rows[j].to_string() + ") meet in "
                    + std::to_string(block.rows[i].mask().common(block.rows[j].mask())) + " points");
            }
            return plane;
        }
    }

    auto read_planes(std::istream & in) -> PlaneFile
    {
        static const std::regex header_pattern{R"(ppp v1 order=([0-9]+))"};

        std::string text;
        int line_number = 0;
        std::optional<Order> order;
        while (! order && std::getline(in, text)) {
            ++line_number;
            auto line = trim(text);
            if (line.empty())
                continue;
            std::cmatch m;
            if (! std::regex_match(line.begin(), line.end(), m, header_pattern))
                throw ParseError(line_number, "expected header 'ppp v1 order=<n>'");
            try {
                order = Order{std::stoi(m[1].str())};
            }
            catch (const std::out_of_range &) {
                throw ParseError(line_number, "order is out of range");
            }
            catch (const InvalidArgument & e) {
                throw ParseError(line_number, e.what());
            }
            catch (const Unsupported & e) {
                throw ParseError(line_number, e.what());
            }
        }
        if (! order)
            throw ParseError(line_number, "missing header 'ppp v1 order=<n>'");

        PlaneFile file{*order, {}};
        std::optional<Block> block;
        auto close = [&] {
            if (block)
                file.planes.push_back(finish_block(*block, *order));
            block.reset();
        };
        while (std::getline(in, text)) {
            ++line_number;
            auto line = trim(text);
            if (line.empty()) {
                close();
                continue;
            }
            if (! block)
                block = Block{{}, {}, line_number};
            if (line.front() == '#')
                continue;
            auto row = parse_row(line, *order, line_number);
            if (! block->rows.empty()) {
                if (row == block->rows.back())
                    throw ParseError(line_number, "duplicate row " + row.to_string());
                if (row < block->rows.back())
                    throw ParseError(line_number, "rows must be in ascending order");
            }
            block->rows.push_back(std::move(row));
            block->line_numbers.push_back(line_number);
        }
        close();
        return file;
    }

    auto read_planes(const std::filesystem::path & path) -> PlaneFile
    {
        std::ifstream in{path};
        if (! in)
            throw InvalidArgument("cannot open " + path.string());
        return read_planes(in);
    }

    auto write_planes(std::ostream & out, Order order, const std::vector<PartialPlane> & planes) -> void
    {
        for (const auto & p : planes)
            if (p.order() != order)
                throw InvalidArgument("cannot write a plane of order " + std::to_string(p.n()) + " into an order "
                    + std::to_string(order.n()) + " file");

        out << "ppp v1 order=" << order.n() << '\n';
        for (std::size_t i = 0; i < planes.size(); ++i) {
            out << '\n';
            out << "# plane " << i << ", " << planes[i].size() << " lines\n";
            auto sorted = planes[i].sorted();
            for (const auto & l : sorted.lines()) {
                bool first = true;
                for (auto pt : l.points()) {
                    out << (first ? "" : " ") << pt;
                    first = false;
                }
                out << '\n';
            }
        }
    }

    auto write_planes(const std::filesystem::path & path, Order order, const std::vector<PartialPlane> & planes)
        -> void
    {
        std::ofstream out{path};
        if (! out)
            throw InvalidArgument("cannot write " + path.string());
        write_planes(out, order, planes);
        if (! out.flush())
            throw InvalidArgument("failed writing " + path.string());
    }

    auto parse_brace_planes(std::string_view text, std::optional<int> order) -> std::vector<PartialPlane>
    {
        std::vector<PartialPlane> planes;
        std::vector<std::vector<Point>> lines;
        std::vector<Point> current;
        std::string number;
        int depth = 0;

        auto flush_number = [&] {
            if (number.empty())
                return;
            if (depth != 2)
                throw InvalidArgument("number outside a line in brace notation");
            current.push_back(std::stoi(number));
            number.clear();
        };

        for (char c : text) {
            if (std::isdigit(static_cast<unsigned char>(c))) {
                number.push_back(c);
                continue;
            }
            flush_number();
            if (c == '{') {
                if (++depth > 2)
                    throw InvalidArgument("brace notation nests deeper than plane/line");
            }
            else if (c == '}') {
                if (depth == 0)
                    throw InvalidArgument("unbalanced '}' in brace notation");
                if (depth == 2) {
                    lines.push_back(std::move(current));
                    current.clear();
                }
                else {
                    if (lines.empty())
                        throw InvalidArgument("empty plane in brace notation");
                    int n = order.value_or(static_cast<int>(lines.front().size()) - 1);
                    Order o{n};
                    std::vector<Line> built;
                    for (auto & pts : lines) {
                        if (static_cast<int>(pts.size()) != o.points_per_line())
                            throw InvalidArgument("line with " + std::to_string(pts.size())
                                + " points in an order " + std::to_string(n) + " plane");
                        for (auto pt : pts)
                            if (pt >= o.universe_size())
                                throw InvalidArgument("point " + std::to_string(pt) + " out of range");
                        built.emplace_back(std::move(pts));
                    }
                    PartialPlane p{o, std::move(built)};
                    auto report = purity_report(p);
                    if (! report.pure)
                        throw StructuralError("imported plane " + std::to_string(planes.size()) + " is not pure: "
                            + report.diagnostic);
                    planes.push_back(std::move(p));
                    lines.clear();
                }
                --depth;
            }
            else if (c != ',' && c != '.' && ! std::isspace(static_cast<unsigned char>(c)))
                throw InvalidArgument(std::string("unexpected '") + c + "' in brace notation");
        }
        if (depth != 0)
            throw InvalidArgument("unbalanced '{' in brace notation");
        return planes;
    }
}
