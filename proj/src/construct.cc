#include <sppp/construct.hh>
#include <sppp/errors.hh>

namespace sppp
{
    auto construct_odd_order_sppp(int n) -> PartialPlane
    {
        if (n < 3 || n % 2 == 0)
            throw InvalidArgument("odd-order construction needs an odd order >= 3, got " + std::to_string(n));

        Order order{n};
        int k = n + 2;
        // pair_id[i][j] for i < j, assigned 0, 1, 2, ... in lexicographic pair order
        std::vector<std::vector<Point>> pair_id(k, std::vector<Point>(k, -1));
        Point next = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                pair_id[i][j] = pair_id[j][i] = next++;

        std::vector<Line> lines;
        for (int i = 0; i < k; ++i) {
            std::vector<Point> points;
            for (int j = 0; j < k; ++j)
                if (j != i)
                    points.push_back(pair_id[i][j]);
            lines.emplace_back(std::move(points));
        }
        return PartialPlane{order, std::move(lines)};
    }
}
