#include <sppp/appendix.hh>
#include <sppp/plane_io.hh>

namespace sppp
{
    auto appendix_brace_text() -> std::string_view
    {
        static constexpr std::string_view text = R"(
{{0, 1, 2, 3, 4, 5, 6}, {0, 7, 8, 9, 10, 11, 12}, {0, 13, 14, 15, 16, 17, 18}, {0, 19, 20, 21, 22, 23, 24}, {0, 25, 26, 27, 28, 29, 30}, {0, 31, 32, 33, 34, 35, 36}, {0, 37, 38, 39, 40, 41, 42}, {1, 7, 13, 19, 25, 31, 37}, {1, 8, 14, 20, 26, 32, 38}, {1, 9, 15, 21, 27, 33, 39}, {1, 10, 16, 22, 28, 34, 40}, {1, 11, 17, 23, 29, 35, 41}, {1, 12, 18, 24, 30, 36, 42}, {2, 7, 14, 21, 28, 35, 42}, {2, 8, 13, 22, 27, 36, 41}, {2, 9, 16, 23, 30, 31, 38}, {2, 10, 15, 24, 29, 32, 37}, {2, 11, 18, 19, 26, 34, 39}, {2, 12, 17, 20, 25, 33, 40}, {3, 7, 15, 20, 30, 34, 41}, {3, 9, 14, 19, 29, 36, 40}, {3, 10, 13, 23, 26, 33, 42}, {4, 7, 18, 22, 29, 33, 38}, {4, 11, 13, 21, 30, 32, 40}, {4, 12, 14, 23, 27, 34, 37}}
{{0, 1, 2, 3, 4, 5, 6}, {0, 7, 8, 9, 10, 11, 12}, {0, 13, 14, 15, 16, 17, 18}, {0, 19, 20, 21, 22, 23, 24}, {0, 25, 26, 27, 28, 29, 30}, {0, 31, 32, 33, 34, 35, 36}, {0, 37, 38, 39, 40, 41, 42}, {1, 7, 13, 19, 25, 31, 37}, {1, 8, 14, 20, 26, 32, 38}, {1, 9, 15, 21, 27, 33, 39}, {1, 10, 16, 22, 28, 34, 40}, {1, 11, 17, 23, 29, 35, 41}, {1, 12, 18, 24, 30, 36, 42}, {2, 7, 14, 21, 28, 35, 42}, {2, 8, 13, 22, 27, 36, 41}, {2, 9, 16, 23, 30, 31, 38}, {2, 10, 15, 24, 29, 32, 37}, {2, 11, 18, 19, 26, 34, 39}, {2, 12, 17, 20, 25, 33, 40}, {3, 7, 15, 20, 30, 34, 41}, {3, 9, 14, 19, 29, 36, 40}, {3, 10, 13, 23, 26, 33, 42}, {4, 7, 18, 23, 27, 32, 40}, {4, 11, 14, 22, 30, 33, 37}, {4, 12, 13, 21, 29, 34, 38}}
{{0, 1, 2, 3, 4, 5, 6}, {0, 7, 8, 9, 10, 11, 12}, {0, 13, 14, 15, 16, 17, 18}, {0, 19, 20, 21, 22, 23, 24}, {0, 25, 26, 27, 28, 29, 30}, {0, 31, 32, 33, 34, 35, 36}, {0, 37, 38, 39, 40, 41, 42}, {1, 7, 13, 19, 25, 31, 37}, {1, 8, 14, 20, 26, 32, 38}, {1, 9, 15, 21, 27, 33, 39}, {1, 10, 16, 22, 28, 34, 40}, {1, 11, 17, 23, 29, 35, 41}, {1, 12, 18, 24, 30, 36, 42}, {2, 7, 14, 21, 28, 35, 42}, {2, 8, 13, 22, 27, 36, 41}, {2, 9, 17, 19, 30, 32, 40}, {2, 10, 18, 23, 25, 33, 38}, {2, 11, 16, 24, 26, 31, 39}, {2, 12, 15, 20, 29, 34, 37}, {3, 7, 15, 23, 26, 36, 40}, {3, 8, 17, 24, 28, 33, 37}, {3, 11, 13, 21, 30, 34, 38}, {4, 7, 16, 20, 30, 33, 41}, {4, 8, 18, 21, 29, 31, 40}, {4, 12, 13, 23, 28, 32, 39}}
{{0, 1, 2, 15, 16, 17, 18}, {0, 3, 4, 19, 20, 21, 22}, {0, 5, 6, 23, 24, 25, 26}, {0, 7, 8, 27, 28, 29, 30}, {0, 9, 10, 31, 32, 33, 34}, {1, 3, 5, 27, 31, 35, 36}, {1, 4, 6, 28, 32, 37, 38}, {1, 11, 12, 19, 23, 29, 33}, {1, 13, 14, 20, 24, 30, 34}, {2, 7, 9, 19, 24, 35, 37}, {2, 8, 10, 20, 23, 36, 38}, {2, 11, 13, 21, 25, 27, 32}, {2, 12, 14, 22, 26, 28, 31}, {3, 7, 11, 15, 26, 34, 38}, {3, 8, 14, 16, 25, 33, 37}, {3, 9, 13, 17, 23, 28, 39}, {4, 8, 11, 18, 24, 31, 39}, {4, 9, 12, 15, 25, 30, 36}, {4, 10, 13, 16, 26, 29, 35}, {5, 7, 12, 16, 20, 32, 39}, {5, 9, 14, 18, 21, 29, 38}, {5, 10, 11, 17, 22, 30, 37}, {6, 7, 13, 18, 22, 33, 36}, {6, 8, 12, 17, 21, 34, 35}, {6, 10, 14, 15, 19, 27, 39}}
)";
        return text;
    }

    auto appendix_planes() -> std::vector<PartialPlane>
    {
        return parse_brace_planes(appendix_brace_text(), 6);
    }
}
