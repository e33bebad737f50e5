#include "typeset.hpp"

namespace f4rep::typeset

{
const std::vector<RootFormula> &root_operators()
{
    // x_r d_s means x_r * d/dx_s.
    static const std::vector<RootFormula> table = {
        {{1, 0, 0, 0}, "+x4d6 +x5d8 +x7d9 -x18d20 -x19d22 -x21d23"},
        {{0, 1, 0, 0}, "+x3d4 +x8d10 +x9d11 -x16d18 -x17d19 -x23d24"},
        {{0, 0, 1, 0}, "-x2d3 -x4d5 -x6d8 +x10d12 +x11d13 -2x11d14 -x14d16 -x15d17 +x19d21 +x22d23 +x24d25"},
        {{0, 0, 0, 1}, "-x1d2 -x5d7 -x8d9 -x10d11 +x12d14 -2x12d13 -x13d15 +x16d17 +x18d19 +x20d22 +x25d26"},
        {{1, 1, 0, 0}, "-x3d6 +x5d10 +x7d11 -x16d20 -x17d22 +x21d24"},
        {{0, 1, 1, 0}, "+x2d4 +x3d5 +x6d10 +x8d12 +x9d13 -2x9d14 -x14d18 -x15d19 -x17d21 -x22d24 -x23d25"},
        {{0, 0, 1, 1}, "-x1d3 +x4d7 +x6d9 -x10d13 -x10d14 -x11d15 +x12d16 -x13d17 -x14d17 -x18d21 -x20d23 +x24d26"},
        {{1, 1, 1, 0}, "-x2d6 +x3d8 +x4d10 +x5d12 +x7d13 -2x7d14 -x14d20 -x15d22 -x17d23 -x19d24 +x21d25"},
        {{0, 1, 1, 1}, "+x1d4 +x3d7 -x6d11 -x8d13 -x8d14 -x9d15 +x12d18 -x13d19 -x14d19 +x16d21 -x20d24 -x23d26"},
        {{0, 1, 2, 0}, "-x2d5 +x6d12 +x9d16 -x11d18 -x15d21 +x22d25"},
        {{1, 1, 2, 0}, "+x2d8 +x4d12 +x7d16 -x11d20 -x15d23 -x19d25"},
        {{0, 1, 2, 1}, "-x1d5 +x2d7 +x6d14 -2x6d13 +x8d16 +x9d17 -x10d18 -x11d19 -x13d21 -x20d25 +x22d26"},
        {{1, 1, 1, 1}, "-x1d6 -x3d9 -x4d11 -x5d13 -x5d14 -x7d15 +x12d20 -x13d22 -x14d22 +x16d23 +x18d24 +x21d26"},
        {{1, 2, 2, 0}, "-x2d10 +x3d12 +x7d18 -x9d20 -x15d24 +x17d25"},
        {{1, 1, 2, 1}, "+x1d8 -x2d9 +x4d14 -2x4d13 +x5d16 +x7d17 -x10d20 -x11d22 -x13d23 +x18d25 -x19d26"},
        {{0, 1, 2, 2}, "+x1d7 +x6d15 +x8d17 -x10d19 -x12d21 -x20d26"},
        {{1, 2, 2, 1}, "-x1d10 +x2d11 +x3d14 -2x3d13 +x5d18 +x7d19 -x8d20 -x9d22 -x13d24 -x16d25 +x17d26"},
        {{1, 1, 2, 2}, "-x1d9 +x4d15 +x5d17 -x10d22 -x12d23 +x18d26"},
        {{1, 2, 2, 2}, "+x1d11 +x3d15 +x5d19 -x8d22 -x12d24 -x16d26"},
        {{1, 2, 3, 1}, "-x1d12 -x2d14 -x2d13 -x3d16 +x4d18 -x6d20 +x7d21 -x9d23 +x11d24 -x13d25 -x14d25 +x15d26"},
        {{1, 2, 3, 2}, "+x1d13 -2x1d14 +x2d15 -x3d17 +x4d19 +x5d21 -x6d22 -x8d23 +x10d24 -x12d25 -x14d26"},
        {{1, 2, 4, 2}, "+x1d16 -x2d17 +x4d21 -x6d23 +x10d25 -x11d26"},
        {{1, 3, 4, 2}, "-x1d18 +x2d19 -x3d21 +x6d24 -x8d25 +x9d26"},
        {{2, 3, 4, 2}, "+x1d20 -x2d22 +x3d23 -x4d24 +x5d25 -x7d26"},
    };
    return table;
}

const std::array<std::string, 4> &cartan_operators()
{
    static const std::array<std::string, 4> table = {
        "+x4d4 +x5d5 -x6d6 +x7d7 -x8d8 -x9d9 +x18d18 +x19d19 -x20d20 +x21d21 -x22d22 -x23d23",
        "+x3d3 -x4d4 +x8d8 +x9d9 -x10d10 -x11d11 +x16d16 +x17d17 -x18d18 -x19d19 +x23d23 -x24d24",
        "+x2d2 -x3d3 +x4d4 -x5d5 +x6d6 -x8d8 +x10d10 +2x11d11 -x12d12 +x15d15 -2x16d16 -x17d17 +x19d19 -x21d21 +x22d22 -x23d23 +x24d24 -x25d25",
        "+x1d1 -x2d2 +x5d5 -x7d7 +x8d8 -x9d9 +x10d10 -x11d11 +2x12d12 -2x15d15 +x16d16 -x17d17 +x18d18 -x19d19 +x20d20 -x22d22 +x25d25 -x26d26",
    };
    return table;
}

const std::array<std::string, 15> &zeta()
{
    static const std::array<std::string, 15> table = {
        "",
        "2x1x13 + x1x14 - 3x2x12 - 3x3x10 + 3x4x8 - 3x5x6",
        "-x2x13 + x2x14 + 3x1x15 - 3x3x11 + 3x4x9 - 3x6x7",
        "-x3x13 - 2x3x14 + 3x1x17 + 3x2x16 + 3x5x9 - 3x7x8",
        "-x4x13 - 2x4x14 - 3x1x19 - 3x2x18 + 3x5x11 - 3x7x10",
        "-x5x13 + x5x14 + 3x1x21 - 3x3x18 - 3x4x16 + 3x7x12",
        "-x6x13 - 2x6x14 + 3x1x22 + 3x2x20 + 3x8x11 - 3x9x10",
        "2x7x13 + x7x14 + 3x2x21 + 3x3x19 + 3x4x17 - 3x5x15",
        "-x8x13 + x8x14 - 3x1x23 + 3x3x20 - 3x6x16 + 3x9x12",
        "2x9x13 + x9x14 - 3x2x23 - 3x3x22 + 3x6x17 - 3x8x15",
        "-x10x13 + x10x14 + 3x1x24 + 3x4x20 + 3x6x18 + 3x11x12",
        "2x11x13 + x11x14 + 3x2x24 - 3x4x22 - 3x6x19 - 3x10x15",
        "-x12x13 - 2x12x14 + 3x1x25 - 3x5x20 - 3x8x18 - 3x10x16",
        "-x13^2 - 2x13x14 - 3x1x26 + 3x2x25 + 3x5x22 - 3x7x20 + 3x8x19 - 3x9x18 + 3x10x17 - 3x11x16",
        "2x13x14 + x14^2 - 3x2x25 + 3x3x24 + 3x4x23 - 3x5x22 + 3x6x21 - 3x8x19 - 3x10x17 + 3x12x15",
    };
    return table;
}

const std::string &theta()
{
    static const std::string s = "-x1x2x13 + x1^2x15 - x1x3x11 + x1x4x9 - x1x6x7"
                                 " + x2^2x12 + x2x3x10 - x2x4x8 + x2x5x6";
    return s;
}

const CubicExpansion &cubic_expansion()
{
    static const CubicExpansion e = {
        "x2x12x26 + x3x10x26 - x4x8x26 + x5x6x26 + x3x11x25 - x4x9x25 + x6x7x25"
        " + x7x8x24 - x5x9x24 + x4x10x23 + x9x10x21 - x5x11x23 - x8x11x21 - x11x12x17"
        " - x7x12x22 - x9x12x19",
        "2x13^3 + 3x13^2x14 - 3x13x14^2 - 2x14^3",
        "6x1x13x26 + 3x1x14x26 + 3x2x13x25 + 6x2x14x25",
        "x3x24 + x4x23 + x5x22 + x6x21 - 2x7x20 + x8x19 - 2x9x18 + x10x17 - 2x11x16 + x12x15",
        "2x3x24 + 2x4x23 - x5x22 + 2x6x21 - x7x20 - x8x19 - x9x18 - x10x17 - x11x16 + 2x12x15",
    };
    return e;
}

const std::vector<LinearElimination> &linear_eliminations()
{
    static const std::vector<LinearElimination> table = {
        {"x1x14", 1, 1, "-2x1x13 + 3x2x12 + 3x3x10 - 3x4x8 + 3x5x6"},
        {"3x1x15", 1, 2, "x2x13 - x2x14 + 3x3x11 - 3x4x9 + 3x6x7"},
        {"3x1x17", 1, 3, "x3x13 + 2x3x14 - 3x2x16 - 3x5x9 + 3x7x8"},
        {"3x1x19", -1, 4, "3x5x11 - x4x13 - 2x4x14 - 3x2x18 - 3x7x10"},
        {"3x1x21", 1, 5, "x5x13 - x5x14 + 3x3x18 + 3x4x16 - 3x7x12"},
        {"3x1x22", 1, 6, "x6x13 + 2x6x14 - 3x2x20 - 3x8x11 + 3x9x10"},
        {"3x1x23", 1, 8, "x8x13 - x8x14 - 3x3x20 + 3x6x16 - 3x9x12"},
        {"3x1x24", 1, 10, "x10x13 - x10x14 - 3x4x20 - 3x6x18 - 3x11x12"},
    };
    return table;
}

const QuadraticElimination &quadratic_elimination()
{
    static const QuadraticElimination q = {"3x2x25 + 3x1x26", "x13^2 + x13x14 + x14^2"};
    return q;
}

const CubicElimination &cubic_elimination()
{
    static const CubicElimination c = {
        "9x1x15x25 + 9x3x11x25 - 9x4x9x25 + 9x6x7x25 + 3x2x13x25 + 6x2x14x25"
        " + 9x2x12x26 + 9x3x10x26 - 9x4x8x26 + 9x5x6x26 + 6x1x13x26 + 3x1x14x26",
        "-9x1x17x24 + 9x1x19x23 - 9x1x21x22 - 9x2x16x24 + 9x2x18x23 - 9x2x20x21"
        " - 3x13^2x14 - 2x13^3 + 3x13x14^2 + 2x14^3",
        "x7x8x24 - x5x9x24 + x4x10x23 + x9x10x21 - x5x11x23 - x8x11x21 - x11x12x17"
        " - x7x12x22 - x9x12x19",
        "x3x24 + x4x23 + x5x22 + x6x21 - 2x7x20 + x8x19 - 2x9x18 + x10x17 - 2x11x16 + x12x15",
        "2x3x24 + 2x4x23 - x5x22 + 2x6x21 - x7x20 - x8x19 - x9x18 - x10x17 - x11x16 + 2x12x15",
    };
    return c;
}

} // namespace f4rep::typeset
