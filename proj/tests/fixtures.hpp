#pragma once

// Hand-transcribed reference data shared by the unit and acceptance suites.

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <kostant/g2/qkwmf.hpp>
#include <kostant/rank2.hpp>

namespace fixtures {

using kostant::RootCoord;
using kostant::g2::CaseLabel;

using Shift = std::function<RootCoord(std::int64_t, std::int64_t, std::int64_t, std::int64_t)>;

struct ShiftRow {
    std::vector<int> word;
    int length;
    Shift expected;
};

// sigma(lambda + rho) - (mu + rho) as affine functions of (m, n, x, y)
inline const std::vector<ShiftRow>& shift_rows() {
    using I = std::int64_t;
    static const std::vector<ShiftRow> rows{
        {{}, 0, [](I m, I n, I x, I y) { return RootCoord{2 * m + 3 * n - 2 * x - 3 * y, m + 2 * n - x - 2 * y}; }},
        {{1}, 1, [](I m, I n, I x, I y) { return RootCoord{m + 3 * n - 2 * x - 3 * y - 1, m + 2 * n - x - 2 * y}; }},
        {{2}, 1, [](I m, I n, I x, I y) { return RootCoord{2 * m + 3 * n - 2 * x - 3 * y, m + n - x - 2 * y - 1}; }},
        {{2, 1}, 2, [](I m, I n, I x, I y) { return RootCoord{m + 3 * n - 2 * x - 3 * y - 1, n - x - 2 * y - 2}; }},
        {{1, 2}, 2, [](I m, I n, I x, I y) { return RootCoord{m - 2 * x - 3 * y - 4, m + n - x - 2 * y - 1}; }},
        {{1, 2, 1}, 3, [](I m, I n, I x, I y) { return RootCoord{-m - 2 * x - 3 * y - 6, n - x - 2 * y - 2}; }},
        {{2, 1, 2}, 3, [](I m, I n, I x, I y) { return RootCoord{m - 2 * x - 3 * y - 4, -n - x - 2 * y - 4}; }},
        {{1, 2, 1, 2}, 4,
         [](I m, I n, I x, I y) { return RootCoord{-m - 3 * n - 2 * x - 3 * y - 9, -n - x - 2 * y - 4}; }},
        {{2, 1, 2, 1}, 4,
         [](I m, I n, I x, I y) { return RootCoord{-m - 2 * x - 3 * y - 6, -m - n - x - 2 * y - 5}; }},
        {{1, 2, 1, 2, 1}, 5,
         [](I m, I n, I x, I y) { return RootCoord{-2 * m - 3 * n - 2 * x - 3 * y - 10, -m - n - x - 2 * y - 5}; }},
        {{2, 1, 2, 1, 2}, 5,
         [](I m, I n, I x, I y) { return RootCoord{-m - 3 * n - 2 * x - 3 * y - 9, -m - 2 * n - x - 2 * y - 6}; }},
        {{1, 2, 1, 2, 1, 2}, 6,
         [](I m, I n, I x, I y) { return RootCoord{-2 * m - 3 * n - 2 * x - 3 * y - 10, -m - 2 * n - x - 2 * y - 6}; }},
    };
    return rows;
}

struct ExistenceRow {
    std::array<std::int64_t, 4> mnxy;
    std::array<std::int64_t, 6> abcdef;
    CaseLabel label;
};

// one witness (m, n, x, y) per admissible case
inline const std::vector<ExistenceRow>& existence_rows() {
    static const std::vector<ExistenceRow> rows{
        {{5, 6, 0, 0}, {28, 17, 22, 10, 4, 1}, CaseLabel::PQRST},
        {{0, 4, 0, 0}, {12, 8, 11, 3, 2, -4}, CaseLabel::PQRS},
        {{5, 0, 0, 0}, {10, 5, 4, 4, -2, 1}, CaseLabel::PQRT},
        {{5, 4, 0, 4}, {10, 5, 4, 0, -6, -11}, CaseLabel::PQR},
        {{0, 50, 51, 0}, {48, 49, 47, -2, -3, -106}, CaseLabel::PQ},
        {{2, 0, 1, 0}, {2, 1, -1, 0, -3, -4}, CaseLabel::PR},
        {{0, 0, 0, 0}, {0, 0, -1, -1, -2, -4}, CaseLabel::P},
        {{0, 0, 8, 0}, {-16, -8, -17, -9, -10, -20}, CaseLabel::Zero},
    };
    return rows;
}

inline const std::set<std::string> allowed_formulas{"P-Q-R+S+T", "P-Q-R+S", "P-Q-R+T", "P-Q-R", "P-Q", "P-R", "P", "0"};

inline const std::set<std::string> forbidden_formulas{
    // eleven ruled out by a single sign contradiction
    "P-Q+S+T", "P-R+S+T", "-Q-R+S+T", "P+S+T", "P-R+S", "P-Q+T", "-Q-R+S", "-Q-R+T", "P+S", "P+T", "-Q-R",
    // thirteen more ruled out by combining inequalities
    "P-R+T", "P-Q+S", "-Q+S+T", "-R+S+T", "-Q+S", "-Q+T", "-R+S", "-R+T", "S+T", "-Q", "-R", "S", "T"};

}  // namespace fixtures
