#pragma once

/**
 * @file rank2.hpp
 * @brief Lattice coordinates and Weyl-group generation for rank-2 root systems.
 *
 * Weights are written in the simple-root basis (c1*alpha1 + c2*alpha2) and
 * Weyl elements act on them as 2x2 integer matrices whose columns are the
 * images of alpha1 and alpha2. A word {2, 1} reads "s2s1": apply s1 first,
 * then s2, so its matrix is M(s2) * M(s1).
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "checked.hpp"

namespace kostant {

struct RootCoord {
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;

    friend bool operator==(const RootCoord&, const RootCoord&) = default;
    friend auto operator<=>(const RootCoord&, const RootCoord&) = default;

    friend RootCoord operator+(RootCoord a, RootCoord b) { return {checked::add(a.c1, b.c1), checked::add(a.c2, b.c2)}; }
    friend RootCoord operator-(RootCoord a, RootCoord b) { return {checked::sub(a.c1, b.c1), checked::sub(a.c2, b.c2)}; }
    friend RootCoord operator*(std::int64_t k, RootCoord a) { return {checked::mul(k, a.c1), checked::mul(k, a.c2)}; }

    bool nonnegative() const noexcept { return c1 >= 0 && c2 >= 0; }
};

/// Dominant weight m*w1 + n*w2. Negative entries are rejected at construction.
class FundCoord {
public:
    FundCoord() = default;
    FundCoord(std::int64_t m, std::int64_t n) : m_(m), n_(n) {
        if (m < 0 || n < 0)
            throw std::invalid_argument("fundamental-weight coordinates must be nonnegative (got " + std::to_string(m) +
                                        "," + std::to_string(n) + ")");
    }

    std::int64_t m() const noexcept { return m_; }
    std::int64_t n() const noexcept { return n_; }

    friend bool operator==(const FundCoord&, const FundCoord&) = default;

private:
    std::int64_t m_ = 0;
    std::int64_t n_ = 0;
};

inline void to_json(nlohmann::json& j, const RootCoord& v) { j = nlohmann::json::array({v.c1, v.c2}); }
inline void to_json(nlohmann::json& j, const FundCoord& w) { j = nlohmann::json::array({w.m(), w.n()}); }

inline std::string to_string(const RootCoord& v) {
    return "(" + std::to_string(v.c1) + "," + std::to_string(v.c2) + ")";
}

// m[row][col]; column j is the image of alpha_{j+1}.
struct Mat2 {
    std::int64_t m[2][2]{};

    constexpr std::int64_t* operator[](std::size_t row) { return m[row]; }
    constexpr const std::int64_t* operator[](std::size_t row) const { return m[row]; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
    friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

inline constexpr Mat2 identity2{{{1, 0}, {0, 1}}};

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = checked::add(checked::mul(a[i][0], b[0][j]), checked::mul(a[i][1], b[1][j]));
    return r;
}

inline RootCoord operator*(const Mat2& a, RootCoord v) {
    return {checked::add(checked::mul(a[0][0], v.c1), checked::mul(a[0][1], v.c2)),
            checked::add(checked::mul(a[1][0], v.c1), checked::mul(a[1][1], v.c2))};
}

inline std::int64_t det(const Mat2& a) { return checked::sub(checked::mul(a[0][0], a[1][1]), checked::mul(a[0][1], a[1][0])); }

inline Mat2 adjugate(const Mat2& a) { return Mat2{{{a[1][1], -a[0][1]}, {-a[1][0], a[0][0]}}}; }

/// Matrix whose columns are the given images of alpha1 and alpha2.
inline constexpr Mat2 from_images(RootCoord img1, RootCoord img2) { return Mat2{{{img1.c1, img2.c1}, {img1.c2, img2.c2}}}; }

inline RootCoord image_of_alpha1(const Mat2& a) { return {a[0][0], a[1][0]}; }
inline RootCoord image_of_alpha2(const Mat2& a) { return {a[0][1], a[1][1]}; }

/**
 * Cartan integers read off the simple reflections: s_i(alpha_j) = alpha_j - C[i][j] alpha_i.
 * With this convention fundamental coordinates are C * (root coordinates).
 */
inline Mat2 cartan_from_reflections(const Mat2& s1, const Mat2& s2) {
    return Mat2{{{2, -s1[0][1]}, {-s2[1][0], 2}}};
}

struct WeylElement {
    std::vector<int> word;  // generator indices in written order
    int length = 0;
    Mat2 matrix = identity2;

    int sign() const noexcept { return (length % 2 == 0) ? 1 : -1; }
    RootCoord apply(RootCoord v) const { return matrix * v; }
};

/// "s2s1"; the identity renders as "1".
inline std::string word_string(const std::vector<int>& word) {
    if (word.empty()) return "1";
    std::string s;
    for (int g : word) s += "s" + std::to_string(g);
    return s;
}

/// Compact alternating form used in the g2 tables, e.g. "s1(s2s1)^2" or "(s1s2)^3".
inline std::string compact_word(const std::vector<int>& word) {
    const std::size_t len = word.size();
    if (len <= 3) return word_string(word);
    auto pair = [&](std::size_t at) { return "s" + std::to_string(word[at]) + "s" + std::to_string(word[at + 1]); };
    if (len % 2 == 0) return "(" + pair(0) + ")^" + std::to_string(len / 2);
    return "s" + std::to_string(word[0]) + "(" + pair(1) + ")^" + std::to_string((len - 1) / 2);
}

/**
 * Breadth-first closure of <s1, s2> by left multiplication. Each element keeps
 * the shortest word reaching it; among equally short words the
 * lexicographically smallest wins, which yields "(s1s2)^3" for the longest
 * element of g2. Elements come back ordered by (length, word).
 */
inline std::vector<WeylElement> generate_weyl_group(const Mat2& s1, const Mat2& s2, std::size_t max_order = 64) {
    const std::array<Mat2, 2> gens{s1, s2};
    std::map<Mat2, WeylElement> found;
    found.emplace(identity2, WeylElement{});
    std::vector<WeylElement> frontier{WeylElement{}};

    while (!frontier.empty()) {
        std::map<Mat2, WeylElement> next;
        for (const auto& w : frontier) {
            for (int g = 1; g <= 2; ++g) {
                WeylElement x;
                x.matrix = gens[g - 1] * w.matrix;
                if (found.contains(x.matrix)) continue;
                x.word.reserve(w.word.size() + 1);
                x.word.push_back(g);
                x.word.insert(x.word.end(), w.word.begin(), w.word.end());
                x.length = static_cast<int>(x.word.size());
                auto it = next.find(x.matrix);
                if (it == next.end())
                    next.emplace(x.matrix, std::move(x));
                else if (x.word < it->second.word)
                    it->second = std::move(x);
            }
        }
        frontier.clear();
        for (auto& [m, w] : next) {
            found.emplace(m, w);
            frontier.push_back(std::move(w));
        }
        if (found.size() > max_order) throw std::runtime_error("generated reflection group exceeds the expected order");
    }

    std::vector<WeylElement> out;
    out.reserve(found.size());
    for (auto& [m, w] : found) out.push_back(std::move(w));
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        return a.length != b.length ? a.length < b.length : a.word < b.word;
    });
    return out;
}

/// The roots W * {alpha1, alpha2} with nonnegative coordinates, sorted.
inline std::vector<RootCoord> positive_roots_from_group(const std::vector<WeylElement>& group) {
    std::vector<RootCoord> roots;
    for (const auto& w : group) {
        for (RootCoord simple : {RootCoord{1, 0}, RootCoord{0, 1}}) {
            RootCoord r = w.apply(simple);
            if (r.nonnegative() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline const WeylElement* find_element(const std::vector<WeylElement>& group, const std::vector<int>& word) {
    for (const auto& w : group)
        if (w.word == word) return &w;
    return nullptr;
}

}  // namespace kostant
