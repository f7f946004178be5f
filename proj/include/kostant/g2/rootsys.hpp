#pragma once

/**
 * @file rootsys.hpp
 * @brief Root data of g2 and its 12-element Weyl group acting on the root lattice.
 *
 * The fundamental-weight lattice of g2 equals its root lattice, so every
 * dominant weight has integral root coordinates:
 *   w1 = 2a1 + a2,  w2 = 3a1 + 2a2,  rho = w1 + w2 = 5a1 + 3a2.
 */

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "../rank2.hpp"

namespace kostant::g2 {

struct G2Constants {
    // Order: a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2.
    std::array<RootCoord, 6> positive_roots;
    RootCoord rho;
    Mat2 fundamental_to_root;
};

inline constexpr G2Constants constants{
    {{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}},
    {5, 3},
    Mat2{{{2, 3}, {1, 2}}},
};

// s1(a1) = -a1, s1(a2) = 3a1 + a2;  s2(a1) = a1 + a2, s2(a2) = -a2.
inline constexpr Mat2 s1_matrix = from_images({-1, 0}, {3, 1});
inline constexpr Mat2 s2_matrix = from_images({1, 1}, {0, -1});

inline RootCoord fund_to_root(FundCoord w) { return constants.fundamental_to_root * RootCoord{w.m(), w.n()}; }

/// Inverse of fund_to_root on the root lattice; the result may be non-dominant.
inline RootCoord root_to_fund(RootCoord v) { return cartan_from_reflections(s1_matrix, s2_matrix) * v; }

/// Reference images of a1 and a2 under one Weyl element.
struct TabulatedElement {
    std::string_view name;
    std::vector<int> word;
    int length;
    RootCoord image_a1;
    RootCoord image_a2;
};

inline const std::vector<TabulatedElement>& tabulated_elements() {
    static const std::vector<TabulatedElement> table{
        {"1", {}, 0, {1, 0}, {0, 1}},
        {"s1", {1}, 1, {-1, 0}, {3, 1}},
        {"s2s1", {2, 1}, 2, {-1, -1}, {3, 2}},
        {"s1s2s1", {1, 2, 1}, 3, {-2, -1}, {3, 2}},
        {"(s2s1)^2", {2, 1, 2, 1}, 4, {-2, -1}, {3, 1}},
        {"s1(s2s1)^2", {1, 2, 1, 2, 1}, 5, {-1, -1}, {0, 1}},
        {"s2", {2}, 1, {1, 1}, {0, -1}},
        {"s1s2", {1, 2}, 2, {2, 1}, {-3, -1}},
        {"s2s1s2", {2, 1, 2}, 3, {2, 1}, {-3, -2}},
        {"(s1s2)^2", {1, 2, 1, 2}, 4, {1, 1}, {-3, -2}},
        {"s2(s1s2)^2", {2, 1, 2, 1, 2}, 5, {1, 0}, {-3, -1}},
        {"(s1s2)^3", {1, 2, 1, 2, 1, 2}, 6, {-1, 0}, {0, -1}},
    };
    return table;
}

namespace detail {

inline std::vector<WeylElement> build_weyl_group() {
    auto group = generate_weyl_group(s1_matrix, s2_matrix);
    if (group.size() != 12) throw std::logic_error("g2 Weyl group must have 12 elements");
    for (const auto& t : tabulated_elements()) {
        const WeylElement* w = find_element(group, t.word);
        if (w == nullptr || w->length != t.length || image_of_alpha1(w->matrix) != t.image_a1 ||
            image_of_alpha2(w->matrix) != t.image_a2)
            throw std::logic_error("generated Weyl element disagrees with the table entry " + std::string(t.name));
    }
    return group;
}

}  // namespace detail

/// All 12 elements, generated from s1 and s2 and cross-checked against the table on first use.
inline const std::vector<WeylElement>& weyl_group() {
    static const std::vector<WeylElement> group = detail::build_weyl_group();
    return group;
}

inline const WeylElement& element(const std::vector<int>& word) {
    const WeylElement* w = find_element(weyl_group(), word);
    if (w == nullptr) throw std::invalid_argument("no Weyl element with reduced word " + word_string(word));
    return *w;
}

/// sigma(lambda + rho) - (mu + rho) in root coordinates.
inline RootCoord sigma_shift(const WeylElement& sigma, FundCoord lambda, FundCoord mu) {
    return sigma.apply(fund_to_root(lambda) + constants.rho) - (fund_to_root(mu) + constants.rho);
}

}  // namespace kostant::g2
