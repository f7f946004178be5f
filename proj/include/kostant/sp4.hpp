#pragma once

/**
 * @file sp4.hpp
 * @brief Partition function and weight multiplicities for sp4 (type C2).
 *
 * Positive roots are a1, a2, a1+a2, 2a1+a2 (a1 short). The fundamental
 * weights are not integral in the root basis, so the Weyl-sum oracle works
 * in doubled root coordinates: lambda2 = adj(C) * (m, n) with det C = 2, and
 * 2*rho = sum of positive roots.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qpoly.hpp"
#include "rank2.hpp"

namespace kostant::sp4 {

inline constexpr std::array<RootCoord, 4> positive_roots{{{1, 0}, {0, 1}, {1, 1}, {2, 1}}};

// s1(a1) = -a1, s1(a2) = 2a1 + a2;  s2(a1) = a1 + a2, s2(a2) = -a2.
inline constexpr Mat2 s1_matrix = from_images({-1, 0}, {2, 1});
inline constexpr Mat2 s2_matrix = from_images({1, 1}, {0, -1});

inline const std::vector<WeylElement>& weyl_group() {
    static const std::vector<WeylElement> group = [] {
        auto g = generate_weyl_group(s1_matrix, s2_matrix);
        if (g.size() != 8) throw std::logic_error("C2 Weyl group must have 8 elements");
        auto roots = positive_roots_from_group(g);
        std::vector<RootCoord> expected(positive_roots.begin(), positive_roots.end());
        std::sort(expected.begin(), expected.end());
        if (roots != expected) throw std::logic_error("C2 reflections do not reproduce the positive roots");
        return g;
    }();
    return group;
}

inline Mat2 cartan() { return cartan_from_reflections(s1_matrix, s2_matrix); }

/// 2 * (root coordinates of m*w1 + n*w2).
inline RootCoord fund_to_doubled_root(FundCoord w) {
    const Mat2 c = cartan();
    if (det(c) != 2) throw std::logic_error("unexpected C2 Cartan determinant");
    return adjugate(c) * RootCoord{w.m(), w.n()};
}

/// 2 * rho, i.e. the sum of the positive roots.
inline RootCoord doubled_rho() {
    RootCoord s{};
    for (auto r : positive_roots) s = s + r;
    return s;
}

/// q-analog as a double sum over the multiplicity i of 2a1+a2 and the root count j.
inline QPoly qpartition_c2(RootCoord v) {
    if (!v.nonnegative()) return {};
    const std::int64_t m = v.c1, n = v.c2;
    std::vector<QPoly::Coeff> acc(static_cast<std::size_t>(checked::add(m, n)) + 1, 0);
    for (std::int64_t i = 0; i <= std::min(m / 2, n); ++i)
        for (std::int64_t j = std::max(m - i, n); j <= m + n - 2 * i; ++j)
            acc[static_cast<std::size_t>(j)] = checked::add(acc[static_cast<std::size_t>(j)], 1);
    return QPoly(std::move(acc));
}

/// Enumerates the multiplicities of 2a1+a2 and a1+a2; a1 and a2 are forced.
inline QPoly qpartition_c2_bruteforce(RootCoord v) {
    QPoly p;
    if (!v.nonnegative()) return p;
    for (RootCoord r4 = v; r4.nonnegative(); r4 = r4 - positive_roots[3]) {
        const std::int64_t n4 = (v.c2 - r4.c2);
        for (RootCoord r3 = r4; r3.nonnegative(); r3 = r3 - positive_roots[2]) {
            const std::int64_t n3 = r4.c2 - r3.c2;
            const std::array<std::int64_t, 4> counts{r3.c1, r3.c2, n3, n4};
            RootCoord sum{};
            std::int64_t used = 0;
            for (std::size_t i = 0; i < 4; ++i) {
                sum = sum + counts[i] * positive_roots[i];
                used = checked::add(used, counts[i]);
            }
            if (sum != v) throw std::logic_error("C2 witness does not sum to the target weight");
            p += QPoly::monomial(static_cast<std::size_t>(used));
        }
    }
    return p;
}

enum class C2Region { NAtLeastM, Interior, Edge, MAtLeastTwoN };

struct ClosedFormOptions {
    // Off reproduces the uncorrected formula, which has no case for m = 2n-1 > n.
    bool edge_region = true;
};

inline std::optional<C2Region> c2_region(RootCoord v, ClosedFormOptions opt = {}) {
    const std::int64_t m = v.c1, n = v.c2;
    if (n >= m) return C2Region::NAtLeastM;
    if (2 * n - 1 > m && m > n) return C2Region::Interior;
    if (opt.edge_region && 2 * n > m && m >= 2 * n - 1 && 2 * n - 1 > n) return C2Region::Edge;
    if (m >= 2 * n) return C2Region::MAtLeastTwoN;
    return std::nullopt;
}

/// Classical partition value by the four-region closed form.
inline std::int64_t partition_c2_closed(RootCoord v, ClosedFormOptions opt = {}) {
    using namespace checked;
    if (!v.nonnegative()) throw std::domain_error("partition_c2_closed requires nonnegative coordinates");
    const std::int64_t m = v.c1, n = v.c2, h = m / 2;
    const auto region = c2_region(v, opt);
    if (!region) throw std::domain_error("no closed-form region covers " + to_string(v));
    switch (*region) {
        case C2Region::NAtLeastM: return mul(h + 1, m - h + 1);
        case C2Region::Interior: {
            const std::int64_t twice = add(sub(sub(mul(mul(2, m), n), mul(m, m)), mul(n, n)), m + n);
            return add(add(twice / 2, mul(h, m - h)), 1);
        }
        // (h+1)(n - h/2 + 1), kept integral by doubling the second factor
        case C2Region::Edge: return mul(h + 1, 2 * n - h + 2) / 2;
        case C2Region::MAtLeastTwoN: return mul(n + 1, n + 2) / 2;
    }
    return 0;
}

enum class Sp4CaseLabel { PQR, PQ, PR, P, Zero };

inline std::string_view to_string(Sp4CaseLabel l) {
    switch (l) {
        case Sp4CaseLabel::PQR: return "PQR";
        case Sp4CaseLabel::PQ: return "PQ";
        case Sp4CaseLabel::PR: return "PR";
        case Sp4CaseLabel::P: return "P";
        case Sp4CaseLabel::Zero: return "ZERO";
    }
    return "?";
}

/// b and d are half-integers in general, so they are stored doubled.
struct Sp4CaseData {
    std::int64_t a = 0, two_b = 0, c = 0, two_d = 0;
    bool a_in_n = false, b_in_n = false, c_in_n = false, d_in_n = false;
    Sp4CaseLabel label = Sp4CaseLabel::Zero;
};

inline bool doubled_in_n(std::int64_t twice) { return twice >= 0 && twice % 2 == 0; }

inline Sp4CaseData compute_case(FundCoord lambda, FundCoord mu) {
    using namespace checked;
    const std::int64_t m = lambda.m(), n = lambda.n(), x = mu.m(), y = mu.n();
    Sp4CaseData cd;
    cd.a = sub(add(m, n), add(x, y));
    cd.two_b = add(sub(mul(2, n), mul(2, y)), sub(m, x));
    cd.c = sub(sub(n, add(x, y)), 1);
    cd.two_d = add(sub(mul(-2, y), 2), sub(m, x));
    cd.a_in_n = cd.a >= 0;
    cd.b_in_n = doubled_in_n(cd.two_b);
    cd.c_in_n = cd.c >= 0;
    cd.d_in_n = doubled_in_n(cd.two_d);
    if (!(cd.a_in_n && cd.b_in_n))
        cd.label = Sp4CaseLabel::Zero;
    else if (cd.c_in_n && cd.d_in_n)
        cd.label = Sp4CaseLabel::PQR;
    else if (cd.c_in_n)
        cd.label = Sp4CaseLabel::PQ;
    else if (cd.d_in_n)
        cd.label = Sp4CaseLabel::PR;
    else
        cd.label = Sp4CaseLabel::P;
    return cd;
}

struct Sp4Multiplicity {
    Sp4CaseData case_data;
    std::optional<std::int64_t> p, q, r;
    std::int64_t value = 0;
};

/**
 * P is the closed form at (a, b). Q is the s1 term p(c*a1 + b*a2); since
 * b > c always, it falls in the n >= m region, giving
 * (floor(c/2)+1)(c-floor(c/2)+1). R = (d+1)(d+2)/2.
 */
inline Sp4Multiplicity multiplicity_c2_closed(FundCoord lambda, FundCoord mu) {
    using namespace checked;
    Sp4Multiplicity res{compute_case(lambda, mu), {}, {}, {}, 0};
    const auto& cd = res.case_data;
    if (cd.label == Sp4CaseLabel::Zero) return res;
    const std::int64_t b = cd.two_b / 2;
    res.p = partition_c2_closed({cd.a, b});
    res.value = *res.p;
    if (cd.label == Sp4CaseLabel::PQR || cd.label == Sp4CaseLabel::PQ) {
        const std::int64_t h = cd.c / 2;
        res.q = mul(h + 1, cd.c - h + 1);
        res.value = sub(res.value, *res.q);
    }
    if (cd.label == Sp4CaseLabel::PQR || cd.label == Sp4CaseLabel::PR) {
        const std::int64_t d = cd.two_d / 2;
        res.r = mul(d + 1, d + 2) / 2;
        res.value = sub(res.value, *res.r);
    }
    return res;
}

/// Alternating sum over the 8 elements of W(C2), evaluated in doubled coordinates.
inline QPoly multiplicity_c2_weyl_sum(FundCoord lambda, FundCoord mu) {
    const RootCoord rho2 = doubled_rho();
    const RootCoord shifted = fund_to_doubled_root(lambda) + rho2;
    const RootCoord target = fund_to_doubled_root(mu) + rho2;
    QPoly total;
    for (const auto& sigma : weyl_group()) {
        const RootCoord twice = sigma.apply(shifted) - target;
        // off the root lattice the partition function vanishes
        if (twice.c1 % 2 != 0 || twice.c2 % 2 != 0) continue;
        QPoly p = qpartition_c2({twice.c1 / 2, twice.c2 / 2});
        if (sigma.sign() > 0)
            total += p;
        else
            total -= p;
    }
    return total;
}

inline void to_json(nlohmann::json& j, const Sp4CaseData& cd) {
    j = nlohmann::json{{"a", cd.a},
                       {"two_b", cd.two_b},
                       {"c", cd.c},
                       {"two_d", cd.two_d},
                       {"case", std::string(to_string(cd.label))}};
}

}  // namespace kostant::sp4
