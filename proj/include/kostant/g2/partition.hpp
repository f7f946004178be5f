#pragma once

/**
 * @file partition.hpp
 * @brief Kostant's partition function of g2 and its q-analog.
 *
 * Three independent routes are provided:
 *  - qpartition: the closed quadruple sum over the multiplicities of
 *    3a1+2a2, 3a1+a2, 2a1+a2 and a1+a2, with the exponent read off directly;
 *  - qpartition_bruteforce: explicit enumeration of every witness, checking
 *    the weighted root sum and counting the roots used;
 *  - partition_tarski: Tarski's residue-class polynomials g and h at q = 1.
 *
 * By convention the value at 0 is 1 and any weight with a negative
 * coordinate has partition value 0.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "../qpoly.hpp"
#include "../rank2.hpp"
#include "rootsys.hpp"

namespace kostant::g2 {

/// Multiplicities of (a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2) in one way of writing a weight.
struct PartitionWitness {
    std::array<std::int64_t, 6> counts{};

    std::int64_t total_roots() const {
        std::int64_t t = 0;
        for (auto c : counts) t = checked::add(t, c);
        return t;
    }

    RootCoord weight() const {
        RootCoord s{};
        for (std::size_t i = 0; i < counts.size(); ++i) s = s + counts[i] * constants.positive_roots[i];
        return s;
    }
};

/// Closed quadruple-sum formula for the q-analog.
inline QPoly qpartition(RootCoord v) {
    if (!v.nonnegative()) return {};
    const std::int64_t m = v.c1, n = v.c2;
    std::vector<QPoly::Coeff> acc(static_cast<std::size_t>(checked::add(m, n)) + 1, 0);
    for (std::int64_t i = 0; i <= std::min(m / 3, n / 2); ++i) {
        for (std::int64_t j = 0; j <= std::min((m - 3 * i) / 3, n - 2 * i); ++j) {
            for (std::int64_t k = 0; k <= std::min((m - 3 * i - 3 * j) / 2, n - 2 * i - j); ++k) {
                const std::int64_t lmax = std::min(m - 3 * i - 3 * j - 2 * k, n - 2 * i - j - k);
                for (std::int64_t l = 0; l <= lmax; ++l) {
                    const auto z = static_cast<std::size_t>(m + n - 4 * i - 3 * j - 2 * k - l);
                    acc[z] = checked::add(acc[z], 1);
                }
            }
        }
    }
    return QPoly(std::move(acc));
}

/**
 * Every witness for v. Loops run over the four non-simple roots from the
 * highest down; the counts of a1 and a2 are then forced.
 */
inline std::vector<PartitionWitness> enumerate_witnesses(RootCoord v) {
    std::vector<PartitionWitness> out;
    if (!v.nonnegative()) return out;
    const auto& roots = constants.positive_roots;
    RootCoord rest6 = v;
    for (std::int64_t n6 = 0; rest6.nonnegative(); ++n6, rest6 = rest6 - roots[5]) {
        RootCoord rest5 = rest6;
        for (std::int64_t n5 = 0; rest5.nonnegative(); ++n5, rest5 = rest5 - roots[4]) {
            RootCoord rest4 = rest5;
            for (std::int64_t n4 = 0; rest4.nonnegative(); ++n4, rest4 = rest4 - roots[3]) {
                RootCoord rest3 = rest4;
                for (std::int64_t n3 = 0; rest3.nonnegative(); ++n3, rest3 = rest3 - roots[2]) {
                    PartitionWitness w{{rest3.c1, rest3.c2, n3, n4, n5, n6}};
                    if (w.weight() != v) throw std::logic_error("witness does not sum to the target weight");
                    out.push_back(w);
                }
            }
        }
    }
    return out;
}

/// Definitional q-analog: sum of q^(roots used) over all witnesses.
inline QPoly qpartition_bruteforce(RootCoord v) {
    QPoly p;
    for (const auto& w : enumerate_witnesses(v)) p += QPoly::monomial(static_cast<std::size_t>(w.total_roots()));
    return p;
}

namespace detail {

inline std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* which) {
    if (num % den != 0) throw std::logic_error(std::string(which) + ": residue formula does not divide evenly");
    return num / den;
}

}  // namespace detail

/// Tarski's g(k), k >= -2: a degree-4 quasi-polynomial with period 6, divided by 432.
inline std::int64_t tarski_g(std::int64_t k) {
    using checked::mul;
    if (k < -2) throw std::domain_error("tarski_g requires k >= -2");
    std::int64_t num = 0;
    switch (checked::floor_mod(k, 6)) {
        case 0: num = mul(k + 6, mul(mul(k, k), k) + 14 * mul(k, k) + 54 * k + 72); break;
        case 1: num = mul(mul(k + 5, k + 5), mul(k, k) + 10 * k + 13); break;
        case 2: num = mul(k + 4, mul(mul(k, k), k) + 16 * mul(k, k) + 74 * k + 68); break;
        case 3: num = mul(mul(mul(k + 3, k + 3), k + 5), k + 9); break;
        case 4: num = mul(mul(k + 2, k + 8), mul(k, k) + 10 * k + 22); break;
        case 5: num = mul(mul(k + 1, k + 5), mul(k + 7, k + 7)); break;
    }
    return detail::exact_div(num, 432, "tarski_g");
}

/// Tarski's h(k), k >= -2: period-2 quasi-polynomial divided by 48.
inline std::int64_t tarski_h(std::int64_t k) {
    using checked::mul;
    if (k < -2) throw std::domain_error("tarski_h requires k >= -2");
    std::int64_t num = (checked::floor_mod(k, 2) == 0) ? mul(mul(k + 2, k + 4), mul(k, k) + 6 * k + 6)
                                                        : mul(mul(k + 1, mul(k + 3, k + 3)), k + 5);
    return detail::exact_div(num, 48, "tarski_h");
}

/// The five inclusive regions of the (m, n) quadrant.
enum class TarskiRegion { MAtMostN, UpToThreeHalvesN, UpToTwoN, UpToThreeN, BeyondThreeN };

inline constexpr std::array<TarskiRegion, 5> all_tarski_regions{
    TarskiRegion::MAtMostN, TarskiRegion::UpToThreeHalvesN, TarskiRegion::UpToTwoN, TarskiRegion::UpToThreeN,
    TarskiRegion::BeyondThreeN};

inline bool in_region(RootCoord v, TarskiRegion r) {
    const std::int64_t m = v.c1, n = v.c2;
    switch (r) {
        case TarskiRegion::MAtMostN: return m <= n;
        case TarskiRegion::UpToThreeHalvesN: return n <= m && 2 * m <= 3 * n;
        case TarskiRegion::UpToTwoN: return 3 * n <= 2 * m && m <= 2 * n;
        case TarskiRegion::UpToThreeN: return 2 * n <= m && m <= 3 * n;
        case TarskiRegion::BeyondThreeN: return 3 * n <= m;
    }
    return false;
}

/// Region formula evaluated at v; only meaningful when in_region(v, r).
inline std::int64_t tarski_region_value(RootCoord v, TarskiRegion r) {
    const std::int64_t m = v.c1, n = v.c2;
    switch (r) {
        case TarskiRegion::MAtMostN: return tarski_g(m);
        case TarskiRegion::UpToThreeHalvesN: return tarski_g(m) - tarski_h(m - n - 1);
        case TarskiRegion::UpToTwoN: return tarski_h(n) - tarski_g(3 * n - m - 1) + tarski_h(2 * n - m - 2);
        case TarskiRegion::UpToThreeN: return tarski_h(n) - tarski_g(3 * n - m - 1);
        case TarskiRegion::BeyondThreeN: return tarski_h(n);
    }
    return 0;
}

inline std::vector<TarskiRegion> tarski_regions(RootCoord v) {
    std::vector<TarskiRegion> out;
    for (auto r : all_tarski_regions)
        if (in_region(v, r)) out.push_back(r);
    return out;
}

/// Classical partition value via Tarski's formulas; 0 off the nonnegative quadrant.
inline std::int64_t partition_tarski(RootCoord v) {
    if (!v.nonnegative()) return 0;
    for (auto r : all_tarski_regions)
        if (in_region(v, r)) return tarski_region_value(v, r);
    throw std::logic_error("Tarski regions do not cover " + to_string(v));
}

}  // namespace kostant::g2
