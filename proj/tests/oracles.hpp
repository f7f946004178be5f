#pragma once

// Test-only oracles that share no code path with the library formulas.
//
// PartitionTable: coin-change dynamic programme over the positive roots,
// tracking the number of roots used as the q-degree.
//
// Freudenthal: classical weight multiplicities from Freudenthal's recursion,
// using only the Cartan matrix, root lengths and the positive roots.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <kostant/qpoly.hpp>
#include <kostant/rank2.hpp>

namespace oracle {

using kostant::QPoly;
using kostant::RootCoord;

class PartitionTable {
public:
    PartitionTable(const std::vector<RootCoord>& roots, std::int64_t max1, std::int64_t max2)
        : max1_(max1), max2_(max2), cells_((max1 + 1) * (max2 + 1)) {
        cell(0, 0) = {1};  // q^0 coefficient 1
        for (const RootCoord& r : roots) {
            for (std::int64_t a = 0; a <= max1_; ++a)
                for (std::int64_t b = 0; b <= max2_; ++b) {
                    if (a < r.c1 || b < r.c2) continue;
                    const auto& src = cell(a - r.c1, b - r.c2);
                    auto& dst = cell(a, b);
                    if (dst.size() < src.size() + 1) dst.resize(src.size() + 1, 0);
                    for (std::size_t k = 0; k < src.size(); ++k) dst[k + 1] += src[k];
                }
        }
    }

    QPoly at(std::int64_t a, std::int64_t b) const {
        if (a < 0 || b < 0) return {};
        if (a > max1_ || b > max2_) throw std::out_of_range("partition table too small");
        return QPoly(cells_[a * (max2_ + 1) + b]);
    }

private:
    std::vector<std::int64_t>& cell(std::int64_t a, std::int64_t b) { return cells_[a * (max2_ + 1) + b]; }
    const std::vector<std::int64_t>& cell(std::int64_t a, std::int64_t b) const { return cells_[a * (max2_ + 1) + b]; }

    std::int64_t max1_, max2_;
    std::vector<std::vector<std::int64_t>> cells_;
};

/**
 * Weights live in "scaled" root coordinates (root coordinates times `scale`)
 * so that half-integral weights of sp4 stay integral.
 */
class Freudenthal {
public:
    // cartan[i][j] = <alpha_j, alpha_i^vee>; sq_len[i] = (alpha_i, alpha_i)
    Freudenthal(kostant::Mat2 cartan, std::array<std::int64_t, 2> sq_len, std::vector<RootCoord> positive_roots,
                std::int64_t scale, RootCoord highest_scaled)
        : scale_(scale), roots_(std::move(positive_roots)), lambda_(highest_scaled) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) form_[i][j] = cartan[i][j] * sq_len[i];  // = 2 (alpha_i, alpha_j)
        RootCoord two_rho{};
        for (auto r : roots_) two_rho = two_rho + r;
        // rho in scaled coordinates
        rho_ = {two_rho.c1 * scale_ / 2, two_rho.c2 * scale_ / 2};
        if ((two_rho.c1 * scale_) % 2 || (two_rho.c2 * scale_) % 2) throw std::logic_error("scale too small for rho");
        norm_top_ = dot(lambda_ + rho_, lambda_ + rho_);
    }

    /// Multiplicity of the weight with the given scaled root coordinates.
    std::int64_t multiplicity(RootCoord mu) {
        const RootCoord diff = lambda_ - mu;
        if (diff.c1 < 0 || diff.c2 < 0 || diff.c1 % scale_ || diff.c2 % scale_) return 0;
        if (mu == lambda_) return 1;
        if (auto it = memo_.find(mu); it != memo_.end()) return it->second;
        const std::int64_t denom = norm_top_ - dot(mu + rho_, mu + rho_);
        std::int64_t value = 0;
        if (denom != 0) {
            std::int64_t num = 0;
            for (auto r : roots_) {
                const RootCoord step{r.c1 * scale_, r.c2 * scale_};
                for (RootCoord up = mu + step;; up = up + step) {
                    const RootCoord d = lambda_ - up;
                    if (d.c1 < 0 || d.c2 < 0) break;
                    num += 2 * dot(up, step) * multiplicity(up);
                }
            }
            // the scaled form multiplies both dot products by the same factor
            if (num % denom != 0) throw std::logic_error("Freudenthal recursion is not integral");
            value = num / denom;
        }
        memo_[mu] = value;
        return value;
    }

private:
    // 2x the invariant form on scaled coordinates; only ratios matter.
    std::int64_t dot(RootCoord u, RootCoord v) const {
        return u.c1 * (form_[0][0] * v.c1 + form_[0][1] * v.c2) + u.c2 * (form_[1][0] * v.c1 + form_[1][1] * v.c2);
    }

    std::int64_t scale_;
    std::vector<RootCoord> roots_;
    RootCoord lambda_;
    RootCoord rho_{};
    std::int64_t form_[2][2]{};
    std::int64_t norm_top_ = 0;
    std::map<RootCoord, std::int64_t> memo_;
};

}  // namespace oracle
