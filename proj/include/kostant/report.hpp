#pragma once

// Grid-wide self-checks and the CSV case table behind the `verify` and
// `table` commands.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2/partition.hpp"
#include "g2/qkwmf.hpp"
#include "sp4.hpp"

namespace kostant {

struct CheckResult {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t mismatches = 0;
};

inline void to_json(nlohmann::json& j, const CheckResult& c) {
    j = nlohmann::json{{"name", c.name}, {"cases", c.cases}, {"mismatches", c.mismatches}};
}

struct VerifyReport {
    std::string algebra;
    std::int64_t grid_max = 0;
    std::vector<CheckResult> checks;

    bool clean() const {
        for (const auto& c : checks)
            if (c.mismatches != 0) return false;
        return true;
    }
};

inline void to_json(nlohmann::json& j, const VerifyReport& r) {
    j = nlohmann::json{{"algebra", r.algebra}, {"grid_max", r.grid_max}, {"checks", r.checks}};
}

namespace detail {

template <class Fn>
CheckResult over_square(std::string name, std::int64_t max, Fn&& agree) {
    CheckResult c{std::move(name)};
    for (std::int64_t m = 0; m <= max; ++m)
        for (std::int64_t n = 0; n <= max; ++n) {
            ++c.cases;
            if (!agree(RootCoord{m, n})) ++c.mismatches;
        }
    return c;
}

template <class Fn>
CheckResult over_hypercube(std::string name, std::int64_t max, Fn&& agree) {
    CheckResult c{std::move(name)};
    for (std::int64_t m = 0; m <= max; ++m)
        for (std::int64_t n = 0; n <= max; ++n)
            for (std::int64_t x = 0; x <= max; ++x)
                for (std::int64_t y = 0; y <= max; ++y) {
                    ++c.cases;
                    if (!agree(FundCoord{m, n}, FundCoord{x, y})) ++c.mismatches;
                }
    return c;
}

}  // namespace detail

/// Partition identities on the root grid [0, 5*max]^2, multiplicity identities on [0, max]^4.
inline VerifyReport verify_g2(std::int64_t max) {
    if (max < 0) throw std::invalid_argument("grid bound must be nonnegative");
    VerifyReport r{"g2", max, {}};
    const std::int64_t root_max = checked::mul(5, max);
    r.checks.push_back(detail::over_square("qpartition_vs_bruteforce", root_max, [](RootCoord v) {
        return g2::qpartition(v) == g2::qpartition_bruteforce(v);
    }));
    r.checks.push_back(detail::over_square("qpartition_vs_tarski", root_max, [](RootCoord v) {
        return g2::qpartition(v).eval_at_one() == g2::partition_tarski(v);
    }));
    r.checks.push_back(detail::over_hypercube("closed_vs_weyl_sum", max, [](FundCoord l, FundCoord mu) {
        return g2::qmultiplicity_closed(l, mu).mq == g2::qmultiplicity_weyl_sum(l, mu);
    }));
    r.checks.push_back(detail::over_hypercube("multiplicity_qpoly_vs_tarski", max, [](FundCoord l, FundCoord mu) {
        return g2::multiplicity(l, mu, g2::Method::QPoly) == g2::multiplicity(l, mu, g2::Method::Tarski);
    }));
    const auto audit = g2::audit_cases(max);
    r.checks.push_back({"case_audit", audit.cases, static_cast<std::int64_t>(audit.counterexamples.size())});
    return r;
}

inline VerifyReport verify_c2(std::int64_t max) {
    if (max < 0) throw std::invalid_argument("grid bound must be nonnegative");
    VerifyReport r{"c2", max, {}};
    const std::int64_t root_max = checked::mul(5, max);
    r.checks.push_back(detail::over_square("qpartition_c2_vs_bruteforce", root_max, [](RootCoord v) {
        return sp4::qpartition_c2(v) == sp4::qpartition_c2_bruteforce(v);
    }));
    r.checks.push_back(detail::over_square("partition_c2_closed_vs_qpartition", root_max, [](RootCoord v) {
        return sp4::partition_c2_closed(v) == sp4::qpartition_c2(v).eval_at_one();
    }));
    r.checks.push_back(detail::over_hypercube("multiplicity_c2_closed_vs_weyl_sum", max, [](FundCoord l, FundCoord mu) {
        return sp4::multiplicity_c2_closed(l, mu).value == sp4::multiplicity_c2_weyl_sum(l, mu).eval_at_one();
    }));
    return r;
}

/// "0|1|0|0|0|1"; the zero polynomial is an empty field.
inline std::string pipe_joined(const QPoly& p) {
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += '|';
        s += std::to_string(p.coeffs()[i]);
    }
    return s;
}

/// One CSV row per (m,n,x,y) in [0,max]^4, lexicographic order, with a header line.
inline void write_case_table(std::ostream& os, std::int64_t max) {
    if (max < 0) throw std::invalid_argument("grid bound must be nonnegative");
    os << "m,n,x,y,a,b,c,d,e,f,case,mq_coeffs,m_at_1\n";
    for (std::int64_t m = 0; m <= max; ++m)
        for (std::int64_t n = 0; n <= max; ++n)
            for (std::int64_t x = 0; x <= max; ++x)
                for (std::int64_t y = 0; y <= max; ++y) {
                    const auto res = g2::qmultiplicity_closed({m, n}, {x, y});
                    const auto& cd = res.case_data;
                    os << m << ',' << n << ',' << x << ',' << y << ',' << cd.a << ',' << cd.b << ',' << cd.c << ','
                       << cd.d << ',' << cd.e << ',' << cd.f << ',' << g2::to_string(cd.label) << ','
                       << pipe_joined(res.mq) << ',' << res.m_at_one << '\n';
                }
}

}  // namespace kostant
