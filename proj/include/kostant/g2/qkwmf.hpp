#pragma once

/**
 * @file qkwmf.hpp
 * @brief Weight q-multiplicities m_q(lambda, mu) for g2.
 *
 * For dominant lambda = m*w1 + n*w2 and mu = x*w1 + y*w2 only the Weyl
 * elements 1, s1, s2, s2s1 and s1s2 can contribute. Their partition-function
 * arguments are written with six integers
 *
 *   a = 2m+3n-2x-3y    b = m+2n-x-2y      c = m+3n-2x-3y-1
 *   d = m+n-x-2y-1     e = n-x-2y-2       f = m-2x-3y-4
 *
 * as P = p(a,b), Q = p(c,b), R = p(a,d), S = p(c,e), T = p(f,d), and the
 * closed formula picks P - Q - R + S + T restricted to one of eight sign
 * patterns of (a..f). qmultiplicity_weyl_sum is the full 12-term
 * alternating sum and serves as the oracle.
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "../qpoly.hpp"
#include "../rank2.hpp"
#include "partition.hpp"
#include "rootsys.hpp"

namespace kostant::g2 {

enum class CaseLabel { PQRST, PQRS, PQRT, PQR, PQ, PR, P, Zero };

inline constexpr std::array<CaseLabel, 8> all_case_labels{CaseLabel::PQRST, CaseLabel::PQRS, CaseLabel::PQRT,
                                                          CaseLabel::PQR,   CaseLabel::PQ,   CaseLabel::PR,
                                                          CaseLabel::P,     CaseLabel::Zero};

inline std::string_view to_string(CaseLabel l) {
    switch (l) {
        case CaseLabel::PQRST: return "PQRST";
        case CaseLabel::PQRS: return "PQRS";
        case CaseLabel::PQRT: return "PQRT";
        case CaseLabel::PQR: return "PQR";
        case CaseLabel::PQ: return "PQ";
        case CaseLabel::PR: return "PR";
        case CaseLabel::P: return "P";
        case CaseLabel::Zero: return "ZERO";
    }
    return "?";
}

enum class Term { P = 0, Q = 1, R = 2, S = 3, T = 4 };

inline constexpr std::array<Term, 5> all_terms{Term::P, Term::Q, Term::R, Term::S, Term::T};

inline constexpr int term_sign(Term t) { return (t == Term::Q || t == Term::R) ? -1 : 1; }

inline constexpr char term_name(Term t) { return "PQRST"[static_cast<int>(t)]; }

/// Subset of {P,Q,R,S,T} as a bitmask, bit i for Term(i).
using Signature = std::uint8_t;

inline constexpr Signature bit(Term t) { return static_cast<Signature>(1u << static_cast<int>(t)); }

inline constexpr bool contains(Signature s, Term t) { return (s & bit(t)) != 0; }

/// Signed formula for a signature, e.g. "P-Q-R+S+T"; the empty set is "0".
inline std::string formula(Signature s) {
    std::string out;
    for (Term t : all_terms) {
        if (!contains(s, t)) continue;
        if (term_sign(t) < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        out += term_name(t);
    }
    return out.empty() ? "0" : out;
}

inline constexpr Signature signature_of(CaseLabel l) {
    constexpr Signature P = bit(Term::P), Q = bit(Term::Q), R = bit(Term::R), S = bit(Term::S), T = bit(Term::T);
    switch (l) {
        case CaseLabel::PQRST: return P | Q | R | S | T;
        case CaseLabel::PQRS: return P | Q | R | S;
        case CaseLabel::PQRT: return P | Q | R | T;
        case CaseLabel::PQR: return P | Q | R;
        case CaseLabel::PQ: return P | Q;
        case CaseLabel::PR: return P | R;
        case CaseLabel::P: return P;
        case CaseLabel::Zero: return 0;
    }
    return 0;
}

struct CaseData {
    std::int64_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
    std::array<bool, 6> in_n{};  // a..f >= 0
    CaseLabel label = CaseLabel::Zero;

    std::array<std::int64_t, 6> values() const { return {a, b, c, d, e, f}; }

    /// Root-coordinate argument of the partition function for each term.
    RootCoord argument(Term t) const {
        switch (t) {
            case Term::P: return {a, b};
            case Term::Q: return {c, b};
            case Term::R: return {a, d};
            case Term::S: return {c, e};
            case Term::T: return {f, d};
        }
        return {};
    }

    /// Terms whose partition argument lies in the nonnegative quadrant.
    Signature nontrivial_terms() const {
        Signature s = 0;
        for (Term t : all_terms)
            if (argument(t).nonnegative()) s |= bit(t);
        return s;
    }
};

/// Piecewise case table: direct membership tests on a..f.
inline CaseLabel select_case(const std::array<bool, 6>& in) {
    const auto [a, b, c, d, e, f] = in;
    if (!(a && b)) return CaseLabel::Zero;
    if (c && d && e && f) return CaseLabel::PQRST;
    if (c && d && e && !f) return CaseLabel::PQRS;
    if (c && d && !e && f) return CaseLabel::PQRT;
    if (c && d && !e && !f) return CaseLabel::PQR;
    if (c && !d && !e && !f) return CaseLabel::PQ;
    if (!c && d && !e && !f) return CaseLabel::PR;
    if (!c && !d && !e && !f) return CaseLabel::P;
    return CaseLabel::Zero;
}

inline CaseData compute_abcdef(FundCoord lambda, FundCoord mu) {
    using namespace checked;
    const std::int64_t m = lambda.m(), n = lambda.n(), x = mu.m(), y = mu.n();
    CaseData cd;
    cd.a = sub(add(mul(2, m), mul(3, n)), add(mul(2, x), mul(3, y)));
    cd.b = sub(add(m, mul(2, n)), add(x, mul(2, y)));
    cd.c = sub(sub(add(m, mul(3, n)), add(mul(2, x), mul(3, y))), 1);
    cd.d = sub(sub(add(m, n), add(x, mul(2, y))), 1);
    cd.e = sub(sub(n, add(x, mul(2, y))), 2);
    cd.f = sub(sub(m, add(mul(2, x), mul(3, y))), 4);
    const auto v = cd.values();
    for (std::size_t i = 0; i < 6; ++i) cd.in_n[i] = v[i] >= 0;
    cd.label = select_case(cd.in_n);
    return cd;
}

struct MultiplicityResult {
    FundCoord lambda;
    FundCoord mu;
    CaseData case_data;
    std::array<std::optional<QPoly>, 5> terms;  // indexed by Term
    QPoly mq;
    std::int64_t m_at_one = 0;
};

/// Closed formula: evaluates only the terms the case label calls for.
inline MultiplicityResult qmultiplicity_closed(FundCoord lambda, FundCoord mu) {
    MultiplicityResult r{lambda, mu, compute_abcdef(lambda, mu), {}, {}, 0};
    const Signature sig = signature_of(r.case_data.label);
    for (Term t : all_terms) {
        if (!contains(sig, t)) continue;
        QPoly value = qpartition(r.case_data.argument(t));
        if (term_sign(t) > 0)
            r.mq += value;
        else
            r.mq -= value;
        r.terms[static_cast<std::size_t>(t)] = std::move(value);
    }
    if (!r.mq.has_nonnegative_coeffs())
        throw std::logic_error("q-multiplicity has a negative coefficient: " + to_string(r.mq));
    r.m_at_one = r.mq.eval_at_one();
    return r;
}

/// Full alternating sum over all 12 Weyl elements.
inline QPoly qmultiplicity_weyl_sum(FundCoord lambda, FundCoord mu) {
    QPoly total;
    for (const auto& sigma : weyl_group()) {
        QPoly p = qpartition(sigma_shift(sigma, lambda, mu));
        if (sigma.sign() > 0)
            total += p;
        else
            total -= p;
    }
    return total;
}

enum class Method { QPoly, Tarski };

/// Classical multiplicity m(lambda, mu).
inline std::int64_t multiplicity(FundCoord lambda, FundCoord mu, Method method = Method::QPoly) {
    if (method == Method::QPoly) return qmultiplicity_closed(lambda, mu).m_at_one;
    const CaseData cd = compute_abcdef(lambda, mu);
    const Signature sig = signature_of(cd.label);
    std::int64_t total = 0;
    for (Term t : all_terms) {
        if (!contains(sig, t)) continue;
        total = checked::add(total, checked::mul(term_sign(t), partition_tarski(cd.argument(t))));
    }
    return total;
}

struct AuditReport {
    std::int64_t grid_max = 0;
    std::int64_t cases = 0;
    std::map<std::string, std::int64_t> observed;  // formula -> count
    std::vector<std::array<std::int64_t, 4>> counterexamples;

    bool clean() const { return counterexamples.empty(); }
};

/**
 * Walks (m,n,x,y) in [0,max]^4, records which of P..T have a nonnegative
 * argument, and flags any tuple whose signature is not one of the eight
 * allowed or disagrees with the label the case table selects.
 */
inline AuditReport audit_cases(std::int64_t max) {
    if (max < 0) throw std::invalid_argument("audit grid bound must be nonnegative");
    AuditReport rep;
    rep.grid_max = max;
    for (std::int64_t m = 0; m <= max; ++m)
        for (std::int64_t n = 0; n <= max; ++n)
            for (std::int64_t x = 0; x <= max; ++x)
                for (std::int64_t y = 0; y <= max; ++y) {
                    const CaseData cd = compute_abcdef({m, n}, {x, y});
                    const Signature sig = cd.nontrivial_terms();
                    ++rep.cases;
                    ++rep.observed[formula(sig)];
                    if (sig != signature_of(cd.label)) rep.counterexamples.push_back({m, n, x, y});
                }
    return rep;
}

inline void to_json(nlohmann::json& j, const AuditReport& r) {
    nlohmann::json observed = nlohmann::json::object();
    for (const auto& [k, v] : r.observed) observed[k] = v;
    j = nlohmann::json{{"grid_max", r.grid_max}, {"observed_signatures", observed}, {"counterexamples", r.counterexamples}};
}

inline void to_json(nlohmann::json& j, const CaseData& cd) {
    j = nlohmann::json{{"a", cd.a}, {"b", cd.b}, {"c", cd.c}, {"d", cd.d}, {"e", cd.e}, {"f", cd.f},
                       {"case", std::string(to_string(cd.label))}};
}

}  // namespace kostant::g2
