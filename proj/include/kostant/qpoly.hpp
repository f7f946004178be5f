#pragma once

/**
 * @file qpoly.hpp
 * @brief Exact univariate polynomials in q with signed 64-bit coefficients.
 *
 * Storage is dense and ascending: coeffs()[i] is the coefficient of q^i.
 * The representation is canonical, so the last stored coefficient is never
 * zero and the zero polynomial has no coefficients at all. Every arithmetic
 * step is overflow-checked and throws OverflowError instead of wrapping.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "checked.hpp"

namespace kostant {

class QPoly {
public:
    using Coeff = std::int64_t;

    QPoly() = default;
    explicit QPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    QPoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { normalize(); }

    static QPoly constant(Coeff c) { return QPoly(std::vector<Coeff>{c}); }

    static QPoly monomial(std::size_t degree, Coeff c = 1) {
        std::vector<Coeff> v(degree + 1, 0);
        v[degree] = c;
        return QPoly(std::move(v));
    }

    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of the leading term; empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Degree of the lowest nonzero term; empty for the zero polynomial.
    std::optional<std::size_t> lowest_degree() const noexcept {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return std::nullopt;
    }

    Coeff operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    QPoly& operator+=(const QPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], o.coeffs_[i]);
        normalize();
        return *this;
    }

    QPoly& operator-=(const QPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked::sub(coeffs_[i], o.coeffs_[i]);
        normalize();
        return *this;
    }

    friend QPoly operator+(QPoly p, const QPoly& r) { return p += r; }
    friend QPoly operator-(QPoly p, const QPoly& r) { return p -= r; }

    friend QPoly operator-(const QPoly& p) {
        std::vector<Coeff> v(p.coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked::neg(p.coeffs_[i]);
        return QPoly(std::move(v));
    }

    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// Sum of coefficients, i.e. the value at q = 1.
    Coeff eval_at_one() const {
        Coeff s = 0;
        for (Coeff c : coeffs_) s = checked::add(s, c);
        return s;
    }

    /// Horner evaluation at an integer point, overflow-checked.
    Coeff eval(Coeff q) const {
        Coeff acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked::add(checked::mul(acc, q), *it);
        return acc;
    }

    bool has_nonnegative_coeffs() const noexcept {
        for (Coeff c : coeffs_)
            if (c < 0) return false;
        return true;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

inline QPoly add(const QPoly& p, const QPoly& r) { return p + r; }
inline QPoly sub(const QPoly& p, const QPoly& r) { return p - r; }
inline QPoly negate(const QPoly& p) { return -p; }
inline QPoly::Coeff eval_at_one(const QPoly& p) { return p.eval_at_one(); }
inline QPoly monomial(std::size_t degree) { return QPoly::monomial(degree); }

namespace detail {

inline std::string render(const QPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        QPoly::Coeff v = c[k];
        if (v == 0) continue;
        bool neg = v < 0;
        // |INT64_MIN| is not representable; print it via the unsigned cast
        std::uint64_t mag = neg ? std::uint64_t(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0 || mag != 1) out += std::to_string(mag);
        if (k >= 1) {
            out += "q";
            if (k >= 2) out += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace detail

/// Descending powers, zero terms omitted: "q^5 + q".
inline std::string to_string(const QPoly& p) { return detail::render(p, false); }
inline std::string to_latex(const QPoly& p) { return detail::render(p, true); }

// JSON: ascending coefficient array in canonical form.
inline void to_json(nlohmann::json& j, const QPoly& p) { j = p.coeffs(); }

inline void from_json(const nlohmann::json& j, QPoly& p) {
    if (!j.is_array()) throw std::invalid_argument("QPoly JSON must be an array of integers");
    std::vector<QPoly::Coeff> v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::invalid_argument("QPoly JSON must be an array of integers");
        if (e.is_number_unsigned() && e.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
            throw OverflowError("QPoly JSON coefficient exceeds the signed 64-bit range");
        v.push_back(e.get<QPoly::Coeff>());
    }
    p = QPoly(std::move(v));
}

}  // namespace kostant
