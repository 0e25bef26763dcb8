#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "toric/error.hpp"

namespace toric {

/// Sparse Laurent polynomial with integer coefficients in `Vars` variables.
/// Zero coefficients are never stored.
template <std::size_t Vars>
class LaurentPoly {
public:
    using Exponent = std::array<int, Vars>;
    using Coeff = std::int64_t;
    using Terms = std::map<Exponent, Coeff>;

    LaurentPoly() = default;
    explicit LaurentPoly(Coeff constant) {
        if (constant != 0) terms_[Exponent{}] = constant;
    }

    static LaurentPoly monomial(Coeff c, Exponent e) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Coeff coeff(const Exponent& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Exponent& e, Coeff c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted && (it->second += c) == 0) terms_.erase(it);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e;
                for (std::size_t i = 0; i < Vars; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(unsigned k) const {
        LaurentPoly out(1), base = *this;
        for (; k; k >>= 1, base = base * base)
            if (k & 1) out *= base;
        return out;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    friend auto operator<=>(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ <=> b.terms_; }

private:
    Terms terms_;
};

using LaurentPoly1 = LaurentPoly<1>;  // variable t
using LaurentPoly2 = LaurentPoly<2>;  // variables (v, z)

/// Canonical text: "c*t^a" or "c*v^a*z^b" terms in ascending exponent order
/// joined by " + "; the zero polynomial is "0".
template <std::size_t Vars>
std::string to_string(const LaurentPoly<Vars>& p) {
    static_assert(Vars == 1 || Vars == 2);
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << " + ";
        first = false;
        out << c;
        if constexpr (Vars == 1) {
            out << "*t^" << e[0];
        } else {
            out << "*v^" << e[0] << "*z^" << e[1];
        }
    }
    return out.str();
}

/// Inverse of to_string. Terms may appear in any order; repeated exponents add.
template <std::size_t Vars>
LaurentPoly<Vars> parse_laurent(std::string_view text) {
    static_assert(Vars == 1 || Vars == 2);
    constexpr std::array<char, 2> names = Vars == 1 ? std::array<char, 2>{'t', 't'} : std::array<char, 2>{'v', 'z'};
    LaurentPoly<Vars> p;
    std::string s(text);
    if (s == "0") return p;
    std::size_t pos = 0;
    auto fail = [&]() { throw ParseError("malformed polynomial '" + s + "'"); };
    while (pos < s.size()) {
        std::size_t end = s.find(" + ", pos);
        if (end == std::string::npos) end = s.size();
        const std::string term = s.substr(pos, end - pos);
        pos = end == s.size() ? end : end + 3;
        std::size_t used = 0;
        long long c = 0;
        try {
            c = std::stoll(term, &used);
        } catch (const std::exception&) {
            fail();
        }
        typename LaurentPoly<Vars>::Exponent e{};
        std::size_t at = used;
        for (std::size_t v = 0; v < Vars; ++v) {
            if (term.compare(at, 3, std::string{'*', names[v], '^'}) != 0) fail();
            at += 3;
            std::size_t len = 0;
            try {
                e[v] = std::stoi(term.substr(at), &len);
            } catch (const std::exception&) {
                fail();
            }
            at += len;
        }
        if (at != term.size()) fail();
        p.add_term(e, c);
    }
    return p;
}

}  // namespace toric
