#pragma once

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fourstab/arith.hpp"
#include "fourstab/errors.hpp"

namespace fourstab {

// Standard building blocks for simply-connected closed oriented 4-manifolds.
// CP2R and K3R are the orientation reversals of CP2 and K3. The enum order
// is the canonical summand order used everywhere output must be
// deterministic.
enum class Generator { S4, CP2, CP2R, S2xS2, K3, K3R };

inline constexpr std::array<Generator, 6> all_generators = {
    Generator::S4, Generator::CP2, Generator::CP2R, Generator::S2xS2, Generator::K3, Generator::K3R};

inline std::string_view generator_name(Generator g) {
    switch (g) {
        case Generator::S4: return "S4";
        case Generator::CP2: return "CP2";
        case Generator::CP2R: return "~CP2";
        case Generator::S2xS2: return "S2xS2";
        case Generator::K3: return "K3";
        case Generator::K3R: return "~K3";
    }
    return "?";
}

// A connected-sum expression over the standard blocks, normalised: summands
// are kept in canonical order with positive multiplicities and S4 absorbed
// (S4 # X = X). The empty multiset denotes S4 itself.
class ManifoldExpr {
public:
    ManifoldExpr() = default;

    explicit ManifoldExpr(Generator g, Int count = 1) {
        if (count < 0) throw Error("summand multiplicity must be positive");
        if (g != Generator::S4 && count > 0) summands_[g] = count;
    }

    static ManifoldExpr sphere() { return ManifoldExpr(); }

    // Multiset of (generator, multiplicity), canonical order, S4 omitted.
    const std::map<Generator, Int>& summands() const { return summands_; }

    bool is_sphere() const { return summands_.empty(); }

    Int multiplicity(Generator g) const {
        auto it = summands_.find(g);
        return it == summands_.end() ? 0 : it->second;
    }

    Int summand_count() const {
        Int n = 0;
        for (const auto& [g, k] : summands_) n = checked_add(n, k);
        return n;
    }

    ManifoldExpr& add(Generator g, Int count = 1) {
        if (count < 0) throw Error("summand multiplicity must be positive");
        if (g == Generator::S4 || count == 0) return *this;
        summands_[g] = checked_add(summands_[g], count);
        return *this;
    }

    friend bool operator==(const ManifoldExpr& a, const ManifoldExpr& b) {
        return a.summands_ == b.summands_;
    }
    friend bool operator!=(const ManifoldExpr& a, const ManifoldExpr& b) { return !(a == b); }
    friend bool operator<(const ManifoldExpr& a, const ManifoldExpr& b) {
        return a.summands_ < b.summands_;
    }

private:
    std::map<Generator, Int> summands_;
};

// Connected sum: multiset union of summands, S4-normalised.
inline ManifoldExpr connected_sum(const ManifoldExpr& a, const ManifoldExpr& b) {
    ManifoldExpr r = a;
    for (const auto& [g, k] : b.summands()) r.add(g, k);
    return r;
}

// Canonical rendering, e.g. "CP2 # 3*~CP2"; the empty sum renders as "S4".
inline std::string render(const ManifoldExpr& expr) {
    if (expr.is_sphere()) return "S4";
    std::string out;
    for (const auto& [g, k] : expr.summands()) {
        if (!out.empty()) out += " # ";
        if (k > 1) out += std::to_string(k) + "*";
        out += generator_name(g);
    }
    return out;
}

namespace detail {

inline void skip_ws(std::string_view s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline std::optional<Generator> match_generator(std::string_view s, size_t& pos) {
    // Longest match first so "S2xS2" is not cut off at "S2".
    static constexpr std::array<std::pair<std::string_view, Generator>, 6> table = {{
        {"S2xS2", Generator::S2xS2},
        {"~CP2", Generator::CP2R},
        {"~K3", Generator::K3R},
        {"CP2", Generator::CP2},
        {"K3", Generator::K3},
        {"S4", Generator::S4},
    }};
    for (const auto& [name, gen] : table) {
        if (s.substr(pos, name.size()) == name) {
            pos += name.size();
            return gen;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Parses the expression grammar
//   expr  := term { "#" term }
//   term  := [count "*"] gen
//   gen   := "S4" | "CP2" | "~CP2" | "S2xS2" | "K3" | "~K3"
// Whitespace-insensitive; counts are positive decimal integers.
inline ManifoldExpr parse_expr(std::string_view text) {
    ManifoldExpr result;
    size_t pos = 0;
    bool expect_term = true;
    while (true) {
        detail::skip_ws(text, pos);
        if (pos >= text.size()) {
            if (expect_term) throw ParseError("expected a summand at end of expression");
            break;
        }
        if (!expect_term) {
            if (text[pos] != '#')
                throw ParseError("expected '#' at position " + std::to_string(pos));
            ++pos;
            expect_term = true;
            continue;
        }
        Int count = 1;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            Int value = 0;
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = checked_add(checked_mul(value, 10), text[pos] - '0');
                ++pos;
            }
            if (value == 0)
                throw ParseError("count must be positive at position " + std::to_string(start));
            detail::skip_ws(text, pos);
            if (pos >= text.size() || text[pos] != '*')
                throw ParseError("expected '*' after count at position " + std::to_string(pos));
            ++pos;
            detail::skip_ws(text, pos);
            count = value;
        }
        auto gen = detail::match_generator(text, pos);
        if (!gen)
            throw ParseError("unknown generator at position " + std::to_string(pos));
        result.add(*gen, count);
        expect_term = false;
    }
    return result;
}

}  // namespace fourstab
