#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fourstab/arith.hpp"
#include "fourstab/errors.hpp"
#include "fourstab/expr.hpp"
#include "fourstab/manifolds.hpp"

namespace fourstab::pin2 {

// Degree in the Pin(2) universe: a formal combination h*H + d*D where H is
// the tautological quaternionic representation and D the sign line. The
// trivial summand R never occurs in generator degrees. Negative entries are
// virtual desuspensions.
struct PDegree {
    Int h = 0;
    Int d = 0;

    friend bool operator==(const PDegree&, const PDegree&) = default;
    friend PDegree operator+(const PDegree& a, const PDegree& b) {
        return PDegree{checked_add(a.h, b.h), checked_add(a.d, b.d)};
    }
    friend PDegree operator-(const PDegree& a, const PDegree& b) {
        return PDegree{checked_sub(a.h, b.h), checked_sub(a.d, b.d)};
    }
};

inline std::string render(const PDegree& deg) {
    if (deg.h == 0 && deg.d == 0) return "0";
    std::string out;
    auto part = [&](Int mult, const char* rep) {
        if (mult == 0) return;
        if (!out.empty()) out += "+";
        if (mult != 1) out += std::to_string(mult);
        out += rep;
    };
    part(deg.h, "H");
    part(deg.d, "D");
    return out;
}

// Formal monomial c * e(D)^nd * e(H)^nh * eta^ne in the commutative calculus
// generated by the Euler classes e(D): S^0 -> S^D, e(H): S^0 -> S^H and the
// equivariant Hopf map eta: S^H -> S^3D, subject to eta*e(H) = e(D)^3.
struct PinMonomial {
    Int coeff = 1;
    Int nd = 0;  // exponent of e(D)
    Int nh = 0;  // exponent of e(H)
    Int ne = 0;  // exponent of eta

    friend bool operator==(const PinMonomial&, const PinMonomial&) = default;
};

inline PinMonomial unit() { return PinMonomial{1, 0, 0, 0}; }
inline PinMonomial euler_d(Int exp = 1) { return PinMonomial{1, exp, 0, 0}; }
inline PinMonomial euler_h(Int exp = 1) { return PinMonomial{1, 0, exp, 0}; }
inline PinMonomial hopf(Int exp = 1) { return PinMonomial{1, 0, 0, exp}; }

inline bool is_normal(const PinMonomial& m) { return m.nh == 0 || m.ne == 0; }

// Reduce by the rewrite (nd, nh>=1, ne>=1) -> (nd+3, nh-1, ne-1) until no
// eta*e(H) pair remains. Terminating (nh+ne drops) and confluent; the net
// degree (nd+3ne, nh-ne) is preserved by every step.
inline PinMonomial normal_form(PinMonomial m) {
    while (m.nh > 0 && m.ne > 0) {
        m.nd = checked_add(m.nd, 3);
        --m.nh;
        --m.ne;
    }
    return m;
}

inline PDegree source_degree(const PinMonomial& m) { return PDegree{m.ne, 0}; }

inline PDegree target_degree(const PinMonomial& m) {
    return PDegree{m.nh, checked_add(m.nd, checked_mul(3, m.ne))};
}

// Virtual degree target - source; invariant under the rewrite, so equal
// monomials in different reduction states carry the same net degree.
inline PDegree net_degree(const PinMonomial& m) {
    return target_degree(m) - source_degree(m);
}

// Smash product: coefficients multiply, exponents add, result reduced.
inline PinMonomial smash(const PinMonomial& a, const PinMonomial& b) {
    return normal_form(PinMonomial{checked_mul(a.coeff, b.coeff), checked_add(a.nd, b.nd),
                                   checked_add(a.nh, b.nh), checked_add(a.ne, b.ne)});
}

inline PinMonomial pow(const PinMonomial& base, Int exp) {
    PinMonomial r = unit();
    for (Int i = 0; i < exp; ++i) r = smash(r, base);
    return r;
}

// Mapping degree on geometric P-fixed points: every generator restricts to
// the identity of S^0, so only the coefficient survives.
inline Int fixed_point_degree(const PinMonomial& m) { return m.coeff; }

// Class of the monomial after inverting e(D)*e(H) (hence e(D), e(H) and eta
// individually): every monic monomial becomes a unit, leaving the
// coefficient. Agrees with fixed_point_degree by construction.
inline Int full_localization_class(const PinMonomial& m) { return m.coeff; }

// Canonical text form [c.]e(D)^a[.e(H)^b][.eta^k] with unit factors omitted,
// using the middle dot as the product sign.
inline std::string render(const PinMonomial& m) {
    static constexpr std::string_view dot = "\xc2\xb7";   // U+00B7
    static constexpr std::string_view eta = "\xce\xb7";   // U+03B7
    std::string factors;
    auto emit = [&](std::string_view name, Int exp) {
        if (exp == 0) return;
        if (!factors.empty()) factors += dot;
        factors += name;
        if (exp != 1) factors += "^" + std::to_string(exp);
    };
    emit("e(D)", m.nd);
    emit("e(H)", m.nh);
    emit(eta, m.ne);
    if (factors.empty()) return std::to_string(m.coeff);
    if (m.coeff == 1) return factors;
    return std::to_string(m.coeff) + std::string(dot) + factors;
}

// Parses the canonical text form back; inverse of render on all monomials.
inline PinMonomial parse_monomial(std::string_view text) {
    static constexpr std::string_view dot = "\xc2\xb7";
    static constexpr std::string_view eta = "\xce\xb7";
    PinMonomial m{1, 0, 0, 0};
    size_t pos = 0;
    auto parse_int = [&]() -> Int {
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected an integer at position " + std::to_string(pos));
        Int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = checked_add(checked_mul(value, 10), text[pos] - '0');
            ++pos;
        }
        return neg ? checked_neg(value) : value;
    };
    bool saw_factor = false;
    bool expect_factor = true;
    while (pos < text.size()) {
        if (!expect_factor) {
            if (text.substr(pos, dot.size()) != dot)
                throw ParseError("expected a product sign at position " + std::to_string(pos));
            pos += dot.size();
            expect_factor = true;
            continue;
        }
        if (text[pos] == '-' || std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (saw_factor || pos != 0)
                throw ParseError("coefficient must come first in a monomial");
            m.coeff = parse_int();
        } else {
            Int* slot = nullptr;
            if (text.substr(pos, 4) == "e(D)") {
                slot = &m.nd;
                pos += 4;
            } else if (text.substr(pos, 4) == "e(H)") {
                slot = &m.nh;
                pos += 4;
            } else if (text.substr(pos, eta.size()) == eta) {
                slot = &m.ne;
                pos += eta.size();
            } else {
                throw ParseError("unknown factor at position " + std::to_string(pos));
            }
            Int exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exp = parse_int();
                if (exp < 1) throw ParseError("factor exponent must be positive");
            }
            if (*slot != 0) throw ParseError("repeated factor in monomial");
            *slot = exp;
            saw_factor = true;
        }
        expect_factor = false;
    }
    if (expect_factor) throw ParseError("empty monomial");
    return m;
}

// Denominator generators permitted in localised fractions: exactly the two
// Bauer-Furuta values that get inverted, e(D) and eta.
enum class DenGen { One, ED, Eta };

inline std::string_view den_gen_name(DenGen g) {
    switch (g) {
        case DenGen::One: return "one";
        case DenGen::ED: return "eD";
        case DenGen::Eta: return "eta";
    }
    return "?";
}

inline PinMonomial den_gen_monomial(DenGen g) {
    switch (g) {
        case DenGen::One: return unit();
        case DenGen::ED: return euler_d();
        case DenGen::Eta: return hopf();
    }
    throw Error("unknown denominator generator");
}

// A fraction num / gen^pow in the localisation of the calculus at gen.
struct LocalizedElem {
    PinMonomial num;
    DenGen den_gen = DenGen::One;
    Int den_pow = 0;
};

inline LocalizedElem localized(const PinMonomial& num, DenGen gen, Int pow) {
    if (pow < 0) throw Error("denominator power must be non-negative");
    if (gen == DenGen::One && pow != 0)
        throw Error("denominator generator 'one' admits only power 0");
    return LocalizedElem{normal_form(num), gen, pow};
}

// Embeds a monomial into the localisation at gen.
inline LocalizedElem localize_at(const PinMonomial& x, DenGen gen) {
    return localized(x, gen, 0);
}

// Fraction equality by cross-multiplication. The monomial monoid is
// cancellative (normal forms embed into the integer lattice), so the colimit
// defining the localisation stabilises immediately and no extra
// stabilisation exponent is needed.
inline bool eq_localized(const LocalizedElem& a, const LocalizedElem& b) {
    if (a.den_gen != b.den_gen)
        throw MixedDenominators("cannot compare fractions over denominators '" +
                                std::string(den_gen_name(a.den_gen)) + "' and '" +
                                std::string(den_gen_name(b.den_gen)) + "'");
    const PinMonomial g = den_gen_monomial(a.den_gen);
    return smash(a.num, pow(g, b.den_pow)) == smash(b.num, pow(g, a.den_pow));
}

inline std::string render(const LocalizedElem& x) {
    std::string out = render(x.num);
    out += "/";
    out += x.den_pow == 0 ? "1" : render(pow(den_gen_monomial(x.den_gen), x.den_pow));
    return out;
}

// The Bauer-Furuta invariant of a connected-sum expression, as the smash
// product of the generator values m(S4) = 1, m(S2xS2) = e(D), m(K3) = eta,
// and (T-flavor only) m(~CP2) = 1. Generators whose invariant is not pinned
// down (CP2, ~K3) are rejected rather than guessed.
inline PinMonomial bf(const ManifoldExpr& expr, mfd::IndexFlavor flavor) {
    PinMonomial result = unit();
    for (const auto& [g, count] : expr.summands()) {
        PinMonomial factor = unit();
        switch (g) {
            case Generator::S4: continue;
            case Generator::S2xS2: factor = euler_d(); break;
            case Generator::K3: factor = hopf(); break;
            case Generator::CP2R:
                if (flavor != mfd::IndexFlavor::T)
                    throw NotSpin("P-flavor invariant requires spin summands; ~CP2 is not spin");
                factor = unit();
                break;
            case Generator::CP2:
            case Generator::K3R:
                throw UnknownGeneratorInvariant("no Bauer-Furuta generator value for " +
                                                std::string(generator_name(g)));
        }
        result = smash(result, pow(factor, count));
    }
    return result;
}

// The Y-stable Bauer-Furuta invariant of x: the class of bf(x, P) in the
// localisation at bf(y, P). Well-defined because m(x # kY) = m(x)*m(Y)^k
// represents the same fraction for every k.
inline LocalizedElem stable_bf(const ManifoldExpr& x, Generator y) {
    DenGen gen;
    switch (y) {
        case Generator::K3: gen = DenGen::Eta; break;
        case Generator::S2xS2: gen = DenGen::ED; break;
        default:
            throw Error("stabilisation direction must be K3 or S2xS2, got " +
                        std::string(generator_name(y)));
    }
    return localized(bf(x, mfd::IndexFlavor::P), gen, 0);
}

// Transport from the eta-localisation to the e(D)-localisation, the identity
// on representatives: eta is invertible once e(D) is, via eta^{-1} =
// e(H)*e(D)^{-3}.
inline LocalizedElem transport_eta_to_eD(const LocalizedElem& x) {
    if (x.den_gen != DenGen::Eta)
        throw MixedDenominators("transport expects an element of the eta-localisation, got '" +
                                std::string(den_gen_name(x.den_gen)) + "'");
    return localized(smash(x.num, euler_h(x.den_pow)), DenGen::ED, checked_mul(3, x.den_pow));
}

// Quoted homotopy-group facts. Never computed here; the table records the
// groups this calculus is allowed to claim, everything else is Unknown.
struct KnownGroupFact {
    PDegree source;
    PDegree target;
    std::string group;
    std::string generator;
    std::string citation;
};

inline std::optional<KnownGroupFact> known_group(const PDegree& src, const PDegree& tgt) {
    if (src == PDegree{0, 0} && tgt == PDegree{0, 0})
        return KnownGroupFact{src, tgt, "free abelian of rank 2", "1, [P/T]",
                              "Burnside ring of Pin(2)"};
    if (src == PDegree{0, 0} && tgt.h == 0 && tgt.d >= 1)
        return KnownGroupFact{src, tgt, "Z", render(euler_d(tgt.d)),
                              "tom Dieck-Segal splitting"};
    if (src == PDegree{1, 0} && tgt == PDegree{0, 3})
        return KnownGroupFact{src, tgt, "Z", render(hopf()),
                              "fixed-point comparison along the unit-sphere cofibre sequence"};
    return std::nullopt;
}

}  // namespace fourstab::pin2
