#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fourstab/arith.hpp"
#include "fourstab/errors.hpp"
#include "fourstab/expr.hpp"

namespace fourstab::lattice {

// Integral symmetric bilinear form, stored as a dense square matrix of exact
// 64-bit integers. Symmetry is validated at construction, so every
// IntegralForm in flight is symmetric.
class IntegralForm {
public:
    IntegralForm() : n_(0) {}

    IntegralForm(std::initializer_list<std::initializer_list<Int>> rows)
        : IntegralForm(std::vector<std::vector<Int>>(rows.begin(), rows.end())) {}

    explicit IntegralForm(std::vector<std::vector<Int>> rows) {
        n_ = rows.size();
        entries_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_)
                throw NonSymmetric("form matrix must be square: row of length " +
                                   std::to_string(row.size()) + " in a " + std::to_string(n_) +
                                   "-row matrix");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = i + 1; j < n_; ++j)
                if (entry(i, j) != entry(j, i))
                    throw NonSymmetric("form matrix must be symmetric: entry (" + std::to_string(i) +
                                       "," + std::to_string(j) + ") = " + std::to_string(entry(i, j)) +
                                       " but entry (" + std::to_string(j) + "," + std::to_string(i) +
                                       ") = " + std::to_string(entry(j, i)));
    }

    size_t rank() const { return n_; }
    Int entry(size_t i, size_t j) const { return entries_[i * n_ + j]; }

    friend bool operator==(const IntegralForm& a, const IntegralForm& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const IntegralForm& a, const IntegralForm& b) { return !(a == b); }

private:
    size_t n_;
    std::vector<Int> entries_;
};

enum class Parity { Even, Odd };
enum class Definiteness { Positive, Negative, Indefinite, Zero };

inline std::string_view parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline std::string_view definiteness_name(Definiteness d) {
    switch (d) {
        case Definiteness::Positive: return "positive";
        case Definiteness::Negative: return "negative";
        case Definiteness::Indefinite: return "indefinite";
        case Definiteness::Zero: return "zero";
    }
    return "?";
}

struct FormInvariants {
    Int rank = 0;
    Int b_plus = 0;
    Int b_minus = 0;
    Int signature = 0;
    Parity parity = Parity::Even;
    Definiteness definiteness = Definiteness::Zero;

    friend bool operator==(const FormInvariants&, const FormInvariants&) = default;
};

namespace detail {

struct Elimination {
    Int b_plus = 0;
    Int b_minus = 0;
    Int det = 1;  // exact determinant
};

// Fraction-free symmetric Gaussian elimination (Bareiss). Pivots are leading
// principal minors of a congruence-modified copy of the input, so sign
// changes in the pivot sequence count the negative inertia index exactly and
// the final pivot is the determinant. Zero diagonals are repaired by a
// symmetric swap against a nonzero diagonal, or by the hyperbolic fallback
// (add row/col q into row/col p across a nonzero off-diagonal pair) when the
// whole remaining diagonal vanishes. Both repairs are unimodular congruences
// and leave inertia and determinant unchanged.
inline Elimination eliminate_symmetric(const IntegralForm& form) {
    const size_t n = form.rank();
    std::vector<Int> s(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) s[i * n + j] = form.entry(i, j);
    auto at = [&](size_t i, size_t j) -> Int& { return s[i * n + j]; };

    auto swap_sym = [&](size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < n; ++j) std::swap(at(a, j), at(b, j));
        for (size_t i = 0; i < n; ++i) std::swap(at(i, a), at(i, b));
    };
    auto add_row_col = [&](size_t dst, size_t src) {
        for (size_t j = 0; j < n; ++j) at(dst, j) = checked_add(at(dst, j), at(src, j));
        for (size_t i = 0; i < n; ++i) at(i, dst) = checked_add(at(i, dst), at(i, src));
    };

    Elimination result;
    Int prev = 1;
    for (size_t k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            size_t d = k;
            while (d < n && at(d, d) == 0) ++d;
            if (d < n) {
                swap_sym(k, d);
            } else {
                // All remaining diagonal entries vanish; look off-diagonal.
                size_t p = n, q = n;
                for (size_t i = k; i < n && p == n; ++i)
                    for (size_t j = i + 1; j < n; ++j)
                        if (at(i, j) != 0) {
                            p = i;
                            q = j;
                            break;
                        }
                if (p == n)
                    throw Degenerate("form is degenerate: radical of rank " +
                                     std::to_string(n - k) + " remains after " +
                                     std::to_string(k) + " pivots");
                swap_sym(k, p);
                swap_sym(k + 1, q);
                add_row_col(k, k + 1);  // diagonal becomes 2*off, nonzero
            }
        }
        const Int pivot = at(k, k);
        if (sign_of(pivot) == sign_of(prev))
            ++result.b_plus;
        else
            ++result.b_minus;
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                const Int num = checked_sub(checked_mul(pivot, at(i, j)), checked_mul(at(i, k), at(k, j)));
                at(i, j) = exact_div(num, prev);
            }
        prev = pivot;
    }
    result.det = prev;
    return result;
}

}  // namespace detail

// Exact determinant of the form (Bareiss); 1 for the empty form.
inline Int determinant(const IntegralForm& form) {
    if (form.rank() == 0) return 1;
    std::size_t k = 0;
    for (size_t i = 0; i < form.rank(); ++i)
        for (size_t j = 0; j < form.rank(); ++j) k += form.entry(i, j) != 0;
    if (k == 0) return 0;
    try {
        return detail::eliminate_symmetric(form).det;
    } catch (const Degenerate&) {
        return 0;
    }
}

inline bool is_unimodular(const IntegralForm& form) {
    const Int d = determinant(form);
    return d == 1 || d == -1;
}

// Exact rank, inertia, signature, parity and definiteness. Degenerate forms
// are rejected; unimodular forms are always nondegenerate.
inline FormInvariants invariants(const IntegralForm& form) {
    FormInvariants inv;
    inv.rank = static_cast<Int>(form.rank());
    for (size_t i = 0; i < form.rank(); ++i)
        if (form.entry(i, i) % 2 != 0) {
            inv.parity = Parity::Odd;
            break;
        }
    if (form.rank() > 0) {
        const auto elim = detail::eliminate_symmetric(form);
        inv.b_plus = elim.b_plus;
        inv.b_minus = elim.b_minus;
        inv.signature = elim.b_plus - elim.b_minus;
    }
    if (inv.rank == 0)
        inv.definiteness = Definiteness::Zero;
    else if (inv.b_minus == 0)
        inv.definiteness = Definiteness::Positive;
    else if (inv.b_plus == 0)
        inv.definiteness = Definiteness::Negative;
    else
        inv.definiteness = Definiteness::Indefinite;
    return inv;
}

// Orthogonal (block-diagonal) sum.
inline IntegralForm direct_sum(const IntegralForm& a, const IntegralForm& b) {
    const size_t n = a.rank(), m = b.rank();
    std::vector<std::vector<Int>> rows(n + m, std::vector<Int>(n + m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) rows[i][j] = a.entry(i, j);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) rows[n + i][n + j] = b.entry(i, j);
    return IntegralForm(std::move(rows));
}

inline IntegralForm empty_form() { return IntegralForm(); }

inline IntegralForm diagonal_form(const std::vector<Int>& diag) {
    std::vector<std::vector<Int>> rows(diag.size(), std::vector<Int>(diag.size(), 0));
    for (size_t i = 0; i < diag.size(); ++i) rows[i][i] = diag[i];
    return IntegralForm(std::move(rows));
}

inline IntegralForm unit_form(Int sign) { return diagonal_form({sign}); }

// The hyperbolic plane U = [[0,1],[1,0]].
inline IntegralForm hyperbolic_plane() { return IntegralForm({{0, 1}, {1, 0}}); }

// The positive definite even unimodular E8 form (Cartan matrix of E8).
inline IntegralForm e8_form() {
    return IntegralForm({
        {2, -1, 0, 0, 0, 0, 0, 0},
        {-1, 2, -1, 0, 0, 0, 0, 0},
        {0, -1, 2, -1, 0, 0, 0, 0},
        {0, 0, -1, 2, -1, 0, 0, 0},
        {0, 0, 0, -1, 2, -1, 0, -1},
        {0, 0, 0, 0, -1, 2, -1, 0},
        {0, 0, 0, 0, 0, -1, 2, 0},
        {0, 0, 0, 0, -1, 0, 0, 2},
    });
}

inline IntegralForm negate(const IntegralForm& form) {
    std::vector<std::vector<Int>> rows(form.rank(), std::vector<Int>(form.rank()));
    for (size_t i = 0; i < form.rank(); ++i)
        for (size_t j = 0; j < form.rank(); ++j) rows[i][j] = checked_neg(form.entry(i, j));
    return IntegralForm(std::move(rows));
}

// n-fold orthogonal sum of a form with itself.
inline IntegralForm repeated_sum(const IntegralForm& block, Int n) {
    IntegralForm r = empty_form();
    for (Int i = 0; i < n; ++i) r = direct_sum(r, block);
    return r;
}

// form ⊕ kU: signature and parity are unchanged, rank grows by 2k.
inline IntegralForm hyperbolic_stabilize(const IntegralForm& form, Int k) {
    if (k < 0) throw Error("hyperbolic stabilisation count must be non-negative");
    return direct_sum(form, repeated_sum(hyperbolic_plane(), k));
}

enum class StableKind { Sphere, EvenClass, OddClass };

inline std::string_view stable_kind_name(StableKind k) {
    switch (k) {
        case StableKind::Sphere: return "Sphere";
        case StableKind::EvenClass: return "EvenClass";
        case StableKind::OddClass: return "OddClass";
    }
    return "?";
}

// A named (S2xS2)-stable equivalence class with its canonical representative.
// EvenClass counts K3 summands; negative k3_count means orientation-reversed
// copies. OddClass is pinned by the signature alone.
struct StableClass {
    StableKind kind = StableKind::Sphere;
    Int k3_count = 0;       // EvenClass only, nonzero; signature = -16 * k3_count
    Int odd_signature = 0;  // OddClass only
    ManifoldExpr representative;

    friend bool operator==(const StableClass&, const StableClass&) = default;
};

inline StableClass sphere_class() {
    return StableClass{StableKind::Sphere, 0, 0, ManifoldExpr::sphere()};
}

inline StableClass even_class(Int k3_count) {
    StableClass c;
    c.kind = StableKind::EvenClass;
    c.k3_count = k3_count;
    c.representative = k3_count > 0 ? ManifoldExpr(Generator::K3, k3_count)
                                    : ManifoldExpr(Generator::K3R, -k3_count);
    return c;
}

inline StableClass odd_class(Int signature) {
    StableClass c;
    c.kind = StableKind::OddClass;
    c.odd_signature = signature;
    if (signature >= 0)
        c.representative = ManifoldExpr(Generator::CP2, signature + 1).add(Generator::CP2R, 1);
    else
        c.representative = ManifoldExpr(Generator::CP2, 1).add(Generator::CP2R, 1 - signature);
    return c;
}

// The (S2xS2)-stable equivalence class of a unimodular form: Sphere for even
// signature 0, m K3 (either orientation) for even nonzero signature, and the
// signature-matching odd class otherwise. Even forms of signature 8 mod 16
// carry no smooth simply-connected manifold and are rejected.
inline StableClass stable_class(const IntegralForm& form) {
    if (!is_unimodular(form))
        throw NotUnimodular("stable classification requires a unimodular form (determinant +-1)");
    const FormInvariants inv = invariants(form);
    if (inv.parity == Parity::Odd) return odd_class(inv.signature);
    if (inv.signature == 0) return sphere_class();
    if (inv.signature % 16 != 0)
        throw EvenSignatureNotDivisibleBy16(
            "even unimodular form of signature " + std::to_string(inv.signature) +
            " is not realised by a smooth simply-connected 4-manifold");
    return even_class(-inv.signature / 16);
}

// Wall: after stabilisation the forms are indefinite, and indefinite
// unimodular forms are classified by rank, signature and parity.
inline bool is_stably_isomorphic(const IntegralForm& a, const IntegralForm& b) {
    if (!is_unimodular(a) || !is_unimodular(b))
        throw NotUnimodular("stable isomorphism is defined for unimodular forms");
    const FormInvariants ia = invariants(a), ib = invariants(b);
    return ia.rank == ib.rank && ia.signature == ib.signature && ia.parity == ib.parity;
}

// As above but ranks may differ (stabilise both sides independently).
inline bool is_stably_equivalent(const IntegralForm& a, const IntegralForm& b) {
    if (!is_unimodular(a) || !is_unimodular(b))
        throw NotUnimodular("stable equivalence is defined for unimodular forms");
    const FormInvariants ia = invariants(a), ib = invariants(b);
    return ia.signature == ib.signature && ia.parity == ib.parity;
}

}  // namespace fourstab::lattice
