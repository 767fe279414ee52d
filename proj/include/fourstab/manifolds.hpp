#pragma once

#include <string>
#include <vector>

#include "fourstab/arith.hpp"
#include "fourstab/errors.hpp"
#include "fourstab/expr.hpp"
#include "fourstab/forms.hpp"

namespace fourstab::mfd {

using lattice::FormInvariants;
using lattice::IntegralForm;
using lattice::Parity;
using lattice::StableClass;

// Intersection form of a single standard block.
inline IntegralForm block_form(Generator g) {
    switch (g) {
        case Generator::S4: return lattice::empty_form();
        case Generator::CP2: return lattice::unit_form(1);
        case Generator::CP2R: return lattice::unit_form(-1);
        case Generator::S2xS2: return lattice::hyperbolic_plane();
        case Generator::K3:
            return lattice::direct_sum(lattice::repeated_sum(lattice::negate(lattice::e8_form()), 2),
                                       lattice::repeated_sum(lattice::hyperbolic_plane(), 3));
        case Generator::K3R:
            return lattice::direct_sum(lattice::repeated_sum(lattice::e8_form(), 2),
                                       lattice::repeated_sum(lattice::hyperbolic_plane(), 3));
    }
    throw Error("unknown generator");
}

// A simply-connected closed oriented 4-manifold presented by its intersection
// form. Spin iff the form is even; the Euler characteristic is derived from
// the rank (chi = 2 + b2) rather than stored.
struct Manifold4 {
    IntegralForm form;
    FormInvariants inv;
    bool spin = false;
    Int euler = 2;
};

// Realises a connected-sum expression as a manifold: the form is the
// orthogonal sum of the block forms in canonical summand order. The Rokhlin
// gate (spin => signature divisible by 16) cannot fire for the standard
// blocks; it is kept for raw-form extensions.
inline Manifold4 realize(const ManifoldExpr& expr) {
    IntegralForm form = lattice::empty_form();
    for (const auto& [g, count] : expr.summands())
        form = lattice::direct_sum(form, lattice::repeated_sum(block_form(g), count));
    Manifold4 m;
    m.inv = lattice::invariants(form);
    m.form = std::move(form);
    m.spin = m.inv.parity == Parity::Even;
    if (m.spin && m.inv.signature % 16 != 0)
        throw RokhlinViolation("spin 4-manifold with signature " + std::to_string(m.inv.signature) +
                               " not divisible by 16");
    m.euler = checked_add(2, m.inv.rank);
    return m;
}

// (S2xS2)-stable equivalence class of the manifold.
inline StableClass stable_class_s2xs2(const Manifold4& m) { return lattice::stable_class(m.form); }

// (CP2 # ~CP2)-stable class: the odd class of the same signature, forgetting
// the spin/non-spin distinction. The sphere lands in the odd class of
// signature 0.
inline StableClass stable_class_cp2cp2bar(const Manifold4& m) {
    return lattice::odd_class(m.inv.signature);
}

// Necessary condition for being ~CP2-stably equivalent to a complex surface:
// chi + sigma divisible by 4 (Noether). The quantity is mod-4 invariant under
// # ~CP2 since chi grows by 1 while sigma drops by 1.
inline bool noether_check(const Manifold4& m) {
    return (m.euler + m.inv.signature) % 4 == 0;
}

// Characteristic vector of a spin^c structure in the block basis of the form.
struct SpinCStructure {
    std::vector<Int> char_vector;
};

enum class IndexFlavor { T, P };

// Index datum of the monopole map: the quaternionic index k_H for P-flavor or
// the complex index k_C for its T-flavor refinement, with b+ alongside.
struct VirtualIndex {
    IndexFlavor flavor = IndexFlavor::P;
    Int index_part = 0;
    Int bplus_part = 0;

    friend bool operator==(const VirtualIndex&, const VirtualIndex&) = default;
};

// P-flavor index placement (k_H, b+) = (-sigma/16, b+), defined for spin
// manifolds only.
inline VirtualIndex lambda_P(const Manifold4& m) {
    if (!m.spin) throw NotSpin("lambda_P requires a spin manifold (even intersection form)");
    return VirtualIndex{IndexFlavor::P, exact_div(-m.inv.signature, 16), m.inv.b_plus};
}

namespace detail {

// Solves Q x = c over the rationals by Gaussian elimination. Q is symmetric
// nondegenerate here; for unimodular Q the solution is integral.
inline std::vector<Rational> solve_linear(const IntegralForm& q, const std::vector<Int>& c) {
    const size_t n = q.rank();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(q.entry(i, j));
        a[i][n] = Rational(c[i]);
    }
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) throw Degenerate("singular form in linear solve");
        std::swap(a[k], a[piv]);
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            const Rational f = a[i][k] / a[k][k];
            for (size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = n; i-- > 0;) {
        Rational acc = a[i][n];
        for (size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace detail

// T-flavor index placement (k_C, b+) with k_C = (c^2 - sigma)/8, where c^2 is
// computed by an exact linear solve against the form. The divisibility by 8
// holds for every characteristic vector and is asserted, not assumed.
inline VirtualIndex lambda_T(const Manifold4& m, const SpinCStructure& s) {
    const size_t n = m.form.rank();
    if (s.char_vector.size() != n)
        throw NotCharacteristic("characteristic vector has length " +
                                std::to_string(s.char_vector.size()) + " but the form has rank " +
                                std::to_string(n));
    for (size_t i = 0; i < n; ++i) {
        Int pairing = 0;
        for (size_t j = 0; j < n; ++j)
            pairing = checked_add(pairing, checked_mul(m.form.entry(i, j), s.char_vector[j]));
        if (((pairing - m.form.entry(i, i)) % 2 + 2) % 2 != 0)
            throw NotCharacteristic("vector is not characteristic: <c,e_" + std::to_string(i) +
                                    "> has the wrong parity");
    }
    Int c_squared = 0;
    if (n > 0) {
        const auto x = detail::solve_linear(m.form, s.char_vector);  // x = Q^{-1} c
        Rational acc(0);
        for (size_t i = 0; i < n; ++i) acc += Rational(s.char_vector[i]) * x[i];
        if (!acc.is_integer())
            throw InternalDivisibility("c^2 of a characteristic vector must be an integer");
        c_squared = acc.num();
    }
    const Int diff = checked_sub(c_squared, m.inv.signature);
    if (diff % 8 != 0)
        throw InternalDivisibility("c^2 - sigma = " + std::to_string(diff) +
                                   " is not divisible by 8");
    return VirtualIndex{IndexFlavor::T, diff / 8, m.inv.b_plus};
}

}  // namespace fourstab::mfd
