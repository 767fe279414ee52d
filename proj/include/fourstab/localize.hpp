#pragma once

#include <algorithm>
#include <concepts>
#include <numeric>
#include <string>
#include <vector>

#include "fourstab/arith.hpp"
#include "fourstab/errors.hpp"
#include "fourstab/forms.hpp"

namespace fourstab::cat {

// A category instance is a groupoid-with-endofunctor presented through
// capabilities. Every instance can apply the endofunctor to objects; on top
// of that it may offer an isomorphism decision, identity morphisms, or full
// hom-set enumeration. Generic code is gated on exactly the capability it
// needs, so a decision-only instance (the form groupoid) still drives the
// stable predicates while hom-level operations require an enumerable
// instance (pointed finite sets).

template <class I>
concept CategoryInstance = requires(const I& c, const typename I::Object& a) {
    typename I::Object;
    { c.apply(a) } -> std::same_as<typename I::Object>;
};

template <class I>
concept IsoDecidable = CategoryInstance<I> &&
    requires(const I& c, const typename I::Object& a, const typename I::Object& b) {
        { c.is_isomorphic(a, b) } -> std::same_as<bool>;
    };

template <class I>
concept MorphismCapable = CategoryInstance<I> &&
    requires(const I& c, const typename I::Object& a, const typename I::Morphism& f) {
        typename I::Morphism;
        { c.identity(a) } -> std::same_as<typename I::Morphism>;
        { c.apply_morphism(f) } -> std::same_as<typename I::Morphism>;
    };

template <class I>
concept HomEnumerable = MorphismCapable<I> &&
    requires(const I& c, const typename I::Object& a, const typename I::Object& b,
             const typename I::Morphism& f) {
        { c.hom(a, b) } -> std::same_as<std::vector<typename I::Morphism>>;
        { c.compose(f, f) } -> std::same_as<typename I::Morphism>;
    };

template <CategoryInstance I>
typename I::Object apply_power(const I& inst, typename I::Object obj, Int n) {
    for (Int i = 0; i < n; ++i) obj = inst.apply(obj);
    return obj;
}

// Isomorphism decision from whichever capability the instance provides: a
// dedicated decision procedure if present, hom-set non-emptiness otherwise.
template <class I>
    requires IsoDecidable<I> || HomEnumerable<I>
bool instance_is_isomorphic(const I& inst, const typename I::Object& a,
                            const typename I::Object& b) {
    if constexpr (IsoDecidable<I>)
        return inst.is_isomorphic(a, b);
    else
        return !inst.hom(a, b).empty();
}

// Object of the localised category: a pair (base, shift).
template <CategoryInstance I>
struct LocalizedObject {
    typename I::Object base;
    Int shift = 0;
};

// Stage-m representative of a morphism in the localised category; the actual
// morphism set is the colimit over stages under the endofunctor.
template <MorphismCapable I>
struct LocalizedMorphism {
    Int stage = 0;
    typename I::Morphism rep;
};

template <MorphismCapable I>
LocalizedMorphism<I> stabilize(const I& inst, const LocalizedMorphism<I>& m) {
    return LocalizedMorphism<I>{checked_add(m.stage, 1), inst.apply_morphism(m.rep)};
}

// Representative equality in the colimit: push both to a common stage, then
// apply the endofunctor up to `bound` more times looking for literal
// equality. A negative answer only means "not within bound".
template <MorphismCapable I>
bool equal_localized_morphisms(const I& inst, LocalizedMorphism<I> a, LocalizedMorphism<I> b,
                               Int bound) {
    while (a.stage < b.stage) a = stabilize(inst, a);
    while (b.stage < a.stage) b = stabilize(inst, b);
    for (Int t = 0;; ++t) {
        if (a.rep == b.rep) return true;
        if (t >= bound) return false;
        a = stabilize(inst, a);
        b = stabilize(inst, b);
    }
}

// Canonical isomorphism (C, n) ~ (FC, n-1), represented by an identity of an
// F-power of C at the smallest admissible stage.
template <MorphismCapable I>
LocalizedMorphism<I> shift_iso(const I& inst, const LocalizedObject<I>& obj) {
    const Int stage = std::max<Int>(0, 1 - obj.shift);
    return LocalizedMorphism<I>{stage, inst.identity(apply_power(inst, obj.base, stage + obj.shift))};
}

// Semi-decision: do the objects become isomorphic after applying the
// endofunctor to both the same number of times (some n <= bound)?
template <class I>
    requires IsoDecidable<I> || HomEnumerable<I>
bool stably_isomorphic(const I& inst, const typename I::Object& a, const typename I::Object& b,
                       Int bound) {
    if (bound < 0) throw Error("stabilisation bound must be non-negative");
    typename I::Object fa = a, fb = b;
    for (Int n = 0;; ++n) {
        if (instance_is_isomorphic(inst, fa, fb)) return true;
        if (n >= bound) return false;
        fa = inst.apply(fa);
        fb = inst.apply(fb);
    }
}

// Semi-decision: isomorphic after possibly different numbers of applications
// (n, n' <= bound).
template <class I>
    requires IsoDecidable<I> || HomEnumerable<I>
bool stably_equivalent(const I& inst, const typename I::Object& a, const typename I::Object& b,
                       Int bound) {
    if (bound < 0) throw Error("stabilisation bound must be non-negative");
    std::vector<typename I::Object> pa{a}, pb{b};
    for (Int n = 1; n <= bound; ++n) {
        pa.push_back(inst.apply(pa.back()));
        pb.push_back(inst.apply(pb.back()));
    }
    for (const auto& x : pa)
        for (const auto& y : pb)
            if (instance_is_isomorphic(inst, x, y)) return true;
    return false;
}

// The automorphism group of F^n(obj), listed element by element. The
// stabilisation homomorphism into stage n+1 is the endofunctor on morphisms
// (inst.apply_morphism).
template <HomEnumerable I>
struct AutomorphismStage {
    typename I::Object object;
    std::vector<typename I::Morphism> elements;

    Int order() const { return static_cast<Int>(elements.size()); }
};

template <HomEnumerable I>
AutomorphismStage<I> automorphism_stage(const I& inst, const typename I::Object& obj, Int n) {
    if (n < 0) throw Error("stage must be non-negative");
    auto target = apply_power(inst, obj, n);
    auto elements = inst.hom(target, target);
    return AutomorphismStage<I>{std::move(target), std::move(elements)};
}

// Stage-m approximant of the localised hom-set Mor((C,n), (C',n')): the base
// hom-set Mor(F^{m+n}C, F^{m+n'}C'), each element tagged with its stage. The
// injection into stage m+1 is `stabilize`.
template <HomEnumerable I>
std::vector<LocalizedMorphism<I>> hom_localized(const I& inst, const LocalizedObject<I>& a,
                                                const LocalizedObject<I>& b, Int stage) {
    if (stage + a.shift < 0 || stage + b.shift < 0)
        throw StageTooSmall("stage " + std::to_string(stage) + " leaves a negative power for shifts " +
                            std::to_string(a.shift) + ", " + std::to_string(b.shift));
    const auto src = apply_power(inst, a.base, stage + a.shift);
    const auto tgt = apply_power(inst, b.base, stage + b.shift);
    std::vector<LocalizedMorphism<I>> out;
    for (auto& f : inst.hom(src, tgt)) out.push_back(LocalizedMorphism<I>{stage, std::move(f)});
    return out;
}

// ---------------------------------------------------------------------------
// Instance: pointed finite sets with pointed bijections, endofunctor "add one
// free point". Objects are counted by their non-base points, so morphisms are
// permutations.

class FinSetInstance {
public:
    using Object = Int;                    // number of non-base points
    using Morphism = std::vector<Int>;     // permutation images of 0..k-1

    Object apply(const Object& k) const { return checked_add(k, 1); }

    bool is_isomorphic(const Object& a, const Object& b) const { return a == b; }

    Morphism identity(const Object& k) const {
        Morphism id(static_cast<size_t>(k));
        std::iota(id.begin(), id.end(), 0);
        return id;
    }

    // The endofunctor on morphisms: extend by the identity on the new point.
    Morphism apply_morphism(const Morphism& f) const {
        Morphism g = f;
        g.push_back(static_cast<Int>(f.size()));
        return g;
    }

    Morphism compose(const Morphism& f, const Morphism& g) const {
        if (f.size() != g.size()) throw Error("composition of permutations of different sets");
        Morphism h(g.size());
        for (size_t i = 0; i < g.size(); ++i) h[i] = f[static_cast<size_t>(g[i])];
        return h;
    }

    std::vector<Morphism> hom(const Object& a, const Object& b) const {
        if (a != b) return {};
        if (a > 9)
            throw Error("hom-set enumeration is limited to pointed sets with at most 9 points (" +
                        std::to_string(a) + " requested)");
        Morphism perm = identity(a);
        std::vector<Morphism> all;
        do {
            all.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return all;
    }
};

// ---------------------------------------------------------------------------
// Instance: the groupoid of unimodular symmetric forms with endofunctor
// "orthogonal sum with the hyperbolic plane". Only the isomorphism decision
// is supplied, and via invariants (exact for indefinite unimodular forms,
// which is all that stabilised comparisons ever see); isometry enumeration is
// deliberately absent, along with general morphisms beyond identities.

class FormGroupoidInstance {
public:
    using Object = lattice::IntegralForm;

    // Witness for an identity isometry; the only morphisms this instance can
    // produce. Enough for the canonical shift isomorphism.
    struct Morphism {
        lattice::IntegralForm object;
        friend bool operator==(const Morphism&, const Morphism&) = default;
    };

    Object apply(const Object& form) const {
        return lattice::direct_sum(form, lattice::hyperbolic_plane());
    }

    bool is_isomorphic(const Object& a, const Object& b) const {
        const auto ia = lattice::invariants(a), ib = lattice::invariants(b);
        return ia.rank == ib.rank && ia.signature == ib.signature && ia.parity == ib.parity;
    }

    Morphism identity(const Object& form) const { return Morphism{form}; }

    Morphism apply_morphism(const Morphism& f) const { return Morphism{apply(f.object)}; }
};

static_assert(IsoDecidable<FinSetInstance>);
static_assert(HomEnumerable<FinSetInstance>);
static_assert(IsoDecidable<FormGroupoidInstance>);
static_assert(MorphismCapable<FormGroupoidInstance>);
static_assert(!HomEnumerable<FormGroupoidInstance>);

}  // namespace fourstab::cat
