#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nbn/core_group.hpp"

namespace nbn {

/// Lookup from elements to positions in a list.
class ElementIndex {
public:
    ElementIndex() = default;
    explicit ElementIndex(const std::vector<SignedPermutation>& elems);
    std::optional<std::size_t> find(const SignedPermutation& x) const;
    std::size_t at(const SignedPermutation& x) const;  // throws std::out_of_range
    std::size_t size() const { return map_.size(); }

private:
    std::unordered_map<SignedPermutation, std::size_t, SignedPermutationHash> map_;
};

/// Orbit of s under conjugation. elements[0] == s; the rest sorted canonically.
struct ConjugacyClass {
    Group group;
    SignedPermutation rep;
    std::vector<SignedPermutation> elements;
    SignedCycleType key;
    ElementIndex index;

    std::size_t size() const { return elements.size(); }
    bool contains(const SignedPermutation& x) const { return index.find(x).has_value(); }
};

struct Centralizer {
    Group group;
    SignedPermutation base;
    std::vector<SignedPermutation> elements;  // canonically sorted, identity included
    std::vector<SignedPermutation> generators;
    ElementIndex index;

    std::size_t order() const { return elements.size(); }
};

/// g_i with g_i s g_i^{-1} = t_i, g_1 = identity.
struct CosetSystem {
    std::vector<SignedPermutation> reps;
    bool preset = false;  // explicit transposition table rather than least-element choice
};

struct ZetaResult {
    std::size_t j;
    SignedPermutation gamma;
};

/// Default cap for conjugacy computations; matches kDefaultGroupCap.
struct EnumerationBudget {
    std::uint64_t group_cap = kDefaultGroupCap;
};

ConjugacyClass conjugacy_class(const Group& g, const SignedPermutation& s,
                               const EnumerationBudget& budget = {});
Centralizer centralizer(const Group& g, const SignedPermutation& s,
                        const EnumerationBudget& budget = {});
/// Least element of each coset g_i G^s in canonical order.
CosetSystem coset_system(const ConjugacyClass& cls, const Centralizer& cent);

/// Class of (1 2) in S_n with reps g_{12} = id, g_{1j} = (2 j), g_{2j} = (1 j),
/// g_{kj} = (1 k)(2 j) for 2 < k < j.
struct TranspositionPreset {
    ConjugacyClass cls;
    Centralizer cent;
    CosetSystem cosets;
    /// Position of t_{ij} = (i j) in cls.elements (1-based i, j; order ignored).
    std::size_t position(int i, int j) const;
};
TranspositionPreset transposition_preset(int n);

/// h g_i = g_j gamma with gamma in G^s.
ZetaResult zeta(const ConjugacyClass& cls, const CosetSystem& sys, std::size_t i,
                const SignedPermutation& h);
/// g_i^{-1} x = zeta g_{i'}^{-1} with zeta in G^s; t_{i'} = x^{-1} t_i x.
ZetaResult zeta_right(const ConjugacyClass& cls, const CosetSystem& sys, std::size_t i,
                      const SignedPermutation& x);

/// Centralizer of x#y as nu_right(B_n^x) * nu_left(B_m^y), certified bijective.
struct CentralizerFactorization {
    Centralizer left;    // B_n^x
    Centralizer right;   // B_m^y
    Centralizer whole;   // B_{n+m}^{x#y}
    /// whole.elements[k] = nu_right(left[first]) * nu_left(right[second])
    std::vector<std::pair<std::size_t, std::size_t>> factors;
    bool bijective = false;
    std::string witness;  // first offending element when not bijective
};

/// Inverse of juxtaposition: (u, v) with z = u#v, u of degree n, if z preserves the blocks.
std::optional<std::pair<SignedPermutation, SignedPermutation>> split_juxtaposition(
    const SignedPermutation& z, int n);
CentralizerFactorization centralizer_factorization(const SignedPermutation& x,
                                                   const SignedPermutation& y,
                                                   const EnumerationBudget& budget = {});

/// Class of x#y assembled as the disjoint union of pi > (O_x # O_y) over the
/// block-position shuffles pi; throws std::logic_error if the pieces overlap or leave the class.
ConjugacyClass class_juxtaposition(const SignedPermutation& x, const SignedPermutation& y,
                                   const EnumerationBudget& budget = {});

/// All conjugacy classes of a group, each represented by its canonically least element.
std::vector<SignedPermutation> class_representatives(const Group& g,
                                                     const EnumerationBudget& budget = {});

}  // namespace nbn
