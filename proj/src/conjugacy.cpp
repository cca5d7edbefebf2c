#include "nbn/conjugacy.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <stdexcept>

namespace nbn {

namespace {

void check_budget(const Group& g, const EnumerationBudget& budget) {
    if (g.order_exact() > budget.group_cap)
        throw BudgetExceeded(g.name() + " exceeds the group-size cap");
}

void check_member(const Group& g, const SignedPermutation& s) {
    if (!g.contains(s)) throw std::invalid_argument("element " + format(s) + " is not in " + g.name());
}

// Lexicographic comparison of the sign strings "0101..", position 0 first.
int compare_signs(const SignVector& a, const SignVector& b) {
    const std::uint32_t d = a.bits() ^ b.bits();
    if (!d) return 0;
    const std::uint32_t low = d & (~d + 1u);
    return (a.bits() & low) ? 1 : -1;
}

SignedPermutation least_in_coset(const SignedPermutation& g, const Centralizer& cent) {
    std::vector<SignedPermutation> best;
    for (const auto& c : cent.elements) {
        SignedPermutation x = g * c;
        if (best.empty()) {
            best.push_back(x);
            continue;
        }
        const int cmp = compare_signs(x.sign(), best.front().sign());
        if (cmp < 0) {
            best.clear();
            best.push_back(x);
        } else if (cmp == 0) {
            best.push_back(x);
        }
    }
    return *std::min_element(best.begin(), best.end(), [](const auto& a, const auto& b) {
        return format_cycles(a.perm()) < format_cycles(b.perm());
    });
}

// Integer partitions of n, parts non-increasing.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

// --- ElementIndex --------------------------------------------------------------------

ElementIndex::ElementIndex(const std::vector<SignedPermutation>& elems) {
    map_.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) map_.emplace(elems[i], i);
}

std::optional<std::size_t> ElementIndex::find(const SignedPermutation& x) const {
    auto it = map_.find(x);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

std::size_t ElementIndex::at(const SignedPermutation& x) const {
    auto it = map_.find(x);
    if (it == map_.end()) throw std::out_of_range("element " + format(x) + " not in list");
    return it->second;
}

// --- classes and centralizers ------------------------------------------------------------

ConjugacyClass conjugacy_class(const Group& g, const SignedPermutation& s,
                               const EnumerationBudget& budget) {
    check_member(g, s);
    check_budget(g, budget);
    const auto gens = g.generators();
    std::unordered_map<SignedPermutation, bool, SignedPermutationHash> seen;
    std::vector<SignedPermutation> orbit{s};
    seen.emplace(s, true);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (const auto& h : gens) {
            SignedPermutation t = conjugate(h, orbit[k]);
            if (seen.emplace(t, true).second) orbit.push_back(t);
        }
    }
    std::vector<SignedPermutation> rest(orbit.begin() + 1, orbit.end());
    sort_canonical(rest);
    ConjugacyClass cls{g, s, {s}, signed_cycle_type(s), {}};
    cls.elements.insert(cls.elements.end(), rest.begin(), rest.end());
    cls.index = ElementIndex(cls.elements);
    return cls;
}

Centralizer centralizer(const Group& g, const SignedPermutation& s, const EnumerationBudget& budget) {
    check_member(g, s);
    check_budget(g, budget);
    const auto gens = g.generators();

    // Orbit with transversal, then Schreier generators of the stabilizer.
    std::vector<SignedPermutation> orbit{s};
    std::vector<SignedPermutation> trans{g.identity()};
    std::unordered_map<SignedPermutation, std::size_t, SignedPermutationHash> pos{{s, 0}};
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (const auto& h : gens) {
            SignedPermutation t = conjugate(h, orbit[k]);
            if (pos.emplace(t, orbit.size()).second) {
                orbit.push_back(t);
                trans.push_back(h * trans[k]);
            }
        }
    }

    std::vector<SignedPermutation> elems{g.identity()};
    std::unordered_map<SignedPermutation, bool, SignedPermutationHash> member{{g.identity(), true}};
    std::vector<SignedPermutation> sgens;
    auto add_generator = [&](const SignedPermutation& x) {
        if (member.count(x)) return;
        sgens.push_back(x);
        std::vector<SignedPermutation> queue;
        for (const auto& e : elems) {
            SignedPermutation y = e * x;
            if (member.emplace(y, true).second) queue.push_back(y);
        }
        for (std::size_t q = 0; q < queue.size(); ++q) {
            elems.push_back(queue[q]);
            for (const auto& z : sgens) {
                SignedPermutation y = queue[q] * z;
                if (member.emplace(y, true).second) queue.push_back(y);
            }
        }
    };
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (const auto& h : gens) {
            const std::size_t l = pos.at(conjugate(h, orbit[k]));
            add_generator(trans[l].inverse() * h * trans[k]);
        }
    }

    sort_canonical(elems);
    Centralizer c{g, s, std::move(elems), std::move(sgens), {}};
    c.index = ElementIndex(c.elements);
    return c;
}

CosetSystem coset_system(const ConjugacyClass& cls, const Centralizer& cent) {
    if (cls.rep != cent.base) throw std::invalid_argument("class and centralizer have different bases");
    const auto gens = cls.group.generators();
    std::vector<std::optional<SignedPermutation>> any(cls.size());
    any[0] = cls.group.identity();
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        for (const auto& h : gens) {
            const std::size_t l = cls.index.at(conjugate(h, cls.elements[k]));
            if (!any[l]) {
                any[l] = h * *any[k];
                queue.push_back(l);
            }
        }
    }
    CosetSystem sys;
    sys.reps.reserve(cls.size());
    sys.reps.push_back(cls.group.identity());
    for (std::size_t i = 1; i < cls.size(); ++i) sys.reps.push_back(least_in_coset(*any[i], cent));
    return sys;
}

// --- transposition preset ---------------------------------------------------------------

std::size_t TranspositionPreset::position(int i, int j) const {
    const int n = cls.group.n;
    return cls.index.at(lift_unsigned(Permutation::cycle(n, {i - 1, j - 1})));
}

TranspositionPreset transposition_preset(int n) {
    if (n < 2) throw std::invalid_argument("transposition preset needs n >= 2");
    const Group g = Group::symmetric(n);
    const SignedPermutation s = lift_unsigned(Permutation::cycle(n, {0, 1}));
    TranspositionPreset p{conjugacy_class(g, s), centralizer(g, s), {}};
    p.cosets.preset = true;
    p.cosets.reps.resize(p.cls.size());
    auto tr = [n](int a, int b) { return Permutation::cycle(n, {a - 1, b - 1}); };
    for (std::size_t idx = 0; idx < p.cls.size(); ++idx) {
        const auto cyc = p.cls.elements[idx].perm().cycles();
        int k = 0;
        int j = 0;
        for (const auto& c : cyc)
            if (c.size() == 2) {
                k = c[0] + 1;
                j = c[1] + 1;
            }
        Permutation rep(n);
        if (k == 1 && j == 2)
            rep = Permutation(n);
        else if (k == 1)
            rep = tr(2, j);
        else if (k == 2)
            rep = tr(1, j);
        else
            rep = tr(1, k) * tr(2, j);
        p.cosets.reps[idx] = lift_unsigned(rep);
    }
    return p;
}

// --- zeta ----------------------------------------------------------------------------

ZetaResult zeta(const ConjugacyClass& cls, const CosetSystem& sys, std::size_t i,
                const SignedPermutation& h) {
    const std::size_t j = cls.index.at(conjugate(h, cls.elements.at(i)));
    return {j, sys.reps[j].inverse() * h * sys.reps[i]};
}

ZetaResult zeta_right(const ConjugacyClass& cls, const CosetSystem& sys, std::size_t i,
                      const SignedPermutation& x) {
    const std::size_t ip = cls.index.at(conjugate(x.inverse(), cls.elements.at(i)));
    return {ip, sys.reps[i].inverse() * x * sys.reps[ip]};
}

// --- juxtaposition factorizations --------------------------------------------------------

std::optional<std::pair<SignedPermutation, SignedPermutation>> split_juxtaposition(
    const SignedPermutation& z, int n) {
    const int total = z.degree();
    const int m = total - n;
    if (n < 1 || m < 1) throw std::invalid_argument("split point out of range");
    std::vector<int> left(static_cast<std::size_t>(n));
    std::vector<int> right(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) {
        const int v = z.perm()(i);
        if (v >= n) return std::nullopt;
        left[static_cast<std::size_t>(i)] = v;
    }
    for (int i = 0; i < m; ++i) right[static_cast<std::size_t>(i)] = z.perm()(n + i) - n;
    const std::uint32_t bits = z.sign().bits();
    return std::make_pair(
        SignedPermutation(SignVector(n, bits & ((1u << n) - 1u)), Permutation::from_images(left)),
        SignedPermutation(SignVector(m, bits >> n), Permutation::from_images(right)));
}

CentralizerFactorization centralizer_factorization(const SignedPermutation& x,
                                                   const SignedPermutation& y,
                                                   const EnumerationBudget& budget) {
    if (!orthogonal(x, y))
        throw std::invalid_argument("centralizer factorization needs orthogonal factors");
    const int n = x.degree();
    const int m = y.degree();
    CentralizerFactorization f{centralizer(Group::signed_group(n), x, budget),
                               centralizer(Group::signed_group(m), y, budget),
                               centralizer(Group::signed_group(n + m), juxtapose(x, y), budget),
                               {},
                               false,
                               {}};
    if (f.whole.order() != f.left.order() * f.right.order()) {
        f.witness = "order mismatch";
        return f;
    }
    f.factors.reserve(f.whole.order());
    for (const auto& z : f.whole.elements) {
        auto parts = split_juxtaposition(z, n);
        auto l = parts ? f.left.index.find(parts->first) : std::nullopt;
        auto r = parts ? f.right.index.find(parts->second) : std::nullopt;
        if (!l || !r || nu_right(parts->first, m) * nu_left(n, parts->second) != z) {
            f.factors.clear();
            f.witness = format(z);
            return f;
        }
        f.factors.emplace_back(*l, *r);
    }
    f.bijective = true;
    return f;
}

ConjugacyClass class_juxtaposition(const SignedPermutation& x, const SignedPermutation& y,
                                   const EnumerationBudget& budget) {
    if (!orthogonal(x, y)) throw std::invalid_argument("class juxtaposition needs orthogonal factors");
    const int n = x.degree();
    const int m = y.degree();
    const auto cx = conjugacy_class(Group::signed_group(n), x, budget);
    const auto cy = conjugacy_class(Group::signed_group(m), y, budget);
    const SignedPermutation s = juxtapose(x, y);
    const SignedCycleType key = signed_cycle_type(s);
    check_budget(Group::signed_group(n + m), budget);

    // Block-position shuffles: increasing on both blocks.
    std::vector<Permutation> shuffles;
    for (std::uint32_t mask = 0; mask < (1u << (n + m)); ++mask) {
        if (std::popcount(mask) != n) continue;
        std::vector<int> img;
        for (int i = 0; i < n + m; ++i)
            if (mask & (1u << i)) img.push_back(i);
        for (int i = 0; i < n + m; ++i)
            if (!(mask & (1u << i))) img.push_back(i);
        shuffles.push_back(Permutation::from_images(img));
    }

    std::unordered_map<SignedPermutation, bool, SignedPermutationHash> seen;
    std::vector<SignedPermutation> rest;
    for (const auto& pi : shuffles) {
        const SignedPermutation lp = lift_unsigned(pi);
        for (const auto& u : cx.elements)
            for (const auto& v : cy.elements) {
                SignedPermutation z = conjugate(lp, juxtapose(u, v));
                if (signed_cycle_type(z) != key)
                    throw std::logic_error("juxtaposed element " + format(z) + " left the class");
                if (!seen.emplace(z, true).second)
                    throw std::logic_error("shuffled juxtapositions overlap at " + format(z));
                if (z != s) rest.push_back(z);
            }
    }
    sort_canonical(rest);
    ConjugacyClass cls{Group::signed_group(n + m), s, {s}, key, {}};
    cls.elements.insert(cls.elements.end(), rest.begin(), rest.end());
    cls.index = ElementIndex(cls.elements);
    return cls;
}

std::vector<SignedPermutation> class_representatives(const Group& g, const EnumerationBudget& budget) {
    check_budget(g, budget);
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(g.n, g.n, cur, parts);
    std::vector<SignedPermutation> reps;
    for (auto lambda : parts) {
        std::reverse(lambda.begin(), lambda.end());
        // For each distinct part length choose how many of its cycles are negative.
        std::vector<std::pair<int, int>> groups;  // (length, multiplicity)
        for (int l : lambda) {
            if (!groups.empty() && groups.back().first == l)
                ++groups.back().second;
            else
                groups.emplace_back(l, 1);
        }
        std::vector<int> negatives(groups.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == groups.size()) {
                std::vector<int> img(static_cast<std::size_t>(g.n));
                std::uint32_t bits = 0;
                int start = 0;
                for (std::size_t q = 0; q < groups.size(); ++q) {
                    for (int c = 0; c < groups[q].second; ++c) {
                        const int len = groups[q].first;
                        for (int t = 0; t < len; ++t)
                            img[static_cast<std::size_t>(start + t)] = start + (t + 1) % len;
                        if (c < negatives[q]) bits |= 1u << start;
                        start += len;
                    }
                }
                const SignedPermutation x(SignVector(g.n, bits), Permutation::from_images(img));
                const auto cls = conjugacy_class(g, x, budget);
                reps.push_back(*std::min_element(cls.elements.begin(), cls.elements.end(),
                                                 [](const auto& a, const auto& b) {
                                                     return canonical_less(a, b);
                                                 }));
                return;
            }
            const int hi = g.kind == GroupKind::Signed ? groups[k].second : 0;
            for (int neg = 0; neg <= hi; ++neg) {
                negatives[k] = neg;
                rec(k + 1);
            }
        };
        rec(0);
    }
    return reps;
}

}  // namespace nbn
