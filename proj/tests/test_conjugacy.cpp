#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "nbn/conjugacy.hpp"

using namespace nbn;

namespace {

SignedPermutation sp(const char* text) { return parse_signed(text); }

std::set<std::string> brute_orbit(const Group& g, const SignedPermutation& s) {
    std::set<std::string> out;
    for (const auto& h : g.elements(kDefaultGroupCap)) out.insert(format(conjugate(h, s)));
    return out;
}

std::set<std::string> brute_centralizer(const Group& g, const SignedPermutation& s) {
    std::set<std::string> out;
    for (const auto& h : g.elements(kDefaultGroupCap))
        if (h * s == s * h) out.insert(format(h));
    return out;
}

std::set<std::string> keys(const std::vector<SignedPermutation>& xs) {
    std::set<std::string> out;
    for (const auto& x : xs) out.insert(format(x));
    return out;
}

}  // namespace

TEST_CASE("class sizes and orbit oracle") {
    for (int n = 3; n <= 5; ++n) {
        const Group g = Group::signed_group(n);
        std::vector<int> img(static_cast<std::size_t>(n));
        const auto t = lift_unsigned(Permutation::cycle(n, {0, 1}));
        const auto cls = conjugacy_class(g, t);
        CHECK(cls.size() == static_cast<std::size_t>(n * (n - 1)));
        CHECK(cls.elements[0] == t);
        CHECK(keys(cls.elements) == brute_orbit(g, t));
        const auto c = centralizer(g, t);
        CHECK(c.order() == (1u << n) * (n == 3 ? 1u : n == 4 ? 2u : 6u));
        CHECK(keys(c.elements) == brute_centralizer(g, t));
    }
    const Group s5 = Group::symmetric(5);
    CHECK(conjugacy_class(s5, s5.parse_element("(1 2)")).size() == 10);
    const Group s3 = Group::symmetric(3);
    CHECK(keys(centralizer(s3, s3.parse_element("(1 2)")).elements) ==
          std::set<std::string>{"000;()", "000;(1 2)"});
    const auto id = conjugacy_class(Group::signed_group(4), SignedPermutation(4));
    CHECK(id.size() == 1);
    CHECK(centralizer(Group::signed_group(4), SignedPermutation(4)).order() == 384);
}

TEST_CASE("signed cycle type is a complete class invariant for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const Group g = Group::signed_group(n);
        std::map<std::string, std::string> orbit_of;  // element -> orbit min
        for (const auto& x : g.elements(kDefaultGroupCap)) {
            auto orb = brute_orbit(g, x);
            orbit_of[format(x)] = *orb.begin();
        }
        const auto elems = g.elements(kDefaultGroupCap);
        for (const auto& x : elems)
            for (const auto& y : elems)
                REQUIRE((signed_cycle_type(x) == signed_cycle_type(y)) ==
                        (orbit_of[format(x)] == orbit_of[format(y)]));
    }
}

TEST_CASE("orbit-stabilizer for all classes n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (auto g : {Group::signed_group(n), Group::symmetric(n)}) {
            std::uint64_t total = 0;
            for (const auto& r : class_representatives(g)) {
                const auto cls = conjugacy_class(g, r);
                const auto c = centralizer(g, r);
                REQUIRE(cls.size() * c.order() == g.order_exact());
                for (const auto& z : c.elements) REQUIRE(z * r == r * z);
                total += cls.size();
            }
            REQUIRE(total == g.order_exact());
        }
}

TEST_CASE("phi maps classes into classes") {
    for (int n = 1; n <= 4; ++n) {
        const Group g = Group::signed_group(n);
        const Group g1 = Group::signed_group(n + 1);
        for (const auto& r : class_representatives(g)) {
            const auto big = conjugacy_class(g1, embed_phi(r));
            for (const auto& x : conjugacy_class(g, r).elements) REQUIRE(big.contains(embed_phi(x)));
        }
    }
}

TEST_CASE("coset systems") {
    for (int n = 2; n <= 4; ++n) {
        const Group g = Group::signed_group(n);
        for (const auto& r : class_representatives(g)) {
            const auto cls = conjugacy_class(g, r);
            const auto cent = centralizer(g, r);
            const auto sys = coset_system(cls, cent);
            REQUIRE(sys.reps[0].is_identity());
            std::set<std::string> cosets;
            for (std::size_t i = 0; i < cls.size(); ++i) {
                REQUIRE(conjugate(sys.reps[i], r) == cls.elements[i]);
                // least element of its coset
                for (const auto& c : cent.elements)
                    REQUIRE_FALSE(canonical_less(sys.reps[i] * c, sys.reps[i]));
            }
        }
    }
}

TEST_CASE("transposition preset table") {
    const auto p = transposition_preset(5);
    const Group g = Group::symmetric(5);
    CHECK(p.cosets.reps[p.position(1, 2)].is_identity());
    CHECK(p.cosets.reps[p.position(1, 4)] == g.parse_element("(2 4)"));
    CHECK(p.cosets.reps[p.position(2, 5)] == g.parse_element("(1 5)"));
    CHECK(p.cosets.reps[p.position(3, 5)] == g.parse_element("(1 3)(2 5)"));
    for (std::size_t i = 0; i < p.cls.size(); ++i)
        CHECK(conjugate(p.cosets.reps[i], p.cls.rep) == p.cls.elements[i]);
}

TEST_CASE("zeta decompositions") {
    std::mt19937_64 rng(21);
    const Group g = Group::signed_group(4);
    const auto s = sp("1000;(1 2)(3 4)");
    const auto cls = conjugacy_class(g, s);
    const auto cent = centralizer(g, s);
    const auto sys = coset_system(cls, cent);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t i = rng() % cls.size();
        const auto h = g.random_element(rng);
        const auto z = zeta(cls, sys, i, h);
        REQUIRE(h * sys.reps[i] == sys.reps[z.j] * z.gamma);
        REQUIRE(cent.index.find(z.gamma).has_value());
        const auto zr = zeta_right(cls, sys, i, h.inverse());
        REQUIRE(zr.j == z.j);
        REQUIRE(zr.gamma == z.gamma.inverse());
    }
    const auto z0 = zeta(cls, sys, 3, g.identity());
    CHECK(z0.j == 3);
    CHECK(z0.gamma.is_identity());
}

TEST_CASE("centralizer factorization and class juxtaposition") {
    std::mt19937_64 rng(4);
    int tested = 0;
    while (tested < 40) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int m = 1 + static_cast<int>(rng() % (6 - n));
        const auto x = Group::signed_group(n).random_element(rng);
        const auto y = Group::signed_group(m).random_element(rng);
        if (!orthogonal(x, y)) {
            CHECK_THROWS_AS(centralizer_factorization(x, y), std::invalid_argument);
            continue;
        }
        ++tested;
        const auto f = centralizer_factorization(x, y);
        REQUIRE(f.bijective);
        REQUIRE(f.whole.order() == f.left.order() * f.right.order());
        const auto cls = class_juxtaposition(x, y);
        const auto direct = conjugacy_class(Group::signed_group(n + m), juxtapose(x, y));
        REQUIRE(keys(cls.elements) == keys(direct.elements));
        const auto cx = conjugacy_class(Group::signed_group(n), x);
        const auto cy = conjugacy_class(Group::signed_group(m), y);
        std::uint64_t binom = 1;
        for (int k = 1; k <= n; ++k) binom = binom * static_cast<std::uint64_t>(m + k) / static_cast<std::uint64_t>(k);
        REQUIRE(direct.size() == binom * cx.size() * cy.size());
        for (const auto& u : cx.elements)
            for (const auto& v : cy.elements) REQUIRE(direct.contains(juxtapose(u, v)));
    }
    // Identity of B_1 contributes the full B_1 factor.
    const auto f = centralizer_factorization(SignedPermutation(1), sp("00;(1 2)"));
    CHECK(f.left.order() == 2);
    CHECK(f.bijective);
    // The juxtaposed classes alone do not exhaust the class: (1 3) is missed.
    const auto j = class_juxtaposition(sp("00;(1 2)"), sp("0;()"));
    CHECK(j.size() == 6);
    CHECK(j.contains(sp("000;(1 3)")));
    // Exhaustive membership for n + m <= 5 against brute force.
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; n + m <= 5; ++m)
            for (const auto& x : class_representatives(Group::signed_group(n)))
                for (const auto& y : class_representatives(Group::signed_group(m))) {
                    if (!orthogonal(x, y)) continue;
                    const auto fx = centralizer_factorization(x, y);
                    REQUIRE(fx.bijective);
                    REQUIRE(keys(fx.whole.elements) ==
                            brute_centralizer(Group::signed_group(n + m), juxtapose(x, y)));
                }
}

TEST_CASE("budget refusal") {
    EnumerationBudget tiny{100};
    CHECK_THROWS_AS(conjugacy_class(Group::signed_group(4), SignedPermutation(4), tiny), BudgetExceeded);
}
