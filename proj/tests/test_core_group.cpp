#include <random>
#include <set>

#include "doctest.h"
#include "nbn/core_group.hpp"

using namespace nbn;

namespace {

SignedPermutation sp(const char* text) { return parse_signed(text); }

// Hand expansion of the product law with 1-based lists, independent of the library.
struct Raw {
    std::vector<int> a;
    std::vector<int> t;  // 0-based images
};

Raw raw_mul(const Raw& x, const Raw& y) {
    const std::size_t n = x.t.size();
    Raw r{std::vector<int>(n), std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        // (tau . b)_i = b_{tau^{-1}(i)}
        std::size_t pre = 0;
        while (static_cast<std::size_t>(x.t[pre]) != i) ++pre;
        r.a[i] = (x.a[i] + y.a[pre]) % 2;
        r.t[i] = x.t[static_cast<std::size_t>(y.t[i])];
    }
    return r;
}

Raw to_raw(const SignedPermutation& x) {
    Raw r;
    for (int i = 0; i < x.degree(); ++i) {
        r.a.push_back(x.sign()[i]);
        r.t.push_back(x.perm()(i));
    }
    return r;
}

}  // namespace

TEST_CASE("product law examples") {
    CHECK(sp("00;()") * sp("10;(1 2)") == sp("10;(1 2)"));
    CHECK(sp("11;(1 2)") * sp("11;(1 2)") == sp("00;()"));
    CHECK(conjugate(sp("100;()"), sp("000;(1 2)")) == sp("110;(1 2)"));
    CHECK(juxtapose(sp("11;(1 2)"), sp("0;()")) == sp("110;(1 2)"));
    CHECK_THROWS_AS((void)(sp("00;()") * sp("000;()")), DegreeMismatch);
}

TEST_CASE("product agrees with a hand-expanded oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Group g = Group::signed_group(n);
        const auto x = g.random_element(rng);
        const auto y = g.random_element(rng);
        const Raw r = raw_mul(to_raw(x), to_raw(y));
        const Raw z = to_raw(x * y);
        REQUIRE(r.a == z.a);
        REQUIRE(r.t == z.t);
    }
}

TEST_CASE("group axioms and action compatibility") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Group g = Group::signed_group(n);
        const auto x = g.random_element(rng);
        const auto y = g.random_element(rng);
        const auto z = g.random_element(rng);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * g.identity() == x);
        REQUIRE(x * x.inverse() == g.identity());
        REQUIRE(x.inverse() * x == g.identity());
        const auto t = random_permutation(n, rng);
        const auto m = random_permutation(n, rng);
        const auto a = random_signs(n, rng);
        REQUIRE(act(t, act(m, a)) == act(t * m, a));
        REQUIRE(a + a == SignVector(n));
    }
}

TEST_CASE("signed cycle type") {
    const auto x = sp("11111;(1 2 3 4 5)");
    const auto t = signed_cycle_type(x);
    REQUIRE(t.cycles.size() == 1);
    CHECK(t.cycles[0].length == 5);
    CHECK(t.cycles[0].parity == 1);
    const auto y = sp("0000;(1 2)");
    const auto u = signed_cycle_type(y);
    CHECK(u.to_string() == "1+ 1+ 2+");
    CHECK(u.degree() == 4);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        const Group g = Group::signed_group(1 + static_cast<int>(rng() % 6));
        const auto a = g.random_element(rng);
        const auto h = g.random_element(rng);
        REQUIRE(signed_cycle_type(conjugate(h, a)) == signed_cycle_type(a));
    }
}

TEST_CASE("embedding, projection and juxtaposition laws") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const int m = 1 + static_cast<int>(rng() % 5);
        const Group gn = Group::signed_group(n);
        const Group gm = Group::signed_group(m);
        const auto x = gn.random_element(rng);
        const auto x2 = gn.random_element(rng);
        const auto y = gm.random_element(rng);
        const auto y2 = gm.random_element(rng);
        REQUIRE(embed_phi(x * x2) == embed_phi(x) * embed_phi(x2));
        REQUIRE(project_pi(x * x2) == project_pi(x) * project_pi(x2));
        REQUIRE(juxtapose(x, y) * juxtapose(x2, y2) == juxtapose(x * x2, y * y2));
        REQUIRE(juxtapose(x, y) == nu_right(x, m) * nu_left(n, y));
        REQUIRE(juxtapose(x, y) == nu_left(n, y) * nu_right(x, m));
        REQUIRE(conjugate(juxtapose(x, y), juxtapose(x2, y2)) ==
                juxtapose(conjugate(x, x2), conjugate(y, y2)));
    }
    CHECK(embed_phi(SignedPermutation(3)).is_identity());
    CHECK(embed_phi(SignedPermutation(3)).degree() == 4);
}

TEST_CASE("orthogonality") {
    CHECK(orthogonal(sp("00;(1 2)"), sp("0;()")));
    CHECK_FALSE(orthogonal(sp("000;(1 2)"), sp("0;()")));
    CHECK(orthogonal(sp("000;(1 2 3)"), sp("11;()")));
}

TEST_CASE("text format round trip") {
    CHECK(format(sp("00000;()")) == "00000;()");
    CHECK(format(sp("11010;(4 5)(3 1 2)")) == "11010;(1 2 3)(4 5)");
    CHECK(format_cycles(parse_permutation("(1 2)(2 3)", 3)) == "(1 2 3)");
    CHECK_THROWS_AS(parse_signed("10;(1 3)"), ParseError);
    CHECK_THROWS_AS(parse_signed("1x;()"), ParseError);
    CHECK_THROWS_AS(parse_signed("(1 2)"), ParseError);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        const Group g = Group::signed_group(1 + static_cast<int>(rng() % 12));
        const auto x = g.random_element(rng);
        REQUIRE(parse_signed(format(x)) == x);
    }
    const Group s4 = Group::parse("S4");
    CHECK(s4.format(s4.parse_element("(2 3)")) == "(2 3)");
    CHECK_THROWS_AS(s4.parse_element("1000;()"), ParseError);
    CHECK(Group::parse("B5").order_exact() == 3840);
}

TEST_CASE("element enumeration and generators") {
    for (int n = 1; n <= 4; ++n) {
        for (auto g : {Group::signed_group(n), Group::symmetric(n)}) {
            const auto elems = g.elements(kDefaultGroupCap);
            REQUIRE(elems.size() == g.order_exact());
            std::set<std::string> keys;
            for (const auto& e : elems) keys.insert(format(e));
            REQUIRE(keys.size() == elems.size());
            // Closure of the generators is the whole group.
            std::set<std::string> seen{format(g.identity())};
            std::vector<SignedPermutation> q{g.identity()};
            for (std::size_t k = 0; k < q.size(); ++k)
                for (const auto& h : g.generators()) {
                    auto y = h * q[k];
                    if (seen.insert(format(y)).second) q.push_back(y);
                }
            REQUIRE(q.size() == g.order_exact());
        }
    }
    CHECK_THROWS_AS(Group::signed_group(12).elements(kDefaultGroupCap), BudgetExceeded);
}
