#include <random>
#include <string>

#include "doctest.h"
#include "nbn/rack.hpp"

using namespace nbn;

namespace {

SignedPermutation sp(const char* text) { return parse_signed(text); }

FiniteRack class_rack(const Group& g, const SignedPermutation& x) {
    return FiniteRack::from_class(conjugacy_class(g, x));
}

FiniteRack class_rack(const char* group, const char* elem) {
    const Group g = Group::parse(group);
    return class_rack(g, g.parse_element(elem));
}

// Exhaustive search over all labelings X -> {none, R, S}.
bool brute_type_d(const FiniteRack& X) {
    const std::size_t m = X.size();
    std::vector<int> lab(m, 0);
    while (true) {
        std::size_t k = 0;
        while (k < m && lab[k] == 2) lab[k++] = 0;
        if (k == m) return false;
        ++lab[k];
        bool witness = false;
        for (std::uint32_t r = 0; r < m && !witness; ++r)
            if (lab[r] == 1)
                for (std::uint32_t s = 0; s < m && !witness; ++s)
                    if (lab[s] == 2 && X.sq(r, s) != s) witness = true;
        if (!witness) continue;
        bool ok = true;
        for (std::uint32_t x = 0; x < m && ok; ++x)
            for (std::uint32_t y = 0; y < m && ok; ++y) {
                if (!lab[x] || !lab[y]) continue;
                const int l = lab[X.op(x, y)];
                if (lab[x] == lab[y] && l != lab[x]) ok = false;
                if (lab[x] != lab[y] && l != lab[y]) ok = false;
            }
        if (ok) return true;
    }
}

}  // namespace

TEST_CASE("sq examples") {
    const auto s3 = class_rack("S3", "(1 2)");
    const auto* c = s3.conjugation_class();
    const auto t12 = static_cast<std::uint32_t>(c->index.at(c->group.parse_element("(1 2)")));
    const auto t23 = static_cast<std::uint32_t>(c->index.at(c->group.parse_element("(2 3)")));
    CHECK(s3.sq(t12, t23) == t12);
    const Group s4 = Group::symmetric(4);
    const auto x = s4.parse_element("(1 2 3)");
    const auto y = s4.parse_element("(2 4 3)");
    CHECK(sq_generic(x, y) != y);
}

TEST_CASE("closed forms agree with multiplication") {
    std::mt19937_64 rng(17);
    int commuting = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Group g = Group::signed_group(n);
        const auto x = g.random_element(rng);
        auto y = g.random_element(rng);
        if (trial % 2) {
            // force commuting permutation parts: mu = tau^k
            Permutation mu(n);
            for (int k = static_cast<int>(rng() % 4); k > 0; --k) mu = mu * x.perm();
            y = SignedPermutation(y.sign(), mu);
        }
        const auto direct = sq_generic(x, y);
        REQUIRE(sq_formula_bn(x, y, SqPath::General) == direct);
        REQUIRE(direct.perm() == sq_perm(x.perm(), y.perm()));
        if (x.perm() * y.perm() == y.perm() * x.perm()) {
            ++commuting;
            REQUIRE(sq_formula_bn(x, y, SqPath::Commuting) == direct);
            REQUIRE(sq_fixes_commuting(x, y) == (direct == y));
            const SignedPermutation same(x.sign(), y.perm());
            REQUIRE(sq_sign_conjugate_pair(x.sign(), x.perm(), y.perm()) == sq_generic(x, same).sign());
        } else {
            REQUIRE_THROWS_AS(sq_sign_commuting(x, y), std::invalid_argument);
        }
    }
    CHECK(commuting > 5000);
    // The fault-injected form must disagree somewhere.
    bool differs = false;
    for (int trial = 0; trial < 200 && !differs; ++trial) {
        const auto x = Group::signed_group(4).random_element(rng);
        const SignedPermutation y(random_signs(4, rng), x.perm());
        differs = sq_sign_commuting(x, y, true) != sq_generic(x, y).sign();
    }
    CHECK(differs);
}

TEST_CASE("rack axioms") {
    const auto X = class_rack("B4", "1000;(1 2)(3 4)");
    const auto rep = check_rack_axioms(X);
    CHECK(rep.ok);
    CHECK(rep.exhaustive);
    const auto big = class_rack("B6", "100000;(1 2 3)");
    const auto rb = check_rack_axioms(big, 100, 5000);
    CHECK(rb.ok);
    CHECK_FALSE(rb.exhaustive);
    // Dihedral quandle of order 3 and a broken table.
    std::vector<std::vector<std::uint32_t>> d3(3, std::vector<std::uint32_t>(3));
    for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t j = 0; j < 3; ++j) d3[i][j] = (2 * i + 3 - j) % 3;
    const auto D = FiniteRack::from_table(d3);
    CHECK(check_rack_axioms(D).ok);
    CHECK(D.op_inverse(1, D.op(1, 2)) == 2);
    auto bad = d3;
    bad[0] = {0, 0, 1};
    CHECK_FALSE(check_rack_axioms(FiniteRack::from_table(bad)).ok);
    bad = d3;
    bad[0] = {1, 2, 0};
    CHECK_FALSE(check_rack_axioms(FiniteRack::from_table(bad)).ok);
}

TEST_CASE("certificate verification rejects broken certificates") {
    const auto X = class_rack("B5", "00000;(1 2 3 4 5)");
    const auto c = certificate_from_cosets(X, X.conjugation_class()->rep.perm(),
                                           X.conjugation_class()->rep.perm() * X.conjugation_class()->rep.perm());
    REQUIRE(c);
    CHECK(verify_certificate(X, *c).ok);
    auto broken = *c;
    broken.S.push_back(broken.R[0]);
    CHECK_FALSE(verify_certificate(X, broken).ok);
    broken = *c;
    broken.R.pop_back();
    CHECK_FALSE(verify_certificate(X, broken).ok);
    broken = *c;
    broken.s = broken.r;
    CHECK_FALSE(verify_certificate(X, broken).ok);
}

TEST_CASE("cycle-type constructions") {
    SearchConfig cfg;
    cfg.pullback = cfg.commuting_cosets = cfg.generated_subracks = false;
    for (const char* e : {"00000;(1 2 3 4 5)", "10000;(1 2 3 4 5)", "0000000;(1 2 3 4 5 6 7)",
                          "1000000;(1 2 3 4 5 6 7)"}) {
        CAPTURE(std::string(e));
        const auto X = class_rack(Group::signed_group(sp(e).degree()), sp(e));
        const auto res = find_type_d_certificate(X, cfg);
        REQUIRE(res.status == SearchStatus::Found);
        CHECK(res.strategy == "single-cycle-square");
        CHECK(verify_certificate(X, *res.certificate).ok);
    }
    for (const char* e : {"000000;(1 2 3)(4 5 6)", "100000;(1 2 3)(4 5 6)", "100100;(1 2 3)(4 5 6)",
                          "0000001;(1 2 3)(4 5 6)"}) {
        CAPTURE(std::string(e));
        const auto X = class_rack(Group::signed_group(sp(e).degree()), sp(e));
        const auto res = find_type_d_certificate(X, cfg);
        REQUIRE(res.status == SearchStatus::Found);
        CHECK(res.strategy == "two-three-cycles");
        CHECK(verify_certificate(X, *res.certificate).ok);
    }
    for (const char* e : {"0000000;(1 2 3)(4 5)(6 7)", "1001000;(1 2 3)(4 5)(6 7)"}) {
        CAPTURE(std::string(e));
        const auto X = class_rack(Group::signed_group(7), sp(e));
        const auto res = find_type_d_certificate(X, cfg);
        REQUIRE(res.status == SearchStatus::Found);
        CHECK(res.strategy == "three-cycle-double-transposition");
        CHECK(verify_certificate(X, *res.certificate).ok);
    }
    for (const char* e : {"0100;(3 4)", "01000;(3 4 5)", "00100;(1 2)"}) {
        CAPTURE(std::string(e));
        const auto X = class_rack(Group::signed_group(sp(e).degree()), sp(e));
        const auto res = find_type_d_certificate(X, cfg);
        REQUIRE(res.status == SearchStatus::Found);
        CHECK(res.strategy == "fixed-point-split");
        CHECK(verify_certificate(X, *res.certificate).ok);
    }
}

TEST_CASE("search agrees with an exhaustive oracle on small classes") {
    for (auto g : {Group::symmetric(3), Group::symmetric(4), Group::signed_group(2), Group::signed_group(3)})
        for (const auto& r : class_representatives(g)) {
            const auto X = class_rack(g, r);
            CAPTURE(g.format(r));
            const bool expected = brute_type_d(X);
            const auto res = find_type_d_certificate(X);
            REQUIRE(res.status != SearchStatus::BudgetExhausted);
            CHECK((res.status == SearchStatus::Found) == expected);
            if (res.certificate) CHECK(verify_certificate(X, *res.certificate).ok);
        }
    const auto t = class_rack("S3", "(1 2)");
    const auto res = find_type_d_certificate(t);
    CHECK(res.status == SearchStatus::Exhausted);
    CHECK(res.attempted.back() == "generated-subracks");
}

TEST_CASE("step budget is reported") {
    const auto X = class_rack("B5", "00000;(1 2)");
    SearchConfig cfg;
    cfg.step_budget = 3;
    cfg.constructions = cfg.pullback = cfg.commuting_cosets = false;
    CHECK(find_type_d_certificate(X, cfg).status == SearchStatus::BudgetExhausted);
    cfg.step_budget = 50'000'000;
    CHECK(find_type_d_certificate(X, cfg).status == SearchStatus::Exhausted);
}

TEST_CASE("extension by juxtaposition") {
    const auto X = class_rack("B5", "10000;(1 2 3 4 5)");
    const auto res = find_type_d_certificate(X);
    REQUIRE(res.certificate);
    for (const char* y : {"0;()", "1;()", "00;(1 2)"}) {
        CAPTURE(y);
        const auto ext = juxtaposition_extend_certificate(X, *res.certificate, sp(y));
        CHECK(ext.rack.conjugation_class()->group.n == 5 + sp(y).degree());
        CHECK(verify_certificate(ext.rack, ext.certificate).ok);
    }
    auto broken = *res.certificate;
    broken.s = broken.r;
    CHECK_THROWS_AS(juxtaposition_extend_certificate(X, broken, sp("0;()")), std::invalid_argument);
}

TEST_CASE("pullback along the projection to S_n") {
    const auto X = class_rack("B5", "11000;(1 2 3 4 5)");
    const auto proj = project_to_symmetric(X);
    CHECK(verify_rack_epimorphism(X, proj.target, proj.hom).ok);
    SearchStatus st{};
    std::uint64_t steps = 0;
    const auto yc = certificate_from_generated_subracks(proj.target, 3, 50'000'000, &st, &steps);
    REQUIRE(yc);
    const auto xc = pullback_type_d(X, proj.target, proj.hom, *yc);
    CHECK(verify_certificate(X, xc).ok);
    CHECK(xc.R.size() == yc->R.size() * X.size() / proj.target.size());
    auto bad = proj.hom;
    std::size_t k = 1;
    while (bad[k] == bad[0]) ++k;
    std::swap(bad[0], bad[k]);
    CHECK_FALSE(verify_rack_epimorphism(X, proj.target, bad).ok);
    CHECK_THROWS_AS(pullback_type_d(X, proj.target, bad, *yc), std::invalid_argument);
}
