#include <random>
#include <string>

#include "doctest.h"
#include "nbn/representation.hpp"

using namespace nbn;

namespace {

SignedPermutation sp(const char* text) { return parse_signed(text); }

std::shared_ptr<const Centralizer> cent_of(const Group& g, const SignedPermutation& s) {
    return std::make_shared<const Centralizer>(centralizer(g, s));
}

Cyclo trace(const CMatrix& m) {
    Cyclo t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

// Frobenius: (1/|H|) sum over x in G with x^{-1} g x in H of chi(x^{-1} g x).
Cyclo induced_character(const Centralizer& G, const MatrixRep& chi, const SignedPermutation& g) {
    Cyclo sum;
    for (const auto& x : G.elements) {
        const auto c = x.inverse() * g * x;
        if (chi.group->index.find(c)) sum += trace(chi(c));
    }
    return sum / Cyclo(static_cast<long>(chi.group->order()));
}

}  // namespace

TEST_CASE("characters on transposition centralizers") {
    for (int n = 2; n <= 5; ++n) {
        const Group g = Group::symmetric(n);
        const auto c = cent_of(g, g.parse_element("(1 2)"));
        const auto eps = trivial_rep(c);
        const auto sgn = sign_rep(c);
        const auto swap = swap_character(c, 0, 1);
        for (const auto* r : {&eps, &sgn, &swap}) {
            CHECK(check_homomorphism(*r).ok);
            CHECK(r->integral());
            CHECK(scalar_order(q_value(*r)) <= 2);
        }
        CHECK(q_value(eps) == Cyclo(1L));
        CHECK(q_value(sgn) == Cyclo(-1L));
        CHECK(q_value(swap) == Cyclo(-1L));
        if (n >= 4) CHECK(sgn(g.parse_element("(3 4)")).operator()(0, 0) == Cyclo(-1L));
        if (n >= 4) CHECK(swap(g.parse_element("(3 4)")).operator()(0, 0) == Cyclo(1L));
    }
    const Group b3 = Group::signed_group(3);
    const auto c = cent_of(b3, sp("111;(1 2 3)"));
    const auto chi = sign_vector_character(c, SignVector::all_ones(3));
    CHECK(chi(sp("111;()"))(0, 0) == Cyclo(-1L));
    CHECK(check_homomorphism(chi).ok);
}

TEST_CASE("generator assignments") {
    const Group s3 = Group::symmetric(3);
    const auto c = cent_of(s3, s3.parse_element("(1 2)"));
    REQUIRE(c->generators.size() >= 1);
    std::vector<Cyclo> minus(c->generators.size(), Cyclo(-1L));
    const auto rho = char_rep(c, minus);
    CHECK(q_value(rho) == Cyclo(-1L));
    std::vector<Cyclo> bad(c->generators.size(), Cyclo::root(3, 1));
    CHECK_THROWS_AS(char_rep(c, bad), InconsistentAssignment);
    const auto c3 = cent_of(s3, s3.parse_element("(1 2 3)"));
    std::vector<Cyclo> w(c3->generators.size(), Cyclo::root(3, 1));
    const auto r3 = char_rep(c3, w);
    CHECK(check_homomorphism(r3).ok);
    CHECK(r3.conductor() == 3);
    const int o = scalar_order(q_value(r3));
    CHECK(3 % o == 0);
}

TEST_CASE("outer tensor over juxtaposition") {
    std::mt19937_64 rng(8);
    int tested = 0;
    while (tested < 25) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % (5 - n));
        const auto x = Group::signed_group(n).random_element(rng);
        const auto y = Group::signed_group(m).random_element(rng);
        if (!orthogonal(x, y)) continue;
        ++tested;
        const auto c1 = cent_of(Group::signed_group(n), x);
        const auto c2 = cent_of(Group::signed_group(m), y);
        const auto eps = outer_tensor(trivial_rep(c1), trivial_rep(c2));
        CHECK(eps.group->base == juxtapose(x, y));
        for (const auto& t : eps.table) CHECK(t == identity_matrix(1));
        const auto rho = outer_tensor(sign_rep(c1), sign_rep(c2));
        REQUIRE(check_homomorphism(rho).ok);
        CHECK(q_value(rho) == q_value(sign_rep(c1)) * q_value(sign_rep(c2)));
        const int o = scalar_order(q_value(rho));
        CHECK(juxtapose(x, y).order() % o == 0);
    }
    // Degrees multiply with an induced factor.
    const auto cz = cent_of(Group::signed_group(4), sp("0000;(1 2)(3 4)"));
    const auto stab = sign_character_stabilizer(*cz, sp("1000;()").sign());
    const auto ind = induced_rep(cz, sign_vector_character(stab, sp("1000;()").sign()), left_transversal(*cz, *stab));
    REQUIRE(ind.degree > 1);
    const auto c2 = cent_of(Group::signed_group(1), sp("1;()"));
    const auto t = outer_tensor(ind, sign_vector_character(c2, SignVector::all_ones(1)));
    CHECK(t.degree == ind.degree);
    CHECK(check_homomorphism(t).ok);
    CHECK_THROWS_AS(outer_tensor(sign_rep(cent_of(Group::signed_group(2), sp("00;(1 2)"))),
                                 sign_rep(cent_of(Group::signed_group(2), sp("00;(1 2)")))),
                    std::invalid_argument);
}

TEST_CASE("induced representations") {
    const Group s3 = Group::symmetric(3);
    const auto whole = cent_of(s3, SignedPermutation(3));
    const auto h = subgroup_closure(*whole, {s3.parse_element("(1 2 3)")});
    const auto omega = char_rep(h, {Cyclo::root(3, 1)});
    const auto ind = induced_rep(whole, omega, left_transversal(*whole, *h));
    REQUIRE(check_homomorphism(ind).ok);
    for (const auto& g : whole->elements) CHECK(trace(ind(g)) == induced_character(*whole, omega, g));
    // Induction from the whole group is the identity operation.
    const auto sgn = sign_rep(whole);
    const auto same = induced_rep(whole, sgn, {s3.identity()});
    CHECK(same.table == sgn.table);
    // Invalid transversals.
    CHECK_THROWS_AS(induced_rep(whole, omega, {s3.identity(), s3.parse_element("(1 2 3)")}), std::invalid_argument);
    CHECK_THROWS_AS(induced_rep(whole, omega, {s3.identity()}), std::invalid_argument);
    // B_4 centralizer of a double transposition: dihedral-type subgroup induction.
    const Group b4 = Group::signed_group(4);
    const auto cz = cent_of(b4, sp("0000;(1 2)(3 4)"));
    const auto stab = sign_character_stabilizer(*cz, sp("1000;()").sign());
    CHECK(cz->order() % stab->order() == 0);
    const auto chi = sign_vector_character(stab, sp("1000;()").sign());
    const auto up = induced_rep(cz, chi, left_transversal(*cz, *stab));
    CHECK(up.degree == cz->order() / stab->order());
    REQUIRE(check_homomorphism(up).ok);
    for (const auto& g : cz->elements) REQUIRE(trace(up(g)) == induced_character(*cz, chi, g));
}

TEST_CASE("q-value requires a scalar image") {
    const Group s4 = Group::symmetric(4);
    const auto cz = cent_of(s4, s4.parse_element("(1 2)(3 4)"));
    const auto h = subgroup_closure(*cz, {s4.parse_element("(1 2)")});
    const auto ind = induced_rep(cz, trivial_rep(h), left_transversal(*cz, *h));
    REQUIRE(check_homomorphism(ind).ok);
    CHECK_THROWS_AS(q_value(ind), NonScalarImage);
}

TEST_CASE("finiteness filter rules") {
    const auto x = sp("00;(1 2)");
    const auto y = sp("1;()");
    const auto v = finiteness_filter(x, y, Cyclo(1L), Cyclo(1L));
    CHECK(v.violates);
    CHECK(v.fired.front() == "q-product");
    CHECK_FALSE(finiteness_filter(x, y, Cyclo(1L), Cyclo(-1L)).violates);
    // ord(q) must divide the element order.
    const auto r = finiteness_filter(sp("000;(1 2 3)"), sp("11;()"), Cyclo(-1L), Cyclo(1L));
    CHECK(r.violates);
    CHECK(r.fired.front() == "root-order");
}

TEST_CASE("juxtaposition case table") {
    using Opts = std::vector<std::pair<int, int>>;
    const Opts both{{1, -1}, {-1, 1}};
    const Opts plus_minus{{1, -1}};
    const Opts minus_plus{{-1, 1}};
    const std::vector<std::pair<std::string, Opts>> expected{
        {"i", both},       {"ii", both},        {"iii", minus_plus}, {"iv", plus_minus}, {"v", minus_plus},
        {"vi", plus_minus}, {"vii", both},      {"viii", minus_plus}, {"ix", both},      {"x", minus_plus}};
    const auto cases = juxtaposition_cases();
    REQUIRE(cases.size() == expected.size());
    for (std::size_t k = 0; k < cases.size(); ++k) {
        CAPTURE(cases[k].label);
        CHECK(cases[k].label == expected[k].first);
        CHECK(orthogonal(cases[k].x, cases[k].y));
        CHECK(admitted_sign_options(cases[k]) == expected[k].second);
    }
    CHECK(admitted_sign_options(cases[5], false) == both);
}
