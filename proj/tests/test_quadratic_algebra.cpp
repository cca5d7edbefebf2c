#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "doctest.h"
#include "nbn/quadratic_algebra.hpp"

using namespace nbn;

namespace {

// Reduces a word to normal form choosing a random occurrence of a random leading word at each step.
NCPolynomial random_reduction(const GroebnerBasis& g, const NCWord& start, std::mt19937_64& rng) {
    std::map<NCWord, Cyclo> f{{start, Cyclo(1L)}};
    while (true) {
        std::vector<std::tuple<NCWord, std::size_t, std::size_t>> options;
        for (const auto& [w, v] : f)
            for (std::size_t e = 0; e < g.elements.size(); ++e) {
                const auto& lm = g.elements[e].front().first;
                for (auto pos = w.find(lm); pos != std::string::npos; pos = w.find(lm, pos + 1))
                    options.emplace_back(w, e, pos);
            }
        if (options.empty()) break;
        const auto [w, e, pos] = options[rng() % options.size()];
        const Cyclo coef = f.at(w);
        f.erase(w);
        const auto& el = g.elements[e];
        const auto left = w.substr(0, pos);
        const auto right = w.substr(pos + el.front().first.size());
        for (std::size_t t = 1; t < el.size(); ++t) {
            auto& slot = f[left + el[t].first + right];
            slot -= coef * el[t].second;
            if (slot.is_zero()) f.erase(left + el[t].first + right);
        }
    }
    NCPolynomial out(f.rbegin(), f.rend());
    return out;
}

// x_{ij} = s_{ij} y_{ij} turns A(alpha, beta, gamma, lambda) into the algebra with these tables.
SignTables rescale(const SignTables& t, const std::map<std::array<int, 2>, int>& s) {
    SignTables r = t;
    for (auto& [k, v] : r.gamma) v = t.gamma.at(k) * s.at({k[0], k[1]}) * s.at({k[1], k[0]});
    for (auto& [k, v] : r.alpha) v = t.alpha.at(k) * s.at({k[2], k[0]}) * s.at({k[0], k[1]});
    for (auto& [k, v] : r.beta) v = t.beta.at(k) * s.at({k[2], k[0]}) * s.at({k[1], k[2]});
    return r;
}

}  // namespace

TEST_CASE("single nilpotent generator") {
    const auto p = fk_presentation(2);
    REQUIRE(p.generators.size() == 1);
    const auto g = nc_groebner(p, 4);
    REQUIRE(g.elements.size() == 1);
    CHECK(g.elements[0].size() == 1);
    CHECK(g.elements[0][0].first.size() == 2);
    const auto h = hilbert_series(g);
    CHECK(h.dims == std::vector<std::uint64_t>{1, 1});
    CHECK(h.terminated);
    CHECK_THROWS_AS(nc_groebner(p, 1), std::invalid_argument);
    CHECK_THROWS_AS(fk_presentation(1), std::invalid_argument);
}

TEST_CASE("E3 hilbert data") {
    const auto p = fk_presentation(3);
    const auto h = hilbert_series(p, 12);
    CHECK(h.dims == std::vector<std::uint64_t>{1, 3, 4, 3, 1});
    CHECK(h.terminated);
    CHECK(h.total() == 12);
    // No new basis elements beyond degree 5.
    const auto g = nc_groebner(p, 8);
    for (std::size_t d = 6; d < g.new_per_degree.size(); ++d) CHECK(g.new_per_degree[d] == 0);
    CHECK(hilbert_series(fk_presentation(3, FkForm::AllPairs), 12).dims == h.dims);
    // A(1, 1, -1, 1) is the all-pairs form verbatim.
    const auto a = a_algebra_presentation(SignTables::constant(3, 1, 1, -1, 1));
    const auto b = fk_presentation(3, FkForm::AllPairs);
    CHECK(a.relations == b.relations);
    CHECK(a.generators == b.generators);
}

TEST_CASE("E4 hilbert data") {
    const auto h = hilbert_series(fk_presentation(4), 12);
    CHECK(h.dims == std::vector<std::uint64_t>{1, 6, 19, 42, 71, 96, 106, 96, 71, 42, 19, 6, 1});
    CHECK(h.total() == 576);
    CHECK(h.terminated);
    const auto all = hilbert_series(fk_presentation(4, FkForm::AllPairs), 12);
    CHECK(all.dims == h.dims);
    CHECK(all.terminated);
}

TEST_CASE("generator order independence") {
    std::mt19937_64 rng(3);
    for (int n : {3, 4}) {
        const auto p = fk_presentation(n);
        const auto base = hilbert_series(p, default_degree_cap(n));
        std::vector<std::size_t> order(p.generators.size());
        std::iota(order.begin(), order.end(), 0);
        std::reverse(order.begin(), order.end());
        CHECK(hilbert_series(reorder_generators(p, order), default_degree_cap(n)).dims == base.dims);
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(hilbert_series(reorder_generators(p, order), default_degree_cap(n)).dims == base.dims);
    }
    CHECK_THROWS_AS(reorder_generators(fk_presentation(3), {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("confluence of reductions") {
    std::mt19937_64 rng(11);
    for (int n : {3, 4}) {
        const auto g = nc_groebner(fk_presentation(n), 7);
        for (int s = 0; s < 150; ++s) {
            const std::size_t len = 1 + rng() % 7;
            NCWord w;
            for (std::size_t k = 0; k < len; ++k) w.push_back(static_cast<char>(rng() % g.generators));
            const auto nf = normal_form(g, {{w, Cyclo(1L)}});
            for (int trial = 0; trial < 3; ++trial) REQUIRE(random_reduction(g, w, rng) == nf);
        }
    }
}

TEST_CASE("sign table change of basis") {
    std::mt19937_64 rng(5);
    for (int n : {3, 4}) {
        const auto base = SignTables::constant(n, 1, 1, -1, 1);
        const auto ref = hilbert_series(a_algebra_presentation(base), 7);
        for (int trial = 0; trial < 3; ++trial) {
            std::map<std::array<int, 2>, int> s;
            for (const auto& [k, v] : base.gamma) s[k] = (rng() & 1) ? 1 : -1;
            CHECK(hilbert_series(a_algebra_presentation(rescale(base, s)), 7).dims == ref.dims);
        }
        // Flipping every x_{ji} with i < j turns gamma = -1 into gamma = 1.
        std::map<std::array<int, 2>, int> flip;
        for (const auto& [k, v] : base.gamma) flip[k] = k[0] < k[1] ? 1 : -1;
        const auto r = rescale(base, flip);
        CHECK(r.gamma.begin()->second == 1);
        CHECK(hilbert_series(a_algebra_presentation(r), 7).dims == ref.dims);
    }
}

TEST_CASE("malformed and inconsistent tables") {
    auto t = SignTables::constant(3, 1, 1, -1, 1);
    t.alpha[{1, 2, 3}] = 2;
    CHECK_THROWS_AS(a_algebra_presentation(t), std::invalid_argument);
    t = SignTables::constant(3, 1, 1, -1, 1);
    t.beta.erase({2, 3, 1});
    CHECK_THROWS_AS(a_algebra_presentation(t), std::invalid_argument);
    // gamma_{12} gamma_{21} = -1 kills x_{12}.
    t = SignTables::constant(3, 1, 1, -1, 1);
    t.gamma[{1, 2}] = 1;
    const auto p = a_algebra_presentation(t);
    CHECK_FALSE(p.notes.empty());
    CHECK(hilbert_series(p, 6).dims[1] == 2);
    // All gamma products -1: every generator vanishes.
    t = SignTables::constant(3, 1, 1, -1, 1);
    for (auto& [k, v] : t.gamma) v = k[0] < k[1] ? 1 : -1;
    const auto h = hilbert_series(a_algebra_presentation(t), 4);
    CHECK(h.whole_algebra);
    CHECK(h.terminated);
}

TEST_CASE("tables from transposition braidings") {
    for (int n : {3, 4})
        for (auto chi : {TranspositionCharacter::SignSign, TranspositionCharacter::SwapSign}) {
            const auto m = transposition_module(n, chi);
            const auto c = braiding(m);
            const auto t = sign_tables_from_transpositions(m);
            const auto h = hilbert_series(a_algebra_presentation(t), n == 3 ? 6 : 5);
            const auto nd = nichols_graded_dim(c, n == 3 ? 5 : 4);
            REQUIRE(h.dims.size() >= 3);
            CHECK(h.dims[1] == m.dim());
            CHECK(h.dims[2] == nd.dims[2]);
            // The quadratic cover dominates the Nichols algebra.
            for (std::size_t d = 0; d < nd.dims.size(); ++d) CHECK((d < h.dims.size() ? h.dims[d] : 0) >= nd.dims[d]);
        }
    CHECK_THROWS_AS(sign_tables_from_transpositions(transposition_module(3, TranspositionCharacter::Trivial)),
                    std::invalid_argument);
}
