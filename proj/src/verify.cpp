#include "nbn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nbn/representation.hpp"
#include "nbn/yd_nichols.hpp"

namespace nbn {

using nlohmann::json;

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(ScanOutcome o) {
    switch (o) {
        case ScanOutcome::Certificate: return "certificate";
        case ScanOutcome::ExceptionList: return "exception-list";
        case ScanOutcome::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

int exit_code(const std::vector<Status>& statuses) {
    bool inconclusive = false;
    for (auto s : statuses) {
        if (s == Status::Fail) return 1;
        if (s == Status::Inconclusive) inconclusive = true;
    }
    return inconclusive ? 2 : 0;
}

namespace {

/// Records the first failure; later ones only count.
struct Tally {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first;

    void check(bool ok, const std::function<std::string()>& witness) {
        ++checked;
        if (ok) return;
        if (failures++ == 0) first = witness();
    }
    void into(VerificationReport& r) const {
        r.checked += checked;
        if (failures > 0) {
            r.status = Status::Fail;
            if (r.counterexample.empty()) r.counterexample = first;
        }
    }
};

Permutation cycle_powers(const Permutation& tau, std::mt19937_64& rng) {
    std::vector<int> img(static_cast<std::size_t>(tau.degree()));
    for (const auto& c : tau.cycles()) {
        const std::size_t k = rng() % c.size();
        for (std::size_t i = 0; i < c.size(); ++i) img[static_cast<std::size_t>(c[i])] = c[(i + k) % c.size()];
    }
    return Permutation::from_images(img);
}

SignedPermutation with_signs(const SignVector& a, const Permutation& p) { return SignedPermutation(a, p); }

SignVector signs_of(const std::vector<int>& bits) { return SignVector::from_bits(bits); }

std::shared_ptr<const ConjugacyClass> class_of(const Group& g, const SignedPermutation& x, std::uint64_t cap) {
    return std::make_shared<const ConjugacyClass>(conjugacy_class(g, x, EnumerationBudget{cap}));
}

json certificate_json(const FiniteRack& rack, const TypeDCertificate& c) {
    json j = nbn::to_json(rack, c);
    j["r_element"] = rack.label(c.r);
    j["s_element"] = rack.label(c.s);
    return j;
}

// --- closed forms -----------------------------------------------------------------------------

VerificationReport check_closed_forms(const VerifyConfig& cfg) {
    VerificationReport r;
    r.statement = "closed forms of sq((a,tau),(b,mu)) agree with group multiplication";
    r.exhaustive = false;
    std::mt19937_64 rng(cfg.seed);
    Tally general, commuting, fixes, conj_pair, involution;
    std::uint64_t conj_attempts = 0;
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.closed_form_max_n));
        const Group g = Group::signed_group(n);
        const auto x = g.random_element(rng);
        const auto y = g.random_element(rng);
        general.check(sq_formula_bn(x, y, SqPath::General) == sq_generic(x, y),
                      [&] { return "general form: x = " + format(x) + ", y = " + format(y); });

        const auto yc = with_signs(random_signs(n, rng), cycle_powers(x.perm(), rng));
        const auto direct = sq_generic(x, yc);
        commuting.check(sq_sign_commuting(x, yc, cfg.inject_fault) == direct.sign() &&
                            sq_formula_bn(x, yc, SqPath::Commuting) == direct,
                        [&] { return "commuting form: x = " + format(x) + ", y = " + format(yc); });
        fixes.check(sq_fixes_commuting(x, yc) == (direct == yc),
                    [&] { return "fixed-point criterion: x = " + format(x) + ", y = " + format(yc); });

        // y = xi > x with xi.a = a and tau mu = mu tau.
        for (int attempt = 0; attempt < 20; ++attempt) {
            ++conj_attempts;
            const auto xi = random_permutation(n, rng);
            const auto& tau = x.perm();
            const auto mu = xi * tau * xi.inverse();
            if (!(mu * tau == tau * mu)) continue;
            std::vector<int> bits(static_cast<std::size_t>(n));
            for (const auto& c : xi.cycles()) {
                const int v = static_cast<int>(rng() & 1u);
                for (int p : c) bits[static_cast<std::size_t>(p)] = v;
            }
            const auto a = signs_of(bits);
            const auto xa = with_signs(a, tau);
            const auto ya = conjugate(lift_unsigned(xi), xa);
            conj_pair.check(ya.sign() == a && sq_generic(xa, ya).sign() == sq_sign_conjugate_pair(a, tau, mu),
                            [&] { return "conjugate pair: x = " + format(xa) + ", xi = " + format_cycles(xi); });
            if (tau * tau == Permutation(n) && xi * tau == tau * xi)
                involution.check(sq_generic(xa, ya).sign() == a,
                                 [&] { return "involution case: x = " + format(xa) + ", xi = " + format_cycles(xi); });
            break;
        }
    }
    r.status = Status::Pass;
    for (const auto* t : {&general, &commuting, &fixes, &conj_pair, &involution}) t->into(r);
    r.payload = {{"general", general.checked},        {"commuting", commuting.checked},
                 {"fixed_point_criterion", fixes.checked}, {"conjugate_pair", conj_pair.checked},
                 {"involution", involution.checked},  {"conjugate_pair_attempts", conj_attempts}};
    r.config = {{"seed", cfg.seed}, {"samples", cfg.samples}, {"max_n", cfg.closed_form_max_n},
                {"inject_fault", cfg.inject_fault}};
    return r;
}

// --- juxtaposition laws ------------------------------------------------------------------------------

VerificationReport check_juxtaposition(const VerifyConfig& cfg) {
    VerificationReport r;
    r.statement = "juxtaposition laws: products, factorization through the two embeddings, conjugation, "
                  "centralizer factorization and class assembly";
    std::mt19937_64 rng(cfg.seed);
    Tally product, embed, conj, cent, cls, inclusion;
    for (std::uint64_t s = 0; s < cfg.juxtaposition_samples; ++s) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(8 - n));
        const Group gn = Group::signed_group(n), gm = Group::signed_group(m);
        const auto x = gn.random_element(rng), x2 = gn.random_element(rng);
        const auto y = gm.random_element(rng), y2 = gm.random_element(rng);
        const auto w = [&] { return "x = " + format(x) + ", x' = " + format(x2) + ", y = " + format(y) + ", y' = " + format(y2); };
        product.check(juxtapose(x, y) * juxtapose(x2, y2) == juxtapose(x * x2, y * y2), w);
        embed.check(juxtapose(x, y) == nu_right(x, m) * nu_left(n, y) && juxtapose(x, y) == nu_left(n, y) * nu_right(x, m), w);
        conj.check(conjugate(juxtapose(x, y), juxtapose(x2, y2)) == juxtapose(conjugate(x, x2), conjugate(y, y2)), w);
    }
    std::string literal_counterexample;
    std::uint64_t pairs = 0;
    for (int total = 2; total <= cfg.juxtaposition_exhaustive_max; ++total)
        for (int n = 1; n < total; ++n) {
            const int m = total - n;
            const Group gn = Group::signed_group(n), gm = Group::signed_group(m), gw = Group::signed_group(total);
            const auto xs = gn.elements(cfg.group_cap);
            const auto ys = gm.elements(cfg.group_cap);
            std::map<std::string, std::shared_ptr<const ConjugacyClass>> cache;
            auto cached = [&](const Group& g, const SignedPermutation& z) {
                const auto key = g.name() + signed_cycle_type(z).to_string();
                auto& slot = cache[key];
                if (!slot) slot = class_of(g, z, cfg.group_cap);
                return slot;
            };
            for (const auto& x : xs)
                for (const auto& y : ys) {
                    if (!orthogonal(x, y)) continue;
                    ++pairs;
                    const auto w = [&] { return "x = " + format(x) + ", y = " + format(y); };
                    const auto f = centralizer_factorization(x, y, EnumerationBudget{cfg.group_cap});
                    cent.check(f.bijective && f.whole.order() == f.left.order() * f.right.order(), w);
                    const auto z = juxtapose(x, y);
                    const auto whole = cached(gw, z);
                    bool assembled = true;
                    try {
                        const auto j = class_juxtaposition(x, y, EnumerationBudget{cfg.group_cap});
                        std::set<std::string> a, b;
                        for (const auto& e : j.elements) a.insert(format(e));
                        for (const auto& e : whole->elements) b.insert(format(e));
                        assembled = a == b;
                    } catch (const std::logic_error&) {
                        assembled = false;
                    }
                    cls.check(assembled, w);
                    const auto ox = cached(gn, x);
                    const auto oy = cached(gm, y);
                    bool inside = true;
                    for (const auto& u : ox->elements)
                        for (const auto& v : oy->elements) inside = inside && whole->contains(juxtapose(u, v));
                    inclusion.check(inside, w);
                    if (literal_counterexample.empty() && ox->size() * oy->size() != whole->size())
                        literal_counterexample = w() + ": |O_x#O_y| = " + std::to_string(ox->size() * oy->size()) +
                                                 ", |O_{x#y}| = " + std::to_string(whole->size());
                }
        }
    r.status = Status::Pass;
    for (const auto* t : {&product, &embed, &conj, &cent, &cls, &inclusion}) t->into(r);
    r.exhaustive = false;
    r.payload = {{"random_products", product.checked},
                 {"random_embeddings", embed.checked},
                 {"random_conjugations", conj.checked},
                 {"orthogonal_pairs_exhaustive", pairs},
                 {"literal_class_equality", literal_counterexample.empty() ? "holds" : "fails: " + literal_counterexample}};
    r.config = {{"seed", cfg.seed},
                {"samples", cfg.juxtaposition_samples},
                {"exhaustive_max_total_degree", cfg.juxtaposition_exhaustive_max}};
    return r;
}

}  // namespace

// --- transposition coset identities ---------------------------------------------------------

namespace {

using Env = std::map<std::string, int>;

struct RowRule {
    CosetIdentityRow row;
    std::function<bool(const Env&)> cond;
};

const std::vector<RowRule>& row_rules() {
    static const std::vector<RowRule> rows = [] {
        auto v = [](const Env& e, const char* s) { return e.at(s); };
        auto any = [](const Env&) { return true; };
        std::vector<RowRule> r{
            {{"(1 2) id|id (1 2)", ""}, any},
            {{"(1 2)(2 j)|(2 j 1)|(1 j)(1 2)", ""}, any},
            {{"(1 2)(1 j)|(1 j 2)|(2 j)(1 2)", ""}, any},
            {{"(1 2)(1 k)(2 j)|(1 k 2)(2 j)|(1 k)(2 j)(k j)", ""}, any},
            {{"(1 j) id|(1 j) id", ""}, any},
            {{"(1 j)(2 j)|(j 2 1)|(2 j)(1 2)", ""}, any},
            {{"(1 j)(2 j1)|(1 j)(2 j1) id", "j<j1"}, [=](const Env& e) { return v(e, "j") < v(e, "j1"); }},
            {{"(1 j)(2 j1)|(1 j1)(2 j)(j j1)(1 2)", "j>j1"}, [=](const Env& e) { return v(e, "j") > v(e, "j1"); }},
            {{"(1 j)(1 j)|id", ""}, any},
            {{"(1 j)(1 j1)|(1 j1 j)|(1 j1)(j j1)", ""}, any},
            {{"(1 j)(1 k)(2 j)|(1 k j)(2 j)|(2 k)(1 2)(k j)", ""}, any},
            {{"(1 j)(1 k)(2 j1)|(2 j1) id", "j=k"}, [=](const Env& e) { return v(e, "j") == v(e, "k"); }},
            {{"(1 j)(1 k)(2 j1)|(1 k)(k j)(2 j1)|(1 k)(2 j1)(k j)", "j!=j1"},
             [=](const Env& e) { return v(e, "j") != v(e, "j1"); }},
            {{"(2 j) id|(2 j) id", ""}, any},
            {{"(2 j)(2 j)|id", ""}, any},
            {{"(2 j)(2 j1)|(2 j1 j)|(2 j1)(j j1)", ""}, any},
            {{"(2 j)(1 j)|(j 1 2)|(1 j)(1 2)", ""}, any},
            {{"(2 j)(1 j1)|(1 j)(2 j1)(j j1)(1 2)", "j<j1"}, [=](const Env& e) { return v(e, "j") < v(e, "j1"); }},
            {{"(2 j)(1 j1)|(1 j1)(2 j) id", "j>j1"}, [=](const Env& e) { return v(e, "j") > v(e, "j1"); }},
            {{"(2 j)(1 k)(2 j)|(1 k)|(1 k) id", ""}, any},
            {{"(2 j)(1 k)(2 j1)|(1 k)(1 2)(2 j1)|(1 k)(1 j1)(1 2)|(1 j1)(1 2)(k j1)", "j=k"},
             [=](const Env& e) { return v(e, "j") == v(e, "k"); }},
            {{"(2 j)(1 k)(2 j1)|(2 j)(2 j1)(1 k)|(2 j1)(j1 j)(1 k)|(2 j1)(1 k)(j1 j)", "j!=j1, j!=k"},
             [=](const Env& e) { return v(e, "j") != v(e, "j1") && v(e, "j") != v(e, "k"); }},
            {{"(k j) id|id (k j)", ""}, any},
            {{"(k j)(2 j)|(2 k)(k j)", ""}, any},
            {{"(k j)(2 k)|(2 j)(k j)", ""}, any},
            {{"(k j)(2 j1)|(2 j1)(k j)", "k!=j1, j!=j1"},
             [=](const Env& e) { return v(e, "k") != v(e, "j1") && v(e, "j") != v(e, "j1"); }},
            {{"(k j)(1 j)|(1 k)(k j)", ""}, any},
            {{"(k j)(1 k)|(1 j)(k j)", ""}, any},
            {{"(k j)(1 j1)|(1 j1)(k j)", "k!=j1, j!=j1"},
             [=](const Env& e) { return v(e, "k") != v(e, "j1") && v(e, "j") != v(e, "j1"); }},
            {{"(k j)(1 k)(2 j)|(1 k)(2 j)(1 2)", ""}, any},
            {{"(k j)(1 k1)(2 j1)|(1 k)(2 j1)(k j)", "k1=j"}, [=](const Env& e) { return v(e, "k1") == v(e, "j"); }},
            {{"(k j)(1 k1)(2 j1)|(1 k1)(2 k)(k j)", "k1<k, j1=j"},
             [=](const Env& e) { return v(e, "k1") < v(e, "k") && v(e, "j1") == v(e, "j"); }},
            {{"(k j)(1 k1)(2 j1)|(1 k)(2 k1)(1 2)(k j k1)", "k1>k, j1=j"},
             [=](const Env& e) { return v(e, "k1") > v(e, "k") && v(e, "j1") == v(e, "j"); }},
            {{"(k j)(1 k1)(2 j1)|(1 j)(2 j1)(k j)", "j1>j, k1=k"},
             [=](const Env& e) { return v(e, "j1") > v(e, "j") && v(e, "k1") == v(e, "k"); }},
            {{"(k j)(1 k1)(2 j1)|(1 j1)(2 j)(1 2)(j k j1)", "j1<j, k1=k"},
             [=](const Env& e) { return v(e, "j1") < v(e, "j") && v(e, "k1") == v(e, "k"); }},
            {{"(k j)(1 k1)(2 j1)|(1 k1)(2 j)(k j)", "k1!=j, j1=k"},
             [=](const Env& e) { return v(e, "k1") != v(e, "j") && v(e, "j1") == v(e, "k"); }},
            {{"(k j)(1 k1)(2 j1)|(1 k1)(2 j1)(k j)", "k1!=k, k1!=j, j1!=j, j1!=k"},
             [=](const Env& e) {
                 return v(e, "k1") != v(e, "k") && v(e, "k1") != v(e, "j") && v(e, "j1") != v(e, "j") &&
                        v(e, "j1") != v(e, "k");
             }},
        };
        return r;
    }();
    return rows;
}

/// A part is a list of factors; each factor is a cycle of symbols, empty for "id".
using Part = std::vector<std::vector<std::string>>;

std::vector<Part> parse_row(const std::string& text) {
    std::vector<Part> parts;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, '|')) {
        Part p;
        for (std::size_t i = 0; i < piece.size();) {
            if (piece[i] == '(') {
                const auto close = piece.find(')', i);
                std::stringstream inner(piece.substr(i + 1, close - i - 1));
                std::vector<std::string> cyc;
                for (std::string t; inner >> t;) cyc.push_back(t);
                p.push_back(std::move(cyc));
                i = close + 1;
            } else if (piece.compare(i, 2, "id") == 0) {
                p.emplace_back();
                i += 2;
            } else {
                ++i;
            }
        }
        parts.push_back(std::move(p));
    }
    return parts;
}

int value(const std::string& sym, const Env& e) {
    const auto it = e.find(sym);
    return it != e.end() ? it->second : std::stoi(sym);
}

Permutation factor_perm(const std::vector<std::string>& cyc, const Env& e, int m) {
    if (cyc.empty()) return Permutation(m);
    std::vector<int> pts;
    for (const auto& s : cyc) pts.push_back(value(s, e) - 1);
    return Permutation::cycle(m, pts);
}

Permutation product(const Part& p, std::size_t from, std::size_t to, const Env& e, int m) {
    Permutation r(m);
    for (std::size_t i = from; i < to; ++i) r = r * factor_perm(p[i], e, m);
    return r;
}

bool distinct_cycles(const std::vector<Part>& parts, const Env& e) {
    for (const auto& p : parts)
        for (const auto& c : p) {
            std::set<int> seen;
            for (const auto& s : c) seen.insert(value(s, e));
            if (seen.size() != c.size()) return false;
        }
    return true;
}

/// Index ordering of the coset table: g_{kj} = (1 k)(2 j) needs k < j, a multiplier (k j) needs k < j.
bool ordered(const Part& first, const Env& e) {
    if (first.size() == 3 && !first[1].empty() && !first[2].empty() && first[1][0] == "1" && first[2][0] == "2" &&
        value(first[1][1], e) >= value(first[2][1], e))
        return false;
    const auto& h = first[0];
    if (h.size() == 2 && h[0] != "1" && h[0] != "2" && value(h[0], e) >= value(h[1], e)) return false;
    return true;
}

}  // namespace

const std::vector<CosetIdentityRow>& transposition_coset_rows() {
    static const std::vector<CosetIdentityRow> rows = [] {
        std::vector<CosetIdentityRow> r;
        for (const auto& s : row_rules()) r.push_back(s.row);
        return r;
    }();
    return rows;
}

std::vector<CosetRowResult> check_transposition_coset_rows(int m) {
    if (m < 3) throw std::invalid_argument("m must be at least 3");
    const auto preset = transposition_preset(m);
    std::vector<CosetRowResult> out;
    for (std::size_t idx = 0; idx < row_rules().size(); ++idx) {
        const auto& rule = row_rules()[idx];
        const auto parts = parse_row(rule.row.text);
        std::set<std::string> symbols;
        for (const auto& p : parts)
            for (const auto& c : p)
                for (const auto& s : c)
                    if (!std::isdigit(static_cast<unsigned char>(s[0]))) symbols.insert(s);
        const std::vector<std::string> vars(symbols.begin(), symbols.end());
        CosetRowResult res;
        res.row = idx + 1;
        std::vector<int> vals(vars.size(), 3);
        while (true) {
            Env e;
            for (std::size_t k = 0; k < vars.size(); ++k) e[vars[k]] = vals[k];
            if (distinct_cycles(parts, e) && rule.cond(e)) {
                std::vector<Permutation> values;
                for (const auto& p : parts) values.push_back(product(p, 0, p.size(), e, m));
                const bool holds = std::all_of(values.begin(), values.end(), [&](const Permutation& q) { return q == values[0]; });
                auto describe = [&] {
                    std::string d = "row " + std::to_string(idx + 1) + " at";
                    for (const auto& [k, v] : e) d += " " + k + "=" + std::to_string(v);
                    return d + ", m = " + std::to_string(m);
                };
                if (!holds) ++res.bare_failures;
                if (ordered(parts[0], e)) {
                    ++res.tuples;
                    bool decomposed = false;
                    if (!holds) {
                        ++res.failures;
                        if (res.first_failure.empty()) res.first_failure = describe();
                    } else {
                        const auto h = lift_unsigned(factor_perm(parts[0][0], e, m));
                        const auto g = product(parts[0], 1, parts[0].size(), e, m);
                        for (std::size_t i = 0; i < preset.cosets.reps.size() && !decomposed; ++i) {
                            if (!(preset.cosets.reps[i].perm() == g)) continue;
                            const auto z = zeta(preset.cls, preset.cosets, i, h);
                            const auto& last = parts.back();
                            for (std::size_t cut = 0; cut <= last.size() && !decomposed; ++cut)
                                decomposed = product(last, 0, cut, e, m) == preset.cosets.reps[z.j].perm() &&
                                             product(last, cut, last.size(), e, m) == z.gamma.perm();
                        }
                        if (!decomposed) {
                            ++res.decomposition_failures;
                            if (res.first_failure.empty()) res.first_failure = describe() + " (coset decomposition)";
                        }
                    }
                }
            }
            std::size_t k = 0;
            while (k < vals.size() && vals[k] == m) vals[k++] = 3;
            if (k == vals.size()) break;
            ++vals[k];
        }
        out.push_back(std::move(res));
    }
    return out;
}

namespace {

VerificationReport check_coset_rows(const VerifyConfig& cfg) {
    VerificationReport r;
    r.statement = "product identities of the transposition coset table in S_m, every index tuple";
    r.status = Status::Pass;
    json rows = json::array();
    std::map<std::size_t, std::uint64_t> bare;
    for (int m = 3; m <= cfg.coset_max_m; ++m)
        for (const auto& res : check_transposition_coset_rows(m)) {
            r.checked += res.tuples;
            bare[res.row] += res.bare_failures;
            if ((res.failures || res.decomposition_failures) && r.status == Status::Pass) {
                r.status = Status::Fail;
                r.counterexample = res.first_failure;
            }
        }
    json unordered = json::array();
    for (const auto& [row, count] : bare)
        if (count) unordered.push_back({{"row", row}, {"failing_tuples", count}});
    r.payload = {{"rows", transposition_coset_rows().size()}, {"failures_without_index_ordering", unordered}};
    r.config = {{"max_m", cfg.coset_max_m}};
    return r;
}

// --- transposition signs -----------------------------------------------------------------------------

struct SignReference {
    const char* condition;
    int i, j, k;
    const char* a;
    const char* b;
    const char* c;
    int sign_sign[3];
    int swap_sign[3];
};

constexpr SignReference kSignReference[8] = {
    {"2<i<j<k", 3, 4, 5, "(4 5)", "(1 2)(3 4 5)", "(3 4)", {-1, -1, -1}, {1, -1, 1}},
    {"i=1,j=2<k", 1, 2, 3, "()", "()", "(1 2)", {1, 1, -1}, {1, 1, -1}},
    {"i=1,2<j<k", 1, 3, 4, "(3 4)", "(1 2)(3 4)", "()", {-1, 1, 1}, {1, -1, 1}},
    {"i=2<j<k", 2, 3, 4, "(3 4)", "()", "(1 2)(3 4)", {-1, 1, 1}, {1, 1, -1}},
    {"2<i<k<j", 3, 5, 4, "(4 5)", "(3 4)", "(1 2)(3 5 4)", {-1, -1, -1}, {1, 1, -1}},
    {"i=1,k=2<j", 1, 3, 2, "()", "(1 2)", "()", {1, -1, 1}, {1, -1, 1}},
    {"i=1,2<k<j", 1, 4, 3, "(3 4)", "()", "(1 2)(3 4)", {-1, 1, 1}, {1, 1, -1}},
    {"i=2<k<j", 2, 4, 3, "(3 4)", "(1 2)(3 4)", "()", {-1, 1, 1}, {1, -1, 1}},
};

VerificationReport check_sign_table(const VerifyConfig&) {
    VerificationReport r;
    r.statement = "coset factors and character values of the transposition sign table, cell for cell";
    r.status = Status::Pass;
    const auto rows = transposition_sign_table(5);
    json table = json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        const auto& ref = kSignReference[k];
        const std::string got[3] = {format_cycles(row.a.perm()), format_cycles(row.b.perm()), format_cycles(row.c.perm())};
        const char* want[3] = {ref.a, ref.b, ref.c};
        for (int q = 0; q < 3; ++q) {
            r.checked += 3;
            if (got[q] != want[q] || row.sign_sign[q] != ref.sign_sign[q] || row.swap_sign[q] != ref.swap_sign[q]) {
                if (r.status == Status::Pass)
                    r.counterexample = std::string("row ") + ref.condition + ", factor " + std::to_string(q + 1) +
                                       ": got " + got[q] + " (" + std::to_string(row.sign_sign[q]) + ", " +
                                       std::to_string(row.swap_sign[q]) + ")";
                r.status = Status::Fail;
            }
        }
        table.push_back({{"condition", row.condition},
                         {"ijk", {row.i, row.j, row.k}},
                         {"factors", {got[0], got[1], got[2]}},
                         {"sgn_sgn", {row.sign_sign[0], row.sign_sign[1], row.sign_sign[2]}},
                         {"swap_sign", {row.swap_sign[0], row.swap_sign[1], row.swap_sign[2]}}});
    }
    r.payload = {{"table", table}};
    r.config = {{"n", 5}};
    return r;
}

VerificationReport check_sign_products(const VerifyConfig& cfg) {
    VerificationReport r;
    r.statement = "sign product over each triangle of transpositions is -1 for both characters";
    r.status = Status::Pass;
    for (int n = 3; n <= cfg.sign_product_max_n; ++n)
        for (auto chi : {TranspositionCharacter::SignSign, TranspositionCharacter::SwapSign}) {
            const auto m = transposition_module(n, chi);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k) {
                        if (i == j || j == k || i == k) continue;
                        ++r.checked;
                        if (transposition_sign_product(m, i, j, k) != -1 && r.status == Status::Pass) {
                            r.status = Status::Fail;
                            r.counterexample = "n = " + std::to_string(n) + ", character " +
                                               (chi == TranspositionCharacter::SignSign ? "sgn_sgn" : "swap_sign") +
                                               ", (i,j,k) = (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                               std::to_string(k) + ")";
                        }
                    }
        }
    r.config = {{"max_n", cfg.sign_product_max_n}};
    return r;
}

// --- type-D certificates -------------------------------------------------------------------------------

constexpr const char* kSliceReading = "R and S are the slices Z_2^n x| tau and Z_2^n x| mu intersected with the class";

/// Certificate R = slice over tau, S = slice over mu, with the stated r and s.
void check_slice_certificate(VerificationReport& r, const std::string& label, const SignedPermutation& x,
                             const SignedPermutation& y, const VerifyConfig& cfg, json& cases,
                             std::map<std::string, std::shared_ptr<FiniteRack>>& racks) {
    const Group g = Group::signed_group(x.degree());
    const auto key = signed_cycle_type(x).to_string();
    auto& rack = racks[key];
    if (!rack) rack = std::make_shared<FiniteRack>(FiniteRack::from_class(class_of(g, x, cfg.group_cap)));
    const auto* cls = rack->conjugation_class();
    ++r.checked;
    auto fail = [&](const std::string& why) {
        if (r.status != Status::Fail) r.counterexample = label + ": x = " + format(x) + ", y = " + format(y) + ": " + why;
        r.status = Status::Fail;
    };
    const auto ix = cls->index.find(x);
    const auto iy = cls->index.find(y);
    if (!ix || !iy) return fail("y is not conjugate to x");
    if (sq_generic(x, y) == y) return fail("sq(x, y) == y");
    TypeDCertificate cert{coset_slice(*rack, x.perm()), coset_slice(*rack, y.perm()), static_cast<std::uint32_t>(*ix),
                          static_cast<std::uint32_t>(*iy)};
    const auto v = verify_certificate(*rack, cert);
    if (!v.ok) return fail(v.reason);
    auto c = certificate_json(*rack, cert);
    c["case"] = label;
    c["class_size"] = rack->size();
    cases.push_back(c);
}

VerificationReport check_single_cycle(const VerifyConfig& cfg) {
    VerificationReport r;
    r.statement = "single odd cycle of length n >= 5: slices over tau and tau^2 form a type-D decomposition";
    r.status = Status::Pass;
    json cases = json::array();
    std::map<std::string, std::shared_ptr<FiniteRack>> racks;
    for (int n : {5, 7}) {
        std::vector<int> pts(static_cast<std::size_t>(n));
        std::iota(pts.begin(), pts.end(), 0);
        const auto tau = Permutation::cycle(n, pts);
        const auto b_neg = SignVector::unit(n, 0);
        std::vector<int> pos(static_cast<std::size_t>(n), 0);
        pos[0] = 1;
        if (n == 5) pos[3] = 1;
        else pos[1] = 1;
        check_slice_certificate(r, "n=" + std::to_string(n) + " negative", with_signs(SignVector::all_ones(n), tau),
                                with_signs(b_neg, tau * tau), cfg, cases, racks);
        check_slice_certificate(r, "n=" + std::to_string(n) + " positive", with_signs(SignVector(n), tau),
                                with_signs(signs_of(pos), tau * tau), cfg, cases, racks);
    }
    r.payload = {{"certificates", cases}};
    return r;
}

VerificationReport check_two_three_cycles(const VerifyConfig& cfg) {
    VerificationReport r;
    r.statement = "type (3^2) in B_6: slices over (1 2 3)(4 5 6) and (1 3 2)(4 5 6), four sign cases";
    r.status = Status::Pass;
    json cases = json::array();
    std::map<std::string, std::shared_ptr<FiniteRack>> racks;
    const auto tau = Permutation::cycle(6, {0, 1, 2}) * Permutation::cycle(6, {3, 4, 5});
    const auto mu = Permutation::cycle(6, {0, 2, 1}) * Permutation::cycle(6, {3, 4, 5});
    const std::vector<std::tuple<std::string, std::vector<int>, std::vector<int>>> data{
        {"both negative", {1, 1, 1, 1, 1, 1}, {1, 0, 0, 1, 0, 0}},
        {"both positive", {0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0}},
        {"negative, positive", {1, 0, 0, 0, 0, 0}, {1, 0, 0, 1, 1, 0}},
        {"positive, negative", {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}}};
    for (const auto& [label, a, b] : data)
        check_slice_certificate(r, label, with_signs(signs_of(a), tau), with_signs(signs_of(b), mu), cfg, cases, racks);
    r.payload = {{"certificates", cases}, {"interpretation", kSliceReading}};
    return r;
}

VerificationReport check_three_cycle_double_transposition(const VerifyConfig& cfg) {
    VerificationReport r;
    r.statement = "type (2^2,3) in B_7: slices over (5 6 7)(1 2)(3 4) and (5 6 7)(1 3)(2 4), both signs of the "
                  "3-cycle and every sign pattern on the 2-cycles";
    r.status = Status::Pass;
    json cases = json::array();
    std::map<std::string, std::shared_ptr<FiniteRack>> racks;
    const auto pi = Permutation::cycle(7, {4, 5, 6});
    const auto tau = pi * Permutation::cycle(7, {0, 1}) * Permutation::cycle(7, {2, 3});
    const auto mu = pi * Permutation::cycle(7, {0, 2}) * Permutation::cycle(7, {1, 3});
    for (int three : {0, 1})
        for (unsigned low = 0; low < 16; ++low) {
            std::vector<int> a(7, 0), b(7, 0);
            for (int q = 0; q < 4; ++q) a[static_cast<std::size_t>(q)] = static_cast<int>((low >> q) & 1u);
            b[0] = a[0] ^ a[1];
            b[1] = a[2] ^ a[3];
            if (three == 0) {
                b[4] = 1;
                b[5] = 1;
            } else {
                a[4] = a[5] = a[6] = 1;
                b[4] = 1;
            }
            check_slice_certificate(r, std::string(three ? "negative" : "positive") + " 3-cycle, a_1..a_4 = " +
                                           std::to_string(a[0]) + std::to_string(a[1]) + std::to_string(a[2]) +
                                           std::to_string(a[3]),
                                    with_signs(signs_of(a), tau), with_signs(signs_of(b), mu), cfg, cases, racks);
        }
    r.payload = {{"certificates", cases}, {"interpretation", kSliceReading}};
    return r;
}

VerificationReport check_fixed_point_families(const VerifyConfig& cfg) {
    VerificationReport r;
    r.statement = "types (1^{n-2},2), (1^{n-3},3), (1^2,2^2) with unequal fixed-point signs: split by the sign at "
                  "the fixed point n";
    r.status = Status::Pass;
    json cases = json::array();
    for (int n : {5, 6}) {
        std::vector<std::pair<std::string, Permutation>> families{{"(1^{n-2},2)", Permutation::cycle(n, {0, 1})},
                                                                 {"(1^{n-3},3)", Permutation::cycle(n, {0, 1, 2})}};
        if (n == 6) families.emplace_back("(1^2,2^2)", Permutation::cycle(n, {0, 1}) * Permutation::cycle(n, {2, 3}));
        for (const auto& [family, tau] : families) {
            std::set<std::string> seen;
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                const SignVector a(n, bits);
                bool plus = false, minus = false;
                for (int p = 0; p < n; ++p)
                    if (tau(p) == p) (a[p] ? minus : plus) = true;
                if (!(plus && minus)) continue;
                const auto x = with_signs(a, tau);
                if (!seen.insert(signed_cycle_type(x).to_string()).second) continue;
                const FiniteRack rack = FiniteRack::from_class(class_of(Group::signed_group(n), x, cfg.group_cap));
                ++r.checked;
                const auto cert = certificate_from_fixed_point_split(rack, n - 1);
                const bool ok = cert && verify_certificate(rack, *cert).ok;
                if (!ok && r.status == Status::Pass) {
                    r.status = Status::Fail;
                    r.counterexample = "n = " + std::to_string(n) + ", x = " + format(x) + ": no decomposition by the sign at point n";
                }
                if (ok) {
                    auto c = certificate_json(rack, *cert);
                    c["family"] = family;
                    c["n"] = n;
                    c["x"] = format(x);
                    cases.push_back(c);
                }
            }
        }
    }
    r.payload = {{"certificates", cases}};
    return r;
}

VerificationReport check_extension(const VerifyConfig& cfg) {
    VerificationReport r;
    r.statement = "a type-D decomposition R, S of O_x gives R#y, S#y for O_{x#y}";
    r.status = Status::Pass;
    const auto x = parse_signed("11111;(1 2 3 4 5)");
    const FiniteRack rack = FiniteRack::from_class(class_of(Group::signed_group(5), x, cfg.group_cap));
    const auto cert = certificate_from_cosets(rack, x.perm(), x.perm() * x.perm());
    json cases = json::array();
    if (!cert) {
        r.status = Status::Fail;
        r.counterexample = "no base certificate for x = " + format(x);
        return r;
    }
    for (const char* y : {"0;()", "1;()", "00;(1 2)", "10;(1 2)"}) {
        ++r.checked;
        const auto ext = juxtaposition_extend_certificate(rack, *cert, parse_signed(y), EnumerationBudget{cfg.group_cap});
        const auto v = verify_certificate(ext.rack, ext.certificate);
        if (!v.ok && r.status == Status::Pass) {
            r.status = Status::Fail;
            r.counterexample = "x = " + format(x) + ", y = " + y + ": " + v.reason;
        }
        auto c = certificate_json(ext.rack, ext.certificate);
        c["y"] = y;
        cases.push_back(c);
    }
    r.payload = {{"base", format(x)}, {"extended", cases}};
    return r;
}

VerificationReport check_projection(const VerifyConfig& cfg) {
    VerificationReport r;
    r.statement = "projection to S_n is a group epimorphism, maps classes onto classes, and pulls type-D "
                  "certificates back";
    r.status = Status::Pass;
    r.exhaustive = false;
    std::mt19937_64 rng(cfg.seed);
    Tally hom, epi, pull;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const Group g = Group::signed_group(1 + static_cast<int>(rng() % 8));
        const auto x = g.random_element(rng), y = g.random_element(rng);
        hom.check((x * y).perm() == x.perm() * y.perm(), [&] { return "x = " + format(x) + ", y = " + format(y); });
    }
    std::uint64_t pulled = 0;
    for (int n = 2; n <= 5; ++n)
        for (const auto& x : class_representatives(Group::signed_group(n), EnumerationBudget{cfg.group_cap})) {
            if (x.perm().is_identity()) continue;
            const FiniteRack rack = FiniteRack::from_class(class_of(Group::signed_group(n), x, cfg.group_cap));
            const auto proj = project_to_symmetric(rack, EnumerationBudget{cfg.group_cap});
            if (n <= 4) {
                const auto v = verify_rack_epimorphism(rack, proj.target, proj.hom);
                epi.check(v.ok, [&] { return "x = " + format(x) + ": " + v.reason; });
            }
            SearchConfig sc;
            sc.seed = cfg.seed;
            sc.step_budget = cfg.step_budget;
            const auto found = find_type_d_certificate(proj.target, sc);
            if (!found.certificate) continue;
            ++pulled;
            const auto back = pullback_type_d(rack, proj.target, proj.hom, *found.certificate);
            pull.check(verify_certificate(rack, back).ok, [&] { return "pullback fails for x = " + format(x); });
        }
    for (const auto* t : {&hom, &epi, &pull}) t->into(r);
    r.payload = {{"homomorphism_samples", hom.checked}, {"class_epimorphisms", epi.checked}, {"pullbacks", pulled}};
    r.config = {{"seed", cfg.seed}, {"samples", 1000}};
    return r;
}

VerificationReport check_arrow(const VerifyConfig& cfg) {
    VerificationReport r;
    r.statement = "g_i v_j -> a^{(j)}_{t_i,1} is a YD module isomorphism onto the arrow module, every group element";
    r.status = Status::Pass;
    json cases = json::array();
    for (int n : {3, 4})
        for (auto chi : {TranspositionCharacter::SignSign, TranspositionCharacter::SwapSign}) {
            const auto yd = transposition_module(n, chi);
            const auto arrow = build_arrow_yd_module(yd.cls, yd.cosets, yd.rho);
            const auto right = check_arrow_right_action(arrow, cfg.group_cap);
            const auto psi = psi_isomorphism_check(yd, arrow, cfg.group_cap);
            r.checked += right.checked + psi.checked;
            const std::string label = "S" + std::to_string(n) + (chi == TranspositionCharacter::SignSign ? " sgn_sgn" : " swap_sign");
            if ((!right.ok || !psi.ok) && r.status == Status::Pass) {
                r.status = Status::Fail;
                r.counterexample = label + ": " + (right.ok ? psi.witness : right.witness);
            }
            cases.push_back({{"module", label}, {"checked", right.checked + psi.checked}});
        }
    // Negative control: arrow module over a coset table with g_2 replaced by g_2 (1 2).
    const auto yd = transposition_module(3, TranspositionCharacter::SignSign);
    auto bad = yd.cosets;
    bad.reps[1] = bad.reps[1] * yd.cls->rep;
    const auto control = psi_isomorphism_check(yd, build_arrow_yd_module(yd.cls, bad, yd.rho), cfg.group_cap);
    if (control.ok && r.status == Status::Pass) {
        r.status = Status::Fail;
        r.counterexample = "corrupted coset table passed the isomorphism check";
    }
    r.payload = {{"modules", cases}, {"negative_control_witness", control.witness}};
    return r;
}

VerificationReport check_filter(const VerifyConfig&) {
    VerificationReport r;
    r.statement = "scalar options (q1, q2) admitted by the q-value constraints for the ten juxtaposition cases";
    r.status = Status::Pass;
    using Opts = std::vector<std::pair<int, int>>;
    const Opts both{{1, -1}, {-1, 1}}, pm{{1, -1}}, mp{{-1, 1}};
    const std::map<std::string, Opts> reference{{"i", both},  {"ii", both}, {"iii", mp},  {"iv", pm},  {"v", mp},
                                                {"vi", pm},   {"vii", both}, {"viii", mp}, {"ix", both}, {"x", mp}};
    json table = json::array();
    for (const auto& c : juxtaposition_cases()) {
        ++r.checked;
        const auto got = admitted_sign_options(c);
        json opts = json::array();
        for (const auto& [a, b] : got) opts.push_back({a, b});
        json premises = json::array();
        for (const auto& p : c.premises) premises.push_back(p.citation);
        table.push_back({{"case", c.label}, {"x", format(c.x)}, {"y", format(c.y)}, {"admitted", opts}, {"premises", premises}});
        const auto it = reference.find(c.label);
        if ((it == reference.end() || it->second != got) && r.status == Status::Pass) {
            r.status = Status::Fail;
            r.counterexample = "case " + c.label + ": admitted options differ from the reference";
        }
    }
    if (r.checked != reference.size() && r.status == Status::Pass) {
        r.status = Status::Fail;
        r.counterexample = "case list has " + std::to_string(r.checked) + " entries";
    }
    r.payload = {{"cases", table}};
    return r;
}

using Check = VerificationReport (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, Check>>& registry() {
    static const std::vector<std::pair<std::string, Check>> r{
        {"sq-closed-forms", check_closed_forms},
        {"juxtaposition-laws", check_juxtaposition},
        {"transposition-cosets", check_coset_rows},
        {"transposition-sign-table", check_sign_table},
        {"transposition-sign-product", check_sign_products},
        {"single-cycle-certificates", check_single_cycle},
        {"two-three-cycle-certificates", check_two_three_cycles},
        {"three-cycle-double-transposition-certificates", check_three_cycle_double_transposition},
        {"fixed-point-certificates", check_fixed_point_families},
        {"juxtaposition-extension", check_extension},
        {"projection-pullback", check_projection},
        {"arrow-isomorphism", check_arrow},
        {"q-value-filter", check_filter},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, f] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

VerificationReport verify_lemma(const std::string& id, const VerifyConfig& config) {
    for (const auto& [name, f] : registry()) {
        if (name != id) continue;
        const auto t0 = std::chrono::steady_clock::now();
        VerificationReport r;
        try {
            r = f(config);
        } catch (const std::exception& e) {
            r.status = Status::Inconclusive;
            r.payload["error"] = e.what();
        }
        r.id = id;
        r.config["seed"] = config.seed;
        r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    throw std::invalid_argument("unknown lemma id: " + id);
}

std::vector<VerificationReport> verify_lemmas(const std::vector<std::string>& selection, const VerifyConfig& config) {
    for (const auto& s : selection)
        if (std::find(lemma_ids().begin(), lemma_ids().end(), s) == lemma_ids().end())
            throw std::invalid_argument("unknown lemma id: " + s);
    std::vector<VerificationReport> out;
    for (const auto& id : lemma_ids())
        if (selection.empty() || std::find(selection.begin(), selection.end(), id) != selection.end())
            out.push_back(verify_lemma(id, config));
    return out;
}

// --- scan ------------------------------------------------------------------------------------

std::string cycle_type_label(const Permutation& tau) {
    std::map<int, int> count;
    for (const auto& c : tau.cycles()) ++count[static_cast<int>(c.size())];
    std::string s = "(";
    bool first = true;
    for (const auto& [len, mult] : count) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(len);
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s + ")";
}

namespace {

std::string fixed_sign_condition(const SignedPermutation& x) {
    int plus = 0, minus = 0;
    for (int p = 0; p < x.degree(); ++p)
        if (x.perm()(p) == p) ++(x.sign()[p] ? minus : plus);
    if (plus + minus == 0) return "none";
    return plus && minus ? "mixed" : "equal";
}

}  // namespace

bool matches_exception_list(const SignedPermutation& x) {
    std::vector<int> lengths;
    for (const auto& c : x.perm().cycles()) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.begin(), lengths.end());
    const int n = x.degree();
    using L = std::vector<int>;
    if (lengths == L{2, 3} || lengths == L{2, 2, 2} || lengths == L{2, 2, 2, 2} || lengths == L{1, 2, 2}) return true;
    L ones_two(static_cast<std::size_t>(std::max(n - 2, 0)), 1);
    ones_two.push_back(2);
    L ones_three(static_cast<std::size_t>(std::max(n - 3, 0)), 1);
    ones_three.push_back(3);
    const bool family = lengths == L{1, 1, 2, 2} || lengths == ones_two || lengths == ones_three;
    return family && fixed_sign_condition(x) != "mixed";
}

std::vector<ScanRow> scan_classes(int n, const ScanConfig& config) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const Group g = Group::signed_group(n);
    std::vector<ScanRow> rows;
    for (const auto& x : class_representatives(g, EnumerationBudget{config.group_cap})) {
        if (x.perm().is_identity()) continue;
        ScanRow row;
        row.n = n;
        row.rep = x;
        row.signed_type = signed_cycle_type(x).to_string();
        row.cycle_type = cycle_type_label(x.perm());
        row.sign_condition = fixed_sign_condition(x);
        const FiniteRack rack = FiniteRack::from_class(class_of(g, x, config.group_cap));
        row.class_size = rack.size();
        SearchConfig sc;
        sc.seed = config.seed;
        sc.step_budget = config.step_budget;
        sc.budget = EnumerationBudget{config.group_cap};
        const auto res = find_type_d_certificate(rack, sc);
        row.strategy = res.strategy;
        if (res.certificate && verify_certificate(rack, *res.certificate).ok) {
            row.outcome = ScanOutcome::Certificate;
            row.certificate = res.certificate;
        } else {
            if (res.certificate) row.note = "certificate failed verification; ";
            if (res.status == SearchStatus::Exhausted) row.note += "complete search found no witness";
            else row.note += "search budget exhausted";
            if (matches_exception_list(x)) {
                row.outcome = ScanOutcome::ExceptionList;
            } else {
                row.outcome = ScanOutcome::Inconclusive;
                row.note += "; the exception list may not apply at this n";
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// --- emission -------------------------------------------------------------------------------------

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "md" || name == "markdown") return ReportFormat::Markdown;
    throw std::invalid_argument("unknown report format: " + name);
}

json to_json(const FiniteRack& rack, const TypeDCertificate& c) {
    json j{{"R", c.R}, {"S", c.S}, {"r", c.r}, {"s", c.s}, {"sq_value", rack.sq(c.r, c.s)}};
    if (const auto* cls = rack.conjugation_class()) j["class"] = format(cls->rep);
    return j;
}

json to_json(const VerificationReport& r, bool include_runtime) {
    json j{{"id", r.id},
           {"statement", r.statement},
           {"status", to_string(r.status)},
           {"counterexample", r.counterexample},
           {"checked", r.checked},
           {"exhaustive", r.exhaustive},
           {"payload", r.payload},
           {"config", r.config}};
    if (include_runtime) j["runtime_s"] = r.runtime_s;
    return j;
}

VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.statement = j.at("statement").get<std::string>();
    const auto s = j.at("status").get<std::string>();
    r.status = s == "pass" ? Status::Pass : s == "fail" ? Status::Fail : Status::Inconclusive;
    r.counterexample = j.at("counterexample").get<std::string>();
    r.checked = j.at("checked").get<std::uint64_t>();
    r.exhaustive = j.at("exhaustive").get<bool>();
    r.payload = j.at("payload");
    r.config = j.at("config");
    if (j.contains("runtime_s")) r.runtime_s = j.at("runtime_s").get<double>();
    return r;
}

json to_json(const ScanRow& r) {
    json j{{"n", r.n},
           {"representative", format(r.rep)},
           {"signed_type", r.signed_type},
           {"cycle_type", r.cycle_type},
           {"sign_condition", r.sign_condition},
           {"class_size", r.class_size},
           {"outcome", to_string(r.outcome)},
           {"strategy", r.strategy},
           {"note", r.note}};
    if (r.certificate) {
        const FiniteRack rack = FiniteRack::from_class(conjugacy_class(Group::signed_group(r.n), r.rep));
        j["certificate"] = to_json(rack, *r.certificate);
    }
    return j;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_field(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c == '\n' ? ' ' : c;
    }
    return out;
}

}  // namespace

std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat fmt, bool include_runtime) {
    std::ostringstream os;
    switch (fmt) {
        case ReportFormat::Json: {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(to_json(r, include_runtime));
            os << json{{"version", 1}, {"reports", arr}}.dump(2) << "\n";
            break;
        }
        case ReportFormat::Csv:
            os << "id,status,checked,exhaustive,counterexample" << (include_runtime ? ",runtime_s" : "") << "\n";
            for (const auto& r : reports) {
                os << csv_field(r.id) << "," << to_string(r.status) << "," << r.checked << ","
                   << (r.exhaustive ? "true" : "false") << "," << csv_field(r.counterexample);
                if (include_runtime) os << "," << r.runtime_s;
                os << "\n";
            }
            break;
        case ReportFormat::Markdown:
            os << "| id | status | checked | exhaustive | counterexample |\n|---|---|---|---|---|\n";
            for (const auto& r : reports)
                os << "| " << md_field(r.id) << " | " << to_string(r.status) << " | " << r.checked << " | "
                   << (r.exhaustive ? "yes" : "no") << " | " << md_field(r.counterexample) << " |\n";
            break;
    }
    return os.str();
}

std::string render_scan(const std::vector<ScanRow>& rows, ReportFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case ReportFormat::Json: {
            json arr = json::array();
            for (const auto& r : rows) arr.push_back(to_json(r));
            os << json{{"version", 1}, {"rows", arr}}.dump(2) << "\n";
            break;
        }
        case ReportFormat::Csv:
            os << "n,representative,signed_type,cycle_type,sign_condition,class_size,outcome,strategy,note\n";
            for (const auto& r : rows)
                os << r.n << "," << csv_field(format(r.rep)) << "," << csv_field(r.signed_type) << ","
                   << csv_field(r.cycle_type) << "," << r.sign_condition << "," << r.class_size << ","
                   << to_string(r.outcome) << "," << csv_field(r.strategy) << "," << csv_field(r.note) << "\n";
            break;
        case ReportFormat::Markdown:
            os << "| n | representative | signed type | cycle type | fixed-point signs | class size | outcome | "
                  "strategy | note |\n|---|---|---|---|---|---|---|---|---|\n";
            for (const auto& r : rows)
                os << "| " << r.n << " | " << md_field(format(r.rep)) << " | " << md_field(r.signed_type) << " | "
                   << md_field(r.cycle_type) << " | " << r.sign_condition << " | " << r.class_size << " | "
                   << to_string(r.outcome) << " | " << md_field(r.strategy) << " | " << md_field(r.note) << " |\n";
            break;
    }
    return os.str();
}

}  // namespace nbn
