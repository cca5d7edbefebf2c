#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nbn/linalg.hpp"
#include "nbn/quadratic_algebra.hpp"
#include "nbn/verify.hpp"

using namespace nbn;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
    }
};

// Dense oracle: S_k = (S_{k-1} (x) id) T_k with T_k = id + c_{k-1} + c_{k-1} c_{k-2} + ... on V^{(x)k}.
std::size_t dense_symmetrizer_rank(const Braiding& c, int k) {
    const auto D = c.dim;
    auto pw = [&](int e) { return static_cast<std::size_t>(std::pow(D, e)); };
    const CMatrix cd = c.dense();
    auto local = [&](int level, int l) {
        return kronecker(kronecker(identity_matrix(pw(l)), cd), identity_matrix(pw(level - 2 - l)));
    };
    CMatrix s = identity_matrix(pw(k));
    for (int level = 2; level <= k; ++level) {
        CMatrix t = identity_matrix(pw(level));
        CMatrix prod = identity_matrix(pw(level));
        for (int j = level - 2; j >= 0; --j) {
            prod = prod * local(level, j);
            for (std::size_t r = 0; r < t.rows(); ++r)
                for (std::size_t q = 0; q < t.cols(); ++q) t(r, q) += prod(r, q);
        }
        s = s * kronecker(t, identity_matrix(pw(k - level)));
    }
    return rank_field(s);
}

std::string dims_text(const std::vector<std::uint64_t>& d) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    return os.str() + ")";
}

bool reports_pass(const std::vector<std::string>& ids, const VerifyConfig& cfg, Outcome& out,
                  std::vector<VerificationReport>* keep = nullptr) {
    const auto reports = verify_lemmas(ids, cfg);
    for (const auto& r : reports)
        out.require(r.status == Status::Pass, r.id + " " + to_string(r.status) + ": " + r.counterexample);
    if (keep) *keep = reports;
    return out.ok;
}

// --- criteria -------------------------------------------------------------------------------------

Outcome lemma_harness() {
    Outcome out;
    VerifyConfig cfg;
    cfg.samples = 10000;
    cfg.closed_form_max_n = 8;
    cfg.juxtaposition_exhaustive_max = 5;
    cfg.coset_max_m = 8;
    cfg.sign_product_max_n = 6;
    std::vector<VerificationReport> reports;
    reports_pass({"sq-closed-forms", "juxtaposition-laws", "transposition-cosets", "transposition-sign-table",
                  "transposition-sign-product"},
                 cfg, out, &reports);
    for (const auto& r : reports) {
        if (r.id == "sq-closed-forms")
            out.require(r.payload.at("general").get<std::uint64_t>() >= 10000 &&
                            r.payload.at("commuting").get<std::uint64_t>() >= 10000,
                        "fewer than 10^4 closed-form samples");
        if (r.id == "juxtaposition-laws")
            out.require(r.payload.at("orthogonal_pairs_exhaustive").get<std::uint64_t>() > 0, "no exhaustive pairs");
        if (r.id == "transposition-sign-table") out.require(r.checked == 72, "sign table is not 8 x 3 cells");
    }
    const auto rows = check_transposition_coset_rows(8);
    for (const auto& res : rows) out.require(res.tuples > 0, "coset row " + std::to_string(res.row) + " never instantiated");
    if (out.ok) out.detail = "closed forms 10^4 samples n<=8; laws exhaustive n+m<=5; 37 coset rows m<=8; table 8x3; sign products n<=6";
    return out;
}

Outcome certificates() {
    Outcome out;
    std::vector<VerificationReport> reports;
    reports_pass({"single-cycle-certificates", "two-three-cycle-certificates",
                  "three-cycle-double-transposition-certificates", "fixed-point-certificates"},
                 {}, out, &reports);
    std::size_t total = 0;
    for (const auto& r : reports) {
        total += r.checked;
        if (r.id == "single-cycle-certificates") out.require(r.checked == 4, "n = 5, 7 with both signs");
        if (r.id == "two-three-cycle-certificates") out.require(r.checked == 4, "four sign cases in B6");
        if (r.id == "three-cycle-double-transposition-certificates") out.require(r.checked == 32, "both cases in B7");
        if (r.id == "fixed-point-certificates") {
            std::set<std::pair<int, std::string>> fams;
            for (const auto& c : r.payload.at("certificates")) fams.insert({c.at("n").get<int>(), c.at("family").get<std::string>()});
            out.require(fams.size() == 5, "families (1^{n-2},2), (1^{n-3},3) at n = 5, 6 and (1^2,2^2) at n = 6");
        }
    }
    if (out.ok) out.detail = std::to_string(total) + " certificates verified";
    return out;
}

Outcome scan() {
    Outcome out;
    std::ostringstream detail;
    for (int n : {5, 6}) {
        const auto rows = scan_classes(n);
        const Group g = Group::signed_group(n);
        std::size_t nontrivial = 0;
        for (const auto& x : class_representatives(g))
            if (!x.perm().is_identity()) ++nontrivial;
        out.require(rows.size() == nontrivial, "rows do not partition the classes at n = " + std::to_string(n));
        std::size_t cert = 0, listed = 0, inconclusive = 0;
        for (const auto& row : rows) {
            if (row.outcome == ScanOutcome::Certificate) {
                ++cert;
                const auto rack = FiniteRack::from_class(conjugacy_class(g, row.rep));
                out.require(row.certificate && verify_certificate(rack, *row.certificate).ok,
                            "certificate fails for " + format(row.rep));
            } else if (row.outcome == ScanOutcome::ExceptionList) {
                ++listed;
                out.require(matches_exception_list(row.rep), "exception row off the list: " + format(row.rep));
            } else {
                ++inconclusive;
                out.require(n != 5, "inconclusive row at n = 5: " + format(row.rep));
                out.require(false, "class neither certified nor listed: " + format(row.rep));
            }
        }
        detail << "n=" << n << ": " << cert << " certified, " << listed << " listed, " << inconclusive
               << " inconclusive; ";
    }
    if (out.ok) out.detail = detail.str();
    return out;
}

Outcome nichols() {
    Outcome out;
    const auto s3 = braiding(transposition_module(3, TranspositionCharacter::SignSign));
    const auto d3 = nichols_graded_dim(s3, 5);
    out.require(d3.dims == std::vector<std::uint64_t>{1, 3, 4, 3, 1, 0}, "S3 sgn dims " + dims_text(d3.dims));
    out.require(d3.semantics == DimSemantics::Exact, "S3 dims not exact");
    for (int k = 2; k <= 5; ++k)
        out.require(dense_symmetrizer_rank(s3, k) == d3.dims[static_cast<std::size_t>(k)],
                    "dense oracle disagrees in degree " + std::to_string(k));
    const auto e3 = hilbert_series(fk_presentation(3), 12);
    out.require(e3.terminated && e3.dims == std::vector<std::uint64_t>{1, 3, 4, 3, 1}, "E3 " + dims_text(e3.dims));
    const auto e4 = hilbert_series(fk_presentation(4), 12);
    out.require(e4.terminated && e4.total() == 576, "E4 total " + std::to_string(e4.total()));
    for (auto chi : {TranspositionCharacter::SignSign, TranspositionCharacter::SwapSign}) {
        const auto d4 = nichols_graded_dim(braiding(transposition_module(4, chi)), 4);
        for (std::size_t k = 0; k <= 4; ++k)
            out.require(k < e4.dims.size() && d4.dims[k] == e4.dims[k], "S4 dims " + dims_text(d4.dims) + " vs E4");
    }
    if (out.ok)
        out.detail = "S3 " + dims_text(d3.dims) + " exact; E3 terminated; E4 total 576 terminated at cap 12; S4 matches E4 through degree 4";
    return out;
}

Outcome psi() {
    Outcome out;
    std::uint64_t checked = 0;
    for (int n : {3, 4})
        for (auto chi : {TranspositionCharacter::SignSign, TranspositionCharacter::SwapSign}) {
            const auto yd = transposition_module(n, chi);
            const auto arrow = build_arrow_yd_module(yd.cls, yd.cosets, yd.rho);
            const auto right = check_arrow_right_action(arrow);
            const auto iso = psi_isomorphism_check(yd, arrow);
            out.require(right.ok && right.exhaustive, "right action S" + std::to_string(n) + ": " + right.witness);
            out.require(iso.ok && iso.exhaustive, "psi S" + std::to_string(n) + ": " + iso.witness);
            checked += right.checked + iso.checked;
        }
    const auto yd = transposition_module(3, TranspositionCharacter::SignSign);
    auto bad = yd.cosets;
    bad.reps[1] = bad.reps[1] * yd.cls->rep;
    const auto control = psi_isomorphism_check(yd, build_arrow_yd_module(yd.cls, bad, yd.rho));
    out.require(!control.ok && !control.witness.empty(), "corrupted coset table was accepted");
    if (out.ok) out.detail = std::to_string(checked) + " identities; negative control: " + control.witness;
    return out;
}

Outcome structural() {
    Outcome out;
    std::uint64_t checks = 0;
    for (int n : {3, 4})
        for (auto chi : {TranspositionCharacter::SignSign, TranspositionCharacter::SwapSign}) {
            const auto m = transposition_module(n, chi);
            const auto c = braiding(m);
            const auto be = check_braid_equation(c, 64);
            const auto yd = check_yd_compatibility(m);
            out.require(be.ok && be.exhaustive, "braid equation S" + std::to_string(n) + ": " + be.witness);
            out.require(yd.ok && yd.exhaustive, "YD compatibility S" + std::to_string(n) + ": " + yd.witness);
            checks += be.checked + yd.checked;
        }
    for (int n = 1; n <= 5; ++n)
        for (const Group g : {Group::signed_group(n), Group::symmetric(n)}) {
            const auto elems = g.elements(kDefaultGroupCap);
            out.require(elems.size() == g.order_exact(), "order of " + g.name());
            std::mt19937_64 rng(static_cast<std::uint64_t>(n));
            const std::size_t triples = n <= 3 ? elems.size() * elems.size() * elems.size() : 200000;
            for (std::size_t t = 0; t < triples; ++t) {
                const auto& x = n <= 3 ? elems[t / (elems.size() * elems.size())] : elems[rng() % elems.size()];
                const auto& y = n <= 3 ? elems[(t / elems.size()) % elems.size()] : elems[rng() % elems.size()];
                const auto& z = n <= 3 ? elems[t % elems.size()] : elems[rng() % elems.size()];
                if ((x * y) * z != x * (y * z)) out.require(false, "associativity in " + g.name());
            }
            for (const auto& x : elems) {
                if (!(x * g.identity() == x && x * x.inverse() == g.identity() && g.contains(x.inverse())))
                    out.require(false, "identity or inverse in " + g.name());
            }
            checks += triples + elems.size();
            for (const auto& x : class_representatives(g)) {
                const auto cls = conjugacy_class(g, x);
                const auto cent = centralizer(g, x);
                out.require(cls.size() * cent.order() == g.order_exact(), "orbit-stabilizer for " + g.format(x));
                const auto ax = check_rack_axioms(FiniteRack::from_class(cls));
                out.require(ax.ok, "rack axioms for " + g.format(x) + ": " + ax.witness);
                checks += 1 + ax.checked;
            }
        }
    for (int n : {3, 4})
        for (auto chi : {TranspositionCharacter::SignSign, TranspositionCharacter::SwapSign}) {
            const auto c = braiding(transposition_module(n, chi));
            for (int k = 1; k <= 4; ++k) {
                const auto rec = symmetrizer_columns(c, k);
                out.require(rec == symmetrizer_columns_by_words(c, k, WordChoice::LeftmostDescent) &&
                                rec == symmetrizer_columns_by_words(c, k, WordChoice::RightmostDescent),
                            "word dependence at k = " + std::to_string(k));
                ++checks;
            }
        }
    if (out.ok) out.detail = std::to_string(checks) + " checks";
    return out;
}

Outcome filter() {
    Outcome out;
    reports_pass({"q-value-filter"}, {}, out);
    if (out.ok) out.detail = "ten cases reproduce the admitted sign options";
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 lemma harness", 300, lemma_harness},
        {"2 type-D certificates", 600, certificates},
        {"3 class scan n=5,6", 1800, scan},
        {"4 Nichols and Hilbert data", 900, nichols},
        {"5 psi isomorphism", 120, psi},
        {"6 structural suites", 300, structural},
        {"7 q-value filter", 60, filter},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = t <= c.limit_s;
        const bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.name << " [" << std::fixed << std::setprecision(1) << t
                  << " s, limit " << c.limit_s << " s] " << (in_time ? "" : "over time limit; ") << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
