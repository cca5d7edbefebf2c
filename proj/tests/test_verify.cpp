#include <set>
#include <string>

#include "doctest.h"
#include "nbn/verify.hpp"

using namespace nbn;

TEST_CASE("every report passes with the default configuration") {
    const auto reports = verify_lemmas({});
    REQUIRE(reports.size() == lemma_ids().size());
    std::vector<Status> statuses;
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CAPTURE(r.counterexample);
        CHECK(r.status == Status::Pass);
        CHECK(r.checked > 0);
        statuses.push_back(r.status);
    }
    CHECK(exit_code(statuses) == 0);
}

TEST_CASE("selection, ordering and unknown ids") {
    const auto r = verify_lemmas({"q-value-filter", "transposition-sign-table"});
    REQUIRE(r.size() == 2);
    CHECK(r[0].id == "transposition-sign-table");
    CHECK(r[1].id == "q-value-filter");
    CHECK_THROWS_AS(verify_lemma("no-such-report"), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemmas({"sq-closed-forms", "bogus"}), std::invalid_argument);
    CHECK(exit_code({Status::Pass, Status::Inconclusive}) == 2);
    CHECK(exit_code({Status::Inconclusive, Status::Fail}) == 1);
    CHECK(exit_code({}) == 0);
}

TEST_CASE("fault injection yields a replayable counterexample") {
    VerifyConfig cfg;
    cfg.samples = 500;
    cfg.inject_fault = true;
    const auto r = verify_lemma("sq-closed-forms", cfg);
    REQUIRE(r.status == Status::Fail);
    const auto pos = r.counterexample.find("x = ");
    const auto sep = r.counterexample.find(", y = ");
    REQUIRE(pos != std::string::npos);
    REQUIRE(sep != std::string::npos);
    const auto x = parse_signed(r.counterexample.substr(pos + 4, sep - pos - 4));
    const auto y = parse_signed(r.counterexample.substr(sep + 6));
    CHECK(sq_sign_commuting(x, y, true) != sq_generic(x, y).sign());
    CHECK(sq_sign_commuting(x, y) == sq_generic(x, y).sign());
}

TEST_CASE("same seed gives the same report bytes") {
    VerifyConfig cfg;
    cfg.samples = 300;
    cfg.seed = 7;
    const auto a = render_reports({verify_lemma("sq-closed-forms", cfg)}, ReportFormat::Json);
    const auto b = render_reports({verify_lemma("sq-closed-forms", cfg)}, ReportFormat::Json);
    CHECK(a == b);
    CHECK(a.find("runtime_s") == std::string::npos);
    CHECK(render_reports({verify_lemma("sq-closed-forms", cfg)}, ReportFormat::Json, true).find("runtime_s") !=
          std::string::npos);
}

TEST_CASE("coset identity rows") {
    REQUIRE(transposition_coset_rows().size() == 37);
    std::set<std::size_t> bare;
    for (const auto& res : check_transposition_coset_rows(8)) {
        CAPTURE(res.row);
        CHECK(res.tuples > 0);
        CHECK(res.failures == 0);
        CHECK(res.decomposition_failures == 0);
        if (res.bare_failures) bare.insert(res.row);
    }
    // Rows that need the index ordering of the coset table.
    CHECK(bare == std::set<std::size_t>{13, 20, 22, 31, 32, 34, 36});
    CHECK_THROWS_AS(check_transposition_coset_rows(2), std::invalid_argument);
}

TEST_CASE("cycle type labels and the exception list") {
    CHECK(cycle_type_label(parse_signed("00000;(1 2 3)").perm()) == "(1^2,3)");
    CHECK(cycle_type_label(parse_signed("000000;(1 2)(3 4)(5 6)").perm()) == "(2^3)");
    CHECK(matches_exception_list(parse_signed("10101;(1 2)(3 4 5)")));
    CHECK(matches_exception_list(parse_signed("10000;(2 3)(4 5)")));
    CHECK(matches_exception_list(parse_signed("00000;(1 2)")));
    CHECK(matches_exception_list(parse_signed("00111;(1 2)")));
    CHECK_FALSE(matches_exception_list(parse_signed("00100;(1 2)")));
    CHECK(matches_exception_list(parse_signed("000000;(1 2)(3 4)")));
    CHECK_FALSE(matches_exception_list(parse_signed("000010;(1 2)(3 4)")));
    CHECK(matches_exception_list(parse_signed("000000;(1 2 3)")));
    CHECK_FALSE(matches_exception_list(parse_signed("000001;(1 2 3)")));
    CHECK_FALSE(matches_exception_list(parse_signed("00000;(1 2 3 4 5)")));
    CHECK_FALSE(matches_exception_list(parse_signed("000000;(1 2 3)(4 5 6)")));
}

TEST_CASE("class scan of B5") {
    const auto rows = scan_classes(5);
    // Classes of B_5 are signed cycle types; 36 of them have tau != 1.
    CHECK(rows.size() == 36 - 6);
    std::size_t certified = 0;
    for (const auto& row : rows) {
        CAPTURE(row.signed_type);
        CHECK(row.outcome != ScanOutcome::Inconclusive);
        if (row.outcome == ScanOutcome::Certificate) {
            ++certified;
            REQUIRE(row.certificate);
            const auto rack = FiniteRack::from_class(conjugacy_class(Group::signed_group(5), row.rep));
            CHECK(verify_certificate(rack, *row.certificate).ok);
        } else {
            CHECK(matches_exception_list(row.rep));
        }
    }
    CHECK(certified > 0);
}

TEST_CASE("json round trip and renderers") {
    VerificationReport r;
    r.id = "x";
    r.statement = "a, \"quoted\" | piped";
    r.status = Status::Fail;
    r.counterexample = "x = 1;()";
    r.checked = 3;
    r.exhaustive = false;
    r.payload = {{"k", 1}};
    r.config = {{"seed", 2}};
    r.runtime_s = 1.5;
    const auto back = report_from_json(to_json(r, true));
    CHECK(back.id == r.id);
    CHECK(back.statement == r.statement);
    CHECK(back.status == r.status);
    CHECK(back.counterexample == r.counterexample);
    CHECK(back.checked == r.checked);
    CHECK(back.exhaustive == r.exhaustive);
    CHECK(back.payload == r.payload);
    CHECK(back.config == r.config);
    CHECK(back.runtime_s == r.runtime_s);
    CHECK(report_from_json(to_json(r)).runtime_s == 0);

    const auto csv = render_reports({r}, ReportFormat::Csv);
    CHECK(csv.rfind("id,status,checked,exhaustive,counterexample\n", 0) == 0);
    CHECK(csv.find("x,fail,3,false,x = 1;()") != std::string::npos);
    const auto md = render_reports({r}, ReportFormat::Markdown);
    CHECK(md.find("| x | fail | 3 | no |") != std::string::npos);
    const auto js = nlohmann::json::parse(render_reports({r}, ReportFormat::Json));
    CHECK(js.at("version") == 1);
    CHECK(js.at("reports").size() == 1);

    CHECK(parse_format("md") == ReportFormat::Markdown);
    CHECK(parse_format("csv") == ReportFormat::Csv);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);

    const auto rows = scan_classes(3);
    const auto scan = nlohmann::json::parse(render_scan(rows, ReportFormat::Json));
    CHECK(scan.at("rows").size() == rows.size());
    CHECK(render_scan(rows, ReportFormat::Csv).find("n,representative,") == 0);
}
