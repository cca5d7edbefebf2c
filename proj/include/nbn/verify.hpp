#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nbn/rack.hpp"

namespace nbn {

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct VerificationReport {
    std::string id;          // role name, e.g. "sq-closed-forms"
    std::string statement;   // what was checked
    Status status = Status::Inconclusive;
    std::string counterexample;  // replayable input when status == Fail
    std::uint64_t checked = 0;
    bool exhaustive = true;
    nlohmann::json payload = nlohmann::json::object();  // certificates, tables, informational findings
    nlohmann::json config = nlohmann::json::object();   // seeds, sample counts, caps, primes
    double runtime_s = 0;
};

struct VerifyConfig {
    std::uint64_t seed = 1;
    std::uint64_t samples = 10000;       // closed-form samples
    int closed_form_max_n = 8;
    std::uint64_t juxtaposition_samples = 1000;
    int juxtaposition_exhaustive_max = 5;  // n + m bound for the exhaustive laws
    int coset_max_m = 8;
    int sign_product_max_n = 6;
    std::uint64_t step_budget = 50'000'000;
    std::uint64_t group_cap = kDefaultGroupCap;
    bool inject_fault = false;  // drop one summand of the commuting closed form
};

/// Report ids in canonical order.
const std::vector<std::string>& lemma_ids();
/// Throws std::invalid_argument for an unknown id.
VerificationReport verify_lemma(const std::string& id, const VerifyConfig& config = {});
/// Empty selection means all, in canonical order; otherwise the selected ids in canonical order.
std::vector<VerificationReport> verify_lemmas(const std::vector<std::string>& selection, const VerifyConfig& config = {});
/// 0 all pass, 1 any fail, 2 any inconclusive without fail.
int exit_code(const std::vector<Status>& statuses);

// --- transposition coset identities -----------------------------------------------------------

struct CosetIdentityRow {
    std::string text;       // parts separated by '|', e.g. "(1 2)(2 j)|(2 j 1)|(1 j)(1 2)"
    std::string condition;  // side condition on the symbolic indices, empty when none
};
/// The product identities for the fixed transposition coset table, over symbolic indices j, j1, k, k1.
const std::vector<CosetIdentityRow>& transposition_coset_rows();

struct CosetRowResult {
    std::size_t row = 0;
    std::uint64_t tuples = 0;
    std::uint64_t failures = 0;           // ordered reading
    std::uint64_t bare_failures = 0;      // without the coset-table index ordering
    std::uint64_t decomposition_failures = 0;  // zeta disagrees with the last part's g_j gamma split
    std::string first_failure;
};
/// Every row over all index tuples in 3..m satisfying distinctness inside cycles and the side condition.
std::vector<CosetRowResult> check_transposition_coset_rows(int m);

// --- class scan ---------------------------------------------------------------------------------

enum class ScanOutcome { Certificate, ExceptionList, Inconclusive };
std::string to_string(ScanOutcome o);

struct ScanRow {
    int n = 0;
    SignedPermutation rep;
    std::string signed_type;     // e.g. "1+ 1- 3+"
    std::string cycle_type;      // e.g. "(1^2,3)"
    std::string sign_condition;  // "equal", "mixed" or "none" over the fixed points
    std::size_t class_size = 0;
    ScanOutcome outcome = ScanOutcome::Inconclusive;
    std::string strategy;
    std::string note;
    std::optional<TypeDCertificate> certificate;
};

struct ScanConfig {
    std::uint64_t seed = 1;
    std::uint64_t step_budget = 50'000'000;
    std::uint64_t group_cap = kDefaultGroupCap;
};

/// Cycle lengths of tau as "(1^2,3)".
std::string cycle_type_label(const Permutation& tau);
/// Types (2,3), (2^3), (2^4), (1,2^2) with any signs; (1^2,2^2), (1^{n-2},2), (1^{n-3},3) when all
/// fixed points carry the same sign.
bool matches_exception_list(const SignedPermutation& x);
/// One row per class of B_n with tau != 1, in canonical order of representatives.
std::vector<ScanRow> scan_classes(int n, const ScanConfig& config = {});

// --- report emission -----------------------------------------------------------------------------

enum class ReportFormat { Json, Csv, Markdown };
ReportFormat parse_format(const std::string& name);

nlohmann::json to_json(const VerificationReport& r, bool include_runtime = false);
VerificationReport report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ScanRow& r);
/// {class, R, S, r, s, sq_value} with rack indices.
nlohmann::json to_json(const FiniteRack& rack, const TypeDCertificate& c);

/// Byte-deterministic for identical inputs when runtime is excluded.
std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat format,
                           bool include_runtime = false);
std::string render_scan(const std::vector<ScanRow>& rows, ReportFormat format);

}  // namespace nbn
