#ifndef RINGTK_VERIFY_HPP
#define RINGTK_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringtk/corpus.hpp"
#include "ringtk/finite_ring.hpp"

namespace ringtk {

enum class CheckStatus {
    pass,
    fail,        // always carries a witness in detail
    skipped,     // hypothesis unmet; reason in detail
    undecided,   // search budget exhausted
    flagged,     // counterexample candidate needing review (never silent)
};
const char* to_string(CheckStatus s);

struct CheckResult {
    std::string check;       // e.g. "delta/one-regular"
    std::string ring;        // ring name
    std::optional<int> r;    // element index; nullopt means ALL r
    CheckStatus status = CheckStatus::pass;
    std::string detail;      // witness, skip reason, or note
    // Orders the claim explicitly leaves out are still evaluated but
    // reported in a separate section and never counted as failures.
    bool excluded_order = false;
};

struct SuiteSummary {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    int undecided = 0;
    int flagged = 0;
    int excluded_consistent = 0;  // excluded-order rows where the claim held
    int excluded_divergent = 0;   // excluded-order rows where it did not
};

struct SuiteReport {
    std::string corpus;
    std::vector<std::string> suites;
    std::vector<CheckResult> results;
    SuiteSummary summary;  // kept consistent with results by run_suite

    std::string to_json() const;   // deterministic; no timestamps
    std::string to_table() const;  // human-readable
    /// 0 all pass, 1 fail present, 3 undecided present (exit-code scheme).
    int exit_code() const;
};

struct VerifyBudget {
    std::uint64_t clique_nodes = 50'000'000;
    std::uint64_t iso_nodes = 50'000'000;
    int subring_generator_bound = 2;
};

/// Individual checks. Each returns one result per (claim, ring, r) it
/// evaluated plus aggregated skip records for unmet hypotheses.
std::vector<CheckResult> check_degree_formulas(const FiniteRing& ring);
std::vector<CheckResult> check_gamma_shape_theorems(const FiniteRing& ring);
std::vector<CheckResult> check_delta_theorems(const FiniteRing& ring,
                                              const VerifyBudget& budget = {});
std::vector<CheckResult> check_commuting_equivalence_and_clique(
    const FiniteRing& ring, const VerifyBudget& budget = {});
std::vector<CheckResult> check_diameter_theorem(const FiniteRing& ring);
std::vector<CheckResult> check_isoclinism_proposition(const FiniteRing& r1,
                                                      const FiniteRing& r2,
                                                      const VerifyBudget& budget = {});

/// Suite ids accepted by run_suite (and the cli --suite flag).
const std::vector<std::string>& all_suite_ids();

/// Runs the selected suites over every ring of the corpus (isoclinism runs
/// over the E/F pairs present in the corpus). Checks execute in parallel;
/// result order and report bytes are identical regardless of thread count.
SuiteReport run_suite(const RingRegistry& corpus,
                      const std::vector<std::string>& suite_ids,
                      const VerifyBudget& budget = {});

} // namespace ringtk

#endif
