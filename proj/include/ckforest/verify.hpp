#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ckforest/dominant.hpp"

namespace ckforest {

struct VerifyOptions {
    int max_size = 6;        // exhaustive universe cap for pair identities
    int triple_size = 7;     // exhaustive universe cap for triple identities
    int random_triples = 1000;
    int random_size = 8;     // total size of sampled tuples
    std::uint64_t seed = 0xc0ffee;
    int order = 8;           // three-way table agreement up to this order
    int n_max = 12;          // sequence families checked up to this order
    int ladder_k_max = 6;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // informational lines, e.g. sequence prefixes

    std::string summary() const;
};

SuiteResult verify_hopf_axioms(const VerifyOptions& opt);
SuiteResult verify_com_prelie_axioms(const VerifyOptions& opt);
SuiteResult verify_theorem_1_3(const VerifyOptions& opt);
SuiteResult verify_coeff_threeway(const VerifyOptions& opt);
SuiteResult verify_lemma_2_6(const VerifyOptions& opt);
SuiteResult verify_harmonic_forms(const VerifyOptions& opt);
SuiteResult verify_ladder(const VerifyOptions& opt);
SuiteResult verify_oeis(const VerifyOptions& opt);

const std::vector<std::string>& all_suite_names();
/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

/// The expected closed forms of the coefficient families used by the
/// harmonic-forms suite (exact rational coefficient vectors).
HarmonicForm expected_harmonic_form(const DominantSeq& tail);

}  // namespace ckforest
