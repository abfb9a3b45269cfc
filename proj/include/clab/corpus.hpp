#pragma once

#include "clab/reports.hpp"

namespace clab {

// The bundled worked instances:
//   example7   grid sample of [0,inf) with the two-target map, phi(t) = t/2,
//              declared condition type1 (has two fixed points)
//   example10  the integer window without 3, the A->2 / else->1 map, the
//              parity phi with k = 5/6, declared condition type2 with
//              delta = 5/6 (unique fixed point 1)
//   example13  the example10 instance under the type3 condition
struct CorpusOptions {
    long window_max = 200;      // example10/example13 window bound
    long truncation_max = 20;   // standalone truncation used for theorem checks
    Rational grid_lo{0};
    Rational grid_hi{10};
    Rational grid_step{1, 2};
    Rational a{1};              // example7 params
    Rational b{2};
    CertifyOptions certify;
};

Instance corpus_instance(const std::string& name, const CorpusOptions& options = {});
std::vector<std::string> corpus_names();

struct CorpusRunResult {
    bool pass = true;
    std::size_t checks = 0;
    std::size_t failures = 0;
    nlohmann::ordered_json report;
};

// Per instance: metric validation, phi checks, certification of the declared
// condition and the baselines, fixed points, iteration from every window
// point, class comparison, and the four-case bound table with both the
// recomputed bounds and the reference decimals. Every declared expectation
// is asserted; reference-decimal mismatches are informational.
CorpusRunResult corpus_run(const CorpusOptions& options = {});

} // namespace clab
