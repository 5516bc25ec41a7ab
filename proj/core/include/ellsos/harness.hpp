#pragma once

#include "ellsos/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ellsos {

// Controls for the randomized verification suite.  Draws are uniform over a
// centered box in the complex plane; a draw is rejected while any element of
// the check's denominator set has |theta1| below genericity_floor times the
// largest member, so every printed formula stays inside its generic regime.
struct sample_policy {
    std::uint64_t seed = 12345;
    double re_half_width = 1.0;
    double im_half_width = 0.5;
    double genericity_floor = 1e-6;
    int max_redraws = 200;
    // Self-test hook: a check whose id equals fault_tag gets its residual
    // inflated by 1.0, forcing a controlled failure path.
    std::string fault_tag;
};

struct check_result {
    std::string id;
    std::string anchors;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

struct suite_result {
    std::vector<check_result> checks;
    bool pass = false;
    double seconds = 0.0;
};

// quick: every family at L <= 2.  full: adds L = 3 everywhere and L = 4 for
// the functional-equation residuals.  Execution is sequential and, for fixed
// policy, bitwise deterministic in every reported residual.
enum class suite_kind { quick, full };

suite_result run_suite(suite_kind kind, const sample_policy& policy = {});

/// One generic draw of model parameters and spectral points under the policy's
/// box, seed, and rejection rule.  Convenience for callers that need "random"
/// inputs consistent with the suite's own sampling.
struct drawn_configuration {
    model_params params;
    spectral_config cfg;
};

drawn_configuration draw_configuration(int L, const sample_policy& policy, double p = 0.2);

} // namespace ellsos
