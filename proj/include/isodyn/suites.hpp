#pragma once

#include "isodyn/io.hpp"
#include "isodyn/reduction.hpp"

#include <optional>

namespace isodyn {

struct SuiteConfig {
    std::string suite;
    int trials = 1;
    std::uint64_t seed = 1;
};

struct SuiteFailure {
    std::uint64_t seed;
    int instance;
    std::string expression;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int trials_requested = 0;
    int trials_run = 0;
    std::vector<SuiteFailure> failures;
    long long rejections = 0;
    long long elapsed_ms = 0;  // wall clock; kept out of the serialized report

    bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

/// Runs one verification suite. Deterministic given (suite, trials, seed):
/// trial t draws from a generator seeded with seed xor t.
SuiteReport run_suite(const SuiteConfig& config);

/// Identical content for identical (suite, trials, seed); elapsed time is
/// deliberately not part of it.
Json report_to_json(const SuiteReport& report);

// --- random generic instances (Fuchs-satisfying, structurally generic) ---

/// 3x3 scheme: two finite poles with one zero slot each, three indices at
/// infinity balancing the Fuchs relation.
RiemannScheme random_a2_scheme(Rng& rng);

/// 4x4 scheme: three finite poles, double eigenvalue at the third.
RiemannScheme random_a1_scheme(Rng& rng);

XYCoords random_xy(Rng& rng);

/// 4x4 point with three simple-spectrum poles (two finite plus infinity),
/// for the rank-2 vs composed rank-1 cross-check.
DecompositionPoint random_distinct_4x4_point(Rng& rng);

// --- orbit export and the lattice report ---

/// Records {"n", "f", "g", "params"} for steps 0..steps. Throws BasePointHit
/// (with the step index) if the orbit lands on an indeterminate point.
std::vector<Json> orbit_a2(const ParamsA2& params, const FGPoint& start, int steps);
std::vector<Json> orbit_a1(const ParamsA1& params, const FGPoint& start, int steps);

/// Per-map isometry verdicts, root images, translation vectors, and the
/// informational full-matrix composition check.
Json picard_report();

}  // namespace isodyn
