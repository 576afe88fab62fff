#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace s3modes {

/// Tolerances used by the oracle suites. Defaults are the documented
/// acceptance thresholds.
struct Tolerances {
    double roots = 1e-10;
    double orthogonality = 1e-10;
    double harmonic = 1e-5;
    double membership = 1e-9;
    double roundtrip = 1e-9;
    double coefficient = 1e-8;
    double rotation = 1e-8;
    double scalars = 1e-12;
    double invariance = 1e-9;

    nlohmann::json to_json() const;
};

/// One measured quantity compared against its threshold.
struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool passed() const { return value < tolerance; }
};

/// Exact-count comparison reported alongside residual checks.
struct CountCheck {
    std::string name;
    long expected = 0;
    long actual = 0;
    bool passed() const { return expected == actual; }
};

struct SuiteResult {
    std::string suite;
    int k = 0;
    std::vector<Check> checks;
    std::vector<CountCheck> counts;
    std::vector<std::string> notes;

    bool passed() const;
    nlohmann::json to_json() const;
};

/// Roots of unity, B2 orthogonality, harmonicity and membership, change of
/// basis, coherent-state coefficients. B3 parts are skipped for odd k.
SuiteResult verify_bases(int k, const Tolerances& tol, unsigned long long seed = 1);
/// Rule exactness, projection idempotence, eigenvalue identity.
SuiteResult verify_quad(int k, const Tolerances& tol, unsigned long long seed = 1);
/// Closed-form G against the oracle, prism scalars, representation,
/// isometry, degenerate-rotation fallback. Odd k checks the B2 route only.
SuiteResult verify_rotations(int k, const Tolerances& tol, unsigned long long seed = 1,
                             int random_rotations = 10);
/// Lens and prism projector ranks, counts, pointwise invariance.
SuiteResult verify_quotients(int k, const Tolerances& tol, unsigned long long seed = 1);

}  // namespace s3modes
