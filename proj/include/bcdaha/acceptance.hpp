#pragma once

// The acceptance grid and the nine exit criteria, shared between the
// dedicated acceptance binary and the CLI selftest.

#include "bcdaha/functor_params.hpp"
#include "bcdaha/presentation.hpp"

#include <string>
#include <vector>

namespace bcd {

struct GridPoint {
    std::string name;
    FunctorParams params;
};

// Admissible points spanning {q>p, q=p} x {xi block empty, nonempty} x
// n in {1,2,3}, with mu of both signs and a non-scalar V(xi).
std::vector<GridPoint> acceptance_grid();

// Deliberately inadmissible points (non-integral block, negative block,
// non-dominant shifted weight).
std::vector<GridPoint> inadmissible_grid();

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    long ms = 0;
    std::vector<std::string> notes;
};

struct AcceptanceOptions {
    ExecMode mode = ExecMode::OpenMP;
    // Mutation hook for the selftest smoke test: verifies the grid against a
    // presentation with the sign of kappa_1 flipped, which must fail.
    bool injectKappa1Flip = false;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace bcd
