#pragma once

// Principal-series parameter packs for U(p,q), the derived block data, the
// admissibility test, the closed-form dimension, the eigenvalue table of the
// commuting generators, and assembly of the predicted induced module.

#include "bcdaha/induce.hpp"
#include "bcdaha/partition.hpp"

#include <string>
#include <vector>

namespace bcd {

struct FunctorParams {
    long p = 0, q = 0, n = 0;
    Rational mu;
    std::vector<long> nvec;   // n_1..n_p
    std::vector<long> xi;     // dominant weight, length q-p
    std::vector<Rational> nu; // nu_1..nu_p

    void check_well_formed() const;  // throws std::invalid_argument
};

struct DerivedParams {
    Rational tau;
    std::vector<Rational> nmuExact;   // -n_i + mu(q-p) + 2 tau, exact
    std::vector<Rational> ximuExact;  // -xi_{q-p-i+1} - mu p + tau, exact
    Rational nXiExact;                // sum of ximuExact
    Rational kappa1;                  // (p - q - mu N)/2
    Rational kappa2;                  // always 1
    std::vector<Rational> rho;        // per-branch rho_i values

    // Only meaningful when admissible:
    std::vector<long> nmu;
    Partition ximu;
    long nXi = 0;
    std::vector<long> m;  // partial sums m_0..m_p

    // Constants of the literal presentation the module satisfies:
    // S_i y_i - y_{i+1} S_i = sConst, gamma y_n + y_n gamma = gConst.
    Rational sConst;
    Rational gConst;
};

DerivedParams derive(const FunctorParams& params);

struct Admissibility {
    bool admissible = false;
    std::vector<std::string> violations;
};

Admissibility validate(const FunctorParams& params);

struct PredictedDimension {
    Integer dimension;   // n! prod 2^{n_i^mu} / (prod n_i^mu! prod hooks)
    Integer cmuFactor;   // multiplicity count C^mu
    Integer spechtDim;   // d_{xi^mu}
};

PredictedDimension predicted_dimension(const FunctorParams& params);

enum class SecondBranchIndex {
    KMinusMp,         // resolved reading: hat alpha index k - m_p
    KMinusMpPlusOne,  // alternative reading; overflows at k = n
};

// lambda_{k,s} for k = 1..n, s = 1..d_{xi^mu}; throws std::domain_error if
// the chosen index reading steps outside the Murphy table.
ExactMatrix eigenvalue_table(const FunctorParams& params,
                             SecondBranchIndex idx = SecondBranchIndex::KMinusMp);

// Seed + induction for the predicted module; requires admissible parameters.
InducedModule build_p_tilde(const FunctorParams& params);

// The literal type-BC presentation this family of modules satisfies.
DahaPresentation target_presentation(const FunctorParams& params);

}  // namespace bcd
