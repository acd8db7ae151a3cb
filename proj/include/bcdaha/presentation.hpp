#pragma once

// Presentations of degenerate affine Hecke algebras of types A and BC, linear
// representations as exact matrices, and the relation verifier (serial and
// OpenMP lanes produce identical reports).

#include "bcdaha/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bcd {

enum class DahaType { A, BC };

struct RelationTerm {
    Rational coeff;
    std::vector<std::string> word;  // generator names; empty word = identity
};

struct Relation {
    std::string name;
    std::vector<RelationTerm> terms;  // asserts sum == 0
};

struct DahaPresentation {
    DahaType type;
    long n = 0;
    Rational kappa1;  // coefficient of the S_i y_i - y_{i+1} S_i relations
    Rational kappa2;  // coefficient of the gamma_n y_n + y_n gamma_n relation (BC)
    std::vector<std::string> generators;
    std::vector<Relation> relations;
};

// Type A with parameter kappa (in kappa1); the sum relation y_1+..+y_n = 0 is
// attached only when requested, matching the standalone presentation rather
// than the block subalgebras.
DahaPresentation make_presentation_a(long n, const Rational& kappa, bool includeSumZero);
DahaPresentation make_presentation_bc(long n, const Rational& kappa1, const Rational& kappa2);

struct LinearRep {
    long dim = 0;
    std::map<std::string, ExactMatrix> assignment;

    const ExactMatrix& matrix(const std::string& gen) const;
    LinearRep with_scaled_y(const Rational& c) const;  // y_i -> c * y_i
};

struct RelationResult {
    std::string name;
    bool pass = false;
    Rational max_violation;
};

struct VerifyReport {
    std::vector<RelationResult> relations;
    bool all_pass = true;
    std::vector<std::string> failed_names() const;
};

enum class ExecMode { Serial, OpenMP };

VerifyReport verify_linear_rep(const DahaPresentation& pres, const LinearRep& rep,
                               ExecMode mode = ExecMode::Serial);

// Basis of { X : X * A(g) = B(g) * X for every generator g }, i.e. module
// maps from repA to repB, as dimB x dimA matrices.
std::vector<ExactMatrix> intertwiner_space(const LinearRep& repA, const LinearRep& repB,
                                           const DahaPresentation& pres);

// Searches small deterministic combinations of the basis for an invertible
// element; nullopt when none of the probes is invertible.
std::optional<ExactMatrix> find_invertible_intertwiner(const std::vector<ExactMatrix>& basis);

}  // namespace bcd
