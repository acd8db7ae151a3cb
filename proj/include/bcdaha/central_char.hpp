#pragma once

// Rank-one central character machinery: restricted Casimir polynomials, the
// two infinitesimal-character families, the evaluation pipeline
// (restrict -> block rotation -> half-sum shift -> weight evaluation), and
// the closed formula expressing the square of the degree-one generator.

#include "bcdaha/functor_params.hpp"
#include "bcdaha/poly.hpp"

#include <vector>

namespace bcd {

struct CasimirPoly {
    long N = 0;
    long k = 0;
    MultiPoly poly;  // in variables E1..EN
};

// Transcription of the restricted Casimir elements of degree 2 and 3.
CasimirPoly casimir_restriction(long k, long N);

enum class CharacterCase { Case1, Case2, Case1PEqualsQ };

// Which side of the block rotation absorbs the half-sum shift.
enum class ShiftOrder {
    OnDiagonalCoordinates,  // shift every diagonal coordinate (selected)
    OnCompactPartOnly,      // shift only the compact-torus coordinates
};

struct InfinitesimalCharacter {
    CharacterCase caseTag;
    long p = 0, q = 0, k = 1;           // k = position of the lowered entry (Case1)
    std::vector<MultiPoly> lambdaH;     // length p, in (mu, tau)
    std::vector<MultiPoly> lambdaB;     // length q-p, in (mu, tau)
};

InfinitesimalCharacter make_character(long p, long q, CharacterCase c, long k = 1);

struct CentralValues {
    MultiPoly c2;
    MultiPoly c3;
};

// c_i as polynomials in mu, tau, nu1..nup.
CentralValues evaluate_character(const InfinitesimalCharacter& chi,
                                 ShiftOrder order = ShiftOrder::OnDiagonalCoordinates);

// Square of the degree-one generator from the Casimir actions; q > p uses
// the long closed formula, p = q its simplified variant.
MultiPoly ycc_rhs(const CentralValues& c, long p, long q);

// The eigenvalue squares the formula must reproduce.
MultiPoly case_target(const InfinitesimalCharacter& chi);

struct EndToEndResult {
    bool applicable = false;     // parameters fit one of the case shapes
    std::string caseName;
    Rational modelValue;         // square of the model eigenvalue of y_1
    Rational formulaValue;       // ycc formula at the same parameters
    bool pass = false;
};

// Rank-one cross-check: the square of the tensor-model eigenvalue of y_1
// against the central-character formula, exactly.
EndToEndResult end_to_end_check(const FunctorParams& params);

}  // namespace bcd
