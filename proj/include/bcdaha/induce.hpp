#pragma once

// Induction of modules from the block subalgebra
//   H = H^{b_1} x ... x H^{b_p} x H^{xi}
// of the type-BC dAHA up the full algebra: basis indexed by (coset
// representative, seed vector), group action by left multiplication and
// reduction into the subgroup, y-action by rewriting along reduced words.

#include "bcdaha/presentation.hpp"
#include "bcdaha/signed_perm.hpp"
#include "bcdaha/specht.hpp"

#include <memory>

namespace bcd {

// The seed: the symmetric groups of the torus blocks act trivially, the sign
// group of the xi block acts by -1, the symmetric group of the xi block acts
// through the Specht module of xiShape written in the twisted Murphy basis,
// and every y_i acts diagonally with the prescribed eigenvalue table.
struct SeedModule {
    std::vector<long> torusBlocks;  // n_1^mu .. n_p^mu (zeros allowed)
    long xiBlock = 0;               // n_xi^mu
    Partition xiShape;              // xi^mu
    long n = 0;                     // total rank, = sum blocks + xiBlock
    long dim = 0;                   // d_{xi^mu}
    ExactMatrix yEigen;             // n x dim eigenvalue table
    std::vector<ExactMatrix> xiAdjacent;  // Murphy-basis matrices of s_1..s_{xi-1}

    static SeedModule build(std::vector<long> torusBlocks, const Partition& xiShape,
                            const ExactMatrix& yEigen);

    // Matrix of a subgroup element described by its xi-block data.
    ExactMatrix gamma_action(int xiSign, const Perm& xiPerm) const;
};

struct InducedModule {
    LinearRep rep;
    long cosetCount = 0;
    long seedDim = 0;
    // basis index = coset * seedDim + seedIndex
};

// sConst is the constant in S_i y_i - y_{i+1} S_i, gConst the one in
// gamma_n y_n + y_n gamma_n; the result satisfies the literal type-BC
// presentation with kappa1 = sConst, kappa2 = gConst.
InducedModule induce_module(const SeedModule& seed, const Rational& sConst,
                            const Rational& gConst);

}  // namespace bcd
