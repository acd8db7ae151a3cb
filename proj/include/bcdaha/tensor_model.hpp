#pragma once

// Brute-force model: materializes the invariant subspace of
// W (x) (C^N)^{(x) n} (x) 1_theta under the block subgroup of U(p) x U(q),
// restricts the Weyl-group action and the explicit commuting operators to
// it, and builds the distinguished common eigenvectors.

#include "bcdaha/functor_params.hpp"
#include "bcdaha/presentation.hpp"
#include "bcdaha/signed_perm.hpp"

#include <map>
#include <vector>

namespace bcd {

struct GuardrailExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// V(xi) for U(q-p): Young-symmetrizer image twisted by a determinant power,
// with the highest weight vector first in the basis.
struct WModule {
    long dimension = 1;
    long d = 0;                        // q - p
    std::vector<ExactMatrix> glAction; // E_{ab} restricted, index a*d + b (0-based)
    std::vector<std::vector<long>> weights;  // gl weight of each basis vector
    long highestWeightIndex = 0;
};

WModule build_w(const FunctorParams& params);

class TensorModel {
public:
    explicit TensorModel(const FunctorParams& params, const Integer& maxBigDim = Integer(1000000));

    const FunctorParams& params() const { return params_; }
    const DerivedParams& derived() const { return derived_; }
    Integer big_dim() const { return bigDim_; }
    long dim() const { return static_cast<long>(invariantBasis_.cols()); }

    // Restricted operators on the invariant subspace. Letters follow
    // HyperoctahedralGroup: 0..n-2 are the adjacent swaps, n-1 (or 0 when
    // n = 1) is the sign flip on the last factor.
    const ExactMatrix& generator_matrix(long letter) const;
    ExactMatrix element_matrix(const SignedPermutation& g) const;
    const ExactMatrix& y_matrix(long k) const;  // k = 1..n

    // Full assignment (S_i, g, y_k) as a linear representation.
    LinearRep rep() const;

    // Distinguished eigenvector, s = 1..d_{xi^mu}, in invariant-subspace
    // coordinates; requires admissible parameters.
    ExactMatrix varpi(long s) const;

    bool orbit_spans() const;

    // s_1..s_{m_p} fix every varpi; the sign flips on the xi block negate it.
    bool proposition_checks(std::vector<std::string>* failures = nullptr) const;

private:
    FunctorParams params_;
    DerivedParams derived_;
    WModule w_;
    long N_;
    Integer bigDim_;
    HyperoctahedralGroup group_;

    // Filtered big-space basis: all diagonal weight conditions hold.
    std::vector<std::pair<long, std::vector<int>>> basis_;  // (w index, tuple)
    std::map<std::vector<int>, long> basisIndex_;           // key = [w, i1..in]

    ExactMatrix invariantBasis_;  // filteredCount x dim
    std::vector<ExactMatrix> generators_;  // restricted, by letter
    std::vector<ExactMatrix> yOps_;        // restricted, k = 1..n

    std::vector<int> key(long w, const std::vector<int>& tuple) const;
    long lookup(long w, const std::vector<int>& tuple) const;  // -1 when absent

    ExactMatrix restrict_to_invariants(const ExactMatrix& filteredOp) const;
    ExactMatrix filtered_generator(long letter) const;
    ExactMatrix filtered_y(long k) const;
    ExactMatrix big_varpi(long s) const;  // coordinates over the filtered basis

    void build_basis();
    void build_invariants();
    void build_operators();
};

}  // namespace bcd
