#pragma once

// Specht modules on the polytabloid basis, arbitrary permutation actions,
// Jucys-Murphy operators (both directed variants), and the Murphy eigenbasis
// together with its reversal twist.

#include "bcdaha/matrix.hpp"
#include "bcdaha/partition.hpp"

#include <map>
#include <vector>

namespace bcd {

// Permutation of {1..m}; img[i-1] is the image of i.
struct Perm {
    std::vector<long> img;

    static Perm identity(long m);
    static Perm transposition(long m, long a, long b);
    // Reversal i -> m+1-i, the product of the swaps (i, m-i+1).
    static Perm reversal(long m);

    long degree() const { return static_cast<long>(img.size()); }
    long operator()(long i) const { return img[i - 1]; }
    Perm compose(const Perm& o) const;  // (this o other)(i) = this(other(i))
    Perm inverse() const;
    bool operator==(const Perm& o) const { return img == o.img; }
    // Decomposition into adjacent transpositions (s_i = (i, i+1)).
    std::vector<long> adjacent_word() const;
};

enum class JmVariant { L, Lhat };

struct MurphyBasis {
    // Column s holds w_s (variant L) or the twisted \hat w_s (variant Lhat)
    // in polytabloid coordinates.
    ExactMatrix vectors;
    // eigen(i-1, s-1): eigenvalue of the i-th operator on column s.
    ExactMatrix eigenvalues;
};

class SpechtModule {
public:
    explicit SpechtModule(const Partition& shape);

    const Partition& shape() const { return shape_; }
    long dim() const { return dim_; }
    long entries() const { return m_; }
    const std::vector<StandardTableau>& tableaux() const { return tableaux_; }

    // Matrices of the adjacent transpositions s_1..s_{m-1} on the
    // polytabloid basis, in tableau order.
    const std::vector<ExactMatrix>& generators() const { return generators_; }

    // Matrix of an arbitrary permutation (computed on the tabloid model and
    // re-expressed in the polytabloid basis).
    ExactMatrix action(const Perm& p) const;

    // Jucys-Murphy matrices: variant L gives L_s = sum_{j<s} (s j) with
    // L_1 = 0; variant Lhat gives sum_{j>i} (i j) with the last one zero.
    std::vector<ExactMatrix> jm_matrices(JmVariant v) const;

    MurphyBasis murphy_basis(JmVariant v) const;

    long tabloid_count() const { return static_cast<long>(tabloids_.size()); }
    // Tabloids as entry->row assignments, and polytabloid coordinates over
    // them; used to realize Specht vectors inside tensor powers.
    const std::vector<std::vector<long>>& tabloids() const { return tabloids_; }
    const ExactMatrix& polytabloid_matrix() const { return polytabloids_; }

private:
    Partition shape_;
    long m_ = 0;
    long dim_ = 0;
    std::vector<StandardTableau> tableaux_;
    std::vector<std::vector<long>> tabloids_;           // rowOf vectors, lexicographic
    std::map<std::vector<long>, long> tabloid_index_;
    ExactMatrix polytabloids_;                          // tabloid_count x dim
    std::vector<ExactMatrix> generators_;

    ExactMatrix polytabloid_column(const StandardTableau& t) const;
    ExactMatrix tabloid_action_on_polytabloids(const Perm& p) const;
};

}  // namespace bcd
