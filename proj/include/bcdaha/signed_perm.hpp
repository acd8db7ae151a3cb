#pragma once

// Signed permutations (the type-BC Weyl group), breadth-first enumeration
// with lexicographically minimal reduced words, and coset systems for the
// block subgroups used by induction.

#include "bcdaha/specht.hpp"

#include <map>
#include <optional>
#include <vector>

namespace bcd {

// Element of S_n x (Z_2)^n acting on {±1..±n}; img[i-1] = w(i) as a signed
// value, and w(-i) = -w(i).
struct SignedPermutation {
    std::vector<int> img;

    static SignedPermutation identity(long n);
    static SignedPermutation swap_gen(long n, long i);   // S_i = (i, i+1)
    static SignedPermutation sign_gen(long n);           // gamma_n: n -> -n

    long rank() const { return static_cast<long>(img.size()); }
    int operator()(long i) const;  // accepts negative arguments
    SignedPermutation compose(const SignedPermutation& o) const;
    SignedPermutation inverse() const;
    bool operator==(const SignedPermutation& o) const { return img == o.img; }
    bool operator<(const SignedPermutation& o) const { return img < o.img; }
    std::string to_string() const;
};

// Generator letters: 0..n-2 encode S_1..S_{n-1}, and n-1 encodes gamma_n.
// For n = 1 the only letter 0 is gamma_1.
struct GroupElement {
    SignedPermutation perm;
    std::vector<long> word;  // reduced, lexicographically minimal
};

// Full group W_{BC_n} = 2^n n! elements in BFS order from the identity.
class HyperoctahedralGroup {
public:
    explicit HyperoctahedralGroup(long n);

    long n() const { return n_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const GroupElement& element(long idx) const { return elements_[idx]; }
    long index_of(const SignedPermutation& p) const;
    long generator_count() const { return n_ == 1 ? 1 : n_; }
    SignedPermutation generator(long letter) const;

private:
    long n_;
    std::vector<GroupElement> elements_;
    std::map<std::vector<int>, long> index_;
};

// Left cosets w * Gamma of the subgroup
//   Gamma = S_{b_1} x ... x S_{b_p} x (S_{b_xi} semidirect Z_2^{b_xi})
// sitting block-diagonally (plain symmetric groups on the first blocks, all
// signs allowed on the last). Representatives are the BFS-first elements of
// each coset, i.e. minimal length with lexicographic word tie-break.
class CosetSystem {
public:
    CosetSystem(const HyperoctahedralGroup& group, std::vector<long> torusBlocks, long xiBlock);

    long count() const { return static_cast<long>(reps_.size()); }
    const GroupElement& rep(long c) const;
    long rep_group_index(long c) const { return reps_[c]; }

    struct Decomposition {
        long coset;                 // index of the representative
        SignedPermutation gamma;    // rep^{-1} * g, lies in Gamma
        int xi_sign;                // product of gamma's signs on the xi block
        Perm xi_perm;               // gamma's permutation of the xi block (1-based)
    };
    Decomposition decompose(const SignedPermutation& g) const;

    const std::vector<long>& torus_blocks() const { return torusBlocks_; }
    long xi_block() const { return xiBlock_; }
    long block_offset(long r) const { return offsets_[r]; }  // m_r partial sums

private:
    const HyperoctahedralGroup& group_;
    std::vector<long> torusBlocks_;
    long xiBlock_;
    std::vector<long> offsets_;  // offsets_[r] = m_r, r = 0..p (m_0 = 0)
    std::vector<long> reps_;     // group indices of representatives
    std::map<std::vector<int>, long> cosetOf_;  // canonical key -> coset idx

    std::vector<int> canonical_key(const SignedPermutation& g) const;
};

}  // namespace bcd
