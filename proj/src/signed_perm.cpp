#include "bcdaha/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bcd {

SignedPermutation SignedPermutation::identity(long n) {
    SignedPermutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

SignedPermutation SignedPermutation::swap_gen(long n, long i) {
    if (i < 1 || i >= n) throw std::invalid_argument("swap generator out of range");
    SignedPermutation p = identity(n);
    std::swap(p.img[i - 1], p.img[i]);
    return p;
}

SignedPermutation SignedPermutation::sign_gen(long n) {
    SignedPermutation p = identity(n);
    p.img[n - 1] = -static_cast<int>(n);
    return p;
}

int SignedPermutation::operator()(long i) const {
    if (i > 0) return img[i - 1];
    return -img[-i - 1];
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& o) const {
    SignedPermutation r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) r.img[i] = (*this)(o.img[i]);
    return r;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
        int v = img[i];
        if (v > 0)
            r.img[v - 1] = static_cast<int>(i + 1);
        else
            r.img[-v - 1] = -static_cast<int>(i + 1);
    }
    return r;
}

std::string SignedPermutation::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < img.size(); ++i) os << (i ? " " : "") << img[i];
    os << "]";
    return os.str();
}

HyperoctahedralGroup::HyperoctahedralGroup(long n) : n_(n) {
    if (n < 1) throw std::invalid_argument("group rank must be positive");
    GroupElement id{SignedPermutation::identity(n), {}};
    elements_.push_back(id);
    index_[id.perm.img] = 0;
    // BFS expanding in generator order; first visit gives the minimal-length,
    // lexicographically smallest word.
    std::deque<long> queue{0};
    while (!queue.empty()) {
        long cur = queue.front();
        queue.pop_front();
        for (long letter = 0; letter < generator_count(); ++letter) {
            SignedPermutation next = elements_[cur].perm.compose(generator(letter));
            if (index_.count(next.img)) continue;
            GroupElement e;
            e.perm = next;
            e.word = elements_[cur].word;
            e.word.push_back(letter);
            index_[next.img] = static_cast<long>(elements_.size());
            elements_.push_back(std::move(e));
            queue.push_back(static_cast<long>(elements_.size()) - 1);
        }
    }
}

SignedPermutation HyperoctahedralGroup::generator(long letter) const {
    if (n_ == 1) {
        if (letter != 0) throw std::invalid_argument("bad generator letter");
        return SignedPermutation::sign_gen(1);
    }
    if (letter >= 0 && letter < n_ - 1) return SignedPermutation::swap_gen(n_, letter + 1);
    if (letter == n_ - 1) return SignedPermutation::sign_gen(n_);
    throw std::invalid_argument("bad generator letter");
}

long HyperoctahedralGroup::index_of(const SignedPermutation& p) const {
    auto it = index_.find(p.img);
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
}

CosetSystem::CosetSystem(const HyperoctahedralGroup& group, std::vector<long> torusBlocks,
                         long xiBlock)
    : group_(group), torusBlocks_(std::move(torusBlocks)), xiBlock_(xiBlock) {
    offsets_.push_back(0);
    for (long b : torusBlocks_) {
        if (b < 0) throw std::invalid_argument("negative block size");
        offsets_.push_back(offsets_.back() + b);
    }
    if (offsets_.back() + xiBlock_ != group.n())
        throw std::invalid_argument("block sizes do not sum to the rank");

    for (long idx = 0; idx < group.order(); ++idx) {
        std::vector<int> key = canonical_key(group.element(idx).perm);
        auto it = cosetOf_.find(key);
        if (it == cosetOf_.end()) {
            cosetOf_[key] = static_cast<long>(reps_.size());
            reps_.push_back(idx);
        }
    }
}

const GroupElement& CosetSystem::rep(long c) const { return group_.element(reps_[c]); }

std::vector<int> CosetSystem::canonical_key(const SignedPermutation& g) const {
    // Right multiplication by Gamma permutes values within each torus block
    // (signs fixed) and permutes-and-flips values within the xi block, so the
    // coset invariant is: sorted signed values per torus block, sorted
    // absolute values on the xi block.
    std::vector<int> key;
    long p = static_cast<long>(torusBlocks_.size());
    for (long r = 0; r < p; ++r) {
        std::vector<int> vals;
        for (long i = offsets_[r] + 1; i <= offsets_[r + 1]; ++i) vals.push_back(g(i));
        std::sort(vals.begin(), vals.end());
        key.insert(key.end(), vals.begin(), vals.end());
        key.push_back(0);  // block separator
    }
    std::vector<int> vals;
    for (long i = offsets_[p] + 1; i <= group_.n(); ++i) vals.push_back(std::abs(g(i)));
    std::sort(vals.begin(), vals.end());
    key.insert(key.end(), vals.begin(), vals.end());
    return key;
}

CosetSystem::Decomposition CosetSystem::decompose(const SignedPermutation& g) const {
    auto it = cosetOf_.find(canonical_key(g));
    if (it == cosetOf_.end()) throw std::logic_error("coset lookup failed");
    Decomposition d;
    d.coset = it->second;
    d.gamma = rep(d.coset).perm.inverse().compose(g);

    long p = static_cast<long>(torusBlocks_.size());
    long mp = offsets_[p];
    d.xi_sign = 1;
    d.xi_perm = Perm::identity(xiBlock_);
    for (long i = mp + 1; i <= group_.n(); ++i) {
        int v = d.gamma(i);
        if (std::abs(v) <= mp || std::abs(v) > group_.n())
            throw std::logic_error("decomposition left the xi block");
        if (v < 0) d.xi_sign = -d.xi_sign;
        d.xi_perm.img[i - mp - 1] = std::abs(v) - mp;
    }
    // Sanity: torus blocks must be preserved sign-free.
    for (long r = 0; r < p; ++r)
        for (long i = offsets_[r] + 1; i <= offsets_[r + 1]; ++i) {
            int v = d.gamma(i);
            if (v <= offsets_[r] || v > offsets_[r + 1])
                throw std::logic_error("decomposition left a torus block");
        }
    return d;
}

}  // namespace bcd
