#include "bcdaha/induce.hpp"

#include <numeric>
#include <stdexcept>

namespace bcd {

SeedModule SeedModule::build(std::vector<long> torusBlocks, const Partition& xiShape,
                             const ExactMatrix& yEigen) {
    SeedModule s;
    s.torusBlocks = std::move(torusBlocks);
    s.xiShape = xiShape;
    s.xiBlock = xiShape.size();
    s.n = std::accumulate(s.torusBlocks.begin(), s.torusBlocks.end(), 0L) + s.xiBlock;

    SpechtModule specht(xiShape);
    MurphyBasis murphy = specht.murphy_basis(JmVariant::Lhat);
    s.dim = specht.dim();
    if (yEigen.rows() != s.n || yEigen.cols() != s.dim)
        throw std::invalid_argument("eigenvalue table has the wrong shape");
    s.yEigen = yEigen;
    // Specht action rewritten in the twisted Murphy basis: columns of the
    // basis matrix are the seed vectors.
    for (const ExactMatrix& g : specht.generators())
        s.xiAdjacent.push_back(solve_exact(murphy.vectors, g * murphy.vectors));
    return s;
}

ExactMatrix SeedModule::gamma_action(int xiSign, const Perm& xiPerm) const {
    ExactMatrix m = ExactMatrix::identity(dim);
    for (long letter : xiPerm.adjacent_word()) m = m * xiAdjacent[letter - 1];
    if (xiSign < 0) m = -m;
    return m;
}

namespace {

struct RewriteTerm {
    Rational coeff;
    std::vector<long> word;  // generator letters
    long yIdx;               // 1..n, or 0 for no y factor
};

// Pushes y_k through the reduced word of a coset representative, left to
// right, using the degree-preserving cross relations.
std::vector<RewriteTerm> rewrite_y_past_word(long n, long k, const std::vector<long>& word,
                                             const Rational& sConst, const Rational& gConst) {
    std::vector<RewriteTerm> terms{{Rational(1), {}, k}};
    long gammaLetter = (n == 1) ? 0 : n - 1;
    for (long letter : word) {
        std::vector<RewriteTerm> next;
        for (const auto& t : terms) {
            if (t.yIdx == 0) {
                RewriteTerm u = t;
                u.word.push_back(letter);
                next.push_back(std::move(u));
                continue;
            }
            if (letter == gammaLetter) {
                // y_n g = -g y_n + gConst; y_j g = g y_j otherwise
                if (t.yIdx == n) {
                    RewriteTerm a = t;
                    a.coeff = -a.coeff;
                    a.word.push_back(letter);
                    next.push_back(std::move(a));
                    RewriteTerm b = t;
                    b.coeff *= gConst;
                    b.yIdx = 0;
                    next.push_back(std::move(b));
                } else {
                    RewriteTerm a = t;
                    a.word.push_back(letter);
                    next.push_back(std::move(a));
                }
            } else {
                long i = letter + 1;  // S_i
                if (t.yIdx == i) {
                    // y_i S_i = S_i y_{i+1} + sConst
                    RewriteTerm a = t;
                    a.word.push_back(letter);
                    a.yIdx = i + 1;
                    next.push_back(std::move(a));
                    RewriteTerm b = t;
                    b.coeff *= sConst;
                    b.yIdx = 0;
                    next.push_back(std::move(b));
                } else if (t.yIdx == i + 1) {
                    // y_{i+1} S_i = S_i y_i - sConst
                    RewriteTerm a = t;
                    a.word.push_back(letter);
                    a.yIdx = i;
                    next.push_back(std::move(a));
                    RewriteTerm b = t;
                    b.coeff *= -sConst;
                    b.yIdx = 0;
                    next.push_back(std::move(b));
                } else {
                    RewriteTerm a = t;
                    a.word.push_back(letter);
                    next.push_back(std::move(a));
                }
            }
        }
        terms = std::move(next);
    }
    return terms;
}

}  // namespace

InducedModule induce_module(const SeedModule& seed, const Rational& sConst,
                            const Rational& gConst) {
    long n = seed.n;
    HyperoctahedralGroup group(n);
    CosetSystem cosets(group, seed.torusBlocks, seed.xiBlock);
    long d = seed.dim;
    long dim = cosets.count() * d;

    InducedModule out;
    out.cosetCount = cosets.count();
    out.seedDim = d;
    out.rep.dim = dim;

    auto place_block = [&](ExactMatrix& target, long rowCoset, long colCoset,
                           const ExactMatrix& block) {
        for (const auto& [rc, v] : block.entries())
            target.add_to(rowCoset * d + rc.first, colCoset * d + rc.second, v);
    };

    // Group generators: g * w_c = w_{c'} * gamma.
    for (long letter = 0; letter < group.generator_count(); ++letter) {
        SignedPermutation g = group.generator(letter);
        ExactMatrix mat(dim, dim);
        for (long c = 0; c < cosets.count(); ++c) {
            auto dec = cosets.decompose(g.compose(cosets.rep(c).perm));
            place_block(mat, dec.coset, c, seed.gamma_action(dec.xi_sign, dec.xi_perm));
        }
        std::string name = (n == 1 || letter == n - 1) ? "g" : "S" + std::to_string(letter + 1);
        out.rep.assignment.emplace(name, std::move(mat));
    }

    // y_k * w_c = sum coeff * u * (y_j or 1), then u = w_{c'} * gamma.
    for (long k = 1; k <= n; ++k) {
        ExactMatrix mat(dim, dim);
        for (long c = 0; c < cosets.count(); ++c) {
            auto terms = rewrite_y_past_word(n, k, cosets.rep(c).word, sConst, gConst);
            for (const auto& t : terms) {
                SignedPermutation u = SignedPermutation::identity(n);
                for (long letter : t.word) u = u.compose(group.generator(letter));
                auto dec = cosets.decompose(u);
                ExactMatrix block = seed.gamma_action(dec.xi_sign, dec.xi_perm);
                if (t.yIdx > 0) {
                    std::vector<Rational> diag(d);
                    for (long s = 0; s < d; ++s) diag[s] = seed.yEigen.get(t.yIdx - 1, s);
                    block = block * ExactMatrix::diagonal(diag);
                }
                place_block(mat, dec.coset, c, block.scaled(t.coeff));
            }
        }
        out.rep.assignment.emplace("y" + std::to_string(k), std::move(mat));
    }
    return out;
}

}  // namespace bcd
