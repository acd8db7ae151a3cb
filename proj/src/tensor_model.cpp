#include "bcdaha/tensor_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bcd {

namespace {

// Incremental independence test over sparse columns.
class ColumnSpace {
public:
    bool add(std::map<long, Rational> v) {
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            auto it = v.find(pivots_[i]);
            if (it == v.end()) continue;
            Rational c = it->second / cols_[i].at(pivots_[i]);
            for (const auto& [r, w] : cols_[i]) {
                auto jt = v.find(r);
                if (jt == v.end()) {
                    Rational nv = -c * w;
                    if (nv != 0) v.emplace(r, std::move(nv));
                } else {
                    jt->second -= c * w;
                    if (jt->second == 0) v.erase(jt);
                }
            }
        }
        if (v.empty()) return false;
        pivots_.push_back(v.begin()->first);
        cols_.push_back(std::move(v));
        return true;
    }

private:
    std::vector<std::map<long, Rational>> cols_;
    std::vector<long> pivots_;
};

std::vector<Perm> enumerate_group(const std::vector<std::vector<long>>& blocks, long m,
                                  bool withSign, std::vector<int>* signs) {
    // Cartesian product of the symmetric groups on the given entry blocks,
    // as permutations of 1..m; signs (when requested) are the permutation
    // parities, multiplied across blocks.
    std::vector<Perm> out{Perm::identity(m)};
    std::vector<int> sg{1};
    for (const auto& block : blocks) {
        std::vector<Perm> grown;
        std::vector<int> grownSigns;
        std::vector<long> arr = block;
        std::sort(arr.begin(), arr.end());
        std::vector<long> sorted = arr;
        do {
            int sign = 1;
            for (std::size_t i = 0; i < arr.size(); ++i)
                for (std::size_t j = i + 1; j < arr.size(); ++j)
                    if (arr[i] > arr[j]) sign = -sign;
            for (std::size_t e = 0; e < out.size(); ++e) {
                Perm p = out[e];
                for (std::size_t i = 0; i < arr.size(); ++i) p.img[sorted[i] - 1] = arr[i];
                grown.push_back(std::move(p));
                grownSigns.push_back(sg[e] * sign);
            }
        } while (std::next_permutation(arr.begin(), arr.end()));
        out = std::move(grown);
        sg = std::move(grownSigns);
    }
    if (withSign && signs) *signs = sg;
    return out;
}

long ipow(long base, long exp) {
    long r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

WModule build_w(const FunctorParams& params) {
    WModule w;
    w.d = params.q - params.p;
    if (w.d == 0) {
        w.dimension = 1;
        w.weights = {{}};
        return w;
    }
    long xiMin = params.xi.back();
    std::vector<long> lamParts;
    for (long x : params.xi) lamParts.push_back(x - xiMin);
    Partition shape = Partition::from_weakly_decreasing(lamParts);
    long m = shape.size();

    if (m == 0) {
        // Determinant power: one basis vector of weight (xiMin,...,xiMin).
        w.dimension = 1;
        w.weights = {std::vector<long>(w.d, xiMin)};
        for (long a = 0; a < w.d; ++a)
            for (long b = 0; b < w.d; ++b) {
                ExactMatrix e(1, 1);
                if (a == b) e.set(0, 0, xiMin);
                w.glAction.push_back(e);
            }
        return w;
    }

    long T = ipow(w.d, m);
    // Row filling tableau and its row/column entry blocks.
    std::vector<long> rowOf(m);
    {
        long e = 0;
        for (std::size_t r = 0; r < shape.parts.size(); ++r)
            for (long c = 0; c < shape.parts[r]; ++c) rowOf[e++] = static_cast<long>(r);
    }
    std::vector<std::vector<long>> rowBlocks(shape.parts.size());
    for (long e = 0; e < m; ++e) rowBlocks[rowOf[e]].push_back(e + 1);
    std::vector<std::vector<long>> colBlocks(shape.parts[0]);
    {
        long e = 0;
        for (std::size_t r = 0; r < shape.parts.size(); ++r)
            for (long c = 0; c < shape.parts[r]; ++c) colBlocks[c].push_back(++e);
    }

    std::vector<Perm> rowPerms = enumerate_group(rowBlocks, m, false, nullptr);
    std::vector<int> colSigns;
    std::vector<Perm> colPerms = enumerate_group(colBlocks, m, true, &colSigns);

    // Young symmetrizer column for a basis tuple (values 0-based).
    auto tuple_of = [&](long idx) {
        std::vector<int> t(m);
        for (long j = m - 1; j >= 0; --j) {
            t[j] = static_cast<int>(idx % w.d);
            idx /= w.d;
        }
        return t;
    };
    auto index_of = [&](const std::vector<int>& t) {
        long idx = 0;
        for (int v : t) idx = idx * w.d + v;
        return idx;
    };
    auto symmetrize = [&](const std::vector<int>& t) {
        std::map<long, Rational> col;
        for (const auto& a : rowPerms)
            for (std::size_t ci = 0; ci < colPerms.size(); ++ci) {
                Perm pi = a.compose(colPerms[ci]);
                std::vector<int> img(m);
                Perm inv = pi.inverse();
                for (long j = 0; j < m; ++j) img[j] = t[inv(j + 1) - 1];
                long row = index_of(img);
                auto [it, inserted] = col.try_emplace(row, colSigns[ci]);
                if (!inserted) {
                    it->second += colSigns[ci];
                    if (it->second == 0) col.erase(it);
                }
            }
        return col;
    };

    // Collect independent symmetrizer images; the row-filling tuple goes
    // first so the highest weight vector is basis vector 0.
    ColumnSpace space;
    std::vector<std::map<long, Rational>> basisCols;
    std::vector<std::vector<long>> weights;
    auto consider = [&](const std::vector<int>& t) {
        auto col = symmetrize(t);
        if (col.empty()) return;
        if (!space.add(col)) return;
        basisCols.push_back(col);
        std::vector<long> wt(w.d, xiMin);
        for (int v : t) ++wt[v];
        weights.push_back(std::move(wt));
    };
    {
        std::vector<int> seed(m);
        for (long j = 0; j < m; ++j) seed[j] = static_cast<int>(rowOf[j]);
        consider(seed);
        if (basisCols.empty()) throw std::logic_error("Young symmetrizer killed the seed tensor");
        for (long idx = 0; idx < T; ++idx) consider(tuple_of(idx));
    }
    w.dimension = static_cast<long>(basisCols.size());
    w.weights = weights;
    w.highestWeightIndex = 0;

    Integer expect = weyl_dimension_weight(std::vector<long>(params.xi.begin(), params.xi.end()));
    if (expect != w.dimension)
        throw std::logic_error("module dimension disagrees with the Weyl formula");

    ExactMatrix basisMat(T, w.dimension);
    for (long j = 0; j < w.dimension; ++j)
        for (const auto& [r, v] : basisCols[j]) basisMat.set(r, j, v);

    for (long a = 0; a < w.d; ++a)
        for (long b = 0; b < w.d; ++b) {
            // E_{ab} acts slotwise: replace one value b by a.
            ExactMatrix target(T, w.dimension);
            for (long j = 0; j < w.dimension; ++j)
                for (const auto& [r, v] : basisCols[j]) {
                    std::vector<int> t = tuple_of(r);
                    for (long s = 0; s < m; ++s) {
                        if (t[s] != b) continue;
                        t[s] = static_cast<int>(a);
                        target.add_to(index_of(t), j, v);
                        t[s] = static_cast<int>(b);
                    }
                }
            ExactMatrix res = solve_exact(basisMat, target);
            if (a == b) res = res + ExactMatrix::identity(w.dimension).scaled(Rational(xiMin));
            w.glAction.push_back(std::move(res));
        }

    // Highest-weight sanity: raising operators kill basis vector 0.
    for (long a = 0; a + 1 < w.d; ++a) {
        const ExactMatrix& raise = w.glAction[a * w.d + (a + 1)];
        for (long r = 0; r < w.dimension; ++r)
            if (raise.get(r, 0) != 0)
                throw std::logic_error("seed vector is not a highest weight vector");
    }
    return w;
}

TensorModel::TensorModel(const FunctorParams& params, const Integer& maxBigDim)
    : params_(params),
      derived_(derive(params)),
      w_(build_w(params)),
      N_(params.p + params.q),
      group_(params.n) {
    Integer nPow = 1;
    for (long k = 0; k < params_.n; ++k) nPow *= N_;
    bigDim_ = nPow * w_.dimension;
    if (bigDim_ > maxBigDim)
        throw GuardrailExceeded("tensor space dimension " + bigDim_.get_str() +
                                " exceeds the limit " + maxBigDim.get_str());
    build_basis();
    build_invariants();
    build_operators();
}

std::vector<int> TensorModel::key(long w, const std::vector<int>& tuple) const {
    std::vector<int> k;
    k.reserve(tuple.size() + 1);
    k.push_back(static_cast<int>(w));
    k.insert(k.end(), tuple.begin(), tuple.end());
    return k;
}

long TensorModel::lookup(long w, const std::vector<int>& tuple) const {
    auto it = basisIndex_.find(key(w, tuple));
    return it == basisIndex_.end() ? -1 : it->second;
}

void TensorModel::build_basis() {
    long p = params_.p, n = params_.n, d = w_.d;
    Rational thetaGl = params_.mu * p - derived_.tau;
    std::vector<int> tuple(n, 1);

    auto tuple_ok = [&](const std::vector<int>& t) {
        for (long i = 1; i <= p; ++i) {
            long cnt = 0;
            for (int v : t)
                if (v == i || v == i + p) ++cnt;
            if (Rational(cnt) != derived_.nmuExact[i - 1]) return false;
        }
        return true;
    };
    auto w_ok = [&](long w, const std::vector<int>& t) {
        for (long a = 1; a <= d; ++a) {
            long cnt = 0;
            for (int v : t)
                if (v == 2 * p + a) ++cnt;
            if (Rational(w_.weights[w][a - 1]) + cnt + thetaGl != 0) return false;
        }
        return true;
    };

    while (true) {
        if (tuple_ok(tuple))
            for (long w = 0; w < w_.dimension; ++w)
                if (w_ok(w, tuple)) {
                    basisIndex_[key(w, tuple)] = static_cast<long>(basis_.size());
                    basis_.emplace_back(w, tuple);
                }
        long k = n - 1;
        while (k >= 0 && tuple[k] == N_) {
            tuple[k] = 1;
            --k;
        }
        if (k < 0) break;
        ++tuple[k];
    }
}

void TensorModel::build_invariants() {
    long p = params_.p, d = w_.d;
    long cols = static_cast<long>(basis_.size());
    // Off-diagonal gl(q-p) conditions; targets may leave the filtered weight
    // space, so rows are indexed by a growing key table.
    std::map<std::vector<int>, long> rowIndex;
    std::vector<std::map<long, Rational>> rows;
    auto row_of = [&](long block, long w, const std::vector<int>& tuple) -> std::map<long, Rational>& {
        std::vector<int> k = key(w, tuple);
        k.push_back(static_cast<int>(block));
        auto [it, inserted] = rowIndex.try_emplace(k, static_cast<long>(rows.size()));
        if (inserted) rows.emplace_back();
        return rows[it->second];
    };

    long block = 0;
    for (long a = 1; a <= d; ++a)
        for (long b = 1; b <= d; ++b) {
            if (a == b) continue;
            const ExactMatrix& ew = w_.glAction[(a - 1) * d + (b - 1)];
            for (long j = 0; j < cols; ++j) {
                const auto& [w, tuple] = basis_[j];
                for (long r = 0; r < w_.dimension; ++r) {
                    const Rational& v = ew.get(r, w);
                    if (v != 0) {
                        auto& row = row_of(block, r, tuple);
                        row[j] += v;
                        if (row[j] == 0) row.erase(j);
                    }
                }
                for (long k = 0; k < params_.n; ++k) {
                    if (tuple[k] != 2 * p + b) continue;
                    std::vector<int> t = tuple;
                    t[k] = static_cast<int>(2 * p + a);
                    auto& row = row_of(block, w, t);
                    row[j] += 1;
                    if (row[j] == 0) row.erase(j);
                }
            }
            ++block;
        }

    ExactMatrix sys(static_cast<long>(rows.size()), cols);
    for (long r = 0; r < static_cast<long>(rows.size()); ++r)
        for (const auto& [c, v] : rows[r]) sys.set(r, c, v);
    std::vector<ExactMatrix> kernel = nullspace(sys);
    invariantBasis_ = ExactMatrix(cols, static_cast<long>(kernel.size()));
    for (long j = 0; j < static_cast<long>(kernel.size()); ++j)
        for (const auto& [rc, v] : kernel[j].entries()) invariantBasis_.set(rc.first, j, v);
}

ExactMatrix TensorModel::restrict_to_invariants(const ExactMatrix& filteredOp) const {
    return solve_exact(invariantBasis_, filteredOp * invariantBasis_);
}

ExactMatrix TensorModel::filtered_generator(long letter) const {
    long n = params_.n, p = params_.p;
    long count = static_cast<long>(basis_.size());
    ExactMatrix op(count, count);
    bool isGamma = (n == 1) || (letter == n - 1);
    for (long j = 0; j < count; ++j) {
        const auto& [w, tuple] = basis_[j];
        if (isGamma) {
            Rational sign = tuple[n - 1] <= p ? 1 : -1;
            op.add_to(j, j, sign);
        } else {
            std::vector<int> t = tuple;
            std::swap(t[letter], t[letter + 1]);
            long target = lookup(w, t);
            if (target < 0) throw std::logic_error("group action left the invariant weight space");
            op.add_to(target, j, 1);
        }
    }
    return op;
}

ExactMatrix TensorModel::filtered_y(long k) const {
    long n = params_.n, p = params_.p, q = params_.q;
    bool strict = q > p;
    long count = static_cast<long>(basis_.size());
    ExactMatrix op(count, count);

    std::vector<Rational> A(p), B(p);
    for (long i = 1; i <= p; ++i) {
        if (strict) {
            A[i - 1] = rat(p - q, 2) - params_.nu[i - 1] / 2 - params_.mu * (p + q) / 2;
            B[i - 1] = rat(q - p, 2) - params_.nu[i - 1] / 2 + params_.mu * (p + q) / 2;
        } else {
            A[i - 1] = -params_.nu[i - 1] / 2 - params_.mu * p;
            B[i - 1] = -params_.nu[i - 1] / 2 + params_.mu * p;
        }
    }
    Rational kappa1 = derived_.kappa1;
    Rational half = rat(1, 2);

    for (long j = 0; j < count; ++j) {
        const auto& [w, tuple] = basis_[j];
        auto emit = [&](const std::vector<int>& t, const Rational& coeff) {
            if (coeff == 0) return;
            long target = lookup(w, t);
            if (target < 0)
                throw std::logic_error("y operator left the invariant weight space");
            op.add_to(target, j, coeff);
        };
        int tk = tuple[k - 1];
        std::vector<int> t = tuple;

        // Scalar coefficient terms on slot k.
        if (tk > p && tk <= 2 * p) {
            t[k - 1] = tk - p;
            emit(t, A[tk - p - 1]);
            t[k - 1] = tk;
        }
        if (tk <= p) {
            t[k - 1] = static_cast<int>(tk + p);
            emit(t, B[tk - 1]);
            t[k - 1] = tk;
        }

        for (long l = 1; l <= n; ++l) {
            if (l == k) continue;
            int tl = tuple[l - 1];
            auto emit2 = [&](int nk, int nl, const Rational& coeff) {
                std::vector<int> u = tuple;
                u[k - 1] = nk;
                u[l - 1] = nl;
                emit(u, coeff);
            };
            if (tk <= p) {
                long i = tk;
                // +(E_{p+i,p+j})_l (E_{p+j,i})_k for i<j<=p
                if (tl > p && tl <= 2 * p && i < tl - p) emit2(tl, static_cast<int>(p + i), 1);
                // -(E_{i,j})_l (E_{p+j,i})_k for j<i<=p
                if (tl <= p && tl < i) emit2(static_cast<int>(p + tl), static_cast<int>(i), -1);
                // +(E_{p+i,p+j})_l (E_{p+j,i})_k for i<=p<j
                if (strict && tl > 2 * p) emit2(tl, static_cast<int>(p + i), 1);
                // diagonal pair terms on (E_{p+i,i})_k
                if (tl == p + i) emit2(static_cast<int>(p + i), tl, half);
                if (tl == i) emit2(static_cast<int>(p + i), tl, -half);
            }
            if (tk > p && tk <= 2 * p) {
                long jj = tk - p;
                // -(E_{p+j,p+i})_l (E_{i,p+j})_k for i<j<=p
                if (tl > p && tl <= 2 * p && tl - p < jj)
                    emit2(static_cast<int>(tl - p), static_cast<int>(p + jj), -1);
                // +(E_{j,i})_l (E_{i,p+j})_k for j<i<=p
                if (tl <= p && jj < tl) emit2(tl, static_cast<int>(jj), 1);
                // diagonal pair terms on (E_{i,p+i})_k
                if (tl == p + jj) emit2(static_cast<int>(jj), tl, -half);
                if (tl == jj) emit2(static_cast<int>(jj), tl, half);
            }
            if (strict && tk > 2 * p && tl > p && tl <= 2 * p) {
                // -(E_{p+j,p+i})_l (E_{i,p+j})_k for i<=p<j
                emit2(static_cast<int>(tl - p), tk, -1);
            }
        }

        // kappa1 * gamma_k
        emit(tuple, tk <= p ? kappa1 : -kappa1);

        // +1/2 sum_{l>k} S_{kl} - 1/2 sum_{l<k} S_{kl} + 1/2 sum S_{kl} g_k g_l
        for (long l = 1; l <= n; ++l) {
            if (l == k) continue;
            std::vector<int> u = tuple;
            std::swap(u[k - 1], u[l - 1]);
            emit(u, l > k ? half : -half);
            Rational sign = ((tuple[k - 1] <= p) == (tuple[l - 1] <= p)) ? half : -half;
            emit(u, sign);
        }
    }
    return op;
}

void TensorModel::build_operators() {
    for (long letter = 0; letter < group_.generator_count(); ++letter)
        generators_.push_back(restrict_to_invariants(filtered_generator(letter)));
    for (long k = 1; k <= params_.n; ++k)
        yOps_.push_back(restrict_to_invariants(filtered_y(k)));
}

const ExactMatrix& TensorModel::generator_matrix(long letter) const {
    return generators_.at(letter);
}

ExactMatrix TensorModel::element_matrix(const SignedPermutation& g) const {
    ExactMatrix m = ExactMatrix::identity(dim());
    for (long letter : group_.element(group_.index_of(g)).word) m = m * generators_[letter];
    return m;
}

const ExactMatrix& TensorModel::y_matrix(long k) const { return yOps_.at(k - 1); }

LinearRep TensorModel::rep() const {
    LinearRep r;
    r.dim = dim();
    long n = params_.n;
    for (long letter = 0; letter < group_.generator_count(); ++letter) {
        std::string name = (n == 1 || letter == n - 1) ? "g" : "S" + std::to_string(letter + 1);
        r.assignment.emplace(name, generators_[letter]);
    }
    for (long k = 1; k <= n; ++k) r.assignment.emplace("y" + std::to_string(k), yOps_[k - 1]);
    return r;
}

ExactMatrix TensorModel::big_varpi(long s) const {
    Admissibility adm = validate(params_);
    if (!adm.admissible) throw std::domain_error("varpi needs admissible parameters");
    long p = params_.p;
    const auto& der = derived_;
    SpechtModule specht(der.ximu);
    if (s < 1 || s > specht.dim()) throw std::out_of_range("varpi index out of range");
    MurphyBasis murphy = specht.murphy_basis(JmVariant::Lhat);
    long nXi = der.nXi;
    long d = w_.d;

    // The xi-block seed tensor: the highest-weight tensor realization of the
    // s-th twisted Murphy vector, over local values 1..d.
    long zDim = 1;
    for (long t = 0; t < nXi; ++t) zDim *= std::max<long>(d, 1);
    ExactMatrix z0(zDim, 1);
    {
        ExactMatrix col(specht.dim(), 1);
        for (long t = 0; t < specht.dim(); ++t) col.set(t, 0, murphy.vectors.get(t, s - 1));
        ExactMatrix tabCoeffs = specht.polytabloid_matrix() * col;
        for (long tab = 0; tab < specht.tabloid_count(); ++tab) {
            const Rational& c = tabCoeffs.get(tab, 0);
            if (c == 0) continue;
            long idx = 0;
            for (long row : specht.tabloids()[tab]) idx = idx * d + row;  // value row+1
            z0.add_to(idx, 0, c);
        }
    }

    // Invariant contraction across W and the xi block: kernel of the block
    // unitary algebra acting on W (x) (C^d)^{(x) nXi} with the character
    // twist. For a one-dimensional W this is the plain product; in general
    // it pairs every W weight vector with a partner.
    long D = w_.dimension * zDim;
    ExactMatrix contraction(D, 1);
    if (d == 0) {
        contraction.set(0, 0, 1);
    } else {
        Rational thetaGl = params_.mu * p - der.tau;
        ExactMatrix sys(d * d * D, D);
        long rowBase = 0;
        auto zvalue = [&](long idx, long slot) { return (idx / ipow(d, nXi - 1 - slot)) % d; };
        for (long a = 1; a <= d; ++a)
            for (long b = 1; b <= d; ++b) {
                for (long w = 0; w < w_.dimension; ++w)
                    for (long z = 0; z < zDim; ++z) {
                        long col = w * zDim + z;
                        const ExactMatrix& rw = w_.glAction[(a - 1) * d + (b - 1)];
                        for (long r = 0; r < w_.dimension; ++r) {
                            const Rational& v = rw.get(r, w);
                            if (v != 0) sys.add_to(rowBase + r * zDim + z, col, v);
                        }
                        for (long slot = 0; slot < nXi; ++slot) {
                            if (zvalue(z, slot) != b - 1) continue;
                            long target = z + (a - b) * ipow(d, nXi - 1 - slot);
                            sys.add_to(rowBase + w * zDim + target, col, 1);
                        }
                        if (a == b) sys.add_to(rowBase + col, col, thetaGl);
                    }
                rowBase += D;
            }
        std::vector<ExactMatrix> kernel = nullspace(sys);
        if (kernel.empty()) throw std::logic_error("no invariant contraction found");
        // Normalize: the block of the extreme W vector (reversed weight)
        // must equal the seed tensor, which also ties the scale across s.
        std::vector<long> lowest(params_.xi.rbegin(), params_.xi.rend());
        long lowIdx = -1;
        for (long i = 0; i < w_.dimension; ++i)
            if (w_.weights[i] == lowest) {
                lowIdx = i;
                break;
            }
        if (lowIdx < 0) throw std::logic_error("extreme weight vector not found in W basis");
        ExactMatrix lowBlocks(zDim, static_cast<long>(kernel.size()));
        for (long j = 0; j < static_cast<long>(kernel.size()); ++j)
            for (long z = 0; z < zDim; ++z)
                lowBlocks.set(z, j, kernel[j].get(lowIdx * zDim + z, 0));
        ExactMatrix combo = solve_exact(lowBlocks, z0);
        for (long j = 0; j < static_cast<long>(kernel.size()); ++j) {
            const Rational& c = combo.get(j, 0);
            if (c != 0) contraction = contraction + kernel[j].scaled(c);
        }
    }

    long mp = der.m[p];
    long count = static_cast<long>(basis_.size());
    ExactMatrix out(count, 1);

    // Weave in the torus-block factors (e_r - e_{r+p}) over all sign
    // patterns.
    long patterns = 1L << mp;
    for (long mask = 0; mask < patterns; ++mask) {
        std::vector<int> uPart(mp);
        int uSign = 1;
        for (long slot = 0; slot < mp; ++slot) {
            long r = 1;
            while (!(der.m[r - 1] < slot + 1 && slot + 1 <= der.m[r])) ++r;
            if (mask & (1L << slot)) {
                uPart[slot] = static_cast<int>(r + p);
                uSign = -uSign;
            } else {
                uPart[slot] = static_cast<int>(r);
            }
        }
        for (const auto& [rc, coeff] : contraction.entries()) {
            long w = rc.first / zDim;
            long z = rc.first % zDim;
            std::vector<int> tuple = uPart;
            for (long slot = 0; slot < nXi; ++slot) {
                long value = (z / ipow(d, nXi - 1 - slot)) % d;
                tuple.push_back(static_cast<int>(2 * p + value + 1));
            }
            long idx = lookup(w, tuple);
            if (idx < 0) throw std::logic_error("varpi has support outside the filtered basis");
            out.add_to(idx, 0, coeff * uSign);
        }
    }
    if (out.is_zero()) throw std::logic_error("varpi vanished");
    return out;
}

ExactMatrix TensorModel::varpi(long s) const {
    // Coordinates relative to the invariant-subspace basis; consistency of
    // the solve is exactly the membership assertion.
    return solve_exact(invariantBasis_, big_varpi(s));
}

bool TensorModel::orbit_spans() const {
    if (dim() == 0) return true;
    SpechtModule specht(derived_.ximu);
    long dcount = specht.dim();
    ExactMatrix span(dim(), group_.order() * dcount);
    std::vector<ExactMatrix> vs;
    for (long s = 1; s <= dcount; ++s) vs.push_back(varpi(s));
    for (long e = 0; e < group_.order(); ++e) {
        ExactMatrix m = ExactMatrix::identity(dim());
        for (long letter : group_.element(e).word) m = m * generators_[letter];
        for (long s = 0; s < dcount; ++s) {
            ExactMatrix v = m * vs[s];
            for (const auto& [rc, val] : v.entries()) span.set(rc.first, e * dcount + s, val);
        }
    }
    return rank(span) == dim();
}

bool TensorModel::proposition_checks(std::vector<std::string>* failures) const {
    bool ok = true;
    auto fail = [&](const std::string& msg) {
        ok = false;
        if (failures) failures->push_back(msg);
    };
    const auto& d = derived_;
    long p = params_.p, n = params_.n;
    long mp = d.m[p];
    SpechtModule specht(d.ximu);
    MurphyBasis murphy = specht.murphy_basis(JmVariant::Lhat);
    std::vector<ExactMatrix> seedAdj;
    for (const ExactMatrix& g : specht.generators())
        seedAdj.push_back(solve_exact(murphy.vectors, g * murphy.vectors));

    std::vector<ExactMatrix> vs;
    for (long s = 1; s <= specht.dim(); ++s) vs.push_back(varpi(s));

    // (i) adjacent swaps inside a torus block fix every varpi
    for (long l = 1; l < n; ++l) {
        bool sameBlock = false;
        for (long r = 1; r <= p; ++r)
            if (d.m[r - 1] < l && l + 1 <= d.m[r]) sameBlock = true;
        if (!sameBlock) continue;
        const ExactMatrix& sl = generators_[l - 1];
        for (long s = 0; s < specht.dim(); ++s)
            if (!(sl * vs[s] == vs[s]))
                fail("torus-block swap S_" + std::to_string(l) + " moves varpi_" +
                     std::to_string(s + 1));
    }
    // (ii) adjacent swaps inside the xi block act by the Murphy-basis
    // Specht matrices
    for (long i = 1; i < d.nXi; ++i) {
        long l = mp + i;
        const ExactMatrix& sl = generators_[l - 1];
        for (long s = 0; s < specht.dim(); ++s) {
            ExactMatrix lhs = sl * vs[s];
            ExactMatrix rhs(dim(), 1);
            for (long t = 0; t < specht.dim(); ++t) {
                const Rational& c = seedAdj[i - 1].get(t, s);
                if (c != 0) rhs = rhs + vs[t].scaled(c);
            }
            if (!(lhs == rhs))
                fail("xi-block swap S_" + std::to_string(l) + " is not the Specht action on varpi_" +
                     std::to_string(s + 1));
        }
    }
    // (iii) sign flips on the xi block negate varpi
    for (long l = mp + 1; l <= n; ++l) {
        SignedPermutation flip = SignedPermutation::identity(n);
        flip.img[l - 1] = -static_cast<int>(l);
        ExactMatrix gl = element_matrix(flip);
        for (long s = 0; s < specht.dim(); ++s)
            if (!(gl * vs[s] == vs[s].scaled(-1)))
                fail("gamma_" + std::to_string(l) + " does not negate varpi_" +
                     std::to_string(s + 1));
    }
    // (iv) the group orbit spans
    if (!orbit_spans()) fail("group orbit of the varpi does not span");
    return ok;
}

}  // namespace bcd
