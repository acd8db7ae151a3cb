#include "bcdaha/specht.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bcd {

Perm Perm::identity(long m) {
    Perm p;
    p.img.resize(m);
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

Perm Perm::transposition(long m, long a, long b) {
    Perm p = identity(m);
    std::swap(p.img[a - 1], p.img[b - 1]);
    return p;
}

Perm Perm::reversal(long m) {
    Perm p;
    p.img.resize(m);
    for (long i = 1; i <= m; ++i) p.img[i - 1] = m + 1 - i;
    return p;
}

Perm Perm::compose(const Perm& o) const {
    Perm r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) r.img[i] = img[o.img[i] - 1];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) r.img[img[i] - 1] = i + 1;
    return r;
}

std::vector<long> Perm::adjacent_word() const {
    // Bubble sort; word multiplies left to right.
    std::vector<long> a = img, word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                word.push_back(static_cast<long>(i + 1));
                moved = true;
            }
    }
    // word satisfies identity = word_reversed * this ... verify orientation:
    // applying the collected swaps to `img` sorted it, i.e. s_{w_k}..s_{w_1} *
    // this = id, hence this = s_{w_1}..s_{w_k} reversed. Reverse to get a
    // left-to-right product equal to *this.
    std::reverse(word.begin(), word.end());
    return word;
}

namespace {

// Enumerates tabloids of the shape as rowOf vectors (entry -> row), in
// lexicographic order.
std::vector<std::vector<long>> enumerate_tabloids(const Partition& shape) {
    long m = shape.size();
    std::vector<long> base;
    for (std::size_t r = 0; r < shape.parts.size(); ++r)
        base.insert(base.end(), shape.parts[r], static_cast<long>(r));
    std::sort(base.begin(), base.end());
    std::vector<std::vector<long>> out;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    return out;
}

int permutation_sign(const std::vector<long>& arrangement) {
    int sign = 1;
    for (std::size_t i = 0; i < arrangement.size(); ++i)
        for (std::size_t j = i + 1; j < arrangement.size(); ++j)
            if (arrangement[i] > arrangement[j]) sign = -sign;
    return sign;
}

}  // namespace

SpechtModule::SpechtModule(const Partition& shape) : shape_(shape) {
    m_ = shape.size();
    tableaux_ = enumerate_standard_tableaux(shape);
    dim_ = static_cast<long>(tableaux_.size());
    tabloids_ = enumerate_tabloids(shape);
    for (long i = 0; i < static_cast<long>(tabloids_.size()); ++i)
        tabloid_index_[tabloids_[i]] = i;

    polytabloids_ = ExactMatrix(tabloid_count(), dim_);
    for (long s = 0; s < dim_; ++s) {
        ExactMatrix col = polytabloid_column(tableaux_[s]);
        for (const auto& [rc, v] : col.entries()) polytabloids_.set(rc.first, s, v);
    }

    if (m_ >= 2) {
        // One augmented solve against the polytabloid matrix covers all
        // adjacent generators at once.
        ExactMatrix targets(tabloid_count(), dim_ * (m_ - 1));
        for (long i = 1; i < m_; ++i) {
            ExactMatrix t = tabloid_action_on_polytabloids(Perm::transposition(m_, i, i + 1));
            for (const auto& [rc, v] : t.entries())
                targets.set(rc.first, (i - 1) * dim_ + rc.second, v);
        }
        ExactMatrix sol = solve_exact(polytabloids_, targets);
        for (long i = 1; i < m_; ++i) {
            std::vector<long> cols(dim_);
            std::iota(cols.begin(), cols.end(), (i - 1) * dim_);
            generators_.push_back(sol.submatrix_cols(cols));
        }
    }
}

ExactMatrix SpechtModule::polytabloid_column(const StandardTableau& t) const {
    ExactMatrix col(tabloid_count(), 1);
    std::vector<long> rowOf(m_);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (long e : t.rows[r]) rowOf[e - 1] = static_cast<long>(r);

    // Columns of the tableau as entry lists, top to bottom.
    std::vector<std::vector<long>> cols;
    for (long c = 0; c < (shape_.parts.empty() ? 0 : shape_.parts[0]); ++c) {
        std::vector<long> cl;
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            if (c < static_cast<long>(t.rows[r].size())) cl.push_back(t.rows[r][c]);
        cols.push_back(cl);
    }

    // Iterate over the column group as a product of per-column arrangements.
    std::vector<std::vector<long>> arrangements(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        arrangements[c] = cols[c];
        std::sort(arrangements[c].begin(), arrangements[c].end());
    }
    std::vector<long> sigma(m_ + 1);
    auto rec = [&](auto&& self, std::size_t c, int sign) -> void {
        if (c == cols.size()) {
            std::vector<long> tab(m_);
            for (long x = 1; x <= m_; ++x) tab[sigma[x] - 1] = rowOf[x - 1];
            col.add_to(tabloid_index_.at(tab), 0, sign);
            return;
        }
        std::vector<long> arr = arrangements[c];
        std::sort(arr.begin(), arr.end());
        do {
            for (std::size_t k = 0; k < arr.size(); ++k) sigma[cols[c][k]] = arr[k];
            // sign of this arrangement relative to the sorted column
            std::vector<long> rel(arr.size());
            std::vector<long> sorted = cols[c];
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t k = 0; k < arr.size(); ++k)
                rel[k] = std::lower_bound(sorted.begin(), sorted.end(), arr[k]) - sorted.begin();
            self(self, c + 1, sign * permutation_sign(rel));
        } while (std::next_permutation(arr.begin(), arr.end()));
    };
    if (m_ == 0) {
        col.set(0, 0, 1);
        return col;
    }
    // sigma must map column entries; entries outside columns do not exist
    // (every box is in some column), so sigma is total.
    rec(rec, 0, 1);
    return col;
}

ExactMatrix SpechtModule::tabloid_action_on_polytabloids(const Perm& p) const {
    ExactMatrix out(tabloid_count(), dim_);
    for (const auto& [rc, v] : polytabloids_.entries()) {
        const std::vector<long>& tab = tabloids_[rc.first];
        std::vector<long> image(m_);
        for (long x = 1; x <= m_; ++x) image[p(x) - 1] = tab[x - 1];
        out.add_to(tabloid_index_.at(image), rc.second, v);
    }
    return out;
}

ExactMatrix SpechtModule::action(const Perm& p) const {
    if (p.degree() != m_) throw std::invalid_argument("permutation degree mismatch");
    if (m_ == 0) return ExactMatrix::identity(1);
    return solve_exact(polytabloids_, tabloid_action_on_polytabloids(p));
}

std::vector<ExactMatrix> SpechtModule::jm_matrices(JmVariant v) const {
    std::vector<ExactMatrix> out;
    for (long i = 1; i <= m_; ++i) {
        ExactMatrix acc(dim_, dim_);
        if (v == JmVariant::L) {
            for (long j = 1; j < i; ++j) acc = acc + action(Perm::transposition(m_, i, j));
        } else {
            for (long j = i + 1; j <= m_; ++j) acc = acc + action(Perm::transposition(m_, i, j));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

MurphyBasis SpechtModule::murphy_basis(JmVariant v) const {
    std::vector<ExactMatrix> L = jm_matrices(JmVariant::L);
    MurphyBasis out;
    out.vectors = ExactMatrix(dim_, dim_);
    out.eigenvalues = ExactMatrix(std::max<long>(m_, 0), dim_);

    ExactMatrix sigma =
        v == JmVariant::Lhat ? action(Perm::reversal(m_)) : ExactMatrix::identity(dim_);

    for (long s = 0; s < dim_; ++s) {
        std::vector<long> alpha(m_);
        for (long i = 1; i <= m_; ++i) alpha[i - 1] = tableaux_[s].content_of(i);

        // E_s e_s: interpolation product applied to the s-th polytabloid,
        // ascending (c, i) order.
        ExactMatrix w(dim_, 1);
        w.set(s, 0, 1);
        for (long c = -m_ + 1; c <= m_ - 1; ++c)
            for (long i = 1; i <= m_; ++i) {
                if (alpha[i - 1] == c) continue;
                ExactMatrix lw = L[i - 1] * w;
                w = (w.scaled(c) - lw).scaled(rat(1, c - alpha[i - 1]));
            }
        if (w.is_zero())
            throw std::runtime_error("Murphy vector vanished for shape " + shape_.to_string());
        if (v == JmVariant::Lhat) w = sigma * w;
        for (const auto& [rc, val] : w.entries()) out.vectors.set(rc.first, s, val);

        for (long i = 1; i <= m_; ++i) {
            Rational eig;
            if (v == JmVariant::L)
                eig = alpha[i - 1];
            else
                eig = (i == m_) ? Rational(0) : Rational(alpha[m_ - i]);
            out.eigenvalues.set(i - 1, s, eig);
        }
    }
    return out;
}

}  // namespace bcd
