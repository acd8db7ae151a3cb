#include "bcdaha/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bcd {

namespace {
const Rational kZero = 0;

// Rows as sparse maps col -> value; the workhorse representation for
// elimination.
using SparseRow = std::map<long, Rational>;

std::vector<SparseRow> to_rows(const ExactMatrix& m) {
    std::vector<SparseRow> rows(m.rows());
    for (const auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;
    return rows;
}

void axpy(SparseRow& target, const Rational& c, const SparseRow& src) {
    for (const auto& [col, v] : src) {
        auto it = target.find(col);
        if (it == target.end()) {
            Rational nv = c * v;
            if (nv != 0) target.emplace(col, std::move(nv));
        } else {
            it->second += c * v;
            if (it->second == 0) target.erase(it);
        }
    }
}

// Reduced row echelon form in place. Returns pivot (row, col) pairs in order.
std::vector<std::pair<long, long>> rref(std::vector<SparseRow>& rows, long ncols) {
    std::vector<std::pair<long, long>> pivots;
    long prow = 0;
    for (long col = 0; col < ncols && prow < static_cast<long>(rows.size()); ++col) {
        long sel = -1;
        for (long r = prow; r < static_cast<long>(rows.size()); ++r) {
            auto it = rows[r].find(col);
            if (it != rows[r].end()) { sel = r; break; }
        }
        if (sel < 0) continue;
        std::swap(rows[prow], rows[sel]);
        Rational inv = 1 / rows[prow].at(col);
        if (inv != 1)
            for (auto& [c2, v] : rows[prow]) v *= inv;
        for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
            if (r == prow) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end()) continue;
            Rational c = -it->second;
            axpy(rows[r], c, rows[prow]);
        }
        pivots.emplace_back(prow, col);
        ++prow;
    }
    return pivots;
}
}  // namespace

ExactMatrix ExactMatrix::identity(long n) {
    ExactMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ExactMatrix ExactMatrix::dense(long rows, long cols, const std::vector<Rational>& entries) {
    if (static_cast<long>(entries.size()) != rows * cols)
        throw std::invalid_argument("dense initializer size mismatch");
    ExactMatrix m(rows, cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) m.set(r, c, entries[r * cols + c]);
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& diag) {
    ExactMatrix m(diag.size(), diag.size());
    for (long i = 0; i < static_cast<long>(diag.size()); ++i) m.set(i, i, diag[i]);
    return m;
}

ExactMatrix ExactMatrix::column(const std::vector<Rational>& entries) {
    ExactMatrix m(entries.size(), 1);
    for (long i = 0; i < static_cast<long>(entries.size()); ++i) m.set(i, 0, entries[i]);
    return m;
}

void ExactMatrix::check_bounds(long r, long c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
}

const Rational& ExactMatrix::get(long r, long c) const {
    check_bounds(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? kZero : it->second;
}

void ExactMatrix::set(long r, long c, const Rational& v) {
    check_bounds(r, c);
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void ExactMatrix::add_to(long r, long c, const Rational& v) {
    check_bounds(r, c);
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    ExactMatrix r = *this;
    for (const auto& [rc, v] : o.entries_) r.add_to(rc.first, rc.second, v);
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    ExactMatrix r = *this;
    for (const auto& [rc, v] : o.entries_) r.add_to(rc.first, rc.second, -v);
    return r;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r(rows_, cols_);
    for (const auto& [rc, v] : entries_) r.entries_[rc] = -v;
    return r;
}

ExactMatrix ExactMatrix::scaled(const Rational& c) const {
    ExactMatrix r(rows_, cols_);
    if (c == 0) return r;
    for (const auto& [rc, v] : entries_) r.entries_[rc] = c * v;
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    // Gather o's rows once; then walk our entries row by row.
    std::vector<SparseRow> orows = to_rows(o);
    ExactMatrix r(rows_, o.cols_);
    for (const auto& [rc, v] : entries_) {
        const SparseRow& row = orows[rc.second];
        for (const auto& [c2, w] : row) r.add_to(rc.first, c2, v * w);
    }
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

Rational ExactMatrix::trace() const {
    Rational t = 0;
    for (const auto& [rc, v] : entries_)
        if (rc.first == rc.second) t += v;
    return t;
}

Rational ExactMatrix::max_abs_entry() const {
    Rational m = 0;
    for (const auto& [rc, v] : entries_) {
        Rational a = rat_abs(v);
        if (a > m) m = a;
    }
    return m;
}

std::vector<Rational> ExactMatrix::col_vector(long c) const {
    std::vector<Rational> v(rows_, Rational(0));
    for (long r = 0; r < rows_; ++r) v[r] = get(r, c);
    return v;
}

ExactMatrix ExactMatrix::submatrix_cols(const std::vector<long>& cols) const {
    ExactMatrix r(rows_, cols.size());
    for (long j = 0; j < static_cast<long>(cols.size()); ++j)
        for (long i = 0; i < rows_; ++i) r.set(i, j, get(i, cols[j]));
    return r;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
    ExactMatrix r(rows_, cols_ + o.cols_);
    r.entries_ = entries_;
    for (const auto& [rc, v] : o.entries_) r.entries_[{rc.first, rc.second + cols_}] = v;
    return r;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vstack col mismatch");
    ExactMatrix r(rows_ + o.rows_, cols_);
    r.entries_ = entries_;
    for (const auto& [rc, v] : o.entries_) r.entries_[{rc.first + rows_, rc.second}] = v;
    return r;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (long r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (long c = 0; c < cols_; ++c) os << (c ? " " : "") << get(r, c).get_str();
    }
    os << "]";
    return os.str();
}

std::vector<ExactMatrix> nullspace(const ExactMatrix& m) {
    std::vector<SparseRow> rows = to_rows(m);
    auto pivots = rref(rows, m.cols());
    std::set<long> pivot_cols;
    for (const auto& [r, c] : pivots) pivot_cols.insert(c);

    std::vector<ExactMatrix> basis;
    for (long free_col = 0; free_col < m.cols(); ++free_col) {
        if (pivot_cols.count(free_col)) continue;
        ExactMatrix v(m.cols(), 1);
        v.set(free_col, 0, 1);
        for (const auto& [prow, pcol] : pivots) {
            auto it = rows[prow].find(free_col);
            if (it != rows[prow].end()) v.set(pcol, 0, -it->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

long rank(const ExactMatrix& m) {
    std::vector<SparseRow> rows = to_rows(m);
    return static_cast<long>(rref(rows, m.cols()).size());
}

ExactMatrix solve_exact(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_exact shape mismatch");
    ExactMatrix aug = a.hstack(b);
    std::vector<SparseRow> rows = to_rows(aug);
    auto pivots = rref(rows, aug.cols());
    for (const auto& [prow, pcol] : pivots)
        if (pcol >= a.cols())
            throw std::runtime_error("solve_exact: inconsistent system");
    if (static_cast<long>(pivots.size()) != a.cols())
        throw std::runtime_error("solve_exact: coefficient matrix is rank-deficient");
    ExactMatrix x(a.cols(), b.cols());
    for (const auto& [prow, pcol] : pivots)
        for (const auto& [col, v] : rows[prow])
            if (col >= a.cols()) x.set(pcol, col - a.cols(), v);
    return x;
}

std::vector<Rational> charpoly(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly needs a square matrix");
    long n = m.rows();
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1, M_{k+1} = A (M_k + c I).
    std::vector<Rational> coeff(n + 1, Rational(0));
    coeff[n] = 1;
    ExactMatrix mk = m;
    Rational c;
    for (long k = 1; k <= n; ++k) {
        c = -mk.trace() / k;
        coeff[n - k] = c;
        if (k < n) {
            ExactMatrix shifted = mk + ExactMatrix::identity(n).scaled(c);
            mk = m * shifted;
        }
    }
    return coeff;
}

std::vector<std::pair<Rational, long>> rational_spectrum(const ExactMatrix& m,
                                                         const std::vector<Rational>& hints) {
    long n = m.rows();
    // Fast path: the hinted values may already exhaust the spectrum.
    if (!hints.empty()) {
        std::set<Rational> cand(hints.begin(), hints.end());
        std::vector<std::pair<Rational, long>> spec;
        long total = 0;
        for (const auto& r : cand) {
            long mult = n - rank(m - ExactMatrix::identity(n).scaled(r));
            if (mult > 0) {
                spec.emplace_back(r, mult);
                total += mult;
            }
        }
        if (total == n) return spec;
    }
    std::vector<Rational> cp = charpoly(m);
    // Clear denominators; rational roots of the monic polynomial over Q are
    // p/q with p | a0_int and q | lead_int after scaling.
    Integer lcm = 1;
    for (const auto& c : cp) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ic(cp.size());
    for (std::size_t i = 0; i < cp.size(); ++i) {
        Rational scaled = cp[i] * Rational(lcm);
        ic[i] = scaled.get_num();
    }
    auto eval_is_zero = [&](const Rational& x) {
        Rational acc = 0;
        for (long i = static_cast<long>(cp.size()) - 1; i >= 0; --i) acc = acc * x + cp[i];
        return acc == 0;
    };
    // Collect candidate roots from divisor pairs of the trailing/leading
    // integer coefficients (trailing = lowest nonzero).
    long low = 0;
    while (low < static_cast<long>(ic.size()) && ic[low] == 0) ++low;
    std::set<Rational> roots;
    if (low > 0) roots.insert(Rational(0));
    Integer a0 = ic[low] < 0 ? Integer(-ic[low]) : ic[low];
    Integer an = ic.back() < 0 ? Integer(-ic.back()) : ic.back();
    std::vector<Integer> num_divs, den_divs;
    auto divisors = [](const Integer& z) {
        std::vector<Integer> d;
        for (Integer i = 1; i * i <= z; ++i)
            if (z % i == 0) {
                d.push_back(i);
                d.push_back(z / i);
            }
        return d;
    };
    if (a0 > 0) {
        num_divs = divisors(a0);
        den_divs = divisors(an);
        for (const auto& p : num_divs)
            for (const auto& q : den_divs) {
                Rational cand = rat(p, q);
                if (eval_is_zero(cand)) roots.insert(cand);
                if (eval_is_zero(-cand)) roots.insert(-cand);
            }
    }
    std::vector<std::pair<Rational, long>> spec;
    long total = 0;
    for (const auto& r : roots) {
        ExactMatrix shifted = m - ExactMatrix::identity(n).scaled(r);
        long mult = n - rank(shifted);
        if (mult > 0) {
            spec.emplace_back(r, mult);
            total += mult;
        }
    }
    if (total != n)
        throw std::runtime_error("rational_spectrum: matrix has non-rational or defective spectrum");
    return spec;
}

}  // namespace bcd
