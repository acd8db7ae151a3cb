#pragma once

// Sparse exact matrices over Q and the elimination routines built on them.
// Storage is an ordered (row, col) -> value map with no explicit zeros, so
// iteration order (and therefore every pivot choice downstream) is
// deterministic.

#include "bcdaha/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace bcd {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(long rows, long cols) : rows_(rows), cols_(cols) {}

    static ExactMatrix identity(long n);
    static ExactMatrix zero(long rows, long cols) { return ExactMatrix(rows, cols); }
    // Row-major dense initializer, zeros dropped.
    static ExactMatrix dense(long rows, long cols, const std::vector<Rational>& entries);
    static ExactMatrix diagonal(const std::vector<Rational>& diag);
    static ExactMatrix column(const std::vector<Rational>& entries);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    const Rational& get(long r, long c) const;
    void set(long r, long c, const Rational& v);
    void add_to(long r, long c, const Rational& v);

    const std::map<std::pair<long, long>, Rational>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    ExactMatrix transpose() const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator-() const;
    ExactMatrix scaled(const Rational& c) const;
    bool operator==(const ExactMatrix& o) const;

    Rational trace() const;
    Rational max_abs_entry() const;
    std::vector<Rational> col_vector(long c) const;
    ExactMatrix submatrix_cols(const std::vector<long>& cols) const;
    ExactMatrix hstack(const ExactMatrix& o) const;
    ExactMatrix vstack(const ExactMatrix& o) const;

    std::string to_string() const;

private:
    long rows_ = 0;
    long cols_ = 0;
    std::map<std::pair<long, long>, Rational> entries_;
    void check_bounds(long r, long c) const;
};

// Kernel basis as column vectors. Gaussian elimination over Q with the first
// nonzero entry in row-major order as pivot, so bases are reproducible.
std::vector<ExactMatrix> nullspace(const ExactMatrix& m);

long rank(const ExactMatrix& m);

// Solves A * X = B exactly for A with full column rank; throws if the system
// is inconsistent or rank-deficient.
ExactMatrix solve_exact(const ExactMatrix& a, const ExactMatrix& b);

// Characteristic polynomial by the Faddeev-LeVerrier recursion; returned as
// coefficients c[0] + c[1] x + ... + c[n] x^n with c[n] = 1.
std::vector<Rational> charpoly(const ExactMatrix& m);

// Exact eigenvalues with multiplicities, assuming all eigenvalues are
// rational (true for every operator this library constructs). Multiplicities
// are kernel dimensions, and their sum must reach the matrix dimension unless
// the matrix fails to be diagonalizable with rational spectrum, in which case
// this throws. Hints are tried before the divisor search over the
// characteristic polynomial.
std::vector<std::pair<Rational, long>> rational_spectrum(const ExactMatrix& m,
                                                         const std::vector<Rational>& hints = {});

}  // namespace bcd
