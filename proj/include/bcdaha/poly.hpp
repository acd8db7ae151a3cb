#pragma once

// Exact multivariate polynomials over Q with named variables. Small and
// map-based: the central-character computations never exceed a few hundred
// terms, so simplicity wins over monomial packing.

#include "bcdaha/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace bcd {

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);

    static MultiPoly constant(const Rational& c) { return MultiPoly(c); }
    static MultiPoly var(const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // throws unless constant
    long total_degree() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly pow(long e) const;
    bool operator==(const MultiPoly& o) const;

    // Substitutes variables by polynomials (constants included). Unbound
    // variables survive; bindings for absent variables are ignored.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;

    // Full evaluation; throws if a variable is missing from the bindings.
    Rational evaluate(const std::map<std::string, Rational>& bindings) const;

    std::string to_string() const;

private:
    // vars_ sorted ascending; exponent vectors indexed in parallel.
    std::vector<std::string> vars_;
    std::map<std::vector<int>, Rational> terms_;

    // Rewrites the polynomial over a superset variable list (sorted).
    MultiPoly aligned_to(const std::vector<std::string>& vars) const;
    void prune();
    friend MultiPoly align_pair(const MultiPoly&, const MultiPoly&, MultiPoly&);
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    return MultiPoly::constant(c) * p;
}
inline MultiPoly operator+(const Rational& c, const MultiPoly& p) {
    return MultiPoly::constant(c) + p;
}
inline MultiPoly operator-(const Rational& c, const MultiPoly& p) {
    return MultiPoly::constant(c) - p;
}

}  // namespace bcd
