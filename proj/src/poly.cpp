#include "bcdaha/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bcd {

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_[{}] = c;
}

MultiPoly MultiPoly::var(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_[{1}] = 1;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::runtime_error("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void MultiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

MultiPoly MultiPoly::aligned_to(const std::vector<std::string>& vars) const {
    MultiPoly r;
    r.vars_ = vars;
    std::vector<long> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
        pos[i] = it - vars.begin();
    }
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_[std::move(ne)] = c;
    }
    return r;
}

// Aligns a and b over the union of their variables; the union copy of a is
// returned, that of b written to bOut.
MultiPoly align_pair(const MultiPoly& a, const MultiPoly& b, MultiPoly& bOut) {
    std::vector<std::string> u;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(u));
    bOut = b.aligned_to(u);
    return a.aligned_to(u);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly b;
    MultiPoly a = align_pair(*this, o, b);
    for (const auto& [e, c] : b.terms_) {
        auto [it, inserted] = a.terms_.try_emplace(e, c);
        if (!inserted) it->second += c;
    }
    a.prune();
    return a;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly b;
    MultiPoly a = align_pair(*this, o, b);
    MultiPoly r;
    r.vars_ = a.vars_;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = r.terms_.try_emplace(std::move(e), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    r.prune();
    return r;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    MultiPoly r = MultiPoly::constant(1);
    for (long i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const { return (*this - o).is_zero(); }

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
    MultiPoly result;
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(c);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = bindings.find(vars_[i]);
            MultiPoly base = it != bindings.end() ? it->second : MultiPoly::var(vars_[i]);
            term = term * base.pow(e[i]);
        }
        result = result + term;
    }
    return result;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& bindings) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = bindings.find(vars_[i]);
            if (it == bindings.end())
                throw std::invalid_argument("evaluate: unbound variable " + vars_[i]);
            for (int k = 0; k < e[i]; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << c.get_str();
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

}  // namespace bcd
