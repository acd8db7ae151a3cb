#include "bcdaha/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bcd {

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
}

Partition Partition::from_weakly_decreasing(const std::vector<long>& p) {
    std::vector<long> q;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i && p[i] > p[i - 1])
            throw std::invalid_argument("sequence is not weakly decreasing");
        if (p[i] < 0) throw std::invalid_argument("sequence has negative part");
        if (p[i] > 0) q.push_back(p[i]);
    }
    return Partition(q);
}

long Partition::size() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

long StandardTableau::content_of(long entry) const {
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] == entry) return static_cast<long>(c) - static_cast<long>(r);
    throw std::invalid_argument("entry not in tableau");
}

std::vector<long> StandardTableau::row_word() const {
    std::vector<long> w;
    for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::string StandardTableau::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        os << (r ? "/" : "");
        for (std::size_t c = 0; c < rows[r].size(); ++c) os << (c ? " " : "") << rows[r][c];
    }
    return os.str();
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape) {
    long m = shape.size();
    std::vector<StandardTableau> out;
    std::vector<long> filled(shape.parts.size(), 0);
    StandardTableau t;
    t.shape = shape;
    t.rows.assign(shape.parts.size(), {});

    // Place entries 1..m; entry goes in row r when the row has space and the
    // row above is strictly longer so far (keeps columns increasing).
    auto rec = [&](auto&& self, long entry) -> void {
        if (entry > m) {
            out.push_back(t);
            return;
        }
        for (std::size_t r = 0; r < shape.parts.size(); ++r) {
            if (filled[r] >= shape.parts[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            t.rows[r].push_back(entry);
            ++filled[r];
            self(self, entry + 1);
            --filled[r];
            t.rows[r].pop_back();
        }
    };
    rec(rec, 1);

    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.row_word() < b.row_word();
    });
    return out;
}

std::vector<long> hook_lengths(const Partition& shape) {
    std::vector<long> hooks;
    const auto& p = shape.parts;
    for (std::size_t r = 0; r < p.size(); ++r)
        for (long c = 0; c < p[r]; ++c) {
            long arm = p[r] - c - 1;
            long leg = 0;
            for (std::size_t r2 = r + 1; r2 < p.size(); ++r2)
                if (p[r2] > c) ++leg;
            hooks.push_back(arm + leg + 1);
        }
    return hooks;
}

Integer hook_product(const Partition& shape) {
    Integer prod = 1;
    for (long h : hook_lengths(shape)) prod *= h;
    return prod;
}

Integer specht_dimension(const Partition& shape) {
    Integer num = factorial(shape.size());
    Integer den = hook_product(shape);
    if (num % den != 0) throw std::logic_error("hook formula did not divide evenly");
    return num / den;
}

Integer weyl_dimension_weight(const std::vector<long>& weight) {
    long n = static_cast<long>(weight.size());
    Rational dim = 1;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            dim *= rat(weight[i] - weight[j] + j - i, j - i);
    if (!is_integer(dim)) throw std::logic_error("Weyl dimension is not an integer");
    return dim.get_num();
}

Integer weyl_dimension(const Partition& shape, long N) {
    if (shape.height() > N) return 0;
    std::vector<long> w(shape.parts.begin(), shape.parts.end());
    w.resize(N, 0);
    return weyl_dimension_weight(w);
}

}  // namespace bcd
