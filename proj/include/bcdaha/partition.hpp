#pragma once

// Partitions, standard Young tableaux, hook lengths, box contents, and the
// two dimension formulas (hook length for symmetric groups, Weyl for GL_N).

#include "bcdaha/rational.hpp"

#include <vector>

namespace bcd {

struct Partition {
    std::vector<long> parts;  // weakly decreasing, strictly positive

    Partition() = default;
    explicit Partition(std::vector<long> p);

    long size() const;  // sum of parts
    long height() const { return static_cast<long>(parts.size()); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    std::string to_string() const;

    // Drops trailing zeros and validates monotonicity; zero-padded input is
    // how xi^mu shows up naturally.
    static Partition from_weakly_decreasing(const std::vector<long>& p);
};

struct StandardTableau {
    Partition shape;
    std::vector<std::vector<long>> rows;  // rows[r][c] = entry, 1-based values

    // content (column - row) of the box holding `entry`
    long content_of(long entry) const;
    std::vector<long> row_word() const;
    std::string to_string() const;
};

// All standard tableaux of the given shape, sorted by lexicographic
// row-reading word; the row-filled tableau comes first.
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape);

// Multiset of hook lengths, row-major.
std::vector<long> hook_lengths(const Partition& shape);

Integer hook_product(const Partition& shape);

// m! / prod hooks
Integer specht_dimension(const Partition& shape);

// dim of the irreducible GL_N module with highest weight lambda (padded with
// zeros to N parts): prod_{i<j} (l_i - l_j + j - i)/(j - i).
Integer weyl_dimension(const Partition& shape, long N);
Integer weyl_dimension_weight(const std::vector<long>& weight);

}  // namespace bcd
