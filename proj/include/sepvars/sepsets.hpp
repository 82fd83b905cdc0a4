#pragma once

#include <set>
#include <utility>

namespace sepvars {

// Subset of the grid Z_m x Z_n with row/column views.
struct SepSet {
    int m = 0, n = 0;
    std::set<std::pair<int, int>> points;

    SepSet(int m_, int n_, std::set<std::pair<int, int>> pts);
    std::set<int> row(int i) const;
    std::set<int> col(int j) const;
};

// true iff every pair of rows is disjoint or equal
bool is_separated(const SepSet& T);

// least separated superset: rows with intersecting column sets are merged
// (union-find), every row of a class receives the class's column union
SepSet separated_closure(const SepSet& T);

}  // namespace sepvars
