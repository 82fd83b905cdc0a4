#include "sepvars/sepsets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sepvars {

SepSet::SepSet(int m_, int n_, std::set<std::pair<int, int>> pts)
    : m(m_), n(n_), points(std::move(pts)) {
    if (m < 1 || n < 1) throw std::invalid_argument("SepSet: grid dimensions must be positive");
    for (const auto& [i, j] : points)
        if (i < 0 || i >= m || j < 0 || j >= n)
            throw std::invalid_argument("SepSet: point out of bounds");
}

std::set<int> SepSet::row(int i) const {
    std::set<int> r;
    for (const auto& [a, b] : points)
        if (a == i) r.insert(b);
    return r;
}

std::set<int> SepSet::col(int j) const {
    std::set<int> c;
    for (const auto& [a, b] : points)
        if (b == j) c.insert(a);
    return c;
}

bool is_separated(const SepSet& T) {
    std::vector<std::set<int>> rows(T.m);
    for (const auto& [i, j] : T.points) rows[i].insert(j);
    for (int i = 0; i < T.m; ++i)
        for (int j = i + 1; j < T.m; ++j) {
            if (rows[i] == rows[j]) continue;
            std::vector<int> inter;
            std::set_intersection(rows[i].begin(), rows[i].end(), rows[j].begin(), rows[j].end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) return false;
        }
    return true;
}

namespace {

int find_root(std::vector<int>& parent, int i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

}  // namespace

SepSet separated_closure(const SepSet& T) {
    std::vector<std::set<int>> rows(T.m);
    for (const auto& [i, j] : T.points) rows[i].insert(j);
    std::vector<int> parent(T.m);
    std::iota(parent.begin(), parent.end(), 0);

    bool changed = true;
    while (changed) {
        changed = false;
        // column sets per current class
        std::vector<std::set<int>> cls(T.m);
        for (int i = 0; i < T.m; ++i) {
            int r = find_root(parent, i);
            cls[r].insert(rows[i].begin(), rows[i].end());
        }
        for (int i = 0; i < T.m; ++i)
            for (int j = i + 1; j < T.m; ++j) {
                int ri = find_root(parent, i), rj = find_root(parent, j);
                if (ri == rj) continue;
                std::vector<int> inter;
                std::set_intersection(cls[ri].begin(), cls[ri].end(), cls[rj].begin(),
                                      cls[rj].end(), std::back_inserter(inter));
                if (!inter.empty()) {
                    parent[std::max(ri, rj)] = std::min(ri, rj);
                    changed = true;
                }
            }
    }

    std::vector<std::set<int>> cls(T.m);
    for (int i = 0; i < T.m; ++i) {
        int r = find_root(parent, i);
        cls[r].insert(rows[i].begin(), rows[i].end());
    }
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < T.m; ++i) {
        if (rows[i].empty()) continue;  // empty rows never merge, stay empty
        for (int j : cls[find_root(parent, i)]) out.emplace(i, j);
    }
    return SepSet(T.m, T.n, std::move(out));
}

}  // namespace sepvars
