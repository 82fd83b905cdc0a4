#include "sepvars/numsg.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace sepvars {

namespace {

constexpr long kUnreachable = std::numeric_limits<long>::max();

// Apery-style table: dist[r] = least semigroup element congruent to r modulo
// the smallest generator (round-robin relaxation over residues).
std::vector<long> apery_table(const Semigroup& s) {
    const long m = *s.gens.begin();
    std::vector<long> dist(m, kUnreachable);
    dist[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (long r = 0; r < m; ++r) {
            if (dist[r] == kUnreachable) continue;
            for (long d : s.gens) {
                const long nr = (r + d) % m;
                if (dist[r] + d < dist[nr]) {
                    dist[nr] = dist[r] + d;
                    changed = true;
                }
            }
        }
    }
    return dist;
}

}  // namespace

Semigroup::Semigroup(std::set<long> g) : gens(std::move(g)) {
    for (long d : gens)
        if (d < 1) throw std::invalid_argument("Semigroup: generators must be positive");
}

long semigroup_gcd(const Semigroup& s) {
    long g = 0;
    for (long d : s.gens) g = std::gcd(g, d);
    return g;
}

bool semigroup_member(long n, const Semigroup& s) {
    if (n == 0) return true;
    if (n < 0 || s.gens.empty()) return false;
    const auto dist = apery_table(s);
    const long m = *s.gens.begin();
    return dist[n % m] != kUnreachable && dist[n % m] <= n;
}

std::set<long> gaps(const Semigroup& s) {
    if (semigroup_gcd(s) != 1)
        throw std::invalid_argument("gaps: infinite complement (gcd != 1)");
    const auto dist = apery_table(s);
    const long m = *s.gens.begin();
    std::set<long> out;
    for (long r = 0; r < m; ++r)
        for (long n = r == 0 ? m : r; n < dist[r]; n += m) out.insert(n);
    return out;
}

long frobenius(const Semigroup& s) {
    if (semigroup_gcd(s) != 1)
        throw std::invalid_argument("frobenius: infinite complement (gcd != 1)");
    if (s.gens.count(1)) return -1;
    const auto dist = apery_table(s);
    long best = 0;
    for (long d : dist) best = std::max(best, d);
    return best - *s.gens.begin();
}

std::vector<long> first_gaps(const Semigroup& s, int k) {
    std::vector<long> out;
    if (k <= 0) return out;
    if (s.gens.empty()) {
        for (long n = 1; static_cast<int>(out.size()) < k; ++n) out.push_back(n);
        return out;
    }
    const auto dist = apery_table(s);
    const long m = *s.gens.begin();
    long stop = kUnreachable;  // finite complement: every n >= max(dist) is a member
    if (semigroup_gcd(s) == 1) {
        stop = 0;
        for (long d : dist) stop = std::max(stop, d);
    }
    for (long n = 1; static_cast<int>(out.size()) < k && n <= stop; ++n)
        if (dist[n % m] > n) out.push_back(n);
    return out;
}

}  // namespace sepvars
