#include "sepvars/cyclo.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "sepvars/linalg.hpp"

namespace sepvars {

namespace {

UniPoly cyclotomic_memo(long n, std::map<long, UniPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // z^n - 1
    UniPoly num = UniPoly::monomial(static_cast<int>(n)) - UniPoly(Rational(1));
    UniPoly den(Rational(1));
    for (long d = 1; d < n; ++d)
        if (n % d == 0) den = den * cyclotomic_memo(d, memo);
    UniPoly phi = exact_div(num, den);
    memo.emplace(n, phi);
    return phi;
}

}  // namespace

UniPoly cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    std::map<long, UniPoly> memo;
    return cyclotomic_memo(n, memo);
}

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> orders_with_phi_at_most(long bound) {
    std::vector<long> orders;
    if (bound < 1) return orders;
    const long limit = 2 * bound * bound;
    for (long n = 1; n <= limit; ++n)
        if (euler_phi(n) <= bound) orders.push_back(n);
    return orders;
}

UniPoly ratio_polynomial(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("ratio_polynomial: zero input");
    if (is_zero(f.coeff(0))) throw std::invalid_argument("ratio_polynomial: f(0) = 0");
    const int m = f.degree();
    if (m < 1) throw std::invalid_argument("ratio_polynomial: constant input");
    if (!gcd(f, f.derivative()).is_constant())
        throw std::invalid_argument("ratio_polynomial: f not squarefree");

    // Sylvester matrix of f(x) and f(z*x) with respect to x; entries in Q[z].
    // Row block 1: m shifted copies of f's coefficients (constants in z).
    // Row block 2: m shifted copies of (c_i z^i), i = deg..0.
    const int n = 2 * m;
    std::vector<std::vector<UniPoly>> s(n, std::vector<UniPoly>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = UniPoly(f.coeff(m - j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= m; ++j)
            s[m + i][i + j] = UniPoly::monomial(m - j, f.coeff(m - j));
    UniPoly det = bareiss_determinant<UniPoly>(
        s, UniPoly(Rational(1)), [](const UniPoly& a, const UniPoly& b) { return exact_div(a, b); },
        [](const UniPoly& p) { return p.is_zero(); });
    if (det.is_zero()) throw std::logic_error("ratio_polynomial: vanishing resultant");
    return det;
}

CyclotomicReport cyclotomic_report(const UniPoly& R, long degree_bound) {
    if (R.is_zero()) throw std::invalid_argument("cyclotomic_report: zero input");
    CyclotomicReport rep;
    UniPoly w = squarefree_part(R);
    const long bound = std::min<long>(degree_bound, w.degree());
    for (long n : orders_with_phi_at_most(bound)) {
        if (w.degree() == 0) break;
        if (euler_phi(n) > w.degree()) continue;
        UniPoly phi = cyclotomic(n);
        if (!gcd(w, phi).is_constant()) {
            // Phi_n is irreducible over Q, so it divides w entirely
            w = exact_div(w, phi).monic();
            rep.orders_found.insert(n);
        }
    }
    rep.non_cyclotomic_remainder = w;
    rep.all_roots_of_unity = w.is_constant();
    long l = 1;
    for (long n : rep.orders_found) l = std::lcm(l, n);
    rep.order_lcm = l;
    return rep;
}

}  // namespace sepvars
