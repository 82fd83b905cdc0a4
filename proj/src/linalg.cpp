#include "sepvars/linalg.hpp"

#include <algorithm>

namespace sepvars {

namespace {

// One-pass fraction-free Gauss-Jordan over integer rows: at every pivot step
// ALL other rows take the Bareiss two-term update divided by the previous
// pivot; the divisions are exact (the entries stay minors of the scaled
// input). The pivot rows are normalized once at the very end, which is the
// only place rational canonicalization happens. Input rows are scaled by
// their denominator lcm first; nullspace and RREF are unchanged by that.
// Each step's row updates are independent, so the OpenMP variant produces
// bit-identical output.
template <bool Parallel>
std::vector<int> rref_impl(QMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> w(rows);
    // row storage is allocated under the same static distribution as the
    // update loops below, so later reallocations stay in the owning thread's
    // allocator arena
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && rows > 4)
#endif
    for (int i = 0; i < rows; ++i) {
        w[i].resize(cols);
        Int l = 1;
        for (int j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < cols; ++j) {
            Int scale;
            mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
            w[i][j] = m.at(i, j).get_num() * scale;
        }
    }

    std::vector<int> pivots;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (w[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) std::swap(w[piv], w[r]);
        const std::vector<Int>& prow = w[r];
        const Int pivval = prow[c];
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && rows > 4)
#endif
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto& row = w[i];
            Int t;
            if (row[c] == 0) {
                // the scaling by pivval/prev is part of the minor structure
                // that keeps all later divisions exact; it must not be skipped
                for (int j = 0; j < cols; ++j) {
                    if (j == c || row[j] == 0) continue;
                    mpz_mul(t.get_mpz_t(), row[j].get_mpz_t(), pivval.get_mpz_t());
                    mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            const Int f = row[c];
            for (int j = 0; j < cols; ++j) {
                if (j == c) continue;
                mpz_mul(t.get_mpz_t(), row[j].get_mpz_t(), pivval.get_mpz_t());
                mpz_submul(t.get_mpz_t(), f.get_mpz_t(), prow[j].get_mpz_t());
                mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = pivval;
        pivots.push_back(c);
        ++r;
    }

    // normalize: pivot rows divided by their pivot entry, the rest is zero
    const int rank = static_cast<int>(pivots.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel && rank > 4)
#endif
    for (int k = 0; k < rank; ++k) {
        const Int d = w[k][pivots[k]];
        for (int j = 0; j < cols; ++j)
            m.at(k, j) = (j == pivots[k]) ? Rational(1) : frac(w[k][j], d);
    }
    for (int i = rank; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = 0;
    return pivots;
}

std::vector<std::vector<Rational>> nullspace_from_rref(const QMatrix& m,
                                                       const std::vector<int>& pivots) {
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[c] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(static_cast<int>(k), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<int> rref_serial(QMatrix& m) { return rref_impl<false>(m); }
std::vector<int> rref_parallel(QMatrix& m) { return rref_impl<true>(m); }

std::vector<int> rref(QMatrix& m) {
    if (static_cast<long>(m.rows()) * m.cols() >= 48 * 48) return rref_parallel(m);
    return rref_serial(m);
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
    QMatrix w = m;
    auto pivots = rref(w);
    return nullspace_from_rref(w, pivots);
}

std::vector<std::vector<Rational>> nullspace_serial(const QMatrix& m) {
    QMatrix w = m;
    auto pivots = rref_serial(w);
    return nullspace_from_rref(w, pivots);
}

bool in_row_space(const QMatrix& rref_m, const std::vector<int>& pivots,
                  const std::vector<Rational>& v) {
    std::vector<Rational> w = v;
    for (size_t k = 0; k < pivots.size(); ++k) {
        const Rational f = w[pivots[k]];
        if (is_zero(f)) continue;
        for (int j = 0; j < rref_m.cols(); ++j) w[j] -= f * rref_m.at(static_cast<int>(k), j);
    }
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return is_zero(x); });
}

}  // namespace sepvars
