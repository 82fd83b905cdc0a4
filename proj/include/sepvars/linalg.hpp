#pragma once

#include <stdexcept>
#include <vector>

#include "sepvars/rational.hpp"

namespace sepvars {

// Dense rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool operator==(const QMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Reduced row echelon form in place; returns the pivot columns in order.
// Pivoting is deterministic: leftmost nonzero column, smallest row index.
// rref_serial is the reference implementation; rref_parallel distributes the
// row updates of the fraction-free forward sweep over OpenMP threads and
// produces bit-identical output. rref dispatches on matrix size.
std::vector<int> rref_serial(QMatrix& m);
std::vector<int> rref_parallel(QMatrix& m);
std::vector<int> rref(QMatrix& m);

// Canonical basis (one vector per free column, reduced echelon coordinates)
// of the right nullspace. Deterministic for fixed input.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);
std::vector<std::vector<Rational>> nullspace_serial(const QMatrix& m);

// Row space membership: reduces v against the rows of an RREF matrix with the
// given pivot columns; returns true iff the residual is zero.
bool in_row_space(const QMatrix& rref_m, const std::vector<int>& pivots,
                  const std::vector<Rational>& v);

// Fraction-free (Bareiss) determinant over any integral domain with exact
// division. `one` is the multiplicative identity, `div` must be exact.
template <typename T, typename Div, typename IsZero>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& one, Div div, IsZero is0) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return one;
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant: not square");
    T prev = one;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!is0(m[i][k])) { piv = i; break; }
        if (piv < 0) return T();  // zero column, singular
        if (piv != k) { std::swap(m[piv], m[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = T();
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    if (sign < 0) det = T() - det;
    return det;
}

}  // namespace sepvars
