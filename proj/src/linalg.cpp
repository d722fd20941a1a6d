#include "stacky/linalg.hpp"

#include <algorithm>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

} // namespace

Int determinant(IntMatrix m) {
    if (m.rows() != m.cols())
        throw DimensionError("determinant: matrix is " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()) + ", not square");
    const Eigen::Index n = m.rows();
    if (n == 0) return Int(1);

    Int sign(1);
    Int prev(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = k; i < n; ++i) {
            if (m(i, k) != 0) { pivot = i; break; }
        }
        if (pivot < 0) return Int(0);
        if (pivot != k) {
            m.row(pivot).swap(m.row(k));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                // Bareiss: division by the previous pivot is exact.
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<Int> elementary_divisors(IntMatrix m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    const Eigen::Index steps = std::min(rows, cols);

    for (Eigen::Index t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero |entry| of the trailing submatrix as pivot.
            Eigen::Index pr = -1, pc = -1;
            Int best(0);
            for (Eigen::Index i = t; i < rows; ++i) {
                for (Eigen::Index j = t; j < cols; ++j) {
                    if (m(i, j) == 0) continue;
                    const Int a = abs_int(m(i, j));
                    if (pr < 0 || a < best) {
                        best = a;
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr < 0) goto done; // trailing submatrix is zero
            if (pr != t) m.row(pr).swap(m.row(t));
            if (pc != t) m.col(pc).swap(m.col(t));

            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                const Int q = m(i, t) / m(t, t);
                if (q != 0) m.row(i) -= (q * m.row(t).array()).matrix();
                if (m(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                const Int q = m(t, j) / m(t, t);
                if (q != 0) m.col(j) -= (q * m.col(t).array()).matrix();
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) continue; // remainders shrank; pick a new pivot

            // Corner isolated; enforce divisibility of the rest.
            Eigen::Index bad_row = -1;
            for (Eigen::Index i = t + 1; i < rows && bad_row < 0; ++i)
                for (Eigen::Index j = t + 1; j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0) { bad_row = i; break; }
            if (bad_row < 0) break;
            m.row(t) += m.row(bad_row);
        }
    }
done:
    std::vector<Int> divisors;
    for (Eigen::Index t = 0; t < steps; ++t) {
        if (m(t, t) == 0) break;
        divisors.push_back(abs_int(m(t, t)));
    }
    return divisors;
}

RatVector solve_unique(const IntMatrix& basis_columns, const IntVector& target) {
    const Eigen::Index d = basis_columns.rows();
    if (basis_columns.cols() != d)
        throw DimensionError("solve_unique: need exactly d basis vectors in Z^d");
    if (target.size() != d)
        throw DimensionError("solve_unique: target has wrong length");

    const Int det = determinant(basis_columns);
    if (det == 0) throw SingularityError("solve_unique: basis is linearly dependent");

    // Cramer; all determinants are exact.
    RatVector b(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        IntMatrix replaced = basis_columns;
        replaced.col(i) = target;
        b(i) = make_rational(-determinant(replaced), det);
    }
    return b;
}

RatVector solve_unique(const std::vector<IntVector>& basis, const IntVector& target) {
    const Eigen::Index d = target.size();
    IntMatrix m(d, static_cast<Eigen::Index>(basis.size()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (basis[static_cast<std::size_t>(j)].size() != d)
            throw DimensionError("solve_unique: basis vector has wrong length");
        m.col(j) = basis[static_cast<std::size_t>(j)];
    }
    return solve_unique(m, target);
}

namespace {

// In-place reduction to row echelon form; returns pivot columns.
std::vector<Eigen::Index> echelonize(RatMatrix& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index p = -1;
        for (Eigen::Index i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row) m.row(p).swap(m.row(row));
        const Rational inv = Rational(1) / m(row, col);
        m.row(row) *= inv;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            m.row(i) -= m(i, col) * m.row(row);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(RatMatrix m) { return static_cast<int>(echelonize(m).size()); }

int rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix kernel_basis(RatMatrix m) {
    const Eigen::Index n = m.cols();
    const std::vector<Eigen::Index> pivots = echelonize(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (Eigen::Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    RatMatrix basis = RatMatrix::Zero(n, n - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index out = 0;
    for (Eigen::Index free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        basis(free_col, out) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], out) = -m(static_cast<Eigen::Index>(r), free_col);
        ++out;
    }
    return basis;
}

bool in_row_space(const IntMatrix& rows, const RatVector& c) {
    RatMatrix m(rows.rows() + 1, rows.cols());
    m.topRows(rows.rows()) = to_rational(rows);
    m.row(rows.rows()) = c.transpose();
    return rank(std::move(m)) == rank(rows);
}

IntVector primitive(IntVector v) {
    Int g(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v(i));
    if (g == 0 || g == 1) return v;
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
    return v;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

RatVector to_rational(const IntVector& v) {
    RatVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
    return out;
}

} // namespace stacky
