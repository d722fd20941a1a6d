#ifndef STACKY_LINALG_HPP
#define STACKY_LINALG_HPP

#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "stacky/rational.hpp"

namespace stacky {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws DimensionError unless the matrix is square.  det of the empty
/// matrix is 1.
Int determinant(IntMatrix m);

/// Nonzero diagonal of the Smith normal form, each entry dividing the next.
/// Pivots are chosen by minimal absolute value.  The product of the entries
/// is the index of the column span inside its saturation.  Zero matrix gives
/// an empty list.
std::vector<Int> elementary_divisors(IntMatrix m);

/// Unique rational solution b of  target + sum_i b_i * basis_i = 0,
/// where the basis columns form a Q-basis of Q^d.  Throws SingularityError
/// if the basis is linearly dependent, DimensionError on shape mismatch.
RatVector solve_unique(const IntMatrix& basis_columns, const IntVector& target);
RatVector solve_unique(const std::vector<IntVector>& basis, const IntVector& target);

/// Rank over Q via Gaussian elimination (exact).
int rank(RatMatrix m);
int rank(const IntMatrix& m);

/// Columns form a basis of the null space { x : m*x = 0 } over Q.
RatMatrix kernel_basis(RatMatrix m);

/// True iff c lies in the Q-row-space of rows.
bool in_row_space(const IntMatrix& rows, const RatVector& c);

/// v divided by the gcd of its entries (zero vector returned unchanged).
/// Orientation is preserved.
IntVector primitive(IntVector v);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

} // namespace stacky

#endif
