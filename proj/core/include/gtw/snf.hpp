#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace gtw {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Diagonal of the Smith normal form: nonnegative entries forming a
/// divisibility chain, trailing zeros included up to min(rows, cols).
std::vector<BigInt> smith_diagonal(IntMatrix m);

/// Independent oracle: invariant factors via gcds of k x k minors
/// (determinantal divisors). Exponential in size; for small matrices only.
std::vector<BigInt> smith_diagonal_by_minors(const IntMatrix& m);

/// True iff v lies in the integer row space of m.
bool in_row_lattice(const IntMatrix& m, const std::vector<BigInt>& v);

/// Abelian invariants of Z^cols / rowspace(m).
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // entries >= 2 in divisibility order

  /// Minimal generator count: free rank + number of torsion coefficients.
  int rank() const { return free_rank + static_cast<int>(torsion.size()); }

  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelian_invariants(const IntMatrix& relator_matrix, int generator_count);

}  // namespace gtw
