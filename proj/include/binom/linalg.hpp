#pragma once

// Sparse exact matrices over Scalar, reduced row echelon form and the
// partitioning-kernel-basis test.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binom/polynomial.hpp"

namespace binom {

/// (column, value) pairs, strictly increasing columns, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

struct SparseMatrix {
  std::size_t ncols = 0;
  std::vector<SparseRow> rows;
};

/// a - f*b
SparseRow row_sub_scaled(const SparseRow& a, const Scalar& f, const SparseRow& b);
SparseRow row_scaled(const SparseRow& a, const Scalar& f);
Scalar row_entry(const SparseRow& r, std::size_t col);

struct RrefResult {
  SparseMatrix reduced;              // nonzero rows ordered by pivot column
  std::vector<std::size_t> pivots;   // pivots[i] = leading column of reduced.rows[i]
};

/// Gauss-Jordan on sparse rows. Pivot = leftmost column, sparsest eligible
/// row. Row updates run in an OpenMP parallel loop once the matrix is big
/// enough to pay for it.
RrefResult rref(const SparseMatrix& m);
/// Dense single-threaded textbook elimination, kept to check rref() against.
RrefResult rref_reference(const SparseMatrix& m);

/// Rows of A in f = A * legend.
struct CoefficientMatrix {
  std::vector<Monomial> legend;
  std::vector<SparseRow> rows;

  std::size_t ncols() const { return legend.size(); }
  SparseMatrix sparse() const { return {legend.size(), rows}; }
};

/// Legend = all monomials of the system, descending in ring.order.
CoefficientMatrix linearize(const PolySystem& sys);
CoefficientMatrix linearize(const std::vector<Polynomial>& polys, MonomialOrder order);
CoefficientMatrix rref(const CoefficientMatrix& m);
Polynomial row_polynomial(const SparseRow& row, const std::vector<Monomial>& legend);
std::vector<Polynomial> row_polynomials(const CoefficientMatrix& m);

struct PartitionBasis {
  /// Kernel vectors with pairwise disjoint supports; one per non-pivot column.
  std::vector<SparseRow> blocks;
  std::vector<std::size_t> coloops;
};

struct PkbWitness {
  std::size_t row_index = 0;  // index in the RREF
  SparseRow row;
  std::vector<Monomial> monomials;
};

struct PkbResult {
  CoefficientMatrix reduced;
  std::optional<PartitionBasis> basis;
  std::optional<PkbWitness> witness;
  bool ok() const { return basis.has_value(); }
};

PkbResult pkb_test(const CoefficientMatrix& m);
/// Checks a partition basis independently: blocks in ker A, disjoint
/// supports, count = ncols - rank, coloops outside every support.
bool verify_partition_basis(const CoefficientMatrix& m, const PartitionBasis& basis);

/// One binomial (or monomial) per RREF row. Throws std::invalid_argument
/// when some row has more than two entries.
std::vector<Polynomial> binomials_from_pkb(const CoefficientMatrix& reduced, const PartitionBasis& basis);

/// generators[dropped] = sum coeff * generators[index]
struct LinearRelation {
  std::size_t dropped = 0;
  std::vector<std::pair<std::size_t, Scalar>> combination;
};

struct PruneResult {
  PolySystem system;
  std::vector<std::size_t> kept;  // indices into the input generators
  std::vector<LinearRelation> relations;
};

/// Keeps a maximal linearly independent subset, preferring binomials, then
/// fewer terms, then earlier generators.
PruneResult prune_redundant_generators(const PolySystem& sys);

/// A nonzero row-space vector supported on at most `bound` columns
/// (bound <= 2), scanning all column pairs.
std::optional<SparseRow> sparse_vector_in_rowspace(const SparseMatrix& m, std::size_t bound = 2);

/// legend line, then one "row col value" line per entry.
std::string dump_matrix(const CoefficientMatrix& m, const Ring& ring);
CoefficientMatrix parse_matrix_dump(const std::string& text, const Ring& ring);

}  // namespace binom
