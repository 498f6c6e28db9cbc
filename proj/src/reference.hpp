#pragma once

#include "invariants.hpp"

#include <gmpxx.h>

#include <optional>

// Reference implementations for the self-check suite and the test binaries.
// Every routine here takes a route independent of the production code path it
// is compared against; none of them is called while deciding a map.
namespace torusemb::reference {

// Invariant factors as successive quotients of k x k minor gcds.
std::vector<Int> minor_gcd_invariant_factors(const IntMatrix& a);

// Signed determinant by fraction-free (Bareiss) elimination.
Int bareiss_det(IntMatrix a);

// Rank by integer cross-multiplication elimination (no divisions at all).
std::size_t elimination_rank(IntMatrix a);

// A rational solution of a x = rhs with free variables pinned to zero, or
// nullopt when inconsistent.
std::optional<std::vector<mpq_class>> solve_rational(const IntMatrix& a,
                                                     const std::vector<Int>& rhs);

// Whether w is an integer combination of the columns of b (full column rank).
bool in_column_span(const IntMatrix& b, const std::vector<Int>& w);

// All vectors x with a x = 0 and entries in [-bound, bound], zero included.
std::vector<std::vector<Int>> small_kernel_vectors(const IntMatrix& a, long bound);

// omega as the wedge sum over handle pairs of a 3 x 2g matrix.
std::array<Int, 3> omega_wedge_sum(const IntMatrix& m);

// omega_mod2 from a full 3 x h crosscap matrix: dot products of mod-2 rows.
std::array<Bit, 3> omega_mod2_crosscap(const IntMatrix& crosscap_matrix);

// Pfaffian by recursive expansion along the first row.
Int pfaffian(const IntMatrix& g);

}  // namespace torusemb::reference
