#pragma once

#include <cstdint>
#include <vector>

namespace xmodlab {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/**
 * Invariant factors of an integer matrix: the diagonal of its Smith normal
 * form, min(rows, cols) entries with d1 | d2 | ... and zeros last.
 * Arithmetic is checked; overflow throws ArithmeticOverflow rather than
 * returning a wrong answer. Rows must all have the same length.
 */
std::vector<std::int64_t> smith_normal_form(IntMatrix m);

/// Reduces `rows` (all of width `width`) to an upper-triangular basis of the
/// lattice they span, with off-diagonal entries reduced modulo the pivot
/// below them. Zero rows are dropped.
IntMatrix hermite_basis(const IntMatrix& rows, std::size_t width);

}  // namespace xmodlab
