#ifndef SIGMA_HARNESS_RENDER_HPP
#define SIGMA_HARNESS_RENDER_HPP

#include <string>

#include "sigma/coeff_table.hpp"
#include "sigma/valuation.hpp"

namespace sigma::harness {

enum class TableMode { Nu, NuMinusJ };
enum class TableFormat { Plain, Csv, Markdown };

// Valuation matrix of the rectangle, rows indexed by j and columns by i.
// Plain output is one space-separated row per line; csv uses commas;
// markdown emits a pipe table headed by the column indices. Zero
// coefficients (which have no valuation) render as the infinity symbol.
std::string emit_table(const CoeffTable& table, unsigned long p, long max_i,
                       long max_j, TableMode mode, TableFormat format);

// Same grid conventions for an exploratory residual matrix.
std::string render_residual(const ResidualMatrix& matrix, TableFormat format);

}  // namespace sigma::harness

#endif  // SIGMA_HARNESS_RENDER_HPP
