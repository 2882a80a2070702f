#pragma once

#include "ntlab/hp.hpp"

#include <string>
#include <vector>

namespace ntlab {

/// Ordinates t of the first nontrivial zeta zeros 1/2 + it (input data, not
/// computed here). Each requested ordinate is verified at load time by
/// |zeta(1/2 + it)| < 1e-10 with the library's own zeta; a failed check
/// throws. When `path` is empty the compiled-in table is used, otherwise a
/// plain text file with one 30-digit ordinate per line.
std::vector<HPReal> riemann_zero_ordinates(int count, int digits, const std::string& path = "");

/// Number of ordinates in the compiled-in table.
int bundled_zero_count();

}  // namespace ntlab
