#pragma once

#include <vector>

#include <gmpxx.h>

namespace patterncount {

// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t exact_rank(std::vector<std::vector<mpz_class>> rows);

}  // namespace patterncount
