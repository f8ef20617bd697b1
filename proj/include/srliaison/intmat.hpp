#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace srl {

/// Exact rank of an integer matrix (equals the rank over Q), by fraction-free
/// Bareiss elimination.
int rank_bareiss(std::vector<std::vector<mpz_class>> m);

/// Rank over GF(2) by bitset elimination. Rows are encoded as 64-bit words.
int rank_gf2(std::vector<std::vector<uint64_t>> rows, int ncols);

/// Smith normal form invariant factors of a small integer matrix (int64
/// arithmetic; intended for tiny incidence matrices with entries in {0,1}).
std::vector<int64_t> smith_invariants(std::vector<std::vector<int64_t>> m);

}  // namespace srl
