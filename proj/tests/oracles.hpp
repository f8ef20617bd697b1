// Test-only oracles, independent of the library implementation paths they
// check: Smith-normal-form homology, brute-force face/dimension scans, and a
// memoization-free decomposability recursion.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "srliaison/simplicial.hpp"

namespace oracle {

using srl::SimplicialComplex;
using srl::VertexSet;

// ---- integer Smith normal form (gcd reduction, exact) ---------------------

inline std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m) {
    std::vector<mpz_class> diag;
    if (m.empty() || m[0].empty()) return diag;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    while (r < rows && r < cols) {
        size_t pi = rows, pj = cols;
        for (size_t i = r; i < rows && pi == rows; ++i)
            for (size_t j = r; j < cols; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        std::swap(m[r], m[pi]);
        for (auto& row : m) std::swap(row[r], row[pj]);
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = r + 1; i < rows; ++i)
                while (m[i][r] != 0) {
                    mpz_class q = m[i][r] / m[r][r];
                    for (size_t j = r; j < cols; ++j) m[i][j] -= q * m[r][j];
                    if (m[i][r] != 0) std::swap(m[r], m[i]);
                }
            for (size_t j = r + 1; j < cols; ++j)
                while (m[r][j] != 0) {
                    mpz_class q = m[r][j] / m[r][r];
                    for (size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][r];
                    if (m[r][j] != 0) {
                        for (size_t i = 0; i < rows; ++i) std::swap(m[i][r], m[i][j]);
                        again = true;
                    }
                }
        }
        diag.push_back(abs(m[r][r]));
        ++r;
    }
    return diag;
}

// reduced Betti number over Q or GF(2) via Smith normal forms
inline int snf_reduced_betti(const SimplicialComplex& dl, srl::Field field, int i) {
    if (i < -1 || dl.is_void() || i > dl.dim()) return 0;
    std::map<int, std::vector<VertexSet>> by_dim;
    for (VertexSet f : dl.faces()) by_dim[srl::vs_card(f) - 1].push_back(f);
    auto boundary = [&](int k) {
        std::vector<std::vector<mpz_class>> m;
        const auto& rows = by_dim[k - 1];
        const auto& cols = by_dim[k];
        if (rows.empty() || cols.empty()) return m;
        std::map<VertexSet, size_t> row_of;
        for (size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
        m.assign(rows.size(), std::vector<mpz_class>(cols.size(), 0));
        for (size_t c = 0; c < cols.size(); ++c) {
            int pos = 0;
            for (int v : srl::vs_labels(cols[c]))
                m[row_of[cols[c] & ~srl::vs_bit(v)]][c] = (pos++ % 2 == 0) ? 1 : -1;
        }
        return m;
    };
    auto rank_over = [&](int k) {
        auto diag = smith_diagonal(boundary(k));
        int rank = 0;
        for (const auto& d : diag) {
            if (field == srl::Field::Q) {
                if (d != 0) ++rank;
            } else {
                if (d % 2 != 0) ++rank;
            }
        }
        return rank;
    };
    int ni = static_cast<int>(by_dim[i].size());
    return ni - rank_over(i) - rank_over(i + 1);
}

// ---- brute-force combinatorics ---------------------------------------------

// all faces of the complex generated by the complement of the ideal, scanning
// every subset of [n]
inline std::set<VertexSet> faces_by_scan(int n, const std::vector<uint32_t>& gen_supports) {
    std::set<VertexSet> faces;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        bool face = true;
        for (uint32_t g : gen_supports)
            if ((g & s) == g) {
                face = false;
                break;
            }
        if (face) faces.insert(s);
    }
    return faces;
}

// Krull dimension of a squarefree monomial quotient by scanning independent
// variable subsets
inline int dimension_by_scan(int n, const std::vector<uint32_t>& gen_supports) {
    int best = 0;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        bool independent = true;
        for (uint32_t g : gen_supports)
            if ((g & s) == g) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

// definition-verbatim vertex decomposability, no memoization
inline bool vd_by_definition(const SimplicialComplex& dl) {
    if (!dl.is_pure()) return false;
    if (dl.is_simplex()) return true;
    for (int v : srl::vs_labels(dl.vertices())) {
        SimplicialComplex lk = dl.link(v), del = dl.deletion(v);
        if (lk.is_pure() && del.is_pure() && vd_by_definition(lk) && vd_by_definition(del))
            return true;
    }
    return false;
}

// ---- random inputs ----------------------------------------------------------

inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_n) {
    std::uniform_int_distribution<int> nd(1, max_n);
    int n = nd(rng);
    std::uniform_int_distribution<int> fd(1, 1 + n);
    std::uniform_int_distribution<uint32_t> sd(0, (1u << n) - 1);
    std::vector<VertexSet> facets;
    int count = fd(rng);
    for (int i = 0; i < count; ++i) facets.push_back(sd(rng));
    return SimplicialComplex(n, (1u << n) - 1, std::move(facets));
}

}  // namespace oracle
