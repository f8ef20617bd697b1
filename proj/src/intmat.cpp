#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "srliaison/intmat.hpp"

namespace srl {

int rank_bareiss(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    mpz_class prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int rank_gf2(std::vector<std::vector<uint64_t>> rows, int ncols) {
    int words = (ncols + 63) / 64;
    int rank = 0;
    std::vector<std::vector<uint64_t>> pivots;
    std::vector<int> pivcol;
    for (auto& row : rows) {
        row.resize(words, 0);
        while (true) {
            int lead = -1;
            for (int w = 0; w < words && lead < 0; ++w)
                if (row[w]) lead = w * 64 + __builtin_ctzll(row[w]);
            if (lead < 0) break;
            bool hit = false;
            for (size_t k = 0; k < pivots.size(); ++k) {
                if (pivcol[k] == lead) {
                    for (int w = 0; w < words; ++w) row[w] ^= pivots[k][w];
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                pivots.push_back(row);
                pivcol.push_back(lead);
                ++rank;
                break;
            }
        }
    }
    return rank;
}

std::vector<int64_t> smith_invariants(std::vector<std::vector<int64_t>> m) {
    std::vector<int64_t> inv;
    size_t rows = m.size();
    if (!rows) return inv;
    size_t cols = m[0].size();
    size_t r = 0;
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
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][r] == 0) continue;
                int64_t q = m[i][r] / m[r][r];
                for (size_t j = r; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][r] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(m[r], m[i]);
                    clean = false;
                }
            }
            for (size_t j = r + 1; j < cols; ++j) {
                if (m[r][j] == 0) continue;
                int64_t q = m[r][j] / m[r][r];
                for (size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][r];
                if (m[r][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][r], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the rest of the matrix for true SNF
            for (size_t i = r + 1; i < rows && clean; ++i)
                for (size_t j = r + 1; j < cols && clean; ++j)
                    if (m[i][j] % m[r][r] != 0) {
                        for (size_t jj = r; jj < cols; ++jj) m[r][jj] += m[i][jj];
                        clean = false;
                    }
        }
        inv.push_back(std::llabs(m[r][r]));
        ++r;
    }
    return inv;
}

}  // namespace srl
