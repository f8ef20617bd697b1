#include <map>

#include "srliaison/homology.hpp"
#include "srliaison/intmat.hpp"

namespace srl {

int ChainRanks::reduced_betti(int i) const {
    if (i < -1 || i > dim) return 0;
    size_t ni = face_counts[i + 1];
    int rk_i = boundary_ranks[i + 1];
    int rk_next = (i + 1 > dim) ? 0 : boundary_ranks[i + 2];
    return static_cast<int>(ni) - rk_i - rk_next;
}

ChainRanks chain_ranks(const SimplicialComplex& dl, Field field) {
    if (dl.is_void()) throw std::invalid_argument("chain_ranks of the void complex");
    int d = dl.dim();
    std::vector<std::vector<VertexSet>> by_dim(d + 2);
    for (VertexSet f : dl.faces()) by_dim[vs_card(f)].push_back(f);  // index = |f| = dim + 1

    ChainRanks out;
    out.field = field;
    out.dim = d;
    out.face_counts.assign(d + 2, 0);
    out.boundary_ranks.assign(d + 2, 0);
    for (int i = -1; i <= d; ++i) out.face_counts[i + 1] = by_dim[i + 1].size();

    // d_i : C_i -> C_{i-1} with signs by position of the removed vertex
    for (int i = 0; i <= d; ++i) {
        const auto& rows_faces = by_dim[i];      // (i-1)-faces
        const auto& cols_faces = by_dim[i + 1];  // i-faces
        if (rows_faces.empty() || cols_faces.empty()) continue;
        std::map<VertexSet, size_t> row_of;
        for (size_t r = 0; r < rows_faces.size(); ++r) row_of[rows_faces[r]] = r;

        if (field == Field::GF2) {
            int words = (static_cast<int>(cols_faces.size()) + 63) / 64;
            std::vector<std::vector<uint64_t>> rows(rows_faces.size(),
                                                    std::vector<uint64_t>(words, 0));
            for (size_t c = 0; c < cols_faces.size(); ++c) {
                for (int v : vs_labels(cols_faces[c])) {
                    size_t r = row_of.at(cols_faces[c] & ~vs_bit(v));
                    rows[r][c / 64] ^= (1ull << (c % 64));
                }
            }
            out.boundary_ranks[i + 1] = rank_gf2(std::move(rows),
                                                 static_cast<int>(cols_faces.size()));
        } else {
            std::vector<std::vector<mpz_class>> m(rows_faces.size(),
                                                  std::vector<mpz_class>(cols_faces.size(), 0));
            for (size_t c = 0; c < cols_faces.size(); ++c) {
                int pos = 0;
                for (int v : vs_labels(cols_faces[c])) {
                    size_t r = row_of.at(cols_faces[c] & ~vs_bit(v));
                    m[r][c] = (pos % 2 == 0) ? 1 : -1;
                    ++pos;
                }
            }
            out.boundary_ranks[i + 1] = rank_bareiss(std::move(m));
        }
    }
    return out;
}

int reduced_betti(const SimplicialComplex& dl, Field field, int i) {
    if (dl.is_void()) throw std::invalid_argument("reduced_betti of the void complex");
    if (i < -1 || i > dl.dim()) return 0;
    return chain_ranks(dl, field).reduced_betti(i);
}

bool is_cohen_macaulay(const SimplicialComplex& dl, Field field) {
    if (dl.is_void()) throw std::invalid_argument("is_cohen_macaulay of the void complex");
    for (VertexSet f : dl.faces()) {
        SimplicialComplex lk = dl.link_face(f);
        int d = lk.dim();
        // dim <= 0 links are trivially fine: a 0-dim link has a vertex, so
        // b~_{-1} vanishes, and there is nothing below dimension -1.
        if (d <= 0) continue;
        ChainRanks cr = chain_ranks(lk, field);
        for (int i = -1; i < d; ++i)
            if (cr.reduced_betti(i) != 0) return false;
    }
    return true;
}

bool is_cm_quotient(const MonomialIdeal& I, Field field) {
    if (!I.is_squarefree()) throw std::invalid_argument("is_cm_quotient requires squarefree input");
    SimplicialComplex dl = complex_of(I, I.nvars());
    if (dl.is_void())
        throw std::invalid_argument("is_cm_quotient of the unit ideal");
    // Labels killed by degree-1 generators are non-vertices of the complex;
    // Reisner on the remaining face structure decides CM of the quotient.
    return is_cohen_macaulay(dl, field);
}

}  // namespace srl
