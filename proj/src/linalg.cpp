#include "bergball/linalg.hpp"

namespace bergball {

int exact_rank(std::vector<std::vector<GaussianRational>> m) {
    if (m.empty() || m.front().empty()) return 0;
    const size_t rows = m.size(), cols = m.front().size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c].is_zero()) continue;
            GaussianRational f = m[r][c] / m[rank][c];
            for (size_t k = c; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace bergball
