#include "hs/linsolve.hpp"

#include "hs/errors.hpp"

#include <stdexcept>
#include <utility>

namespace hs {

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t n = A.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("solve_linear: matrix is not square");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SingularSystem("column " + std::to_string(col) + " has no pivot");
        std::swap(A[pivot], A[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            const Rational f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

}  // namespace hs
