#include "fareyplumb/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace fareyplumb {

Int determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix a = input;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity; the 128-bit intermediate
                // only has to hold a 2x2 minor before the division.
                __int128 num = static_cast<__int128>(a(k, k)) * a(i, j) - static_cast<__int128>(a(i, k)) * a(k, j);
                __int128 q = num / prev;
                if (q > INT64_MAX || q < INT64_MIN) throw OverflowError("determinant: entry overflow");
                a(i, j) = static_cast<Int>(q);
            }
        }
        prev = a(k, k);
    }
    return checked_mul(sign, a(n - 1, n - 1));
}

IntMatrix gram_matrix(const std::vector<IntVector>& vectors) {
    IntMatrix g(vectors.size(), vectors.size());
    for (std::size_t a = 0; a < vectors.size(); ++a)
        for (std::size_t b = a; b < vectors.size(); ++b) g(a, b) = g(b, a) = dot(vectors[a], vectors[b]);
    return g;
}

}  // namespace fareyplumb
