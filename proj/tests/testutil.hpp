#pragma once

#include "intmatrix.hpp"
#include "rng.hpp"

#include <vector>

namespace torusemb::testutil {

inline std::vector<Int> vec(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, long bound, SplitMix64& rng) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(-bound, bound);
    return m;
}

// Random unimodular matrix as a product of elementary row operations.
inline IntMatrix random_unimodular(std::size_t n, SplitMix64& rng, int ops = 8) {
    IntMatrix u = IntMatrix::identity(n);
    for (int k = 0; k < ops && n > 0; ++k) {
        const long kind = rng.uniform(0, 2);
        const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        if (kind == 0 && n > 1) {
            if (j == i) j = (j + 1) % n;
            u.add_row_multiple(i, j, Int(rng.uniform(-2, 2)));
        } else if (kind == 1) {
            u.swap_rows(i, j);
        } else {
            u.negate_row(i);
        }
    }
    return u;
}

}  // namespace torusemb::testutil
