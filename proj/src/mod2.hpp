#pragma once

#include "intmatrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace torusemb {

using Bit = std::uint8_t;  // 0 or 1

// Dense matrix over Z_2. Sizes here are tiny (homology ranks), so a byte per
// entry keeps the code obvious.
class Mod2Matrix {
public:
    Mod2Matrix() = default;
    Mod2Matrix(std::size_t rows, std::size_t cols);

    static Mod2Matrix identity(std::size_t n);
    static Mod2Matrix reduction_of(const IntMatrix& a);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Bit& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Bit operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Mod2Matrix&) const = default;

    Mod2Matrix transposed() const;
    Mod2Matrix operator*(const Mod2Matrix& rhs) const;

    std::size_t rank() const;
    std::optional<Mod2Matrix> inverse() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Bit> data_;
};

// Some solution x of A x = b over Z_2, or nullopt when inconsistent. The
// transposed member makes the x^T A = b^T variant a one-liner at call sites.
std::optional<std::vector<Bit>> solve_mod2(const Mod2Matrix& a, const std::vector<Bit>& b);

std::vector<Bit> mod2_mat_vec(const Mod2Matrix& a, const std::vector<Bit>& v);

}  // namespace torusemb
