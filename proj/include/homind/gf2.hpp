#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homind/errors.hpp"

namespace homind {

/// Bit vector over Z_2.
struct Gf2Vector {
    int size = 0;
    std::vector<std::uint64_t> bits;

    Gf2Vector() = default;
    explicit Gf2Vector(int n) : size(n), bits((n + 63) / 64, 0) {}

    bool get(int i) const { return (bits[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            bits[i >> 6] |= m;
        else
            bits[i >> 6] &= ~m;
    }
    void flip(int i) { bits[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    int popcount() const;
    bool operator==(const Gf2Vector&) const = default;
};

/// Row-major bit-packed matrix over Z_2.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
    void set(int r, int c, bool v);
    void flip(int r, int c) { row(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }

    Gf2Matrix transpose() const;
    /// M x, length rows().
    Gf2Vector multiply(const Gf2Vector& x) const;

private:
    std::uint64_t* row(int r) { return data_.data() + static_cast<std::size_t>(r) * words_; }
    const std::uint64_t* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * words_; }

    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Mx = b.
struct Gf2System {
    Gf2Matrix M;
    Gf2Vector b;
};

int rank(const Gf2Matrix& M);

/// A particular solution of Mx = b, or none when unsolvable.
std::optional<Gf2Vector> solve(const Gf2System& S);

/// log2 of the solution count: cols - rank when solvable, none otherwise.
std::optional<int> solution_count_log2(const Gf2System& S);

/// Dual witness of unsolvability: y with M^T y = 0 and b^T y = 1. Exactly one
/// of solve / fredholm_certificate succeeds. The y is read off the
/// row-operation transcript of the elimination, so no transposed solve runs.
std::optional<Gf2Vector> fredholm_certificate(const Gf2System& S);

}  // namespace homind
