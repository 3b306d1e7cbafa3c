#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

// Dense bit-packed linear algebra over GF(2). All operations are pure; both
// types are value types that are safe to share across threads once built.
namespace qldpc::gf2 {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_support(std::size_t n, const std::vector<int>& ones);
    // Accepts strings like "0101"; anything but '0'/'1' is rejected.
    static BitVector from_string(std::string_view s);

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }

    std::size_t weight() const;
    bool any() const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }
    bool operator==(const BitVector& o) const = default;

    std::string to_string() const;            // "0110..."
    std::vector<int> support() const;         // ascending indices of ones

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t k);
    // One string per row, e.g. {"11", "01"}.
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return r_.size(); }
    std::size_t cols() const { return cols_; }

    bool at(std::size_t i, std::size_t j) const { return r_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { r_[i].set(j, v); }

    const BitVector& row(std::size_t i) const { return r_[i]; }
    void append_row(const BitVector& v);

    bool is_zero() const;
    bool operator==(const BitMatrix& o) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> r_;
};

// GF(2) row rank (deterministic leftmost-pivot elimination).
std::size_t rank(const BitMatrix& m);

// True iff v is a GF(2) combination of rows of m. Throws std::invalid_argument
// on a length mismatch. The zero vector is always contained (empty combination).
bool rowspace_contains(const BitMatrix& m, const BitVector& v);

// GF(2) matrix product; throws std::invalid_argument on inner-dimension mismatch.
BitMatrix product(const BitMatrix& a, const BitMatrix& b);

BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b);

BitMatrix transpose(const BitMatrix& m);

// Horizontal concatenation [a | b]; row counts must agree.
BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);

}  // namespace qldpc::gf2
