#include "qldpc/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace qldpc::gf2 {

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

BitVector BitVector::from_support(std::size_t n, const std::vector<int>& ones) {
    BitVector v(n);
    for (int i : ones) {
        if (i < 0 || static_cast<std::size_t>(i) >= n)
            throw std::invalid_argument("bit index out of range");
        v.set(static_cast<std::size_t>(i), true);
    }
    return v;
}

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') v.set(i, true);
        else if (s[i] != '0') throw std::invalid_argument("bit string must contain only 0/1");
    }
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (auto x : w_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitVector::any() const {
    for (auto x : w_) if (x) return true;
    return false;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (n_ != o.n_) throw std::invalid_argument("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
    return s;
}

std::vector<int> BitVector::support() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < n_; ++i) if (get(i)) out.push_back(static_cast<int>(i));
    return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), r_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t k) {
    BitMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    BitMatrix m;
    for (const auto& s : rows) m.append_row(BitVector::from_string(s));
    return m;
}

void BitMatrix::append_row(const BitVector& v) {
    if (!r_.empty() && v.size() != cols_)
        throw std::invalid_argument("append_row: column count mismatch");
    if (r_.empty()) cols_ = v.size();
    r_.push_back(v);
}

bool BitMatrix::is_zero() const {
    for (const auto& r : r_) if (r.any()) return false;
    return true;
}

namespace {

// Reduce rows in place; returns the pivot column for each retained row.
// Deterministic: pivots are chosen leftmost-first over rows in order.
std::vector<BitVector> reduced_rows(const BitMatrix& m) {
    std::vector<BitVector> basis;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BitVector v = m.row(i);
        for (const auto& b : basis) {
            auto lead = b.support().front();
            if (v.get(static_cast<std::size_t>(lead))) v ^= b;
        }
        if (v.any()) {
            // Keep the basis in echelon form so later eliminations stay cheap.
            for (auto& b : basis) {
                auto lead = v.support().front();
                if (b.get(static_cast<std::size_t>(lead))) b ^= v;
            }
            basis.push_back(v);
        }
    }
    return basis;
}

}  // namespace

std::size_t rank(const BitMatrix& m) { return reduced_rows(m).size(); }

bool rowspace_contains(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("rowspace_contains: vector length != matrix columns");
    BitVector r = v;
    for (const auto& b : reduced_rows(m)) {
        auto lead = b.support().front();
        if (r.get(static_cast<std::size_t>(lead))) r ^= b;
    }
    return !r.any();
}

BitMatrix product(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("product: inner dimensions disagree");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BitVector acc(b.cols());
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.at(i, k)) acc ^= b.row(k);
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (acc.get(j)) out.set(i, j, true);
    }
    return out;
}

BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.at(i, j)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b.at(k, l)) out.set(i * b.rows() + k, j * b.cols() + l, true);
        }
    return out;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) out.set(j, i, true);
    return out;
}

BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("hconcat: row counts disagree");
    BitMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) if (a.at(i, j)) out.set(i, j, true);
        for (std::size_t j = 0; j < b.cols(); ++j) if (b.at(i, j)) out.set(i, a.cols() + j, true);
    }
    return out;
}

}  // namespace qldpc::gf2
