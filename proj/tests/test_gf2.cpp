#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qldpc/families.hpp"
#include "qldpc/gf2.hpp"
#include "qldpc/tanner.hpp"

using namespace qldpc;
using gf2::BitMatrix;
using gf2::BitVector;

namespace {

BitMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng) {
    BitMatrix m(r, c);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, bit(rng));
    return m;
}

// (a-1) x a path parity-check matrix with rows e_i + e_{i+1}.
BitMatrix path_matrix(std::size_t a) {
    BitMatrix m(a - 1, a);
    for (std::size_t i = 0; i + 1 < a; ++i) {
        m.set(i, i, true);
        m.set(i, i + 1, true);
    }
    return m;
}

BitVector ones(std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, true);
    return v;
}

}  // namespace

TEST_SUITE("gf2") {

TEST_CASE("bitvector basics") {
    auto v = BitVector::from_string("0101");
    CHECK(v.size() == 4);
    CHECK(v.weight() == 2);
    CHECK(v.support() == std::vector<int>{1, 3});
    CHECK(v.to_string() == "0101");
    CHECK(BitVector::from_support(4, {1, 3}) == v);
    CHECK(BitVector::from_bits({0, 1, 0, 1}) == v);
    CHECK((v ^ v) == BitVector(4));
    CHECK_FALSE(BitVector(3).any());
    CHECK_THROWS_AS((void)BitVector::from_string("01x"), std::invalid_argument);
}

TEST_CASE("rank on trivial matrices") {
    CHECK(rank(BitMatrix(3, 3)) == 0);
    CHECK(rank(BitMatrix::identity(4)) == 4);
    CHECK(rank(BitMatrix(0, 5)) == 0);
    CHECK(rank(BitMatrix(5, 0)) == 0);
    CHECK(rank(BitMatrix::from_strings({"11", "11"})) == 1);
}

TEST_CASE("rank of the example code matrix is 10") {
    auto h = tanner::to_biadjacency(families::fixture("ex7_H").graph);
    REQUIRE(h.rows() == 14);
    REQUIRE(h.cols() == 11);
    CHECK(rank(h) == 10);
}

TEST_CASE("rank is invariant under row permutation") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(5, 6, rng);
        BitMatrix p(0, 6);
        std::vector<std::size_t> order{4, 2, 0, 3, 1};
        BitMatrix q(5, 6);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 6; ++j) q.set(i, j, m.at(order[i], j));
        CHECK(rank(m) == rank(q));
    }
}

TEST_CASE("rowspace membership") {
    auto m = BitMatrix::from_strings({"110", "011"});
    CHECK(gf2::rowspace_contains(m, BitVector(3)));   // zero vector, always
    CHECK(gf2::rowspace_contains(m, m.row(0)));
    CHECK(gf2::rowspace_contains(m, m.row(0) ^ m.row(1)));
    CHECK_FALSE(gf2::rowspace_contains(m, BitVector::from_string("100")));
    CHECK_THROWS_AS((void)gf2::rowspace_contains(m, BitVector(4)), std::invalid_argument);
}

TEST_CASE("all-ones in the path rowspace iff the length is even") {
    for (std::size_t a = 2; a <= 8; ++a) {
        auto h = path_matrix(a);
        CHECK(gf2::rowspace_contains(h, ones(a)) == (a % 2 == 0));
    }
}

TEST_CASE("all-ones of length 121 is outside the rowspace of H x I11") {
    auto h = tanner::to_biadjacency(families::fixture("ex7_H").graph);
    auto block = gf2::kronecker(h, BitMatrix::identity(11));
    REQUIRE(block.rows() == 154);
    REQUIRE(block.cols() == 121);
    CHECK_FALSE(gf2::rowspace_contains(block, ones(121)));
}

TEST_CASE("rowspace is closed under addition") {
    std::mt19937 rng(11);
    auto m = random_matrix(4, 7, rng);
    std::bernoulli_distribution bit(0.5);
    for (int t = 0; t < 50; ++t) {
        BitVector u(7), v(7);
        for (std::size_t i = 0; i < 4; ++i) {
            if (bit(rng)) u ^= m.row(i);
            if (bit(rng)) v ^= m.row(i);
        }
        REQUIRE(gf2::rowspace_contains(m, u));
        REQUIRE(gf2::rowspace_contains(m, v));
        CHECK(gf2::rowspace_contains(m, u ^ v));
    }
}

TEST_CASE("kronecker products") {
    CHECK(gf2::kronecker(BitMatrix::identity(2), BitMatrix::identity(2)) ==
          BitMatrix::identity(4));
    auto row = BitMatrix::from_strings({"11"});
    CHECK(gf2::kronecker(row, BitMatrix::identity(2)) ==
          BitMatrix::from_strings({"1010", "0101"}));
}

TEST_CASE("kronecker rank is multiplicative") {
    std::mt19937 rng(13);
    for (int t = 0; t < 15; ++t) {
        auto a = random_matrix(3 + t % 6, 2 + t % 7, rng);
        auto b = random_matrix(2 + t % 7, 3 + t % 6, rng);
        CHECK(rank(gf2::kronecker(a, b)) == rank(a) * rank(b));
    }
}

TEST_CASE("kronecker is associative") {
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
        auto a = random_matrix(2, 3, rng);
        auto b = random_matrix(3, 2, rng);
        auto c = random_matrix(2, 2, rng);
        CHECK(gf2::kronecker(gf2::kronecker(a, b), c) ==
              gf2::kronecker(a, gf2::kronecker(b, c)));
    }
}

TEST_CASE("matrix product") {
    auto a = BitMatrix::from_strings({"11", "01"});
    auto b = BitMatrix::from_strings({"10", "11"});
    CHECK(gf2::product(a, b) == BitMatrix::from_strings({"01", "11"}));
    CHECK(gf2::product(a, BitMatrix::identity(2)) == a);
    CHECK(gf2::product(BitMatrix::identity(2), a) == a);
    CHECK_THROWS_AS((void)gf2::product(a, BitMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("transpose and hconcat") {
    auto a = BitMatrix::from_strings({"110", "011"});
    CHECK(gf2::transpose(a) == BitMatrix::from_strings({"10", "11", "01"}));
    CHECK(gf2::hconcat(a, BitMatrix::identity(2)) ==
          BitMatrix::from_strings({"11010", "01101"}));
    CHECK_THROWS_AS((void)gf2::hconcat(a, BitMatrix::identity(3)), std::invalid_argument);
}

}  // TEST_SUITE
