#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halg/matrix.hpp"
#include "oracles.hpp"

using namespace halg;

namespace {

MatrixOverField from_dense(const PrimeField& F,
                           const std::vector<std::vector<std::int64_t>>& rows,
                           std::uint64_t cols) {
    std::vector<SparseRow> data;
    for (const auto& r : rows) {
        SparseRow row;
        for (std::size_t c = 0; c < r.size(); ++c) {
            FieldElement v = F.from_int(r[c]);
            if (v.value) row.emplace_back(static_cast<std::uint32_t>(c), v);
        }
        data.push_back(std::move(row));
    }
    return MatrixOverField(cols, std::move(data), F);
}

MatrixOverField random_matrix(oracle::TestRng& rng, const PrimeField& F,
                              std::uint64_t rows, std::uint64_t cols) {
    std::vector<SparseRow> data;
    for (std::uint64_t r = 0; r < rows; ++r) {
        SparseRow row;
        for (std::uint64_t c = 0; c < cols; ++c) {
            if (rng.below(3) == 0) continue;  // keep some sparsity
            FieldElement v{static_cast<std::uint32_t>(rng.below(F.modulus()))};
            if (v.value) row.emplace_back(static_cast<std::uint32_t>(c), v);
        }
        data.push_back(std::move(row));
    }
    return MatrixOverField(cols, std::move(data), F);
}

bool orthogonal(const MatrixOverField& m, const MatrixOverField& ns) {
    for (const auto& mr : m.entries) {
        for (const auto& nr : ns.entries) {
            std::uint64_t acc = 0;
            std::size_t i = 0, j = 0;
            while (i < mr.size() && j < nr.size()) {
                if (mr[i].first < nr[j].first)
                    ++i;
                else if (nr[j].first < mr[i].first)
                    ++j;
                else {
                    acc = (acc + std::uint64_t(mr[i].second.value) *
                                     nr[j].second.value) %
                          m.field.modulus();
                    ++i;
                    ++j;
                }
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("prime field validation and arithmetic") {
    CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    PrimeField F(7);
    CHECK(F.from_int(-1).value == 6);
    CHECK(F.from_int(15).value == 1);
    CHECK(F.add({3}, {5}).value == 1);
    CHECK(F.sub({3}, {5}).value == 5);
    CHECK(F.mul({3}, {5}).value == 1);
    for (std::uint32_t a = 1; a < 7; ++a)
        CHECK(F.mul({a}, F.inv({a})).value == 1);
    CHECK_THROWS_AS(F.inv({0}), std::domain_error);
    PrimeField big;  // default 2^31 - 1
    CHECK(big.modulus() == 2147483647u);
    FieldElement x{2147483646u};
    CHECK(big.mul(x, x).value == 1);  // (-1)^2
}

TEST_CASE("rank examples") {
    PrimeField F5(5), F7(7);
    CHECK(rank(MatrixOverField(0, {}, F5)) == 0);
    CHECK(rank(from_dense(F5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3)) == 3);
    CHECK(rank(from_dense(F7, {{1, 2, 3}, {2, 4, 6}}, 3)) == 1);
}

TEST_CASE("rref examples") {
    PrimeField F7(7);
    MatrixOverField r1 = rref(from_dense(F7, {{2, 4}, {1, 2}}, 2));
    CHECK(r1.rows == 1);
    CHECK(r1.at(0, 0).value == 1);
    CHECK(r1.at(0, 1).value == 2);
    MatrixOverField id = from_dense(F7, {{1, 0}, {0, 1}}, 2);
    CHECK(rref(id) == id);
    MatrixOverField r2 = rref(from_dense(F7, {{0, 1}, {1, 0}}, 2));
    CHECK(r2 == id);
}

TEST_CASE("nullspace examples") {
    PrimeField F5(5), F7(7);
    MatrixOverField n1 = nullspace(from_dense(F5, {{1, 0}}, 2));
    CHECK(n1.rows == 1);
    CHECK(n1.at(0, 0).value == 0);
    CHECK(n1.at(0, 1).value == 1);
    MatrixOverField n2 = nullspace(from_dense(F5, {{1, 2}, {3, 4}}, 2));
    CHECK(n2.rows == 0);
    MatrixOverField m = from_dense(F7, {{1, 1, 1}}, 3);
    MatrixOverField n3 = nullspace(m);
    CHECK(n3.rows == 2);
    CHECK(orthogonal(m, n3));
}

TEST_CASE("rank/rref/nullspace identities on random matrices") {
    oracle::TestRng rng(42);
    const std::vector<std::uint32_t> primes{5, 7, 101, 2147483647u};
    for (int iter = 0; iter < 200; ++iter) {
        PrimeField F(primes[iter % primes.size()]);
        std::uint64_t rows = 1 + rng.below(8), cols = 1 + rng.below(10);
        MatrixOverField m = random_matrix(rng, F, rows, cols);
        MatrixOverField r = rref(m);
        CHECK(rank(m) == r.rows);
        CHECK(rref(r) == r);
        MatrixOverField ns = nullspace(m);
        CHECK(rank(m) + ns.rows == cols);
        CHECK(orthogonal(m, ns));
        CHECK(nullspace(r) == ns);

        // invariance under row permutation and scaling
        std::vector<SparseRow> shuffled = m.entries;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        for (auto& row : shuffled) {
            FieldElement c{
                static_cast<std::uint32_t>(1 + rng.below(F.modulus() - 1))};
            for (auto& [col, v] : row) v = F.mul(v, c);
        }
        CHECK(rref(MatrixOverField(cols, std::move(shuffled), F)) == r);
    }
}

TEST_CASE("dense elimination fallback matches sparse results") {
    oracle::TestRng rng(7);
    PrimeField F(101);
    // wide, dense enough to trip the 25% fill switch
    std::vector<SparseRow> rows;
    for (int r = 0; r < 50; ++r) {
        SparseRow row;
        for (std::uint32_t c = 0; c < 70; ++c)
            row.emplace_back(c, FieldElement{static_cast<std::uint32_t>(
                                    1 + rng.below(100))});
        rows.push_back(std::move(row));
    }
    MatrixOverField m(70, rows, F);
    MatrixOverField r = rref(m);
    CHECK(rank(m) == r.rows);
    CHECK(rank(m) + nullspace(m).rows == 70);
    CHECK(rref(r) == r);
    // duplicated rows do not change the row space
    rows.insert(rows.end(), rows.begin(), rows.begin() + 10);
    CHECK(rref(MatrixOverField(70, std::move(rows), F)) == r);
}

TEST_CASE("matrix invariants are validated") {
    PrimeField F(5);
    CHECK_THROWS_AS(MatrixOverField(2, {{{0, {1}}, {0, {2}}}}, F),
                    std::invalid_argument);  // non-increasing columns
    CHECK_THROWS_AS(MatrixOverField(2, {{{1, {0}}}}, F),
                    std::invalid_argument);  // stored zero
    CHECK_THROWS_AS(MatrixOverField(2, {{{5, {1}}}}, F),
                    std::invalid_argument);  // column out of range
}
