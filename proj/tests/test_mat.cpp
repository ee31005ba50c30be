#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sttglue/mat.hpp"

using namespace sttglue;

TEST_CASE("prime checks and field arithmetic") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(6));
    CHECK(fp_inv(3, 7) == 5);
    for (fp_t p : {2u, 3u, 5u, 7u})
        for (fp_t a = 1; a < p; ++a) CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
}

TEST_CASE("rref and rank over F_2") {
    Mat id = Mat::identity(2, 2);
    CHECK(rank(id) == 2);

    Mat ones = Mat::from_rows({{1, 1}, {1, 1}}, 2);
    auto kit = rref_kit(ones);
    CHECK(kit.rank == 1);
    REQUIRE(kit.kernel_basis.size() == 1);
    CHECK(kit.kernel_basis[0].at(0, 0) == 1);
    CHECK(kit.kernel_basis[0].at(1, 0) == 1);
}

TEST_CASE("solve picks the free-variables-zero solution") {
    Mat m = Mat::from_rows({{1, 1}}, 3);
    Mat b = Mat::from_rows({{1}}, 3);
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(x->at(0, 0) == 1);
    CHECK(x->at(1, 0) == 0);

    Mat m2 = Mat::from_rows({{1, 0}, {1, 0}}, 3);
    Mat b2 = Mat::from_rows({{1}, {2}}, 3);
    CHECK_FALSE(solve(m2, b2));
}

TEST_CASE("inverse round-trips on random matrices") {
    std::mt19937 rng(12345);
    for (fp_t p : {2u, 3u, 5u}) {
        std::uniform_int_distribution<fp_t> dist(0, p - 1);
        for (int trial = 0; trial < 30; ++trial) {
            Mat m(4, 4, p);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m.at(i, j) = dist(rng);
            auto inv = inverse(m);
            if (!inv) {
                CHECK(rank(m) < 4);
                continue;
            }
            CHECK(m * *inv == Mat::identity(4, p));
            CHECK(*inv * m == Mat::identity(4, p));
        }
    }
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<fp_t> dist(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        Mat m(3, 5, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j) m.at(i, j) = dist(rng);
        auto kit = rref_kit(m);
        CHECK(kit.rank + static_cast<int>(kit.kernel_basis.size()) == 5);
        CHECK(static_cast<int>(kit.image_basis.size()) == kit.rank);
        for (const auto& v : kit.kernel_basis) CHECK((m * v).is_zero());
    }
}

TEST_CASE("characteristic polynomial") {
    // (x - 1)^2 = x^2 + 1 over F_2.
    auto cp = char_poly(Mat::identity(2, 2));
    CHECK(cp == std::vector<fp_t>{1, 0, 1});
    // Nilpotent Jordan block: x^3.
    Mat nil = Mat::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, 5);
    CHECK(char_poly(nil) == std::vector<fp_t>{0, 0, 0, 1});

    // Cayley-Hamilton on random matrices.
    std::mt19937 rng(4242);
    for (fp_t p : {2u, 3u, 5u}) {
        std::uniform_int_distribution<fp_t> dist(0, p - 1);
        for (int trial = 0; trial < 20; ++trial) {
            Mat m(4, 4, p);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m.at(i, j) = dist(rng);
            auto c = char_poly(m);
            REQUIRE(c.size() == 5);
            CHECK(c[4] == 1);
            Mat acc(4, 4, p);
            Mat pw = Mat::identity(4, p);
            for (int k = 0; k <= 4; ++k) {
                acc = acc + pw.scaled(c[k]);
                pw = pw * m;
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("row space comparison is basis independent") {
    Mat a = Mat::from_rows({{1, 2, 0}, {0, 1, 1}}, 5);
    Mat b = Mat::from_rows({{1, 3, 1}, {0, 2, 2}}, 5);  // same span
    CHECK(row_space_canonical(a) == row_space_canonical(b));
    CHECK(row_space_contains(a, b));
    Mat c = Mat::from_rows({{0, 0, 1}}, 5);
    CHECK_FALSE(row_space_contains(a, c));
}
