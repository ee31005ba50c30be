#include <catch2/catch_amalgamated.hpp>

#include "sttglue/findim.hpp"

using namespace sttglue;

namespace {

FinDimAlgebra field(fp_t p) {
    return FinDimAlgebra({"1"}, {{{1}}}, {1}, p);
}

// k[x]/(x^2): basis {1, x}.
FinDimAlgebra dual_numbers(fp_t p) {
    return FinDimAlgebra({"1", "x"},
                         {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}},
                         {1, 0}, p);
}

}  // namespace

TEST_CASE("law checking rejects bad tables") {
    // Non-associative: x*x = 1 but unit laws force contradictions.
    CHECK_THROWS(FinDimAlgebra({"1", "x"},
                               {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}},
                               {0, 1}, 2));  // wrong unit
}

TEST_CASE("invariants of base cases") {
    for (fp_t p : {2u, 3u, 5u}) {
        CHECK(field(p).invariants() == AlgebraInvariants{1, 0, 1});
        CHECK(dual_numbers(p).invariants() == AlgebraInvariants{2, 1, 1});
    }
}

TEST_CASE("path algebra of 1 <- 2 has radical dim 1 and two simples") {
    for (fp_t p : {2u, 3u}) {
        auto a2 = make_path_algebra(Quiver({"1", "2"}, {{"a", 1, 0}}), p);
        auto alg = path_algebra_as_findim(*a2);
        CHECK(alg.invariants() == AlgebraInvariants{3, 1, 2});
    }
}

TEST_CASE("path algebra of 3 -> 1 -> 2 as an abstract algebra") {
    auto a3 = make_path_algebra(Quiver({"1", "2", "3"}, {{"a", 0, 1}, {"b", 2, 0}}), 2);
    auto alg = path_algebra_as_findim(*a3);
    CHECK(alg.invariants() == AlgebraInvariants{6, 3, 3});
}

TEST_CASE("quotient by an idempotent ideal") {
    auto a2 = make_path_algebra(Quiver({"1", "2"}, {{"a", 1, 0}}), 2);
    auto alg = path_algebra_as_findim(*a2);
    // e = e_1: the ideal AeA contains e_1 and a, quotient is k at vertex 2.
    std::vector<fp_t> e1 = {1, 0, 0};
    auto q = alg.quotient_by_idempotent_ideal(e1);
    CHECK(q.invariants() == AlgebraInvariants{1, 0, 1});
    // e = 1: quotient is zero.
    auto z = alg.quotient_by_idempotent_ideal(alg.unit());
    CHECK(z.dim() == 0);
    // e = 0: quotient is the whole algebra.
    auto w = alg.quotient_by_idempotent_ideal({0, 0, 0});
    CHECK(w.invariants() == alg.invariants());
}

TEST_CASE("matrix algebra M_2(F_2) is simple with zero radical") {
    // Basis e11, e12, e21, e22.
    auto e = [](int i, int j) { return 2 * i + j; };
    std::vector<std::vector<std::vector<fp_t>>> sc(
        4, std::vector<std::vector<fp_t>>(4, std::vector<fp_t>(4, 0)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) sc[e(i, j)][e(k, l)][e(i, l)] = 1;
    FinDimAlgebra m2({"e11", "e12", "e21", "e22"}, std::move(sc), {1, 0, 0, 1}, 2);
    CHECK(m2.invariants() == AlgebraInvariants{4, 0, 1});
}
