#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lclab/linalg.hpp"

using namespace lclab;
using namespace lclab::linalg;
using lclab::ff::ExtCtx;
using lclab::ff::Fp64Ctx;
using lclab::ff::Integer;
using lclab::ff::PrimeCtx;

namespace {

template <class F>
Matrix<F> random_matrix(const F& f, std::size_t n, Rng& rng) {
    Matrix<F> m(f, n, n);
    for (auto& e : m.e) e = f.sample_uniform(rng);
    return m;
}

template <class F>
Matrix<F> random_invertible_matrix(const F& f, std::size_t n, Rng& rng) {
    for (;;) {
        auto m = random_matrix(f, n, rng);
        if (is_invertible(m)) return m;
    }
}

Matrix<Fp64Ctx> from_ints(const Fp64Ctx& f, std::size_t r, std::size_t c,
                          std::initializer_list<std::uint64_t> vals) {
    Matrix<Fp64Ctx> m(f, r, c);
    std::size_t i = 0;
    for (auto v : vals) m.e[i++] = v % f.modulus();
    return m;
}

} // namespace

TEST_CASE("matrix arithmetic basics") {
    Fp64Ctx f7(7);
    auto i3 = Matrix<Fp64Ctx>::identity(f7, 3);
    CHECK(eq(*inverse(i3), i3));
    CHECK(det(from_ints(f7, 2, 2, {1, 0, 0, 2})) == 2);

    // rank-1 2x2 matrix reports Singular (no inverse value)
    auto rank1 = from_ints(f7, 2, 2, {1, 2, 2, 4});
    CHECK(!inverse(rank1).has_value());
    CHECK(det(rank1) == 0);

    CHECK_THROWS_AS(mul(i3, from_ints(f7, 2, 2, {1, 0, 0, 1})), ShapeMismatchError);
    CHECK_THROWS_AS(det(from_ints(f7, 1, 2, {1, 2})), ShapeMismatchError);

    Rng rng(17);
    // det multiplicativity on random 4x4 samples
    Fp64Ctx f101(101);
    for (int i = 0; i < 50; ++i) {
        auto a = random_matrix(f101, 4, rng), b = random_matrix(f101, 4, rng);
        CHECK(f101.eq(det(mul(a, b)), f101.mul(det(a), det(b))));
    }
    // inverse correctness
    for (int i = 0; i < 20; ++i) {
        auto a = random_invertible_matrix(f101, 4, rng);
        CHECK(eq(mul(a, *inverse(a)), Matrix<Fp64Ctx>::identity(f101, 4)));
    }
}

TEST_CASE("nullspace") {
    Fp64Ctx f3(3);
    // A = 0 (k x m) -> dimension m
    Matrix<Fp64Ctx> zero(f3, 2, 4);
    CHECK(nullspace(zero).dim() == 4);

    // A = [1 1] over F_3 -> basis {(1, 2)}; brute force over the 9 vectors
    auto a = from_ints(f3, 1, 2, {1, 1});
    auto ns = nullspace(a);
    REQUIRE(ns.dim() == 1);
    CHECK(ns.basis[0].at(0, 0) == 1);
    CHECK(ns.basis[0].at(1, 0) == 2);
    int solutions = 0;
    for (std::uint64_t x = 0; x < 3; ++x)
        for (std::uint64_t y = 0; y < 3; ++y)
            if ((x + y) % 3 == 0) ++solutions;
    CHECK(solutions == 3); // the line spanned by (1,2), as expected

    // A invertible -> dimension 0
    Rng rng(5);
    Fp64Ctx f101(101);
    auto inv4 = random_invertible_matrix(f101, 4, rng);
    CHECK(nullspace(inv4).dim() == 0);

    // A x = 0 holds exactly for every basis vector
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<Fp64Ctx> m(f101, 3, 5);
        for (auto& e : m.e) e = f101.sample_uniform(rng);
        auto space = nullspace(m);
        CHECK(space.dim() == 5 - rank(m));
        for (const auto& v : space.basis) {
            auto prod = mul(m, v);
            for (const auto& e : prod.e) CHECK(f101.is_zero(e));
        }
    }
}

TEST_CASE("centralizer bases") {
    Fp64Ctx f7(7);
    // C({I_2}) has dimension 4
    auto i2 = Matrix<Fp64Ctx>::identity(f7, 2);
    CHECK(centralizer_basis(f7, {i2}, 2).dim() == 4);
    // C(C({I})) = C(M_2) = scalars: dimension 1, and it contains the input
    auto dc_i = double_centralizer_basis(f7, {i2}, 2);
    CHECK(dc_i.dim() == 1);
    CHECK(subspace_contains(dc_i, i2));

    // C({diag(1,2)}) over F_7: the diagonal matrices, dimension 2.
    // Brute-force oracle: solve the four scalar equations over all of M_2(F_7).
    auto d12 = from_ints(f7, 2, 2, {1, 0, 0, 2});
    auto cent = centralizer_basis(f7, {d12}, 2);
    int count = 0;
    for (std::uint64_t a = 0; a < 7; ++a)
        for (std::uint64_t b = 0; b < 7; ++b)
            for (std::uint64_t c = 0; c < 7; ++c)
                for (std::uint64_t d = 0; d < 7; ++d) {
                    auto x = from_ints(f7, 2, 2, {a, b, c, d});
                    if (eq(mul(d12, x), mul(x, d12))) {
                        ++count;
                        CHECK(subspace_contains(cent, x));
                    }
                }
    CHECK(count == 49); // 7^2 = |diagonal matrices|
    CHECK(cent.dim() == 2);
    CHECK(double_centralizer_basis(f7, {d12}, 2).dim() == 2);

    // Two random matrices generating all of M_2(F_5): centralizer = scalars.
    // Brute-force oracle over the 5^4 coefficient vectors.
    Fp64Ctx f5(5);
    Rng rng(23);
    for (;;) {
        auto m1 = random_matrix(f5, 2, rng), m2 = random_matrix(f5, 2, rng);
        int commuting = 0;
        for (std::uint64_t a = 0; a < 5; ++a)
            for (std::uint64_t b = 0; b < 5; ++b)
                for (std::uint64_t c = 0; c < 5; ++c)
                    for (std::uint64_t d = 0; d < 5; ++d) {
                        auto x = from_ints(f5, 2, 2, {a, b, c, d});
                        if (eq(mul(m1, x), mul(x, m1)) && eq(mul(m2, x), mul(x, m2))) ++commuting;
                    }
        auto cb = centralizer_basis(f5, {m1, m2}, 2);
        CHECK(commuting == std::pow(5, cb.dim()));
        if (commuting == 5) { // generic pair reached: scalars only
            CHECK(cb.dim() == 1);
            break;
        }
    }
}

TEST_CASE("centralizer properties on random inputs") {
    Fp64Ctx f101(101);
    Rng rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Matrix<Fp64Ctx>> mats;
        for (int i = 0; i < 2; ++i) mats.push_back(random_matrix(f101, 3, rng));
        auto cent = centralizer_basis(f101, mats, 3);
        // every basis element commutes with every input (exact)
        for (const auto& b : cent.basis)
            for (const auto& m : mats) CHECK(eq(mul(b, m), mul(m, b)));
        // C(S) = C(span S): adjoining a random combination changes nothing
        auto comb = Matrix<Fp64Ctx>(f101, 3, 3);
        for (const auto& m : mats) {
            auto coef = f101.sample_uniform(rng);
            for (std::size_t i = 0; i < comb.e.size(); ++i)
                comb.e[i] = f101.add(comb.e[i], f101.mul(coef, m.e[i]));
        }
        auto mats2 = mats;
        mats2.push_back(comb);
        auto cent2 = centralizer_basis(f101, mats2, 3);
        CHECK(cent.dim() == cent2.dim());
        for (std::size_t i = 0; i < cent.dim(); ++i) CHECK(eq(cent.basis[i], cent2.basis[i]));
        // S is contained in C(C(S))
        auto dc = double_centralizer_basis(f101, mats, 3);
        for (const auto& m : mats) CHECK(subspace_contains(dc, m));
    }
}

TEST_CASE("conjugacy systems") {
    Fp64Ctx f101(101);
    Rng rng(47);
    auto g = random_matrix(f101, 3, rng);
    // pairs {(g, g)} with no constraint = C(g)
    auto sol = solve_conjugacy_system(f101, {{g, g}}, 3);
    auto cent = centralizer_basis(f101, {g}, 3);
    CHECK(sol.dim() == cent.dim());
    for (std::size_t i = 0; i < sol.dim(); ++i) CHECK(eq(sol.basis[i], cent.basis[i]));

    // pairs {(I, 2I)} -> dimension 0
    auto i3 = Matrix<Fp64Ctx>::identity(f101, 3);
    auto two_i = scalar_mul<Fp64Ctx>(2, i3);
    CHECK(solve_conjugacy_system(f101, {{i3, two_i}}, 3).dim() == 0);

    // honest conjugacy: solution space contains the secret, and a constrained
    // solve returns a subspace of the constraint with all equations exact
    for (int trial = 0; trial < 6; ++trial) {
        auto x = random_invertible_matrix(f101, 3, rng);
        auto xi = *inverse(x);
        std::vector<std::pair<Matrix<Fp64Ctx>, Matrix<Fp64Ctx>>> pairs;
        std::vector<Matrix<Fp64Ctx>> gs;
        for (int i = 0; i < 2; ++i) {
            auto gi = random_matrix(f101, 3, rng);
            gs.push_back(gi);
            pairs.push_back({gi, mul(mul(xi, gi), x)});
        }
        auto space = solve_conjugacy_system(f101, pairs, 3);
        CHECK(subspace_contains(space, x));
        for (const auto& b : space.basis)
            for (const auto& [gi, hi] : pairs) CHECK(eq(mul(gi, b), mul(b, hi)));

        auto constraint = double_centralizer_basis(f101, gs, 3);
        auto constrained = solve_conjugacy_system(f101, pairs, 3, &constraint);
        for (const auto& b : constrained.basis) {
            CHECK(subspace_contains(constraint, b));
            for (const auto& [gi, hi] : pairs) CHECK(eq(mul(gi, b), mul(b, hi)));
        }
    }
}

TEST_CASE("random invertible sampling") {
    Fp64Ctx f101(101);
    Rng rng(3);
    SampleConfig cfg{64, Integer(101)};

    // span{I_n}: any nonzero draw works, result is alpha * I
    auto i3 = Matrix<Fp64Ctx>::identity(f101, 3);
    auto scalars = make_subspace(f101, 3, 3, {i3});
    auto draw = random_invertible_in(scalars, cfg, rng);
    CHECK(draw.coeffs.size() == 1);
    CHECK(eq(draw.matrix, scalar_mul(draw.coeffs[0], i3)));
    CHECK(is_invertible(draw.matrix));

    // span{E11, E12}: every element has a zero second row
    Matrix<Fp64Ctx> e11(f101, 2, 2), e12(f101, 2, 2);
    e11.at(0, 0) = 1;
    e12.at(0, 1) = 1;
    auto degenerate = make_subspace(f101, 2, 2, {e11, e12});
    CHECK_THROWS_AS(random_invertible_in(degenerate, SampleConfig{16, Integer(101)}, rng),
                    NoInvertibleFoundError);

    // span{E11, E22} in M_2(F_q), |S| = q: per-draw success rate >= 1 - 2/q
    Matrix<Fp64Ctx> e22(f101, 2, 2);
    e22.at(1, 1) = 1;
    auto diag = make_subspace(f101, 2, 2, {e11, e22});
    const int trials = 4000;
    int singular = 0;
    for (int i = 0; i < trials; ++i) {
        auto coeffs = linalg::detail::draw_coeffs(f101, diag.dim(), cfg.sample_set_size, rng);
        auto m = linalg::detail::combine(f101, diag.basis, coeffs, 2, 2);
        if (!is_invertible(m)) ++singular;
    }
    const double rate = static_cast<double>(singular) / trials;
    const double bound = 2.0 / 101;
    const double sigma = std::sqrt(bound * (1 - bound) / trials);
    CHECK(rate <= bound + 5 * sigma);

    // sample set must exceed n
    CHECK_THROWS_AS(random_invertible_in(scalars, SampleConfig{4, Integer(2)}, rng), Error);
}

TEST_CASE("coupled pair systems") {
    Fp64Ctx f101(101);
    Rng rng(71);
    const std::size_t n = 3;
    // construct u = a1 * g * a2 with known secrets, constraints from commuting sets
    auto g = random_invertible_matrix(f101, n, rng);
    auto a1 = random_invertible_matrix(f101, n, rng);
    auto a2 = random_invertible_matrix(f101, n, rng);
    auto u = mul(mul(a1, g), a2);
    auto v1 = centralizer_basis(f101, {a1}, n);  // contains a1
    auto v2 = centralizer_basis(f101, {a2}, n);  // contains a2 (and its inverse)
    // solve x * g = u * y over v1 x v2; (a1, a2^{-1}) is a solution
    auto pairs = solve_coupled_system(f101, g, u, v1, v2, n);
    CHECK(pairs.dim() >= 1);
    bool found_honest = false;
    for (int t = 0; t < 8; ++t) {
        auto draw = random_pair_with_invertible(pairs, 1, SampleConfig{64, Integer(101)}, rng);
        CHECK(eq(mul(draw.x, g), mul(u, draw.y)));
        found_honest = true;
    }
    CHECK(found_honest);
}

TEST_CASE("linalg over the extension field backend") {
    ExtCtx f9(PrimeCtx::make_unchecked(3), {Integer(1), Integer(0), Integer(1)});
    Rng rng(13);
    auto a = random_invertible_matrix(f9, 3, rng);
    CHECK(eq(mul(a, *inverse(a)), Matrix<ExtCtx>::identity(f9, 3)));
    auto b = random_matrix(f9, 3, rng);
    CHECK(f9.eq(det(mul(a, b)), f9.mul(det(a), det(b))));
    auto cent = centralizer_basis(f9, {b}, 3);
    for (const auto& c : cent.basis) CHECK(eq(mul(c, b), mul(b, c)));
    CHECK(cent.dim() >= 1);

    // matrix JSON round trip
    auto j = matrix_to_json(a);
    CHECK(eq(matrix_from_json(f9, j), a));
    auto sj = subspace_to_json(cent);
    auto back = subspace_from_json(f9, sj);
    CHECK(back.dim() == cent.dim());
    for (std::size_t i = 0; i < back.dim(); ++i) CHECK(eq(back.basis[i], cent.basis[i]));
}
