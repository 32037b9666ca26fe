#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cterm/cterm.hpp"
#include "corealg/qfuncs.hpp"
#include "macdonald/scalar_product.hpp"
#include "macdonald/symfunc.hpp"

using namespace qw;

TEST_CASE("delta expansion") {
    // one variable: empty product
    CHECK(expand_delta_t0(1, 0, 1, 4) == TruncSeries::one(1, 4));

    // two variables at order 0: (1 - x1/x2)(1 - x2/x1)
    TruncSeries d0 = expand_delta_t0(2, 0, 2, 0);
    TruncSeries expect(2, 0);
    expect.add_term({0, 0}, QLaurent(2));
    expect.add_term({1, -1}, -QLaurent::one());
    expect.add_term({-1, 1}, -QLaurent::one());
    CHECK(d0 == expect);

    // naive oracle: multiply every factor with n <= N as exact polynomials and
    // truncate once at the end
    long N = 2;
    TruncSeries naive = TruncSeries::one(2, 10);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (i == j) continue;
            for (long n = 0; n <= N; ++n) {
                TruncSeries f = TruncSeries::one(2, 10);
                TruncSeries::Exp e{0, 0};
                e[i] = 1;
                e[j] = -1;
                f.add_term(e, -QLaurent::q_power(n));
                naive *= f;
            }
        }
    TruncSeries got = expand_delta_t0(2, 0, 2, N);
    // compare mod q^{N+1}
    TruncSeries naive_cut(2, N), got_cut(2, N);
    for (const auto& [e, c] : naive.terms()) naive_cut.add_term(e, c);
    for (const auto& [e, c] : got.terms()) got_cut.add_term(e, c);
    CHECK(naive_cut == got_cut);
}

TEST_CASE("kernel factor coefficients") {
    // coefficient of u^m is 1/(q)_m as a series
    TruncSeries f = kernel_factor(2, 0, 1, 6, 3);
    QLaurent u0 = f.terms().at({0, 0});
    CHECK(u0 == QLaurent::one());
    QLaurent u1 = f.terms().at({1, -1});
    CHECK(u1 == q_factorial(1).series_inverse(12));
    QLaurent u2 = f.terms().at({2, -2});
    CHECK(u2 == q_factorial(2).series_inverse(12));
    // and 1/(1-q) = 1 + q + q^2 + ...
    for (long e = 0; e <= 6; ++e) CHECK(u1.coeff(2 * e) == 1);

    // gamma_q of a plain monomial matches the kernel factor
    TruncSeries g = gamma_q_truncated(2, {1, -1}, 6, 3);
    CHECK(g == f);
    // Gamma_q(0): mcap 0 keeps only the constant 1
    CHECK(gamma_q_truncated(1, {0}, 4, 0) == TruncSeries::one(1, 4));
}

TEST_CASE("constant term extraction") {
    TruncSeries s(2, 4);
    s.add_term({0, 0}, QLaurent::one());
    s.add_term({1, -1}, QLaurent::q_power(1));
    s.add_term({0, 2}, QLaurent(3));
    TruncSeries ct = constant_term(s, 1, 1);
    TruncSeries expect(2, 4);
    expect.add_term({0, 0}, QLaurent::one());
    expect.add_term({1, 0}, QLaurent());  // dropped automatically (zero)
    CHECK(ct.terms().size() == 1);
    CHECK(ct.terms().count({0, 0}) == 1);

    // linearity over sums and commuting with y-free multiplication
    TruncSeries yfree(2, 4);
    yfree.add_term({2, 0}, QLaurent::q_power(1));
    CHECK(constant_term(s * yfree, 1, 1) == constant_term(s, 1, 1) * yfree);
}

TEST_CASE("primed scalar product of constants by constant term") {
    // <1,1>'_{q,0} in two variables equals prod_{m>=1} 1/(1-q^m) mod q^{N+1}
    long N = 8;
    QLaurent got = scalar_product_prime_t0(LaurentPoly::one(2), LaurentPoly::one(2), N);
    // build prod 1/(1-q^m) as a series
    QLaurent prod = QLaurent::one();
    for (long m = 1; m <= N; ++m) {
        QLaurent inv = (QLaurent::one() - QLaurent::q_power(m)).series_inverse(2 * N);
        prod = (prod * inv).truncate_above(2 * N);
    }
    CHECK(got == prod);
}

TEST_CASE("t=0 recursion: rank one to two") {
    // l = 1, lambda = (m): (m)_q! CT_y[ prod_i sum x_i^a y^{-a}/(q)_a * y^m ] =
    // sum_m binom x1^a x2^{m-a} = P_{(m,0)}(x;q,0)
    for (long m = 0; m <= 4; ++m) CHECK(verify_t0_recursion(Partition({m}).trimmed(), 1, 8));
}

TEST_CASE("t=0 recursion: rank two to three") {
    CHECK(verify_t0_recursion(Partition({2, 1}), 2, 8));
    CHECK(verify_t0_recursion(Partition({3, 1}), 2, 8));
}

TEST_CASE("budget enlargement does not change the answer") {
    CHECK(verify_t0_recursion(Partition({2, 1}), 2, 6, /*budget_extra=*/2));
    CHECK(verify_t0_recursion(Partition({2}), 1, 8, /*budget_extra=*/2));
}

TEST_CASE("truncation soundness: conclusions stable from N to N+4") {
    for (long N : {5L, 9L}) CHECK(verify_t0_recursion(Partition({2, 1}), 2, N));
}

TEST_CASE("norm formulas") {
    // t=0: <P,P> = prod (l_i - l_{i+1})_q! * (l_last)_q!
    auto [prime0, plain0] = norm_formulas(Partition({}), 1, SpecPoint::t_zero(), 8);
    CHECK(plain0 == Scalar::one());
    auto [prime1, plain1] = norm_formulas(Partition({1}), 1, SpecPoint::t_zero(), 8);
    CHECK(plain1 == Scalar(QLaurent::one() - QLaurent::q_power(1)));
    auto [prime21, plain21] = norm_formulas(Partition({2, 1}), 2, SpecPoint::t_zero(), 8);
    CHECK(plain21 == Scalar(q_factorial(1) * q_factorial(1)));

    // the primed norm at t=0 for lambda=0 matches the constant-term value
    long N = 8;
    QLaurent viact = scalar_product_prime_t0(LaurentPoly::one(2), LaurentPoly::one(2), N);
    auto [prime00, plain00] = norm_formulas(Partition({0, 0}), 2, SpecPoint::t_zero(), N);
    CHECK(prime00.q_series(2 * N) == viact);

    // numeric: closed form equals the combinatorial scalar product
    SpecPoint sp = SpecPoint::numeric(Rat(1, 3), Rat(1, 5));
    auto& table = MacdonaldTable::shared(sp);
    for (long d = 1; d <= 4; ++d)
        for (const auto& lam : partitions_of(d, 3)) {
            LaurentPoly P = table.polynomial(lam, static_cast<int>(d));
            auto [np, nn] = norm_formulas(lam, 3, sp, 4);
            CHECK(scalar_product_qt(P, P, sp) == nn);
        }
}
