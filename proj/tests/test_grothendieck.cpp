#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "antipode/families.hpp"

using namespace antipode;

namespace {

CycNum num(int order, long v) { return CycNum(cyclotomic_field(order), v); }
CycNum z(int order, long k) { return CycNum::zeta_power(cyclotomic_field(order), k); }

} // namespace

TEST_CASE("Fibonacci ring passes with strict duality")
{
    const auto f = fibonacci_fusion();
    const auto report = verify_fusion(f, true);
    INFO(report.to_string());
    CHECK(report.ok());

    // hand-written table: [q][r] -> (coefficient of 1, coefficient of tau)
    const int table[2][2][2] = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}};
    for (int q = 0; q < 2; ++q)
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s)
                CHECK(f.coefficient(q, r, s) == table[q][r][s]);
    // the 8 associativity identities (X_q X_r) X_s = X_q (X_r X_s), coefficientwise
    for (int q = 0; q < 2; ++q)
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s)
                for (int u = 0; u < 2; ++u) {
                    int lhs = 0, rhs = 0;
                    for (int t = 0; t < 2; ++t) {
                        lhs += table[q][r][t] * table[t][s][u];
                        rhs += table[r][s][t] * table[q][t][u];
                    }
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("group ring of Z/n and the u_q(sl2) ring verify")
{
    for (int n : {2, 3, 5, 6})
        CHECK(verify_fusion(taft_family(n, 1).fusion, true).ok());
    for (int ell : {3, 5, 7}) {
        const auto u = uqsl2_family(ell, 1);
        const auto report = verify_fusion(u.fusion, false);
        INFO(report.to_string());
        CHECK(report.ok());
        // composition-factor ring: X_ell X_ell contains the unit twice
        CHECK_FALSE(verify_fusion(u.fusion, true).ok());
    }
}

TEST_CASE("u_q(sl2) ring agrees with evaluation at the roots of the relation")
{
    for (int ell : {3, 5, 7}) {
        const auto u = uqsl2_family(ell, 1);
        // roots of Q are 2 and 2cos(2 pi j / ell)
        std::vector<double> roots{2.0};
        for (int j = 1; j <= (ell - 1) / 2; ++j)
            roots.push_back(2.0 * std::cos(2.0 * std::numbers::pi * j / ell));
        for (double x : roots) {
            CHECK(std::abs(evaluate(uqsl2_relation(ell), x)) < 1e-9);
            for (int a = 1; a <= ell; ++a)
                for (int b = 1; b <= ell; ++b) {
                    double rhs = 0.0;
                    for (int c = 1; c <= ell; ++c)
                        rhs += u.fusion.coefficient(a - 1, b - 1, c - 1) * evaluate(chebyshev(c), x);
                    CHECK(std::abs(evaluate(chebyshev(a), x) * evaluate(chebyshev(b), x) - rhs) < 1e-8);
                }
        }
        // X_2 X_i = X_{i+1} + X_{i-1}
        for (int i = 2; i < ell; ++i) {
            CHECK(u.fusion.coefficient(1, i - 1, i) == 1);
            CHECK(u.fusion.coefficient(1, i - 1, i - 2) == 1);
        }
        CHECK(u.fusion.coefficient(1, ell - 1, 0) == 2);
        CHECK(u.fusion.coefficient(1, ell - 1, ell - 2) == 2);
    }
}

TEST_CASE("verification reports witnesses")
{
    // X1 X1 = X0 in an otherwise Z/3 table
    auto f = taft_family(3, 1).fusion;
    f.set_coefficient(1, 1, 2, 0);
    f.set_coefficient(1, 1, 0, 1);
    const auto report = verify_fusion(f, false);
    CHECK_FALSE(report.ok());
    CHECK(report.failed("associativity"));

    auto g = fibonacci_fusion();
    g.set_coefficient(0, 1, 0, 1);
    CHECK(verify_fusion(g, false).failed("unit"));

    auto h = taft_family(3, 1).fusion;
    h.dual = {0, 1, 1};
    CHECK(verify_fusion(h, false).failed("dual"));
}

TEST_CASE("global dimension")
{
    CHECK(global_dimension(signed_z2().fusion) == num(2, 2));
    const auto fib = fibonacci_fusion();
    const CycNum phi = (*fib.dims)[1];
    CHECK(phi * phi == phi + num(5, 1));
    CHECK(global_dimension(fib) == num(5, 2) + phi);
    for (int n : {2, 3, 5})
        CHECK(global_dimension(taft_family(n, 1).fusion) == num(n, n));
    auto broken = fibonacci_fusion();
    broken.dims = std::vector<CycNum>{num(5, 1), z(4, 1)};
    CHECK_THROWS(global_dimension(broken));
    auto zero = trivial_fusion();
    zero.dims = std::vector<CycNum>{num(1, 0)};
    try {
        global_dimension(zero);
        FAIL("expected ZeroGlobalDimension");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroGlobalDimension);
    }
    auto missing = fibonacci_fusion();
    missing.dims.reset();
    CHECK_THROWS_AS(global_dimension(missing), Error);
}

TEST_CASE("global dimension is invariant under character twists")
{
    // Vec_{Z/3}: twisting kappa by any character of Z/3
    for (int t = 0; t < 3; ++t) {
        auto base = vecg_family(cyclic_group(3), cyclic_character(3, t), {0});
        for (int u = 0; u < 3; ++u) {
            auto twisted = base.fusion;
            const auto b = cyclic_character(3, u);
            for (int a = 0; a < 3; ++a)
                (*twisted.dims)[a] *= b[a];
            CHECK(global_dimension(twisted) == global_dimension(base.fusion));
        }
    }
}

TEST_CASE("Q element on Gr(M)")
{
    const auto triv = trivial_fusion();
    const auto [tmod, tm] = regular_module(triv);
    const auto q0 = q_matrix(triv, tmod.action);
    CHECK(q0.rows() == 1);
    CHECK(q0(0, 0) == global_dimension(triv));

    const auto z2 = signed_z2();
    const auto q1 = q_matrix(z2.fusion, z2.module.action);
    CHECK(q1(0, 0) == num(2, 1));
    CHECK(q1(1, 1) == num(2, 1));
    CHECK(q1(0, 1) == num(2, -1));
    CHECK(q1(1, 0) == num(2, -1));

    const auto fib = fibonacci_fusion();
    const auto [fmod, fm] = regular_module(fib);
    const auto q2 = q_matrix(fib, fmod.action);
    const CycNum phi = (*fib.dims)[1];
    const auto& ntau = fmod.action[1];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(q2(i, j) == num(5, i == j ? 1 : 0) + phi * num(5, ntau(i, j)));

    CHECK_THROWS_AS(q_matrix(fib, std::vector<IntMatrix>{IntMatrix(2, 2, 0)}), Error);
}

TEST_CASE("Q_M squares to dim(C) Q_M on matched examples")
{
    auto check = [](const auto& f, const ModuleActionData& mod) {
        const auto q = q_matrix(f, mod.action);
        const auto q2 = q * q;
        const auto dim = global_dimension(f);
        for (std::size_t i = 0; i < q.rows(); ++i)
            for (std::size_t j = 0; j < q.cols(); ++j)
                CHECK(q2(i, j) == dim * q(i, j));
    };
    const auto fib = fibonacci_fusion();
    check(fib, regular_action(fib));
    for (int n : {2, 3, 5}) {
        const auto t = taft_family(n, 1);
        check(t.fusion, t.module);
    }
    const auto s3 = vecg_family(symmetric_group_3(), sign_character_s3(true), {0, 1, 2});
    check(s3.fusion, s3.module);
    const auto z2 = signed_z2();
    check(z2.fusion, z2.module);
}

TEST_CASE("semisimple left multiplication: dual is transpose")
{
    const auto fib = fibonacci_fusion();
    const auto s3 = vecg_family(symmetric_group_3(), sign_character_s3(false), {0}).fusion;
    const auto k4 = vecg_family(klein_four(), std::vector<CycNum>(4, num(1, 1)), {0}).fusion;
    for (const auto* f : {&fib, &s3, &k4})
        for (std::size_t r = 0; r < f->size(); ++r)
            CHECK(f->left_multiplication(f->dual[r]) == f->left_multiplication(static_cast<int>(r)).transpose());
}

TEST_CASE("Frobenius-Perron dimensions")
{
    for (int n : {2, 3, 7})
        for (double d : fp_dimensions(taft_family(n, 1).fusion))
            CHECK(std::abs(d - 1.0) < 1e-9);
    const auto fib = fp_dimensions(fibonacci_fusion());
    CHECK(std::abs(fib[0] - 1.0) < 1e-9);
    CHECK(std::abs(fib[1] - (1.0 + std::sqrt(5.0)) / 2.0) < 1e-9);
    for (int ell : {3, 5}) {
        const auto fp = fp_dimensions(uqsl2_family(ell, 1).fusion);
        // character x -> 2 of Z[x]/(Q): P_j(2) = j
        for (int j = 1; j <= ell; ++j) {
            CHECK(evaluate(chebyshev(j), 2.0) == Catch::Approx(j));
            CHECK(std::abs(fp[j - 1] - j) < 1e-9);
        }
    }
}
