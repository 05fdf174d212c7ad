#include <catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "antipode/families.hpp"

using namespace antipode;

namespace {

CycNum num(int order, long v) { return CycNum(cyclotomic_field(order), v); }
CycNum z(int order, long k) { return CycNum::zeta_power(cyclotomic_field(order), k); }

template <class F>
ErrorKind kind_of(F&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::ParseError;
}

std::complex<double> eval_complex(const IntPoly& p, std::complex<double> x)
{
    std::complex<double> acc = 0.0;
    for (std::size_t k = p.size(); k-- > 0;)
        acc = acc * x + static_cast<double>(p[k]);
    return acc;
}

} // namespace

TEST_CASE("Chebyshev polynomials of the second kind")
{
    CHECK(chebyshev(1) == IntPoly{1});
    CHECK(chebyshev(2) == IntPoly{0, 1});
    CHECK(chebyshev(3) == IntPoly{-1, 0, 1});
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> theta(0.05, 3.1);
    for (int trial = 0; trial < 10; ++trial) {
        const double t = theta(rng);
        CHECK(std::abs(evaluate(chebyshev(5), 2.0 * std::cos(t)) * std::sin(t) - std::sin(5.0 * t)) < 1e-9);
    }
}

TEST_CASE("Taft family")
{
    const auto t = taft_family(3, 1);
    for (long v : multiplicity_table(t.fusion, t.module))
        CHECK(v == 1);
    const auto s = char_poly_s2(t.fusion, t.module, t.m);
    CHECK(s.total_degree() == 81);
    CHECK(s.distinct() == 3);
    for (int b = 0; b < 3; ++b)
        CHECK(s.multiplicity_of(z(3, b)) == 27);
    for (int n : {2, 4, 5}) {
        const auto u = taft_family(n, n - 1);
        const auto su = char_poly_s2(u.fusion, u.module, u.m);
        CHECK(su.total_degree() == ipow(n, 4));
        for (int b = 0; b < n; ++b)
            CHECK(su.multiplicity_of(z(n, b)) == ipow(n, 3));
    }
    CHECK(kind_of([] { taft_family(4, 2); }) == ErrorKind::BadParameters);
    CHECK(kind_of([] { taft_family(1, 1); }) == ErrorKind::BadParameters);
}

TEST_CASE("u_q(sl2) relation")
{
    for (int ell : {3, 5, 7}) {
        const IntPoly q = uqsl2_relation(ell);
        REQUIRE(q.size() == static_cast<std::size_t>(ell + 1));
        CHECK(q.back() == 1);
        // z^ell Q(z + 1/z) = (z^ell - 1)^2
        std::mt19937 rng(ell);
        std::uniform_real_distribution<double> coord(-1.5, 1.5);
        for (int trial = 0; trial < 10; ++trial) {
            const std::complex<double> w(coord(rng), coord(rng));
            const std::complex<double> lhs = std::pow(w, ell) * eval_complex(q, w + 1.0 / w);
            const std::complex<double> rhs = (std::pow(w, ell) - 1.0) * (std::pow(w, ell) - 1.0);
            CHECK(std::abs(lhs - rhs) < 1e-8 * (1.0 + std::abs(rhs)));
        }
        // (x - 2) prod (x - 2cos(2 pi j / ell))^2
        for (int trial = 0; trial < 5; ++trial) {
            const double x = coord(rng) * 2.0;
            double product = x - 2.0;
            for (int j = 1; j <= (ell - 1) / 2; ++j) {
                const double r = x - 2.0 * std::cos(2.0 * std::numbers::pi * j / ell);
                product *= r * r;
            }
            CHECK(std::abs(evaluate(q, x) - product) < 1e-9 * (1.0 + std::abs(product)));
        }
    }
}

TEST_CASE("u_q(sl2) dimensions and Cartan data")
{
    for (int ell : {3, 5, 7})
        for (int s = 1; s < ell; ++s) {
            if (std::gcd(s, ell) != 1)
                continue;
            const auto u = uqsl2_family(ell, s);
            const auto& d = *u.fusion.dims;
            CHECK(d[1] == u.q + u.q.inverse());
            CHECK(std::abs(d[1].to_complex() - 2.0 * std::cos(2.0 * std::numbers::pi * s / ell)) < 1e-12);
            for (int j = 1; j <= ell; ++j)
                CHECK(d[j - 1] == evaluate(chebyshev(j), d[1]));
        }
    for (int ell : {3, 5, 7, 9}) {
        const IntMatrix c = uqsl2_cartan(ell);
        long total = 0;
        for (int r = 1; r <= ell; ++r) {
            long column = 0;
            for (int q = 1; q <= ell; ++q)
                column += c(q - 1, r - 1) * q;
            CHECK(column == (r < ell ? 2 * ell : ell));
            total += column * r;
        }
        CHECK(total == ipow(ell, 3));
    }
    CHECK(kind_of([] { uqsl2_family(4, 1); }) == ErrorKind::BadParameters);
    CHECK(kind_of([] { uqsl2_family(9, 3); }) == ErrorKind::BadParameters);
}

TEST_CASE("u_q(sl2) spectrum from Grothendieck data")
{
    for (int ell : {3, 5}) {
        const auto u = uqsl2_family(ell, 1);
        for (long v : multiplicity_table(u.fusion, u.module))
            CHECK(v == ell);
        const auto s = char_poly_s2(u.fusion, u.module, u.m_factored());
        CHECK(s == u.expected);
        CHECK(s.total_degree() == ipow(ell, 5));
        // m_{j+1} + m_{j-1} = (q + q^-1) m_j
        const CycNum lambda = num(ell, 3) + z(ell, 2);
        const auto m = u.m_at(lambda);
        for (int j = 0; j < ell; ++j)
            CHECK(m[(j + 1) % ell] + m[(j + ell - 1) % ell] == (u.q + u.q.inverse()) * m[j]);
    }
}

TEST_CASE("Lambda -> 0 limit")
{
    for (int ell : {3, 5}) {
        const auto u = uqsl2_family(ell, 1);
        const auto limit = u.expected.map<CycNum>([](const FactoredValue& v) { return v.at_zero(); });
        CHECK(limit.total_degree() == ipow(ell, 5));
        CHECK(roots_of_unity_power(limit, ell) == ipow(ell, 4));
    }
}

TEST_CASE("general g: A1 specializes to u_q(sl2)")
{
    for (int ell : {3, 5, 7}) {
        const auto rs = root_system("A1");
        CHECK(uqg_multiplicity(rs, ell) == ell);
        CHECK(uqg_family_symbolic(rs, ell, 1) == uqsl2_family(ell, 1).expected);
    }
}

TEST_CASE("general g: root systems")
{
    for (const char* name : {"A1", "A2", "A3"}) {
        const auto rs = root_system(name);
        CHECK(static_cast<int>(rs.positive_roots.size()) * 2 == rs.dim_g - rs.rank);
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j)
                CHECK(rs.cartan[i][j] == rs.cartan[j][i]);
        CHECK(cartan_determinant(rs) == rs.rank + 1);
    }
    CHECK(kind_of([] { uqg_family_symbolic(root_system("A2"), 3, 1); }) == ErrorKind::BadParameters);
    CHECK(kind_of([] { uqg_family_symbolic(root_system("A4"), 5, 1); }) == ErrorKind::BadParameters);
    CHECK(kind_of([] { root_system("E8"); }) == ErrorKind::BadParameters);
}

TEST_CASE("general g: A2 torus characters")
{
    const auto rs = root_system("A2");
    const int ell = 5;
    const auto y = uqg_y_symbolic(rs, ell, 1);
    const std::vector<std::complex<double>> lam{{0.6, 0.3}, {-1.2, 0.5}};
    const std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi / ell);
    // alpha1, alpha2, alpha1 + alpha2 with Lambda_{alpha1+alpha2} = Lambda1 Lambda2
    const std::complex<double> lam_alpha[3] = {lam[0], lam[1], lam[0] * lam[1]};
    const int roots[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    const int cartan[2][2] = {{2, -1}, {-1, 2}};
    std::size_t idx = 0;
    for (int b = 0; b < ell; ++b)
        for (int a = 0; a < ell; ++a) {
            const int weight[2] = {a, b};
            std::complex<double> expected = 1.0;
            for (int r = 0; r < 3; ++r) {
                int p = 0;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        p += weight[i] * cartan[i][j] * roots[r][j];
                expected *= lam_alpha[r] * std::pow(w, p) - std::pow(w, -p);
            }
            CHECK(std::abs(y[idx].evaluate(lam) - expected) < 1e-9 * (1.0 + std::abs(expected)));
            ++idx;
        }
    CHECK(idx == y.size());
}

TEST_CASE("general g: A2 at ell = 5")
{
    const auto rs = root_system("A2");
    TorusPoint point;
    point.symbolic = false;
    point.values = {{0.37, 0.81}, {1.3, -0.4}};
    const auto numeric = uqg_family_numeric(rs, 5, 1, point);
    CHECK(numeric.total_degree() == ipow(5, 12));
    CHECK(uqg_multiplicity(rs, 5) == ipow(5, 4));
    for (const auto& f : numeric.factors())
        CHECK(f.multiplicity % ipow(5, 4) == 0);
    const auto symbolic = uqg_family_symbolic(rs, 5, 1);
    CHECK(symbolic.total_degree() == ipow(5, 12));
    // generic numeric point separates what the symbolic forms separate
    CHECK(symbolic.distinct() == numeric.distinct());
    const auto limit = symbolic.map<CycNum>([](const FactoredValue& v) { return v.at_zero(); });
    CHECK(limit.total_degree() == ipow(5, 12));
}

TEST_CASE("Vec_G families")
{
    const auto z2 = vecg_family(cyclic_group(2), cyclic_character(2, 1), {0});
    REQUIRE(z2.m);
    CHECK((*z2.m)[0] == num(2, 1));
    CHECK((*z2.m)[1] == num(2, -1));

    const auto whole = vecg_family(cyclic_group(2), cyclic_character(2, 1), {0, 1});
    CHECK_FALSE(whole.m);
    REQUIRE(whole.failure);
    CHECK(*whole.failure == ErrorKind::EmptyEigenspace);

    const auto s3 = vecg_family(symmetric_group_3(), sign_character_s3(true), {0, 1, 2});
    REQUIRE(s3.m);
    CHECK(s3.module.size() == 2);
    for (const auto& x : *s3.m)
        CHECK(x == num(1, 1));
    const auto fp = fp_module_vector(s3.module);
    for (const auto& x : fp)
        CHECK(std::abs(x.to_complex() - 1.0) < 1e-9);

    // kappa(g) on coset representatives of a cyclic group
    const auto z6 = vecg_family(cyclic_group(6), cyclic_character(6, 2), {0, 3});
    REQUIRE(z6.m);
    CHECK(z6.module.size() == 3);
    CHECK(detail::in_eigenspace(z6.fusion, z6.module, *z6.m));

    CHECK(kind_of([] { vecg_family(cyclic_group(3), std::vector<CycNum>{num(3, 1), num(3, 2), num(3, 4)}, {0}); }) ==
          ErrorKind::NotACharacter);
    CHECK(kind_of([] { vecg_family(symmetric_group_3(), sign_character_s3(true), {0, 3, 4}); }) ==
          ErrorKind::NotASubgroup);
    CHECK(kind_of([] { vecg_family(cyclic_group(4), cyclic_character(4, 0), {1, 2}); }) == ErrorKind::NotASubgroup);
}

TEST_CASE("regular module index form")
{
    const auto fib = fibonacci_fusion();
    const auto [mod, m] = regular_module(fib);
    CHECK(m == *fib.dims);
    const auto s = char_poly_s2(fib, mod, m);
    // d_j d_k / (d_i d_l) with multiplicity dim Hom(X_j X_k, X_i X_l) = sum_t N_{jk}^t N_{il}^t
    const auto& d = *fib.dims;
    std::vector<std::pair<CycNum, long>> pairs;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    long n = 0;
                    for (int t = 0; t < 2; ++t)
                        n += fib.coefficient(j, k, t) * fib.coefficient(i, l, t);
                    if (n)
                        pairs.emplace_back(d[j] * d[k] / (d[i] * d[l]), n);
                }
    CHECK(s == SpectrumFactorization<CycNum>::from_pairs(pairs));

    const auto z4 = vecg_family(cyclic_group(4), cyclic_character(4, 0), {0});
    const auto [zmod, zm] = regular_module(z4.fusion);
    const auto zs = char_poly_s2(z4.fusion, zmod, zm);
    CHECK(zs.distinct() == 1);
    CHECK(zs.multiplicity_of(num(4, 1)) == 64);

    auto bare = fibonacci_fusion();
    bare.dims.reset();
    CHECK(kind_of([&] { regular_module(bare); }) == ErrorKind::MissingDims);
}
