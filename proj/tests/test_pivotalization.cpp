#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "antipode/families.hpp"
#include "antipode/pivotalization.hpp"

using namespace antipode;

namespace {

CycNum num(int order, long v) { return CycNum(cyclotomic_field(order), v); }

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

// brute-force (sign, squared) -> multiplicity over all (r, i, j, k, l)
std::map<std::pair<int, CycNum>, long> brute_force(const PivotalizationData<CycNum>& p, std::size_t n)
{
    std::map<std::pair<int, CycNum>, long> out;
    for (std::size_t r = 0; r < p.n_plus.size(); ++r)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        const CycNum sq = p.nu[j] * p.nu[l] / (p.nu[i] * p.nu[k]);
                        const long pp = p.n_plus[r](j, i) * p.n_plus[r](k, l);
                        const long mm = p.n_minus[r](j, i) * p.n_minus[r](k, l);
                        const long pm = p.n_plus[r](j, i) * p.n_minus[r](k, l);
                        const long mp = p.n_minus[r](j, i) * p.n_plus[r](k, l);
                        if (pp + mm)
                            out[{1, sq}] += pp + mm;
                        if (pm + mp)
                            out[{-1, sq}] += pm + mp;
                    }
    return out;
}

void check_against_brute_force(const PivotalizationData<CycNum>& p, const ModuleActionData& mod)
{
    const auto s = char_poly_pivotalized(p, mod);
    const auto expected = brute_force(p, mod.size());
    REQUIRE(s.distinct() == expected.size());
    long degree = 0;
    for (const auto& [key, mult] : expected) {
        CHECK(s.multiplicity_of(SignedEigenvalue<CycNum>{key.second, key.first}) == mult);
        degree += mult;
    }
    CHECK(s.total_degree() == degree);
}

// Vec_{Z/2} on itself, with the swap split across N+ and N-
std::pair<PivotalizationData<CycNum>, ModuleActionData> hand_split()
{
    const auto z2 = signed_z2();
    PivotalizationData<CycNum> p;
    p.nu = {num(2, 1), num(2, 1)};
    p.n_plus = {IntMatrix::identity(2, 0, 1), IntMatrix(2, 2, 0)};
    p.n_minus = {IntMatrix(2, 2, 0), IntMatrix(2, 2, 0)};
    p.n_plus[1](1, 0) = 1;
    p.n_minus[1](0, 1) = 1;
    return {p, z2.module};
}

struct Matched {
    std::string name;
    FusionData<CycNum> fusion;
    ModuleActionData module;
    std::vector<CycNum> m;
};

std::vector<Matched> matched_examples()
{
    std::vector<Matched> out;
    const auto fib = fibonacci_fusion();
    const auto [fmod, fdims] = regular_module(fib);
    out.push_back({"fibonacci", fib, fmod, select_m(fib, fmod, dimension_eigenspace(fib, fmod), std::nullopt)});
    const auto z2 = signed_z2();
    out.push_back({"signed Z/2", z2.fusion, z2.module, select_m(z2.fusion, z2.module,
                                                                dimension_eigenspace(z2.fusion, z2.module),
                                                                std::nullopt)});
    const auto s3 = vecg_family(symmetric_group_3(), sign_character_s3(true), {0, 1, 2});
    out.push_back({"S3 / Z3", s3.fusion, s3.module, *s3.m});
    const auto s3b = vecg_family(symmetric_group_3(), sign_character_s3(true), {0, 3});
    out.push_back({"S3 / Z2", s3b.fusion, s3b.module, *s3b.m});
    const auto s3c = vecg_family(symmetric_group_3(), sign_character_s3(false), {0, 1, 2});
    REQUIRE(s3c.m);
    out.push_back({"S3 sign / Z3", s3c.fusion, s3c.module, *s3c.m});
    const auto k4 = vecg_family(klein_four(), std::vector<CycNum>(4, num(1, 1)), {0, 1});
    out.push_back({"K4 / Z2", k4.fusion, k4.module, *k4.m});
    const auto triv = trivial_fusion();
    const auto [tmod, tdims] = regular_module(triv);
    out.push_back({"Vec", triv, tmod, {num(1, 1)}});
    const auto z3 = vecg_family(cyclic_group(3), cyclic_character(3, 0), {0});
    out.push_back({"Vec Z/3 regular", z3.fusion, z3.module, *z3.m});
    return out;
}

} // namespace

TEST_CASE("signed eigenvalues")
{
    const SignedEigenvalue<CycNum> a{num(5, 4), -1}, b{num(5, 9), 1};
    CHECK((a * b) == SignedEigenvalue<CycNum>{num(5, 36), -1});
    CHECK(a.inverse() * a == SignedEigenvalue<CycNum>{num(5, 1), 1});
    CHECK_FALSE(a == SignedEigenvalue<CycNum>{num(5, 4), 1});
    CHECK(std::abs(approximate(a) - std::complex<double>(-2.0, 0.0)) < 1e-12);
    CHECK((b < a) != (a < b));
}

TEST_CASE("all-plus input reduces to the matched spectrum")
{
    const auto fib = fibonacci_fusion();
    const auto [mod, dims] = regular_module(fib);
    const auto m = select_m(fib, mod, dimension_eigenspace(fib, mod), std::nullopt);
    PivotalizationData<CycNum> p;
    for (const auto& x : m)
        p.nu.push_back(x * x);
    p.n_plus = mod.action;
    p.n_minus.assign(mod.action.size(), IntMatrix(mod.size(), mod.size(), 0));
    const auto s = char_poly_pivotalized(p, mod);
    CHECK(s == signed_spectrum(char_poly_s2(fib, mod, m)));
    CHECK(s.total_degree() == 13);
    check_against_brute_force(p, mod);
}

TEST_CASE("hand split of Vec Z/2")
{
    const auto [p, mod] = hand_split();
    const auto s = char_poly_pivotalized(p, mod);
    // identity: 4 plus quadruples; swap: (i,j,k,l) = (0,1,1,0),(1,0,0,1) plus, (0,1,0,1),(1,0,1,0) minus
    CHECK(s.multiplicity_of({num(2, 1), 1}) == 6);
    CHECK(s.multiplicity_of({num(2, 1), -1}) == 2);
    CHECK(s.total_degree() == 8);
    check_against_brute_force(p, mod);
}

TEST_CASE("random norms against brute force")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> value(1, 9), coin(0, 1);
    const auto k4 = vecg_family(klein_four(), std::vector<CycNum>(4, num(1, 1)), {0});
    const auto& mod = k4.module;
    for (int trial = 0; trial < 20; ++trial) {
        PivotalizationData<CycNum> p;
        for (std::size_t i = 0; i < mod.size(); ++i) {
            Rational r(value(rng), value(rng));
            r.canonicalize();
            p.nu.push_back(CycNum(cyclotomic_field(1), r));
        }
        for (const auto& a : mod.action) {
            IntMatrix plus(mod.size(), mod.size(), 0), minus(mod.size(), mod.size(), 0);
            for (std::size_t j = 0; j < mod.size(); ++j)
                for (std::size_t i = 0; i < mod.size(); ++i)
                    if (a(j, i))
                        (coin(rng) ? plus : minus)(j, i) = a(j, i);
            p.n_plus.push_back(plus);
            p.n_minus.push_back(minus);
        }
        check_against_brute_force(p, mod);
        // (lambda, n+), (-lambda, n-) pair up with the inverse values
        const auto s = char_poly_pivotalized(p, mod);
        for (const auto& f : s.factors())
            CHECK(s.multiplicity_of(f.eigenvalue.inverse()) == f.multiplicity);
        CHECK(s.total_degree() == dimension_identity(k4.fusion, mod));
    }
}

TEST_CASE("matched pivotal structures")
{
    for (const auto& ex : matched_examples()) {
        INFO(ex.name);
        const auto p = from_matched_pivotal(ex.fusion, ex.module, ex.m);
        const auto s = char_poly_pivotalized(p, ex.module);
        CHECK(s == signed_spectrum(char_poly_s2(ex.fusion, ex.module, ex.m)));
        CHECK(s.total_degree() == dimension_identity(ex.fusion, ex.module));
        bool positive = true;
        for (const auto& d : *ex.fusion.dims)
            positive = positive && *real_sign(d) > 0;
        bool split = false;
        for (const auto& minus : p.n_minus)
            for (std::size_t j = 0; j < minus.rows(); ++j)
                for (std::size_t i = 0; i < minus.cols(); ++i)
                    split = split || minus(j, i) != 0;
        if (positive)
            CHECK_FALSE(split);
    }
}

TEST_CASE("Vec Z/2 with kappa(1) = -1")
{
    const auto z2 = signed_z2();
    const auto m = select_m(z2.fusion, z2.module, dimension_eigenspace(z2.fusion, z2.module), std::nullopt);
    CHECK(m[1] == num(2, -1));
    const auto p = from_matched_pivotal(z2.fusion, z2.module, m);
    CHECK(p.nu[0] == num(2, 1));
    CHECK(p.nu[1] == num(2, 1));
    const auto s = char_poly_pivotalized(p, z2.module);
    // every (i, j, l) fixes r and k: |G|^3 quadruples
    CHECK(s.total_degree() == 8);
    for (const auto& f : s.factors())
        CHECK(f.eigenvalue.squared == num(2, 1));
}

TEST_CASE("pivotalization errors")
{
    auto [p, mod] = hand_split();
    auto bad = p;
    bad.n_minus[1](1, 0) = 1;
    CHECK(kind_of([&] { char_poly_pivotalized(bad, mod); }) == ErrorKind::SignSplitMismatch);
    auto shape = p;
    shape.n_plus.pop_back();
    CHECK(kind_of([&] { char_poly_pivotalized(shape, mod); }) == ErrorKind::SignSplitMismatch);
    auto negative = p;
    negative.nu[0] = num(2, -1);
    CHECK(kind_of([&] { char_poly_pivotalized(negative, mod); }) == ErrorKind::NonRealSigns);

    const auto t = taft_family(3, 1);
    CHECK(kind_of([&] { from_matched_pivotal(t.fusion, t.module, t.m); }) == ErrorKind::NonRealSigns);
}

TEST_CASE("numeric norms")
{
    const auto [p, mod] = hand_split();
    PivotalizationData<NumericScalar> q;
    q.n_plus = p.n_plus;
    q.n_minus = p.n_minus;
    q.nu = {NumericScalar(2.0), NumericScalar(0.5)};
    const auto s = char_poly_pivotalized(q, mod);
    CHECK(s.total_degree() == 8);
    // the mixed swap quadruples (0,1,0,1) and (1,0,1,0) carry nu ratios 1/16 and 16
    CHECK(s.multiplicity_of({NumericScalar(1.0), 1}) == 6);
    CHECK(s.multiplicity_of({NumericScalar(1.0 / 16.0), -1}) == 1);
    CHECK(s.multiplicity_of({NumericScalar(16.0), -1}) == 1);
    CHECK(s.multiplicity_of({NumericScalar(1.0), -1}) == 0);
}
