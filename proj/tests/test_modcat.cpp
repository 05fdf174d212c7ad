#include <catch_amalgamated.hpp>

#include "antipode/families.hpp"

using namespace antipode;

namespace {

long brute_force_degree(const FusionData<CycNum>& f, const ModuleActionData& mod)
{
    const IntMatrix c = f.cartan_or_identity();
    const std::size_t n = mod.size();
    long total = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t q = 0; q < f.size(); ++q)
                        for (std::size_t r = 0; r < f.size(); ++r)
                            total += static_cast<long>(mod.action[q](j, i)) * c(q, r) * mod.action[r](k, l);
    return total;
}

std::vector<std::pair<FusionData<CycNum>, ModuleActionData>> examples()
{
    std::vector<std::pair<FusionData<CycNum>, ModuleActionData>> out;
    const auto fib = fibonacci_fusion();
    out.emplace_back(fib, regular_action(fib));
    for (int n : {2, 3, 5}) {
        const auto t = taft_family(n, 1);
        out.emplace_back(t.fusion, t.module);
    }
    for (int ell : {3, 5}) {
        const auto u = uqsl2_family(ell, 1);
        out.emplace_back(u.fusion, u.module);
    }
    const auto s3 = vecg_family(symmetric_group_3(), sign_character_s3(true), {0, 1, 2});
    out.emplace_back(s3.fusion, s3.module);
    const auto s3b = vecg_family(symmetric_group_3(), sign_character_s3(false), {0, 3});
    out.emplace_back(s3b.fusion, s3b.module);
    const auto k4 = vecg_family(klein_four(), std::vector<CycNum>(4, CycNum(cyclotomic_field(1), 1L)), {0, 1});
    out.emplace_back(k4.fusion, k4.module);
    const auto z2 = signed_z2();
    out.emplace_back(z2.fusion, z2.module);
    return out;
}

} // namespace

TEST_CASE("built-in modules verify")
{
    for (const auto& [f, mod] : examples()) {
        const auto report = verify_module(f, mod);
        INFO(report.to_string());
        CHECK(report.ok());
    }
}

TEST_CASE("Taft action is the permutation algebra of Z/n")
{
    const auto t = taft_family(4, 1);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(t.module.action[a] * t.module.action[b] == t.module.action[(a + b) % 4]);
}

TEST_CASE("corrupted modules report witnesses")
{
    const auto fib = fibonacci_fusion();
    auto mod = regular_action(fib);
    mod.action[0](0, 1) = 1;
    const auto report = verify_module(fib, mod);
    CHECK(report.failed("unit"));
    CHECK_FALSE(report.violations().empty());

    auto neg = regular_action(fib);
    neg.action[1](0, 0) = -1;
    CHECK(verify_module(fib, neg).failed("nonnegative"));

    // two copies of the trivial module of Vec_{Z/2}
    const auto z2 = vecg_family(cyclic_group(2), cyclic_character(2, 0), {0, 1});
    ModuleActionData split;
    split.labels = {"A", "B"};
    split.action = {IntMatrix::identity(2, 0, 1), IntMatrix::identity(2, 0, 1)};
    const auto r2 = verify_module(z2.fusion, split);
    CHECK(r2.failed("indecomposable"));
    CHECK_FALSE(r2.failed("action"));

    auto wrong = taft_family(3, 1);
    wrong.module.action[2] = IntMatrix::identity(3, 0, 1);
    CHECK(verify_module(wrong.fusion, wrong.module).failed("action"));

    ModuleActionData short_mod;
    short_mod.labels = {"M"};
    short_mod.action = {IntMatrix(1, 1, 1)};
    CHECK(verify_module(fib, short_mod).failed("shape"));
}

TEST_CASE("distinguished invertible object on Gr(M)")
{
    const auto t = taft_family(3, 1);
    CHECK_FALSE(d_action_triviality(t.module, 1));
    CHECK(d_action_triviality(t.module, t.fusion.unit));
    const auto z2 = signed_z2();
    CHECK(d_action_triviality(z2.module, 0));
    const auto u = uqsl2_family(3, 1);
    try {
        (void)d_action_triviality(u.module, 1);
        FAIL("expected NotInvertibleClass");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInvertibleClass);
    }
}

TEST_CASE("every module label is reached")
{
    for (const auto& [f, mod] : examples())
        for (std::size_t i = 0; i < mod.size(); ++i) {
            long column = 0;
            for (const auto& a : mod.action)
                for (std::size_t j = 0; j < mod.size(); ++j)
                    column += a(j, i);
            CHECK(column > 0);
        }
}

TEST_CASE("dimension identity matches the brute-force sum of n_ijkl")
{
    for (const auto& [f, mod] : examples())
        CHECK(dimension_identity(f, mod) == brute_force_degree(f, mod));
    CHECK(dimension_identity(taft_family(3, 1).fusion, taft_family(3, 1).module) == 81);
    CHECK(dimension_identity(uqsl2_family(5, 1).fusion, uqsl2_family(5, 1).module) == 3125);
    const auto fib = fibonacci_fusion();
    CHECK(dimension_identity(fib, regular_action(fib)) == 13);
}
