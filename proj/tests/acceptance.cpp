// One PASS/FAIL line per acceptance criterion.  Exit status 1 when any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "antipode/families.hpp"
#include "antipode/oracle.hpp"
#include "antipode/pivotalization.hpp"

using namespace antipode;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body)
{
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.notes.push_back(std::string("threw ") + e.what());
    }
    if (!o.pass)
        ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
    for (const auto& n : o.notes)
        std::cout << "\n    " << n;
    std::cout << std::endl;
}

CycNum zeta(int order, long k) { return CycNum::zeta_power(cyclotomic_field(order), k); }

struct Example {
    std::string name;
    FusionData<CycNum> fusion;
    ModuleActionData module;
    std::vector<CycNum> m;
    bool real_dims = false;
};

Example from_vecg(const std::string& name, const VecGFamily& v, bool real)
{
    if (!v.m)
        throw Error(ErrorKind::EmptyEigenspace, name + ": " + v.failure_detail);
    return {name, v.fusion, v.module, *v.m, real};
}

// Matched built-ins with exact m.
std::vector<Example> exact_examples()
{
    std::vector<Example> out;
    for (int n : {2, 3, 5}) {
        auto t = taft_family(n, 1);
        out.push_back({"Taft n=" + std::to_string(n), t.fusion, t.module, t.m, false});
    }
    out.push_back(from_vecg("Vec Z/2 kappa(1)=-1", signed_z2(), true));
    out.push_back(from_vecg("Vec Z/3 regular", vecg_family(cyclic_group(3), cyclic_character(3, 1), {0}), false));
    out.push_back(from_vecg("Vec Z/4 on Z/4/Z/2",
                            vecg_family(cyclic_group(4), cyclic_character(4, 2), {0, 2}), true));
    out.push_back(from_vecg("Vec K4 on K4/Z2",
                            vecg_family(klein_four(), std::vector<CycNum>(4, CycNum(cyclotomic_field(1), 1L)), {0, 1}),
                            true));
    out.push_back(from_vecg("Vec S3 on S3/Z3", vecg_family(symmetric_group_3(), sign_character_s3(true), {0, 1, 2}), true));
    out.push_back(from_vecg("Vec S3 sign on S3/Z3",
                            vecg_family(symmetric_group_3(), sign_character_s3(false), {0, 1, 2}), true));
    out.push_back(from_vecg("Vec S3 on S3/Z2", vecg_family(symmetric_group_3(), sign_character_s3(true), {0, 3}), true));
    const auto fib = fibonacci_fusion();
    const auto [fmod, fdims] = regular_module(fib);
    out.push_back({"Fibonacci regular", fib, fmod, fdims, true});
    const auto triv = trivial_fusion();
    const auto [tmod, tdims] = regular_module(triv);
    out.push_back({"Vec", triv, tmod, tdims, true});
    return out;
}

// brute force over all quadruples, straight from the definitions
std::map<CycNum, long> brute_force_spectrum(const FusionData<CycNum>& f, const ModuleActionData& mod,
                                            const std::vector<CycNum>& m)
{
    const std::size_t n = mod.size();
    const IntMatrix c = f.cartan_or_identity();
    std::map<CycNum, long> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    long count = 0;
                    for (std::size_t q = 0; q < f.size(); ++q)
                        for (std::size_t r = 0; r < f.size(); ++r)
                            count += mod.action[q](j, i) * c(q, r) * mod.action[r](k, l);
                    if (count)
                        out[m[j] * m[l] / (m[i] * m[k])] += count;
                }
    return out;
}

template <class V>
std::map<V, long> as_map(const SpectrumFactorization<V>& s)
{
    std::map<V, long> out;
    for (const auto& f : s.factors())
        out[f.eigenvalue] = f.multiplicity;
    return out;
}

std::string str(long v) { return std::to_string(v); }

} // namespace

int main()
{
    report(1, "Taft n in {2,3,5}: eigenvalues q^t, each multiplicity n^3, degree n^4, exact, < 1 s", [] {
        Outcome o;
        for (int n : {2, 3, 5}) {
            const auto start = Clock::now();
            const auto t = taft_family(n, 1);
            const auto s = char_poly_s2(t.fusion, t.module, t.m);
            const double secs = seconds_since(start);
            const long cube = ipow(n, 3);
            o.require(s.distinct() == static_cast<std::size_t>(n), "n=" + str(n) + ": " + str(s.distinct()) + " distinct");
            for (int k = 0; k < n; ++k)
                o.require(s.multiplicity_of(zeta(n, k)) == cube,
                          "n=" + str(n) + ": q^" + str(k) + " has multiplicity " + str(s.multiplicity_of(zeta(n, k))));
            o.require(s.total_degree() == ipow(n, 4), "n=" + str(n) + ": degree " + str(s.total_degree()));
            o.require(secs < 1.0, "n=" + str(n) + ": took " + std::to_string(secs) + " s");
        }
        return o;
    });

    report(2, "u_q(sl2) symbolic Lambda, ell in {3,5}: spectrum equals the product formula, exponents ell, degree ell^5, < 10 s",
           [] {
               Outcome o;
               for (int ell : {3, 5}) {
                   const auto start = Clock::now();
                   const auto u = uqsl2_family(ell, 1);
                   const auto m = select_m_symbolic(u.fusion, u.module, u.m_symbolic);
                   const auto s = char_poly_s2(u.fusion, u.module, m);
                   const double secs = seconds_since(start);
                   // product formula: y_j y_k / (y_i y_l) over all (i,j,k,l), each to the power ell
                   const auto field = cyclotomic_field(ell);
                   std::map<FactoredValue, long> product;
                   for (int i = 0; i < ell; ++i)
                       for (int j = 0; j < ell; ++j)
                           for (int k = 0; k < ell; ++k)
                               for (int l = 0; l < ell; ++l) {
                                   const auto y = [&](int a) { return FactoredValue::atom(field, {1}, a); };
                                   product[y(j) * y(k) / (y(i) * y(l))] += ell;
                               }
                   o.require(as_map(s) == product, "ell=" + str(ell) + ": factored multisets differ");
                   o.require(s.total_degree() == ipow(ell, 5), "ell=" + str(ell) + ": degree " + str(s.total_degree()));
                   o.require(secs < 10.0, "ell=" + str(ell) + ": took " + std::to_string(secs) + " s");
               }
               return o;
           });

    report(3, "Lambda limits at ell=3: Lambda=1e-6 within 1e-4 of the cube roots of unity; exact limit (z^3-1)^81", [] {
        Outcome o;
        const int ell = 3;
        const auto u = uqsl2_family(ell, 1);
        const auto m = u.m_numeric({1e-6, 0.0});
        const auto s = char_poly_s2(u.fusion, u.module, m);
        std::vector<long> near(ell, 0);
        for (const auto& f : s.factors()) {
            bool found = false;
            for (int t = 0; t < ell; ++t)
                if (std::abs(f.eigenvalue.to_complex() - std::polar(1.0, 2.0 * std::numbers::pi * t / ell)) < 1e-4) {
                    near[t] += f.multiplicity;
                    found = true;
                }
            o.require(found, "eigenvalue " + to_string(f.eigenvalue) + " is not near a cube root of unity");
        }
        for (int t = 0; t < ell; ++t)
            o.require(near[t] == ipow(ell, 4), "root " + str(t) + " collects " + str(near[t]));
        o.require(s.total_degree() == ipow(ell, 5), "numeric degree " + str(s.total_degree()));
        const auto limit = u.expected.map<CycNum>([](const FactoredValue& v) { return v.at_zero(); });
        const auto power = roots_of_unity_power(limit, ell);
        o.require(power && *power == ipow(ell, 4), "exact limit is not (z^3-1)^81");
        return o;
    });

    report(4, "Q-element suite on matched built-ins (trace, rank 1, Q^2 = dim Q, normalization, Hom table)", [] {
        Outcome o;
        for (const auto& ex : exact_examples()) {
            std::optional<std::vector<CycNum>> bar;
            try {
                bar = m_bar(ex.fusion, ex.module, ex.m);
            } catch (const Error& e) {
                o.require(false, ex.name + ": " + e.what());
            }
            const auto r = matched_checks(ex.fusion, ex.module, ex.m, bar);
            for (const auto& v : r.violations())
                o.require(false, ex.name + ": " + v.check + " " + v.witness);
        }
        // u_q(sl2) at ell=3 with symbolic Lambda: Q_M depends on d and N only; m-bar needs j-independence
        const auto u = uqsl2_family(3, 1);
        const auto q = q_matrix(u.fusion, u.module.action);
        const CycNum dim = global_dimension(u.fusion);
        const CycNum tr = trace(q);
        if (!(tr == dim))
            o.require(false, "u_q(sl2) ell=3: Tr(Q_M)=" + to_string(tr) + " but dim(C)=" + to_string(dim));
        if (rank(q) != 1)
            o.require(false, "u_q(sl2) ell=3: rank(Q_M)=" + str(static_cast<long>(rank(q))));
        const auto q2 = q * q;
        bool square = true;
        for (std::size_t i = 0; i < q.rows(); ++i)
            for (std::size_t j = 0; j < q.cols(); ++j)
                square = square && q2(i, j) == dim * q(i, j);
        if (!square)
            o.require(false, "u_q(sl2) ell=3: Q_M^2 != dim(C) Q_M");
        try {
            m_bar_symbolic(u.fusion, u.module, u.m_symbolic);
        } catch (const Error& e) {
            o.require(false, "u_q(sl2) ell=3: " + std::string(e.what()));
        }
        return o;
    });

    report(5, "Fibonacci regular module: (z-1)^7 (z-phi)^2 (z-phi^-1)^2 (z-phi^2) (z-phi^-2), degree 13, brute force agrees", [] {
        Outcome o;
        const auto fib = fibonacci_fusion();
        const auto [mod, m] = regular_module(fib);
        const auto s = char_poly_s2(fib, mod, m);
        const auto brute = brute_force_spectrum(fib, mod, m);
        o.require(as_map(s) == brute, "brute-force quadruple enumeration disagrees");
        const CycNum phi = -zeta(5, 2) - zeta(5, 3);
        const CycNum one(cyclotomic_field(5), 1L);
        o.require(phi * phi == phi + one, "phi^2 != phi + 1");
        const std::map<CycNum, long> expected = {{one, 7},
                                                 {phi, 2},
                                                 {phi.inverse(), 2},
                                                 {phi * phi, 1},
                                                 {(phi * phi).inverse(), 1}};
        o.require(as_map(s) == expected, "spectrum differs from the expected factorization");
        o.require(s.total_degree() == 13, "degree " + str(s.total_degree()));
        return o;
    });

    report(6, "Pivotalization equals charPolyS2 on matched real families; Vec Z/2 with kappa(1)=-1 gives +-1, degree 4", [] {
        Outcome o;
        for (const auto& ex : exact_examples()) {
            if (!ex.real_dims)
                continue;
            const auto p = from_matched_pivotal(ex.fusion, ex.module, ex.m);
            const auto signed_s2 = signed_spectrum(char_poly_s2(ex.fusion, ex.module, ex.m));
            o.require(char_poly_pivotalized(p, ex.module) == signed_s2, ex.name + ": signed multisets differ");
        }
        // complex dimensions are refused
        bool refused = false;
        try {
            const auto t = taft_family(3, 1);
            from_matched_pivotal(t.fusion, t.module, t.m);
        } catch (const Error& e) {
            refused = e.kind() == ErrorKind::NonRealSigns;
        }
        o.require(refused, "Taft n=3 (complex dims) was not refused");

        const auto z2 = signed_z2();
        const auto p = from_matched_pivotal(z2.fusion, z2.module, *z2.m);
        const auto s = char_poly_pivotalized(p, z2.module);
        for (const auto& f : s.factors())
            o.require(f.eigenvalue.squared == CycNum(cyclotomic_field(2), 1L),
                      "Vec Z/2: eigenvalue " + to_string(f.eigenvalue) + " is not +-1");
        o.require(s.total_degree() == 4, "Vec Z/2: total degree " + str(s.total_degree()) +
                                             " (dimension identity gives " +
                                             str(dimension_identity(z2.fusion, z2.module)) + ")");
        return o;
    });

    report(7, "Oracle: radicals (Taft n=2 -> 2, u_q(sl2) ell=3 -> 13), Cartan validations, Taft S^2 = {q^b} x n", [] {
        Outcome o;
        const auto t2 = taft_algebra(2, 1);
        o.require(radical_via_trace_form(t2.algebra).dim() == 2, "Taft n=2 radical");
        const auto u = uqsl2_algebra(3, 1);
        o.require(radical_via_trace_form(u.algebra).dim() == 13, "u_q(sl2) ell=3 radical");
        for (int n : {2, 3}) {
            const auto t = taft_algebra(n, 1);
            o.require(validate_cartan(t, IntMatrix(n, n, 1)).report.ok(), "Taft n=" + str(n) + " all-ones candidate");
            auto bad = IntMatrix(n, n, 1);
            bad(n - 1, 0) = 0;
            o.require(!validate_cartan(t, bad).report.ok(), "Taft n=" + str(n) + " perturbed candidate passed");
        }
        const auto c = uqsl2_cartan(3);
        o.require(validate_cartan(u, c).report.ok(), "u_q(sl2) ell=3 candidate");
        auto bad = c;
        bad(0, 2) += 1;
        o.require(!validate_cartan(u, bad).report.ok(), "u_q(sl2) perturbed candidate passed");
        for (int n : {2, 3, 5}) {
            const auto s = oracle_s2_spectrum(taft_algebra(n, 1));
            for (int b = 0; b < n; ++b)
                o.require(s.multiplicity_of(zeta(n, b)) == n, "Taft n=" + str(n) + " S^2 multiplicity of q^" + str(b));
            o.require(s.total_degree() == n * n, "Taft n=" + str(n) + " S^2 degree");
        }
        return o;
    });

    report(8, "General g: A1 equals u_q(sl2) exactly; A2 at ell=5 numeric has degree 5^12, multiplicities 5^4, < 60 s", [] {
        Outcome o;
        for (int ell : {3, 5})
            o.require(uqg_family_symbolic(root_system("A1"), ell, 1) == uqsl2_family(ell, 1).expected,
                      "A1 differs at ell=" + str(ell));
        const auto start = Clock::now();
        TorusPoint point;
        point.symbolic = false;
        point.values = {{0.37, 0.81}, {1.3, -0.4}};
        const auto rs = root_system("A2");
        const auto s = uqg_family_numeric(rs, 5, 1, point);
        const double secs = seconds_since(start);
        o.require(uqg_multiplicity(rs, 5) == ipow(5, 4), "per-tuple multiplicity " + str(uqg_multiplicity(rs, 5)));
        o.require(s.total_degree() == ipow(5, 12), "degree " + str(s.total_degree()));
        for (const auto& f : s.factors())
            if (f.multiplicity % ipow(5, 4) != 0) {
                o.require(false, "multiplicity " + str(f.multiplicity) + " is not a multiple of 5^4");
                break;
            }
        o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
        return o;
    });

    report(9, "Invariance: m-rescaling, eigenvalue-1 multiplicity >= sum n_iikk, degree = dimension identity", [] {
        Outcome o;
        for (const auto& ex : exact_examples()) {
            const auto s = char_poly_s2(ex.fusion, ex.module, ex.m);
            const auto field = ex.m.front().field();
            const CycNum scale = CycNum(field, Rational(3, 2)) + CycNum::zeta_power(field, 1);
            auto scaled = ex.m;
            for (auto& x : scaled)
                x *= scale;
            o.require(char_poly_s2(ex.fusion, ex.module, scaled) == s, ex.name + ": rescaling changed the spectrum");
            o.require(s.multiplicity_of(one_like(ex.m.front())) >= diagonal_count(ex.fusion, ex.module),
                      ex.name + ": eigenvalue 1 below the diagonal count");
            o.require(s.total_degree() == dimension_identity(ex.fusion, ex.module), ex.name + ": degree");
        }
        for (int ell : {3, 5}) {
            const auto u = uqsl2_family(ell, 1);
            const auto m = u.m_factored();
            const auto s = char_poly_s2(u.fusion, u.module, m);
            auto scaled = m;
            const FactoredValue scale(CycNum(cyclotomic_field(ell), 7L) + CycNum::zeta_power(cyclotomic_field(ell), 1));
            for (auto& x : scaled)
                x *= scale;
            o.require(char_poly_s2(u.fusion, u.module, scaled) == s, "u_q(sl2) ell=" + str(ell) + ": rescaling");
            o.require(s.multiplicity_of(one_like(m.front())) >= diagonal_count(u.fusion, u.module),
                      "u_q(sl2) ell=" + str(ell) + ": eigenvalue 1 below the diagonal count");
            o.require(s.total_degree() == dimension_identity(u.fusion, u.module), "u_q(sl2) ell=" + str(ell) + ": degree");
        }
        return o;
    });

    std::cout << (failures ? str(failures) + " criteria failed" : std::string("all criteria passed")) << std::endl;
    return failures ? 1 : 0;
}
