#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "antipode/antipode.hpp"

using namespace antipode;

namespace {

constexpr int exit_ok = 0, exit_failed = 1, exit_input = 2;

struct Options {
    double tolerance = 0;
    std::string spec = "-";
    std::string m;
    bool json = false;
    bool emit = false;
    bool run = false;
    bool matched = false;
};

std::string read_all(const std::string& path)
{
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        const auto a = cur.find_first_not_of(" \t");
        const auto b = cur.find_last_not_of(" \t");
        out.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
    }
    return out;
}

SpecDocument load(const Options& o)
{
    auto doc = parse_spec(read_all(o.spec));
    if (o.tolerance > 0)
        doc.precision = o.tolerance;
    if (!o.m.empty()) {
        auto m = split(o.m, ',');
        if (m.size() != doc.module.size())
            throw Error(ErrorKind::SchemaError, "--m has " + std::to_string(m.size()) + " entries, expected " +
                                                    std::to_string(doc.module.size()));
        doc.m_vector = std::move(m);
        doc = parse_spec(emit_spec(doc)); // re-validates the literals
        if (o.tolerance > 0)
            doc.precision = o.tolerance;
    }
    return doc;
}

std::string approx_string(std::complex<double> z)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f%+.6fi", z.real() == 0 ? 0.0 : z.real(), z.imag() == 0 ? 0.0 : z.imag());
    return buf;
}

template <class V>
void print_spectrum(const SpectrumFactorization<V>& s)
{
    for (const auto& f : s.factors()) {
        std::cout << "eigenvalue " << to_string(f.eigenvalue);
        if constexpr (!std::is_same_v<V, FactoredValue> && !std::is_same_v<V, NumericScalar>)
            std::cout << "  ~ " << approx_string(approximate(f.eigenvalue));
        std::cout << "  multiplicity " << f.multiplicity << "\n";
    }
    std::cout << "total degree " << s.total_degree() << "\n";
}

template <class V>
void output(const SpectrumFactorization<V>& s, const std::string& backend, int order, bool json)
{
    if (json)
        std::cout << spectrum_json(s, backend, order).dump(2) << "\n";
    else
        print_spectrum(s);
}

template <class D>
std::vector<D> resolve_m(const SpecDocument& doc, const FusionData<D>& f)
{
    if (doc.m_vector) {
        auto m = doc.scalars<D>(*doc.m_vector, "m_vector");
        if (!f.dims) {
            std::cerr << "note: no category dims, m taken unchecked\n";
            return m;
        }
        return select_m(f, doc.module, Eigenspace<D>{}, m);
    }
    return select_m(f, doc.module, dimension_eigenspace(f, doc.module));
}

void require_exact(const SpecDocument& doc, const std::string& what)
{
    if (doc.numeric())
        throw Error(ErrorKind::BadParameters, what + " needs the cyclotomic backend");
}

// ---------------------------------------------------------------------------

template <class D>
int verify(const SpecDocument& doc, const Options& o)
{
    const auto f = doc.fusion<D>();
    const auto fr = verify_fusion(f, f.semisimple());
    const auto mr = verify_module(f, doc.module);
    std::cout << fr.to_string() << mr.to_string();
    bool ok = fr.ok() && mr.ok();
    if (o.matched && ok) {
        if (doc.symbolic_m())
            throw Error(ErrorKind::UnsupportedSymbolic, "matched checks need a numeric or exact m");
        const auto m = resolve_m(doc, f);
        std::optional<std::vector<D>> bar;
        try {
            bar = m_bar(f, doc.module, m);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::JDependence)
                throw;
        }
        const auto r = matched_checks(f, doc.module, m, bar);
        std::cout << r.to_string();
        ok = ok && r.ok();
    }
    return ok ? exit_ok : exit_failed;
}

template <class D>
int solve_m(SpecDocument doc, const Options& o)
{
    const auto f = doc.fusion<D>();
    const auto space = dimension_eigenspace(f, doc.module);
    std::cout << "eigenspace dimension " << space.multiplicity() << "\n";
    for (std::size_t k = 0; k < space.basis.size(); ++k) {
        std::cout << "basis " << k << ":";
        for (const auto& x : space.basis[k])
            std::cout << "  " << to_string(x);
        std::cout << "\n";
    }
    if (space.multiplicity() > 1 && !doc.m_vector) {
        if (o.emit)
            select_m(f, doc.module, space); // AmbiguousM
        std::cout << "m: ambiguous, pass one with --m\n";
        return exit_ok;
    }
    const auto m = doc.m_vector ? select_m(f, doc.module, space, doc.scalars<D>(*doc.m_vector, "m_vector"))
                                : select_m(f, doc.module, space);
    if (o.emit) {
        require_exact(doc, "--emit-spec");
        doc.m_vector = literal_strings(m);
        std::cout << emit_spec(doc);
        return exit_ok;
    }
    std::cout << "m:";
    for (std::size_t i = 0; i < m.size(); ++i)
        std::cout << "  " << doc.module.labels[i] << "=" << to_string(m[i]);
    std::cout << "\n";
    return exit_ok;
}

template <class D>
int charpoly(const SpecDocument& doc, const Options& o)
{
    const auto f = doc.fusion<D>();
    const auto m = resolve_m(doc, f);
    output(char_poly_s2(f, doc.module, m), doc.mode, doc.order, o.json);
    return exit_ok;
}

int charpoly_symbolic(const SpecDocument& doc, const Options& o)
{
    require_exact(doc, "a symbolic m");
    const auto f = doc.fusion<CycNum>();
    const auto m = select_m_symbolic(f, doc.module, doc.symbolic_m_vector());
    output(char_poly_s2(f, doc.module, m), "symbolic", doc.order, o.json);
    return exit_ok;
}

template <class D>
int pivotalize(SpecDocument doc, const Options& o)
{
    if (doc.symbolic_m())
        throw Error(ErrorKind::UnsupportedSymbolic, "pivotalize needs an exact or numeric m");
    const auto f = doc.fusion<D>();
    const bool given = doc.pivotalization.has_value();
    std::optional<std::vector<D>> m;
    PivotalizationData<D> p;
    if (given) {
        p = doc.pivotal_data<D>();
    } else {
        m = resolve_m(doc, f);
        p = from_matched_pivotal(f, doc.module, *m);
    }
    if (o.emit) {
        require_exact(doc, "--emit-spec");
        doc.pivotalization = SpecDocument::Pivotal{literal_strings(p.nu), p.n_plus, p.n_minus};
        std::cout << emit_spec(doc);
        return exit_ok;
    }
    const auto s = char_poly_pivotalized(p, doc.module);
    bool agrees = true;
    if (m)
        agrees = s == signed_spectrum(char_poly_s2(f, doc.module, *m));
    if (o.json) {
        auto j = spectrum_json(s, "signed-" + doc.mode, doc.order);
        j["nu"] = literal_strings(p.nu);
        if (m)
            j["matches_charpoly"] = agrees;
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < p.nu.size(); ++i)
            std::cout << "nu " << doc.module.labels[i] << " = " << to_string(p.nu[i]) << "\n";
        long plus = 0, minus = 0;
        for (std::size_t r = 0; r < p.n_plus.size(); ++r)
            for (std::size_t j = 0; j < doc.module.size(); ++j)
                for (std::size_t i = 0; i < doc.module.size(); ++i) {
                    plus += p.n_plus[r](j, i);
                    minus += p.n_minus[r](j, i);
                }
        std::cout << "split N+ total " << plus << ", N- total " << minus << "\n";
        print_spectrum(s);
        if (m)
            std::cout << "reduction to charpoly: " << (agrees ? "ok" : "MISMATCH") << "\n";
    }
    return agrees ? exit_ok : exit_failed;
}

template <template <class> class Cmd>
int dispatch(const SpecDocument& doc, const Options& o)
{
    if (doc.numeric())
        return Cmd<NumericScalar>::run(doc, o);
    return Cmd<CycNum>::run(doc, o);
}

template <class D> struct VerifyCmd { static int run(const SpecDocument& d, const Options& o) { return verify<D>(d, o); } };
template <class D> struct SolveCmd { static int run(const SpecDocument& d, const Options& o) { return solve_m<D>(d, o); } };
template <class D> struct CharpolyCmd { static int run(const SpecDocument& d, const Options& o) { return charpoly<D>(d, o); } };
template <class D> struct PivotalCmd { static int run(const SpecDocument& d, const Options& o) { return pivotalize<D>(d, o); } };

// ---------------------------------------------------------------------------
// families

int emit_or_run(const SpecDocument& doc, const Options& o)
{
    if (!o.run) {
        std::cout << emit_spec(doc);
        return exit_ok;
    }
    if (doc.symbolic_m())
        return charpoly_symbolic(doc, o);
    return dispatch<CharpolyCmd>(doc, o);
}

std::vector<CycNum> parse_kappa(const std::string& text, int n, int order)
{
    const LiteralContext ctx{cyclotomic_field(order), 0};
    std::vector<CycNum> kappa;
    if (text.empty()) {
        kappa.assign(n, CycNum(ctx.field, 1L));
        return kappa;
    }
    for (const auto& lit : split(text, ','))
        kappa.push_back(parse_cyclotomic(lit, ctx));
    return kappa;
}

std::vector<int> parse_subgroup(const std::string& text, const GroupTable& g)
{
    std::vector<int> h{g.identity};
    for (const auto& name : split(text, ',')) {
        if (name.empty())
            continue;
        auto it = std::find(g.names.begin(), g.names.end(), name);
        if (it == g.names.end())
            throw Error(ErrorKind::NotASubgroup, "no element \"" + name + "\" in " + g.name);
        h.push_back(static_cast<int>(it - g.names.begin()));
    }
    return h;
}

std::vector<std::complex<double>> parse_point(const std::string& text)
{
    std::vector<std::complex<double>> out;
    for (const auto& part : split(text, ',')) {
        const auto pieces = split(part, ':');
        try {
            if (pieces.size() == 1)
                out.emplace_back(std::stod(pieces[0]), 0.0);
            else if (pieces.size() == 2)
                out.emplace_back(std::stod(pieces[0]), std::stod(pieces[1]));
            else
                throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "torus point entry \"" + part + "\" (expected re or re:im)");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// oracle

OracleAlgebra oracle_algebra(const std::string& kind, int n, int ell, int s, const std::string& group)
{
    if (kind == "taft")
        return taft_algebra(n, s);
    if (kind == "uqsl2")
        return uqsl2_algebra(ell, s);
    if (kind == "group")
        return group_algebra(group_by_name(group));
    throw Error(ErrorKind::BadParameters, "unknown algebra \"" + kind + "\" (taft, uqsl2, group)");
}

IntMatrix parse_matrix(const std::string& text)
{
    std::vector<std::vector<long>> rows;
    for (const auto& row : split(text, ';')) {
        rows.emplace_back();
        for (const auto& x : split(row, ',')) {
            try {
                rows.back().push_back(std::stol(x));
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "matrix entry \"" + x + "\"");
            }
        }
    }
    IntMatrix m(rows.size(), rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size())
            throw Error(ErrorKind::SchemaError, "candidate row " + std::to_string(r) + " is not square");
        for (std::size_t c = 0; c < rows.size(); ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

std::string join(const std::vector<long>& v)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? " " : "") + std::to_string(v[k]);
    return out;
}

int oracle_radical(const OracleAlgebra& o)
{
    const auto& a = o.algebra;
    std::cout << "algebra " << a.name << "\ndimension " << a.dim() << "\n";
    const auto rad = radical_via_trace_form(a);
    std::cout << "radical dimension " << rad.dim() << "\n";
    const auto ideal = ideal_check(a, rad);
    std::cout << ideal.to_string();
    std::vector<long> layers;
    for (const auto& p : radical_powers(a, rad))
        layers.push_back(static_cast<long>(p.dim()));
    std::cout << "radical powers " << join(layers) << "\n";
    const auto q = quotient_algebra(a, rad);
    const auto rad_q = radical_via_trace_form(q);
    std::cout << "quotient dimension " << q.dim() << ", radical of quotient " << rad_q.dim() << "\n";
    return ideal.ok() && rad_q.dim() == 0 ? exit_ok : exit_failed;
}

int oracle_cartan(const OracleAlgebra& o, const IntMatrix& candidate)
{
    const auto v = validate_cartan(o, candidate);
    std::cout << "algebra " << o.algebra.name << "\nradical dimension " << v.radical_dim << "\n";
    std::cout << "aggregate " << join(v.aggregate) << "\nexpected aggregate " << join(v.expected_aggregate) << "\n";
    if (!v.projective_dims.empty())
        std::cout << "projective dims " << join(v.projective_dims) << "\nexpected projective " << join(v.expected_projective)
                  << "\n";
    std::cout << (v.report.ok() ? "cartan: ok\n" : v.report.to_string());
    return v.report.ok() ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact spectra of the squared antipode from Grothendieck data"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--tolerance", o.tolerance, "numeric tolerance (default 1e-9 or the spec precision)")
        ->check(CLI::PositiveNumber);

    auto spec_input = [&](CLI::App* cmd) {
        cmd->add_option("spec", o.spec, "spec file, - for stdin")->capture_default_str();
    };

    auto* verify_cmd = app.add_subcommand("verify", "check the fusion and module data");
    spec_input(verify_cmd);
    verify_cmd->add_flag("--matched", o.matched, "also run the Q-element checks against m");
    verify_cmd->add_option("--m", o.m, "comma-separated m literals");

    auto* solve_cmd = app.add_subcommand("solve-m", "dimension eigenspace and the normalized m");
    spec_input(solve_cmd);
    solve_cmd->add_option("--m", o.m, "comma-separated m literals to check");
    solve_cmd->add_flag("--emit-spec", o.emit, "print the spec with m_vector filled in");

    auto* char_cmd = app.add_subcommand("charpoly", "factored characteristic polynomial of S^2");
    spec_input(char_cmd);
    char_cmd->add_option("--m", o.m, "comma-separated m literals");
    char_cmd->add_flag("--json", o.json, "machine-readable output");

    auto* piv_cmd = app.add_subcommand("pivotalize", "signed spectrum of the pivotalization");
    spec_input(piv_cmd);
    piv_cmd->add_option("--m", o.m, "comma-separated m literals");
    piv_cmd->add_flag("--json", o.json, "machine-readable output");
    piv_cmd->add_flag("--emit-spec", o.emit, "print the spec with a pivotalization block");

    auto* family_cmd = app.add_subcommand("family", "built-in families");
    family_cmd->require_subcommand(1);
    int n = 0, s = 1, ell = 0, order = 1;
    std::string lambda = "symbolic", group, kappa, subgroup, preset, type, point;
    bool numeric = false, limit = false;
    auto family_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--emit-spec", o.emit, "print the spec (default)");
        cmd->add_flag("--run", o.run, "compute the spectrum instead");
        cmd->add_flag("--json", o.json, "machine-readable output with --run");
    };
    auto* taft_cmd = family_cmd->add_subcommand("taft", "Taft algebra T_n, q = zeta_n^s");
    taft_cmd->add_option("--n", n)->required();
    taft_cmd->add_option("--s", s)->capture_default_str();
    family_flags(taft_cmd);
    auto* uqsl2_cmd = family_cmd->add_subcommand("uqsl2", "small quantum group u_q(sl2), odd ell");
    uqsl2_cmd->add_option("--ell", ell)->required();
    uqsl2_cmd->add_option("--s", s)->capture_default_str();
    uqsl2_cmd->add_option("--lambda", lambda, "symbolic, or a literal in Q(zeta_ell)")->capture_default_str();
    uqsl2_cmd->add_flag("--numeric", numeric, "emit a numeric-backend spec");
    family_flags(uqsl2_cmd);
    auto* uqg_cmd = family_cmd->add_subcommand("uqg", "u_q(g) for simply-laced g, closed form (runs directly)");
    uqg_cmd->add_option("--type", type, "root system, e.g. A1, A2")->required();
    uqg_cmd->add_option("--ell", ell)->required();
    uqg_cmd->add_option("--s", s)->capture_default_str();
    uqg_cmd->add_option("--point", point, "numeric torus point re[:im],... (one per simple root)");
    uqg_cmd->add_flag("--limit", limit, "exact Lambda -> 0 limit");
    uqg_cmd->add_flag("--json", o.json, "machine-readable output");
    auto* vecg_cmd = family_cmd->add_subcommand("vecg", "Vec_G with kappa acting on G/H");
    vecg_cmd->add_option("--group", group, "Z<n>, K4 or S3")->required();
    vecg_cmd->add_option("--kappa", kappa, "comma-separated character values (default trivial)");
    vecg_cmd->add_option("--order", order, "cyclotomic order of the kappa literals")->capture_default_str();
    vecg_cmd->add_option("--subgroup", subgroup, "comma-separated element names of H (identity implied)");
    family_flags(vecg_cmd);
    auto* regular_cmd = family_cmd->add_subcommand("regular", "a category acting on itself");
    regular_cmd->add_option("--preset", preset, "fibonacci, vec, or a group name; otherwise read the spec");
    spec_input(regular_cmd);
    family_flags(regular_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "explicit-algebra cross-checks");
    oracle_cmd->require_subcommand(1);
    std::string algebra = "taft", candidate, perturb;
    auto oracle_flags = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", algebra, "taft, uqsl2 or group")->capture_default_str();
        cmd->add_option("--n", n, "Taft order");
        cmd->add_option("--ell", ell, "u_q(sl2) order");
        cmd->add_option("--s", s)->capture_default_str();
        cmd->add_option("--group", group, "group for --algebra group");
    };
    auto* radical_cmd = oracle_cmd->add_subcommand("radical", "Jacobson radical via the trace form");
    oracle_flags(radical_cmd);
    auto* cartan_cmd = oracle_cmd->add_subcommand("cartan", "validate a Cartan candidate");
    oracle_flags(cartan_cmd);
    cartan_cmd->add_option("--candidate", candidate, "rows separated by ';', entries by ','; default built-in");
    cartan_cmd->add_option("--perturb", perturb, "q,r,delta added to the candidate");
    auto* s2_cmd = oracle_cmd->add_subcommand("s2", "spectrum of S^2 from an explicit antipode");
    oracle_flags(s2_cmd);
    s2_cmd->add_flag("--json", o.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*verify_cmd)
            return dispatch<VerifyCmd>(load(o), o);
        if (*solve_cmd)
            return dispatch<SolveCmd>(load(o), o);
        if (*char_cmd) {
            const auto doc = load(o);
            return doc.symbolic_m() ? charpoly_symbolic(doc, o) : dispatch<CharpolyCmd>(doc, o);
        }
        if (*piv_cmd)
            return dispatch<PivotalCmd>(load(o), o);
        if (*family_cmd) {
            if (o.emit && o.run)
                throw Error(ErrorKind::BadParameters, "--emit-spec and --run exclude each other");
            if (*taft_cmd)
                return emit_or_run(taft_spec(n, s), o);
            if (*uqsl2_cmd) {
                auto doc = lambda == "symbolic" ? uqsl2_spec(ell, s, std::nullopt, numeric)
                                                : uqsl2_spec(ell, s, lambda, numeric);
                if (o.tolerance > 0)
                    doc.precision = o.tolerance;
                return emit_or_run(doc, o);
            }
            if (*vecg_cmd) {
                const auto g = group_by_name(group);
                return emit_or_run(vecg_spec(g, parse_kappa(kappa, g.size(), order), parse_subgroup(subgroup, g)), o);
            }
            if (*regular_cmd) {
                if (preset == "fibonacci")
                    return emit_or_run(fibonacci_spec(), o);
                if (preset == "vec")
                    return emit_or_run(regular_spec(spec_from_data(trivial_fusion(), ModuleActionData{}, 1)), o);
                if (!preset.empty()) {
                    const auto g = group_by_name(preset);
                    return emit_or_run(vecg_spec(g, parse_kappa("", g.size(), 1), {g.identity}), o);
                }
                return emit_or_run(regular_spec(parse_spec(read_all(o.spec))), o);
            }
            if (*uqg_cmd) {
                const auto rs = root_system(type);
                if (!point.empty()) {
                    TorusPoint p{false, parse_point(point), o.tolerance > 0 ? o.tolerance : default_tolerance};
                    output(uqg_family_numeric(rs, ell, s, p), "numeric", ell, o.json);
                    return exit_ok;
                }
                const auto sym = uqg_family_symbolic(rs, ell, s);
                if (limit)
                    output(sym.map<CycNum>([](const FactoredValue& v) { return v.at_zero(); }), "cyclotomic", ell, o.json);
                else
                    output(sym, "symbolic", ell, o.json);
                return exit_ok;
            }
        }
        if (*oracle_cmd) {
            const auto a = oracle_algebra(algebra, n, ell, s, group);
            if (*radical_cmd)
                return oracle_radical(a);
            if (*cartan_cmd) {
                IntMatrix c;
                if (!candidate.empty())
                    c = parse_matrix(candidate);
                else if (algebra == "taft")
                    c = IntMatrix(n, n, 1);
                else if (algebra == "uqsl2")
                    c = uqsl2_cartan(ell);
                else
                    c = IntMatrix::identity(a.simples.size(), 0, 1);
                if (!perturb.empty()) {
                    const auto parts = split(perturb, ',');
                    if (parts.size() != 3)
                        throw Error(ErrorKind::ParseError, "--perturb expects q,r,delta");
                    const auto q = std::stoul(parts[0]), r = std::stoul(parts[1]);
                    if (q >= c.rows() || r >= c.cols())
                        throw Error(ErrorKind::BadParameters, "--perturb index out of range");
                    c(q, r) += std::stol(parts[2]);
                }
                return oracle_cartan(a, c);
            }
            if (*s2_cmd) {
                output(oracle_s2_spectrum(a), "cyclotomic", a.algebra.field->order(), o.json);
                return exit_ok;
            }
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
