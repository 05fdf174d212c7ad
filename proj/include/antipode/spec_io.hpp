#ifndef ANTIPODE_SPEC_IO_HPP
#define ANTIPODE_SPEC_IO_HPP

#include <algorithm>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "antipode/error.hpp"
#include "antipode/fusion.hpp"
#include "antipode/literal.hpp"
#include "antipode/module_action.hpp"
#include "antipode/numeric.hpp"
#include "antipode/pivotalization.hpp"
#include "antipode/spectrum.hpp"

namespace antipode {

using Json = nlohmann::ordered_json; // spec files keep their section order
using SortedJson = nlohmann::json;

namespace detail {

// e.what() without its "Kind: " prefix, for re-raising with a location
inline std::string detail_of(const Error& e)
{
    const std::string what = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

} // namespace detail

/*
 * In-memory form of a spec file.  Scalars stay as literal strings until a
 * backend is chosen; structure constants and actions are already integers.
 */
struct SpecDocument {
    std::string mode = "cyclotomic"; // or "numeric"
    int order = 1;
    double precision = default_tolerance;

    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    std::map<std::array<int, 3>, int> structure;
    std::optional<IntMatrix> cartan;
    std::optional<std::vector<std::string>> dims;

    ModuleActionData module;
    std::optional<std::vector<std::string>> m_vector;

    struct Pivotal {
        std::vector<std::string> nu;
        std::vector<IntMatrix> n_plus, n_minus;
    };
    std::optional<Pivotal> pivotalization;

    bool numeric() const { return mode == "numeric"; }

    bool symbolic_m() const
    {
        return m_vector && std::any_of(m_vector->begin(), m_vector->end(), [](const auto& s) { return mentions_torus(s); });
    }

    int torus_rank() const
    {
        int rank = 0;
        if (m_vector)
            for (const auto& s : *m_vector)
                rank = std::max(rank, torus_rank_of(s));
        return rank;
    }

    LiteralContext context() const { return {cyclotomic_field(order), torus_rank()}; }

    template <class D>
    FusionData<D> fusion() const
    {
        FusionData<D> f;
        f.labels = labels;
        f.unit = unit;
        f.dual = dual;
        f.structure = structure;
        f.cartan = cartan;
        if (dims)
            f.dims = scalars<D>(*dims, "category.dims");
        return f;
    }

    /// Literal vector in backend D (no torus parameters).
    template <class D>
    std::vector<D> scalars(const std::vector<std::string>& texts, const std::string& where) const
    {
        const LiteralContext ctx{cyclotomic_field(order), 0};
        std::vector<D> out;
        for (std::size_t k = 0; k < texts.size(); ++k) {
            CycNum v = [&] {
                try {
                    return parse_cyclotomic(texts[k], ctx);
                } catch (const Error& e) {
                    throw Error(e.kind(), where + "[" + std::to_string(k) + "]: " + detail::detail_of(e));
                }
            }();
            if constexpr (std::is_same_v<D, CycNum>)
                out.push_back(std::move(v));
            else
                out.push_back(to_numeric(v, precision));
        }
        return out;
    }

    std::vector<TorusPolynomial> symbolic_m_vector() const
    {
        const auto ctx = context();
        std::vector<TorusPolynomial> out;
        for (std::size_t k = 0; k < m_vector->size(); ++k) {
            auto v = parse_literal((*m_vector)[k], ctx);
            if (auto p = std::get_if<TorusPolynomial>(&v))
                out.push_back(std::move(*p));
            else if (std::get<FactoredValue>(v).is_constant())
                out.push_back(TorusPolynomial::constant(std::get<FactoredValue>(v).constant(), ctx.torus_rank));
            else
                throw Error(ErrorKind::UnsupportedSymbolic,
                            "m_vector[" + std::to_string(k) + "]: write symbolic entries as sums of monomials");
        }
        return out;
    }

    template <class D>
    PivotalizationData<D> pivotal_data() const
    {
        if (!pivotalization)
            throw Error(ErrorKind::SchemaError, "no pivotalization block");
        return {scalars<D>(pivotalization->nu, "pivotalization.nu"), pivotalization->n_plus, pivotalization->n_minus};
    }
};

namespace detail {

[[noreturn]] inline void schema(const std::string& path, const std::string& what)
{
    throw Error(ErrorKind::SchemaError, path + ": " + what);
}

inline const Json& field(const Json& obj, const std::string& key, const std::string& path)
{
    if (!obj.is_object())
        schema(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        schema(path, "missing \"" + key + "\"");
    return *it;
}

inline void only_keys(const Json& obj, std::initializer_list<std::string_view> keys, const std::string& path)
{
    for (const auto& [k, v] : obj.items())
        if (std::find(keys.begin(), keys.end(), k) == keys.end())
            schema(path, "unknown key \"" + k + "\"");
}

inline std::string string_at(const Json& j, const std::string& path)
{
    if (!j.is_string())
        schema(path, "expected a string (scalar values are literals, never JSON numbers)");
    return j.get<std::string>();
}

inline long integer_at(const Json& j, const std::string& path)
{
    if (!j.is_number_integer())
        schema(path, "expected an integer");
    return j.get<long>();
}

inline std::vector<std::string> strings_at(const Json& j, const std::string& path)
{
    if (!j.is_array())
        schema(path, "expected an array");
    std::vector<std::string> out;
    for (std::size_t k = 0; k < j.size(); ++k)
        out.push_back(string_at(j[k], path + "[" + std::to_string(k) + "]"));
    return out;
}

inline int label_at(const Json& j, const std::vector<std::string>& labels, const std::string& path)
{
    const auto name = string_at(j, path);
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end())
        schema(path, "undeclared label \"" + name + "\"");
    return static_cast<int>(it - labels.begin());
}

inline IntMatrix matrix_at(const Json& j, std::size_t n, const std::string& path)
{
    if (!j.is_array() || j.size() != n)
        schema(path, "expected " + std::to_string(n) + " rows");
    IntMatrix m(n, n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = path + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != n)
            schema(row, "expected " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = integer_at(j[r][c], row + "[" + std::to_string(c) + "]");
    }
    return m;
}

// one matrix per category label, keyed by label
inline std::vector<IntMatrix> action_at(const Json& j, const std::vector<std::string>& labels, std::size_t n,
                                        const std::string& path)
{
    if (!j.is_object())
        schema(path, "expected an object keyed by category labels");
    for (const auto& [k, v] : j.items())
        if (std::find(labels.begin(), labels.end(), k) == labels.end())
            schema(path, "undeclared label \"" + k + "\"");
    std::vector<IntMatrix> out;
    for (const auto& l : labels)
        out.push_back(matrix_at(field(j, l, path), n, path + "." + l));
    return out;
}

inline void unique_labels(const std::vector<std::string>& labels, const std::string& path)
{
    if (labels.empty())
        schema(path, "no labels");
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b)
            if (labels[a] == labels[b])
                schema(path, "duplicate label \"" + labels[a] + "\"");
}

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline Json matrix_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json action_json(const std::vector<IntMatrix>& action, const std::vector<std::string>& labels)
{
    Json out = Json::object();
    for (std::size_t r = 0; r < labels.size(); ++r)
        out[labels[r]] = matrix_json(action[r]);
    return out;
}

} // namespace detail

inline SpecDocument spec_from_json(const Json& root)
{
    using namespace detail;
    SpecDocument doc;
    if (!root.is_object())
        schema("$", "expected an object");
    only_keys(root, {"scalar_backend", "category", "module", "m_vector", "pivotalization"}, "$");

    if (auto it = root.find("scalar_backend"); it != root.end()) {
        const Json& b = *it;
        if (!b.is_object())
            schema("scalar_backend", "expected an object");
        only_keys(b, {"mode", "order", "precision"}, "scalar_backend");
        if (b.contains("mode")) {
            doc.mode = string_at(b["mode"], "scalar_backend.mode");
            if (doc.mode != "cyclotomic" && doc.mode != "numeric")
                schema("scalar_backend.mode", "expected \"cyclotomic\" or \"numeric\"");
        }
        if (b.contains("order")) {
            doc.order = static_cast<int>(integer_at(b["order"], "scalar_backend.order"));
            if (doc.order < 1)
                schema("scalar_backend.order", "must be positive");
        }
        if (b.contains("precision")) {
            if (!b["precision"].is_number())
                schema("scalar_backend.precision", "expected a number");
            doc.precision = b["precision"].get<double>();
            if (!(doc.precision > 0))
                schema("scalar_backend.precision", "must be positive");
        }
    }

    const Json& cat = field(root, "category", "$");
    only_keys(cat, {"labels", "unit", "dual", "fusion", "cartan", "dims"}, "category");
    doc.labels = strings_at(field(cat, "labels", "category"), "category.labels");
    unique_labels(doc.labels, "category.labels");
    const std::size_t n = doc.labels.size();
    doc.unit = label_at(field(cat, "unit", "category"), doc.labels, "category.unit");

    const Json& dual = field(cat, "dual", "category");
    if (!dual.is_object())
        schema("category.dual", "expected an object label -> dual label");
    doc.dual.assign(n, -1);
    for (const auto& [k, v] : dual.items()) {
        const int a = label_at(Json(k), doc.labels, "category.dual");
        doc.dual[a] = label_at(v, doc.labels, "category.dual." + k);
    }
    for (std::size_t a = 0; a < n; ++a)
        if (doc.dual[a] < 0)
            schema("category.dual", "no dual for \"" + doc.labels[a] + "\"");

    const Json& fusion = field(cat, "fusion", "category");
    if (!fusion.is_array())
        schema("category.fusion", "expected an array of [q, r, s, c] triples");
    for (std::size_t k = 0; k < fusion.size(); ++k) {
        const auto path = "category.fusion[" + std::to_string(k) + "]";
        const Json& t = fusion[k];
        if (!t.is_array() || t.size() != 4)
            schema(path, "expected [q, r, s, c]");
        const std::array<int, 3> key{label_at(t[0], doc.labels, path + "[0]"), label_at(t[1], doc.labels, path + "[1]"),
                                     label_at(t[2], doc.labels, path + "[2]")};
        const long c = integer_at(t[3], path + "[3]");
        if (doc.structure.count(key))
            schema(path, "repeated triple");
        if (c != 0)
            doc.structure[key] = static_cast<int>(c);
    }
    if (cat.contains("cartan"))
        doc.cartan = matrix_at(cat["cartan"], n, "category.cartan");
    if (cat.contains("dims")) {
        doc.dims = strings_at(cat["dims"], "category.dims");
        if (doc.dims->size() != n)
            schema("category.dims", "expected " + std::to_string(n) + " entries");
    }

    const Json& mod = field(root, "module", "$");
    only_keys(mod, {"labels", "action"}, "module");
    doc.module.labels = strings_at(field(mod, "labels", "module"), "module.labels");
    unique_labels(doc.module.labels, "module.labels");
    const std::size_t size = doc.module.size();
    doc.module.action = action_at(field(mod, "action", "module"), doc.labels, size, "module.action");

    if (root.contains("m_vector")) {
        doc.m_vector = strings_at(root["m_vector"], "m_vector");
        if (doc.m_vector->size() != size)
            schema("m_vector", "expected " + std::to_string(size) + " entries");
    }
    if (root.contains("pivotalization")) {
        const Json& p = root["pivotalization"];
        only_keys(p, {"nu", "n_plus", "n_minus"}, "pivotalization");
        SpecDocument::Pivotal piv;
        piv.nu = strings_at(field(p, "nu", "pivotalization"), "pivotalization.nu");
        if (piv.nu.size() != size)
            schema("pivotalization.nu", "expected " + std::to_string(size) + " entries");
        piv.n_plus = action_at(field(p, "n_plus", "pivotalization"), doc.labels, size, "pivotalization.n_plus");
        piv.n_minus = action_at(field(p, "n_minus", "pivotalization"), doc.labels, size, "pivotalization.n_minus");
        doc.pivotalization = std::move(piv);
    }

    // literals are checked eagerly so that errors name the offending entry
    const LiteralContext ctx = doc.context();
    auto check = [&](const std::vector<std::string>& texts, const std::string& path) {
        for (std::size_t k = 0; k < texts.size(); ++k)
            try {
                parse_literal(texts[k], ctx);
            } catch (const Error& e) {
                throw Error(e.kind(), path + "[" + std::to_string(k) + "]: " + detail_of(e));
            }
    };
    if (doc.dims)
        check(*doc.dims, "category.dims");
    if (doc.m_vector)
        check(*doc.m_vector, "m_vector");
    if (doc.pivotalization)
        check(doc.pivotalization->nu, "pivotalization.nu");
    return doc;
}

inline SpecDocument parse_spec(std::string_view text)
{
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string what = e.what();
        if (auto at = what.find("syntax error"); at != std::string::npos)
            what = what.substr(at);
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + " column " + std::to_string(col) + ": " + what);
    }
    return spec_from_json(root);
}

inline Json spec_to_json(const SpecDocument& doc)
{
    Json root = Json::object();
    Json backend = Json::object();
    backend["mode"] = doc.mode;
    backend["order"] = doc.order;
    backend["precision"] = doc.precision;
    root["scalar_backend"] = std::move(backend);

    Json cat = Json::object();
    cat["labels"] = doc.labels;
    cat["unit"] = doc.labels[doc.unit];
    Json dual = Json::object();
    for (std::size_t a = 0; a < doc.labels.size(); ++a)
        dual[doc.labels[a]] = doc.labels[doc.dual[a]];
    cat["dual"] = std::move(dual);
    Json fusion = Json::array();
    for (const auto& [key, c] : doc.structure)
        fusion.push_back(Json::array({doc.labels[key[0]], doc.labels[key[1]], doc.labels[key[2]], c}));
    cat["fusion"] = std::move(fusion);
    if (doc.cartan)
        cat["cartan"] = detail::matrix_json(*doc.cartan);
    if (doc.dims)
        cat["dims"] = *doc.dims;
    root["category"] = std::move(cat);

    Json mod = Json::object();
    mod["labels"] = doc.module.labels;
    mod["action"] = detail::action_json(doc.module.action, doc.labels);
    root["module"] = std::move(mod);
    if (doc.m_vector)
        root["m_vector"] = *doc.m_vector;
    if (doc.pivotalization) {
        Json p = Json::object();
        p["nu"] = doc.pivotalization->nu;
        p["n_plus"] = detail::action_json(doc.pivotalization->n_plus, doc.labels);
        p["n_minus"] = detail::action_json(doc.pivotalization->n_minus, doc.labels);
        root["pivotalization"] = std::move(p);
    }
    return root;
}

namespace detail {

// Innermost arrays on one line.  Raw newlines never occur inside JSON strings.
inline std::string collapse_arrays(const std::string& text)
{
    std::string out;
    out.reserve(text.size());
    std::size_t k = 0;
    while (k < text.size()) {
        const std::size_t open = text.find('[', k);
        if (open == std::string::npos) {
            out.append(text, k, std::string::npos);
            break;
        }
        const std::size_t next = text.find_first_of("[]{}", open + 1);
        if (next == std::string::npos || text[next] != ']') {
            out.append(text, k, open + 1 - k);
            k = open + 1;
            continue;
        }
        out.append(text, k, open + 1 - k);
        for (std::size_t i = open + 1; i < next; ++i) {
            if (text[i] == '\n') {
                while (i + 1 < next && text[i + 1] == ' ')
                    ++i;
                if (out.back() == ',')
                    out += ' ';
                continue;
            }
            out += text[i];
        }
        out += ']';
        k = next + 1;
    }
    return out;
}

} // namespace detail

inline std::string emit_spec(const SpecDocument& doc) { return detail::collapse_arrays(spec_to_json(doc).dump(2)) + "\n"; }

template <class D>
SpecDocument spec_from_data(const FusionData<D>& f, const ModuleActionData& mod, int order)
{
    SpecDocument doc;
    doc.order = order;
    doc.labels = f.labels;
    doc.unit = f.unit;
    doc.dual = f.dual;
    doc.structure = f.structure;
    doc.cartan = f.cartan;
    if (f.dims) {
        std::vector<std::string> dims;
        for (const auto& d : *f.dims)
            dims.push_back(to_string(d));
        doc.dims = std::move(dims);
    }
    doc.module = mod;
    return doc;
}

// ---------------------------------------------------------------------------
// spectrum output

namespace detail {

inline SortedJson complex_json(std::complex<double> z)
{
    // rounded so that the text is stable across platforms
    auto clean = [](double x) { return std::abs(x) < 1e-13 ? 0.0 : std::round(x * 1e12) / 1e12; };
    return SortedJson::array({clean(z.real()), clean(z.imag())});
}

inline SortedJson cyclotomic_json(const CycNum& x)
{
    SortedJson out = SortedJson::object();
    out["exact"] = x.to_string();
    SortedJson coeffs = SortedJson::array();
    for (const auto& c : x.coeffs())
        coeffs.push_back(c.get_str());
    out["coefficients"] = std::move(coeffs);
    out["approx"] = complex_json(x.to_complex());
    return out;
}

inline SortedJson value_json(const CycNum& x) { return cyclotomic_json(x); }

inline SortedJson value_json(const NumericScalar& x)
{
    SortedJson out = SortedJson::object();
    out["approx"] = complex_json(x.to_complex());
    return out;
}

inline SortedJson value_json(const FactoredValue& x)
{
    SortedJson out = SortedJson::object();
    out["factored"] = x.to_string();
    out["constant"] = cyclotomic_json(x.constant());
    SortedJson keys = SortedJson::array();
    for (const auto& [key, power] : x.factors()) {
        SortedJson k = SortedJson::object();
        k["exponent"] = key.exponent;
        k["power"] = power;
        k["root"] = key.root;
        keys.push_back(std::move(k));
    }
    out["factors"] = std::move(keys);
    return out;
}

template <class D>
SortedJson value_json(const SignedEigenvalue<D>& x)
{
    SortedJson out = SortedJson::object();
    out["approx"] = complex_json(approximate(x));
    out["sign"] = x.sign;
    out["squared"] = value_json(x.squared);
    return out;
}

} // namespace detail

/// Deterministic JSON for a spectrum; factors keep the canonical order of the factorization.
template <class V>
SortedJson spectrum_json(const SpectrumFactorization<V>& s, const std::string& backend, int order)
{
    SortedJson out = SortedJson::object();
    out["backend"] = backend;
    out["distinct"] = s.distinct();
    SortedJson factors = SortedJson::array();
    for (const auto& f : s.factors()) {
        SortedJson entry = SortedJson::object();
        entry["eigenvalue"] = detail::value_json(f.eigenvalue);
        entry["multiplicity"] = f.multiplicity;
        factors.push_back(std::move(entry));
    }
    out["factors"] = std::move(factors);
    out["field_order"] = order;
    out["total_degree"] = s.total_degree();
    return out;
}

} // namespace antipode

#endif
