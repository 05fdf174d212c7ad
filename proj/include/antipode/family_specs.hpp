#ifndef ANTIPODE_FAMILY_SPECS_HPP
#define ANTIPODE_FAMILY_SPECS_HPP

#include <optional>
#include <string>
#include <vector>

#include "antipode/families.hpp"
#include "antipode/spec_io.hpp"

namespace antipode {

template <class D>
std::vector<std::string> literal_strings(const std::vector<D>& values)
{
    std::vector<std::string> out;
    for (const auto& v : values)
        out.push_back(to_string(v));
    return out;
}

inline SpecDocument taft_spec(int n, int s)
{
    const auto t = taft_family(n, s);
    auto doc = spec_from_data(t.fusion, t.module, n);
    doc.m_vector = literal_strings(t.m);
    return doc;
}

/// lambda: nullopt keeps the torus parameter; otherwise a literal in Q(zeta_ell).
inline SpecDocument uqsl2_spec(int ell, int s, const std::optional<std::string>& lambda, bool numeric = false)
{
    const auto u = uqsl2_family(ell, s);
    auto doc = spec_from_data(u.fusion, u.module, ell);
    if (numeric)
        doc.mode = "numeric";
    if (!lambda) {
        if (numeric)
            throw Error(ErrorKind::UnsupportedSymbolic, "a numeric spec needs a value for lambda");
        doc.m_vector = literal_strings(u.m_symbolic);
    } else {
        const CycNum value = parse_cyclotomic(*lambda, LiteralContext{cyclotomic_field(ell), 0});
        doc.m_vector = literal_strings(u.m_at(value));
    }
    return doc;
}

inline SpecDocument vecg_spec(const GroupTable& g, const std::vector<CycNum>& kappa, const std::vector<int>& subgroup)
{
    const auto v = vecg_family(g, kappa, subgroup);
    auto doc = spec_from_data(v.fusion, v.module, kappa.front().order());
    if (v.m)
        doc.m_vector = literal_strings(*v.m);
    return doc;
}

/// The category of `doc` acting on itself, m = dims.
inline SpecDocument regular_spec(const SpecDocument& category)
{
    if (!category.dims)
        throw Error(ErrorKind::MissingDims, "the regular module needs category dims");
    SpecDocument doc = category;
    doc.module = regular_action(category.fusion<CycNum>());
    doc.m_vector = category.dims;
    doc.pivotalization.reset();
    return doc;
}

inline SpecDocument fibonacci_spec() { return regular_spec(spec_from_data(fibonacci_fusion(), ModuleActionData{}, 5)); }

inline GroupTable group_by_name(const std::string& name)
{
    if (name == "K4")
        return klein_four();
    if (name == "S3")
        return symmetric_group_3();
    if (name.size() > 1 && name[0] == 'Z') {
        int n = 0;
        try {
            n = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            n = 0;
        }
        if (n >= 1)
            return cyclic_group(n);
    }
    throw Error(ErrorKind::BadParameters, "unknown group \"" + name + "\" (Z<n>, K4, S3)");
}

} // namespace antipode

#endif
