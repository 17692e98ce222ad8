#pragma once

// JSON rendering for certificates, spectra, bound reports, search results,
// property runs, and run manifests. Floats are rounded to 12 significant
// digits before serialization; exact rationals render as "p/q" strings.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmspec/common.hpp"
#include "pmspec/constructions.hpp"
#include "pmspec/graph_factory.hpp"
#include "pmspec/latin.hpp"
#include "pmspec/property_lab.hpp"
#include "pmspec/search.hpp"
#include "pmspec/spectra.hpp"
#include "pmspec/srg_bounds.hpp"

namespace pmspec {

using json = nlohmann::json;

inline double round12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

inline json bound_value_json(const BoundReport& r) {
    if (r.exact) return r.value_rational.str();
    return round12(r.value);
}

inline json to_json(const Spectrum& sp) {
    json j;
    j["order"] = sp.order();
    j["tolerance"] = sp.tolerance;
    json ev = json::array();
    for (double v : sp.values) ev.push_back(round12(v));
    j["eigenvalues"] = ev;
    std::vector<double> sv = sp.values;
    for (double& v : sv) v = std::abs(v);
    std::stable_sort(sv.begin(), sv.end(), std::greater<double>());
    json svj = json::array();
    for (double v : sv) svj.push_back(round12(v));
    j["singular_values"] = svj;
    json kf = json::object();
    double acc = 0;
    for (std::size_t k = 0; k < sv.size(); ++k) {
        acc += sv[k];
        kf[std::to_string(k + 1)] = round12(acc);
    }
    j["ky_fan"] = kf;
    return j;
}

inline json to_json(const SkCertificate& c) {
    json j;
    j["k"] = c.k;
    j["order"] = c.order;
    j["verdict"] = verdict_name(c.verdict);
    j["inertia"] = {{"plus", c.inertia.plus}, {"zero", c.inertia.zero}, {"minus", c.inertia.minus}};
    json checks = json::array();
    for (const auto& ch : c.checks)
        checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
    j["checks"] = checks;
    return j;
}

inline json to_json(const ConstructionRecipe& r) {
    return {{"family", family_name(r.family)},
            {"s", r.s},
            {"n", r.n},
            {"hadamard_source", r.hadamard_source},
            {"latin_source", r.latin_source}};
}

inline json to_json(const Construction& c) {
    json j;
    j["recipe"] = to_json(c.recipe);
    j["certificate"] = to_json(c.certificate);
    j["expected_inertia"] = {{"plus", c.expected_inertia.plus},
                             {"zero", c.expected_inertia.zero},
                             {"minus", c.expected_inertia.minus}};
    if (!c.inertia_note.empty()) j["inertia_note"] = c.inertia_note;
    return j;
}

inline json to_json(const BoundReport& r) {
    json j;
    j["name"] = r.name;
    json in = json::object();
    for (const auto& [k, v] : r.inputs) in[k] = round12(v);
    j["inputs"] = in;
    j["value"] = bound_value_json(r);
    j["value_float"] = round12(r.value);
    j["side"] = r.side;
    j["citation"] = r.citation;
    if (!r.components.empty()) {
        json comp = json::object();
        for (const auto& [k, v] : r.components) comp[k] = round12(v);
        j["components"] = comp;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline json to_json(const SearchResult& r, const Feasibility* feas = nullptr) {
    json j;
    j["status"] = search_status_name(r.status);
    j["nodes_expanded"] = r.nodes_expanded;
    j["obstructions_applied"] = r.obstructions_applied;
    if (r.witness) j["witness_pmm"] = to_pmm(*r.witness);
    if (!r.resume_token.empty()) j["resume_token"] = r.resume_token;
    if (feas) j["constraints"] = feas->constraints;
    return j;
}

inline json obstructed_json(const Feasibility& f) {
    return {{"status", "obstructed"}, {"reason", f.reason}};
}

inline json to_json(const PropertyRun& r) {
    json j;
    j["property_name"] = r.property_name;
    j["universe"] = r.universe;
    j["graphs_checked"] = r.graphs_checked;
    j["violations"] = r.violations;
    j["tolerance"] = r.tolerance;
    return j;
}

inline json to_json(const LatinReport& r) {
    json j;
    j["is_latin"] = r.is_latin;
    j["is_symmetric"] = r.is_symmetric;
    if (r.diagonal_constant) j["diagonal_constant"] = *r.diagonal_constant;
    else j["diagonal_constant"] = nullptr;
    if (!r.failures.empty()) j["failures"] = r.failures;
    return j;
}

inline json expected_spectrum_json(const std::vector<std::pair<Rational, i64>>& lines) {
    json arr = json::array();
    for (const auto& [value, mult] : lines) {
        if (mult == 0) continue;
        arr.push_back({{"value", value.str()}, {"multiplicity", mult}});
    }
    return arr;
}

} // namespace pmspec
