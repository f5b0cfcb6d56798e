#ifndef SPECHT_JSON_IO_HPP
#define SPECHT_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "character.hpp"
#include "decompose.hpp"
#include "partition.hpp"
#include "schur.hpp"

namespace specht {

using json = nlohmann::ordered_json;

inline json json_of(const Partition& lambda) {
    return json(lambda.parts());
}

inline json json_of(const Composition& alpha) {
    return json(alpha.parts());
}

/// Array of {"partition": [...], "coeff": n} in descending lexicographic
/// order of index.
inline json json_of(const SchurSum& g) {
    json arr = json::array();
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
        json term;
        term["partition"] = json_of(it->first);
        term["coeff"] = static_cast<long long>(it->second);
        arr.push_back(std::move(term));
    }
    return arr;
}

inline json json_of(const WeightCharacter& chi) {
    json out;
    out["rank"] = chi.rank();
    json arr = json::array();
    for (auto it = chi.weights().rbegin(); it != chi.weights().rend(); ++it) {
        json entry;
        entry["weight"] = it->first;
        entry["mult"] = it->second;
        arr.push_back(std::move(entry));
    }
    out["weights"] = std::move(arr);
    out["dim"] = chi.dimension();
    return out;
}

inline json json_of(const std::vector<Summand>& summands) {
    json arr = json::array();
    for (const auto& s : summands) {
        json entry;
        entry["young"] = json_of(s.young);
        entry["mult"] = s.mult;
        arr.push_back(std::move(entry));
    }
    return arr;
}

inline json json_of(const Decomposition& dec) {
    json out;
    out["theorem"] = dec.family;
    json params;
    for (const auto& [key, value] : dec.params)
        params[key] = value;
    out["parameters"] = std::move(params);
    if (dec.family == "blockcomp")
        out["source"] = json_of(dec.source);
    else
        out["specht"] = json_of(dec.specht);
    out["summands"] = json_of(dec.summands);
    return out;
}

inline json json_of(const CoreIdentityResult& res, int m, long long a, long long b) {
    json out;
    out["check"] = "cor5-7";
    out["parameters"] = {{"m", m}, {"a", a}, {"b", b}};
    out["verdict"] = to_string(res.verdict);
    out["filtered"] = json_of(res.actual);
    out["expected"] = json_of(res.expected);
    return out;
}

inline json json_of(const ConsistencyResult& res, long long a, long long b) {
    json out;
    out["check"] = "prop7-2-2";
    out["parameters"] = {{"a", a}, {"b", b}};
    out["verdict"] = res.consistent ? "consistent" : "MISMATCH";
    out["via_labels"] = json_of(res.via_labels);
    out["via_weights"] = json_of(res.via_weights);
    return out;
}

} // namespace specht

#endif // SPECHT_JSON_IO_HPP
