#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "configuration.hpp"
#include "lattice.hpp"

namespace lonely::zono {

using json = nlohmann::json;

// Integers that fit a machine word are written as JSON numbers, larger ones as strings.
inline json integer_json(const BigInt& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

inline BigInt integer_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

inline json to_json(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(integer_json(x));
    return a;
}

inline json to_json(const VectorConfiguration& u) {
    json vs = json::array();
    for (const auto& v : u.vectors()) vs.push_back(to_json(v));
    return {{"dim", u.dim()}, {"vectors", vs}, {"labels", u.labels()}};
}

inline json to_json(const LatticeDescription& l) { return {{"q", integer_json(l.q)}, {"w", to_json(l.w)}}; }

inline json to_json(const CenteredBody& k) {
    json cs = json::array();
    for (const auto& c : k.constraints()) cs.push_back({{"g", to_json(c.g)}, {"lo", c.lo.str()}, {"hi", c.hi.str()}});
    json center = json::array();
    for (const auto& x : k.center()) center.push_back(x.str());
    return {{"constraints", cs}, {"center", center}};
}

inline IntVector int_vector_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an integer array, got " + j.dump());
    IntVector v;
    for (const auto& x : j) v.push_back(integer_from_json(x));
    return v;
}

inline VectorConfiguration configuration_from_json(const json& j) {
    try {
        std::size_t d = j.at("dim").get<std::size_t>();
        std::vector<IntVector> vs;
        for (const auto& v : j.at("vectors")) vs.push_back(int_vector_from_json(v));
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return {d, std::move(vs), std::move(labels)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad configuration JSON: ") + e.what());
    }
}

inline LatticeDescription lattice_from_json(const json& j) {
    try {
        return {integer_from_json(j.at("q")), int_vector_from_json(j.at("w"))};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad lattice JSON: ") + e.what());
    }
}

}  // namespace lonely::zono
