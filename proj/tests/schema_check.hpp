#pragma once

// Validator for the subset of JSON Schema used by the report schema:
// type (string or list), enum, required, properties, items.

#include <json.hpp>

#include <string>
#include <vector>

namespace schema {

using nlohmann::json;

inline bool has_type(const json &v, const std::string &t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

// Appends one message per violation.
inline void validate(const json &v, const json &s, const std::string &path, std::vector<std::string> &errors) {
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (const auto &t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
        } else {
            ok = has_type(v, s["type"].get<std::string>());
        }
        if (!ok) {
            errors.push_back(path + ": wrong type");
            return;
        }
    }
    if (s.contains("enum")) {
        bool found = false;
        for (const auto &e : s["enum"]) found = found || e == v;
        if (!found) errors.push_back(path + ": not in enum");
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto &k : s["required"])
                if (!v.contains(k.get<std::string>())) errors.push_back(path + ": missing " + k.get<std::string>());
        if (s.contains("properties"))
            for (const auto &[k, sub] : s["properties"].items())
                if (v.contains(k)) validate(v[k], sub, path + "/" + k, errors);
    }
    if (v.is_array() && s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], s["items"], path + "/" + std::to_string(i), errors);
    }
}

inline std::vector<std::string> validate(const json &v, const json &s) {
    std::vector<std::string> errors;
    validate(v, s, "", errors);
    return errors;
}

}  // namespace schema
