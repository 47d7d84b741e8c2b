#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace kissing {

using Json = nlohmann::ordered_json;

// A computed bound with its method tag and machine-checkable certificate.
// floor_value snaps values within 1e-9 of an integer before flooring, so
// cardinality bounds like 240 survive float noise.
struct BoundReport {
    int n = 0;
    double s = 0.0;
    std::string method;
    double value = 0.0;
    std::optional<std::string> exact_value;  // set in exact-rational mode
    long long floor_value = 0;
    bool rigorous = false;
    Json certificate = Json::object();
    std::vector<std::string> notes;

    Json to_json() const;
};

long long floor_bound(double v);

}  // namespace kissing
