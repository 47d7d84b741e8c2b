#include "kissing/bound_report.hpp"

#include <cmath>

namespace kissing {

long long floor_bound(double v) {
    double snapped = std::round(v);
    if (std::abs(v - snapped) <= 1e-9) return static_cast<long long>(snapped);
    return static_cast<long long>(std::floor(v));
}

Json BoundReport::to_json() const {
    Json j;
    j["method"] = method;
    j["n"] = n;
    j["s"] = s;
    j["value"] = value;
    if (exact_value) j["exact_value"] = *exact_value;
    j["floor_value"] = floor_value;
    j["rigorous"] = rigorous;
    j["certificate"] = certificate;
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

}  // namespace kissing
