#include "qface/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace qface {

namespace {

int env_limit(int fallback) {
    const char* v = std::getenv("QFACE_EDGE_LIMIT");
    if (!v || !*v) return fallback;
    try {
        int n = std::stoi(v);
        if (n >= 0) return std::min(n, 62); // subset counters live in 64-bit words
    } catch (...) {
    }
    return fallback;
}

} // namespace

int exhaustive_edge_threshold() { return env_limit(16); }

int oracle_edge_guard() { return env_limit(14); }

} // namespace qface
