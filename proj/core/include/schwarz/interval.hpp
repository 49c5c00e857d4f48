#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace schwarz {

// An interval of the real line with individually open or closed endpoints.
// Unbounded ends use +/-infinity (always treated as open). Atom bookkeeping
// respects endpoint closedness; integrals ignore it (endpoints are null sets).
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_closed = false;
    bool hi_closed = false;

    static Interval all() { return {}; }
    static Interval open(double a, double b) { return {a, b, false, false}; }
    static Interval closed(double a, double b) { return {a, b, true, true}; }
    static Interval point(double z) { return {z, z, true, true}; }

    bool empty() const {
        if (lo > hi) return true;
        if (lo == hi) return !(lo_closed && hi_closed) || std::isinf(lo);
        return false;
    }

    bool contains(double z) const {
        if (z < lo || z > hi) return false;
        if (z == lo && !lo_closed) return false;
        if (z == hi && !hi_closed) return false;
        return true;
    }

    // Overlap with [a, b] as a plain closed range, for integration limits.
    std::pair<double, double> clip(double a, double b) const {
        return {std::max(a, lo), std::min(b, hi)};
    }

    double length() const { return empty() ? 0.0 : hi - lo; }

    std::string str() const {
        auto fmt = [](double v) {
            if (std::isinf(v)) return std::string(v > 0 ? "inf" : "-inf");
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", v);
            return std::string(buf);
        };
        return std::string(lo_closed ? "[" : "(") + fmt(lo) + "," + fmt(hi)
             + std::string(hi_closed ? "]" : ")");
    }
};

} // namespace schwarz
