#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace bsdn {

using NodeId = uint32_t;

// Simulation time in integer microseconds. Event ordering stays exact;
// metrics are reported in milliseconds.
using SimTime = int64_t;

constexpr SimTime kMicrosPerMilli = 1000;

inline SimTime ms_to_us(double ms) {
    return static_cast<SimTime>(std::llround(ms * 1000.0));
}
inline double us_to_ms(SimTime us) { return static_cast<double>(us) / 1000.0; }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x; y += o.y; z += o.z;
        return *this;
    }
    Vec3& operator-=(const Vec3& o) {
        x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

// Coordinate of one node in the virtual coordinate space (ms-scaled) plus
// the relative prediction error the stability safeguard keys on.
struct Coordinate {
    Vec3 x;
    double err_estimate = 1.0;
};

using Coordinates = std::vector<Coordinate>;

}  // namespace bsdn
