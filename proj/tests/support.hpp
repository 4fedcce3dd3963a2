#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oracle/oracle_values.hpp"
#include "pcf/scalar.hpp"

namespace pcf::test {

inline double rel(double got, double want) {
    double den = std::max(std::fabs(want), 1e-300);
    return std::fabs(got - want) / den;
}

// Relative error against a reference, with an absolute floor for values near zero.
inline double rel_or_abs(double got, double want, double floor) {
    return std::fabs(got - want) / std::max(std::fabs(want), floor);
}

inline double rel(const ScaledReal& got, double want) {
    return rel_diff(got, ScaledReal::from_double(want));
}

inline double x_of(double a, double t) { return 2.0 * t * std::sqrt(std::fabs(a)); }

template <class T, std::size_t N>
const T& find_point(const T (&table)[N], double a, double x) {
    for (const T& p : table)
        if (p.a == a && std::fabs(p.x - x) <= 1e-12 * std::max(1.0, std::fabs(x))) return p;
    throw std::out_of_range("no oracle point");
}

inline const oracle::UVPoint& find_uv(double a, double x) { return find_point(oracle::kUV, a, x); }
inline const oracle::WPoint& find_w(double a, double x) { return find_point(oracle::kW, a, x); }

}  // namespace pcf::test
