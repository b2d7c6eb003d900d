#pragma once

#include <cstdint>
#include <vector>

#include "ffeq/laurent.hpp"
#include "ffeq/torsion.hpp"

namespace ffeq {

// Joint result of one pass over an orbit: its cardinality and the number of
// elements inside each ball of the family.
struct ScanResult {
    std::uint64_t orbit_size = 0;
    std::vector<std::uint64_t> in_ball;

    bool operator==(const ScanResult& o) const {
        return orbit_size == o.orbit_size && in_ball == o.in_ball;
    }
    bool operator!=(const ScanResult& o) const { return !(*this == o); }
};

// Reference implementation: streams the orbit through the general polynomial
// API (sigma expansion + tail membership).  Kept deliberately simple; the
// parallel kernel is tested against it.
ScanResult scan_orbit_serial(const Fq& F, const Orbit& orbit, const std::vector<Ball>& balls);

// OpenMP kernel: splits the candidate index space across threads and works
// in flat per-thread coefficient buffers (no allocation per candidate).
// Counters are exact integers, so the result is identical to the serial
// reference for every thread count.
ScanResult scan_orbit_parallel(const Fq& F, const Orbit& orbit, const std::vector<Ball>& balls);

}  // namespace ffeq
