#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heomcast {

/// Malformed system/bath specification (dimension mismatch, bad ranges, ...).
class invalid_spec_error : public std::runtime_error {
public:
    explicit invalid_spec_error(const std::string& what) : std::runtime_error(what) {}
};

/// Hierarchy would exceed the configured memory budget.
class capacity_error : public std::runtime_error {
public:
    capacity_error(const std::string& what, std::size_t index_count, std::size_t bytes_needed)
        : std::runtime_error(what), index_count(index_count), bytes_needed(bytes_needed) {}

    std::size_t index_count = 0;
    std::size_t bytes_needed = 0;
};

/// Propagation produced non-finite values or broke a density-matrix contract.
class divergence_error : public std::runtime_error {
public:
    divergence_error(const std::string& what, double time_ps, double max_magnitude)
        : std::runtime_error(what), time_ps(time_ps), max_magnitude(max_magnitude) {}

    double time_ps = 0.0;
    double max_magnitude = 0.0;
};

} // namespace heomcast
