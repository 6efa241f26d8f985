#pragma once

#include <cstddef>
#include <vector>

namespace vat {

enum class TraceKind {
    Elongation,   // meters
    LogAmplitude, // dimensionless (natural log)
};

/// Uniformly sampled time series. Immutable by convention after construction;
/// safe to share across workers.
struct Trace {
    double t0 = 0.0; // s
    double dt = 0.0; // s
    TraceKind kind = TraceKind::Elongation;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double time_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }

    /// Throws std::invalid_argument unless dt > 0, values non-empty and all finite.
    void validate() const;
};

} // namespace vat
