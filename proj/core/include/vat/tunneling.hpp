#pragma once

#include <vector>

#include "vat/bath.hpp"
#include "vat/trace.hpp"

namespace vat {

/// Tunneling configuration. kappa is derived on construction and asserted
/// against derive_kappa bit-exactly.
struct BarrierSpec {
    double mass = 0.0;       // kg, configurational mass M
    double height = 0.0;     // J, V0
    double mean_width = 0.0; // m, d0 >= 0
    double kappa = 0.0;      // 1/m, sqrt(2 M V0) / hbar

    BarrierSpec(double mass_kg, double height_j, double mean_width_m);
};

/// Decay constant of the under-barrier wavefunction: sqrt(2*M*V0)/hbar.
double derive_kappa(double mass_kg, double height_j);

/// Log of the time-dependent matrix-element factor e^{-2 kappa Phibar0(t)}:
/// values[i] = -2 kappa Phibar0(t_i). Always kept in log domain — the linear
/// factor spans hundreds of e-folds.
Trace log_time_factor(const Trace& elongation, double kappa);

/// Paper-form static factor, log of e^{2 kappa^2 <f, omega^-1 f>} with the
/// elongation normalization folded: 2 kappa^2 * thermal_inner_product(bath).
/// Zero for a zero bath; non-negative always.
double log_static_prefactor(const CoherentBath& bath, double kappa);

/// Exact coherent-state static factor, 2 kappa^2 * vacuum_variance(spec).
/// Independent of the sampled microstate; this is the form the selection and
/// observer paths use, so it cancels between channels.
double log_vacuum_prefactor(const LatticeSpec& spec, double kappa);

/// Full log of the squared integrand norm:
///   values[i] = -2 kappa d0 + log(|C|^2/(2 kappa)) + log_prefactor + log_time[i]
/// with the normalization |C|^2/(2 kappa) fixed to 1: only amplitude ratios
/// are observable here, so everything is reported relative to that factor.
Trace log_integrand_norm(const Trace& log_time, const BarrierSpec& barrier,
                         double log_prefactor);

/// One detected spike of the log-amplitude trace.
struct PeakRecord {
    double t_peak = 0.0;         // s
    double phi_min = 0.0;        // m, most negative elongation at the peak
    double log_amplitude = 0.0;  // = -2 kappa phi_min
    double width_estimate = 0.0; // s, full width at log-height - 1
};

/// Local maxima of a log-amplitude trace, greedily selected in descending
/// height with exclusion radius min_separation. Endpoints are excluded, so a
/// monotone trace yields no peaks. kappa only back-fills phi_min.
/// Requires min_separation >= trace dt.
std::vector<PeakRecord> detect_peaks(const Trace& log_trace, double min_separation,
                                     double kappa);

/// Interval where the instantaneous width d0 + Phibar0(t) is negative.
struct ContactEvent {
    double t_start = 0.0; // s
    double t_end = 0.0;   // s
    double tau = 0.0;     // s, t_end - t_start > 0
};

/// Maximal intervals with d0 + Phibar0(t) < 0. Crossing times are linearly
/// interpolated between samples; events touching the trace ends are clipped
/// to the first/last sample time.
std::vector<ContactEvent> contact_events(const Trace& elongation, double d0);

/// Order-of-magnitude action of a barrier-contact event: V0 / (hbar * omega_D).
double contact_integral_estimate(double v0_j, double omega_debye);

} // namespace vat
