// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end ion-photon link budget: fiber transmission, detected rates,
// the ion-photon state after conversion + fiber + detector imperfections,
// and the negativity-based maximum entanglement distance.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "qfc/noise.hpp"
#include "qfc/process.hpp"

namespace qfc::link {

struct FiberSpec {
  double attenuation_db_per_km = 0.2;
  double propagation_delay_us_per_km = 5.0;

  void validate() const {
    if (!(attenuation_db_per_km > 0.0))
      throw contract_error("FiberSpec.attenuation_db_per_km must be > 0");
    if (!(propagation_delay_us_per_km > 0.0))
      throw contract_error("FiberSpec.propagation_delay_us_per_km must be > 0");
  }
};

/// On-demand photon source (ion + cavity).
struct SourceSpec {
  double attempt_rate_hz = 1.0e4;
  double wavepacket_duration_us = 20.0;
  double duty_cycle = 0.2;  // fraction of the attempt window with the detector gated on

  void validate() const {
    if (!(attempt_rate_hz > 0.0)) throw contract_error("SourceSpec.attempt_rate_hz must be > 0");
    if (!(duty_cycle > 0.0 && duty_cycle <= 1.0))
      throw contract_error("SourceSpec.duty_cycle outside (0, 1]");
    if (!(wavepacket_duration_us >= 0.0))
      throw contract_error("SourceSpec.wavepacket_duration_us must be >= 0");
  }
};

struct LinkModel {
  SourceSpec source;
  double conversion_efficiency = 0.30;  // photon in / fiber-coupled telecom photon out
  ProcessMatrix converter_chi = ProcessMatrix::identity();
  double photon_noise_rate_hz = 58.0;  // fiber-coupled converter noise, pre-detector
  FiberSpec fiber;
  noise::DetectorSpec detector;

  void validate() const {
    source.validate();
    fiber.validate();
    detector.validate();
    if (!(conversion_efficiency >= 0.0 && conversion_efficiency <= 1.0))
      throw contract_error("LinkModel.conversion_efficiency outside [0, 1]");
    if (!(photon_noise_rate_hz >= 0.0))
      throw contract_error("LinkModel.photon_noise_rate_hz must be >= 0");
  }
};

/// 10^(-alpha L / 10).
inline double fiber_transmission(double length_km, const FiberSpec& fiber) {
  fiber.validate();
  if (length_km < 0.0) throw domain_error("fiber_transmission: length must be >= 0");
  return std::pow(10.0, -fiber.attenuation_db_per_km * length_km / 10.0);
}

/// Fiber length beyond which converting (efficiency eta, attenuation
/// alpha_target) beats sending the signal band directly (alpha_signal).
inline double breakeven_length_km(double eta_conv, double alpha_target_db_per_km,
                                  double alpha_signal_db_per_km) {
  if (!(eta_conv > 0.0 && eta_conv <= 1.0))
    throw domain_error("breakeven_length_km: efficiency must lie in (0, 1]");
  if (!(alpha_signal_db_per_km > alpha_target_db_per_km))
    throw domain_error("breakeven_length_km: requires alpha_signal > alpha_target");
  return 10.0 * std::log10(1.0 / eta_conv) / (alpha_signal_db_per_km - alpha_target_db_per_km);
}

/// attempt_rate * conversion * fiber * detector efficiency.
inline double detected_signal_rate(const LinkModel& model, double length_km) {
  model.validate();
  return model.source.attempt_rate_hz * model.conversion_efficiency *
         fiber_transmission(length_km, model.fiber) * model.detector.efficiency;
}

/// Converter photon noise rides the same fiber and detector as the signal.
inline double detected_noise_rate(const LinkModel& model, double length_km) {
  model.validate();
  return model.photon_noise_rate_hz * fiber_transmission(length_km, model.fiber) *
         model.detector.efficiency;
}

/// dark * duty_cycle: counts outside the photon arrival window are ignored.
inline double gated_dark_rate(double dark_rate_hz, double duty_cycle) {
  if (!(duty_cycle > 0.0 && duty_cycle <= 1.0))
    throw domain_error("gated_dark_rate: duty cycle outside (0, 1]");
  if (dark_rate_hz < 0.0) throw domain_error("gated_dark_rate: dark rate must be >= 0");
  return dark_rate_hz * duty_cycle;
}

inline double travel_time_us(double length_km, const FiberSpec& fiber) {
  fiber.validate();
  if (length_km < 0.0) throw domain_error("travel_time_us: length must be >= 0");
  return length_km * fiber.propagation_delay_us_per_km;
}

/// A single ion must wait one photon round trip per attempt, so the rate
/// caps at min(attempt_rate, 1/travel_time).
inline double max_single_ion_rate(double length_km, const SourceSpec& source,
                                  const FiberSpec& fiber) {
  source.validate();
  const double t_us = travel_time_us(length_km, fiber);
  if (t_us == 0.0) return source.attempt_rate_hz;
  return std::min(source.attempt_rate_hz, 1e6 / t_us);
}

/// Ion-photon state after the converter channel and distance-dependent
/// mixing with detector dark counts.
///
/// Start from (|g,H> + |e,V>)/sqrt(2), apply the converter chi to the
/// photon half (residual photon noise is already inside chi; it attenuates
/// with the signal, dark counts do not), then depolarize the pair with
/// weight w = S/(S+D), S the detected signal rate and D the dark rate.
inline DensityMatrix ion_photon_state(const LinkModel& model, double length_km) {
  const double s = detected_signal_rate(model, length_km);
  const double d = model.detector.dark_rate_hz;
  if (!(s + d > 0.0)) throw domain_error("ion_photon_state: signal + dark rate is zero");
  const DensityMatrix converted =
      apply_to_photon_half(model.converter_chi, DensityMatrix::bell_phi_plus());
  return depolarize(converted, s / (s + d));
}

struct MaxDistanceResult {
  double distance_km = 0.0;
  bool threshold_found = false;  // false: entangled out to the search bound
};

/// Largest fiber length with negativity > 1e-9, bisected on [0, 500] km to
/// 0.1 km; the negativity samples along the way are checked to be
/// monotone non-increasing in distance.
inline MaxDistanceResult max_entanglement_distance(const LinkModel& model) {
  constexpr double kBoundKm = 500.0;
  constexpr double kResolutionKm = 0.1;
  constexpr double kNegativityFloor = 1e-9;

  std::vector<std::pair<double, double>> trace;
  auto neg_at = [&](double length) {
    const double n = negativity(ion_photon_state(model, length));
    trace.emplace_back(length, n);
    return n;
  };

  if (!(neg_at(0.0) > kNegativityFloor))
    throw domain_error("max_entanglement_distance: no entanglement at zero length");
  if (neg_at(kBoundKm) > kNegativityFloor) return {kBoundKm, false};

  double lo = 0.0, hi = kBoundKm;
  while (hi - lo > kResolutionKm) {
    const double mid = 0.5 * (lo + hi);
    if (neg_at(mid) > kNegativityFloor)
      lo = mid;
    else
      hi = mid;
  }

  std::sort(trace.begin(), trace.end());
  for (std::size_t i = 1; i < trace.size(); ++i)
    if (trace[i].second > trace[i - 1].second + 1e-12)
      throw domain_error("max_entanglement_distance: negativity not monotone in length");

  return {lo, true};
}

/// Depolarizing surrogate chi whose identity weight equals the target
/// fidelity: chi11 = (1 + 3w)/4.
inline ProcessMatrix surrogate_chi_for_fidelity(double identity_fidelity) {
  if (!(identity_fidelity >= 0.25 && identity_fidelity <= 1.0))
    throw domain_error("surrogate_chi_for_fidelity: fidelity outside [0.25, 1]");
  return ProcessMatrix::depolarizing((4.0 * identity_fidelity - 1.0) / 3.0);
}

/// Depolarizing surrogate calibrated so the entanglement threshold of the
/// given rate model sits exactly at the anchor distance and dark rate:
/// w * S(anchor)/(S(anchor) + D_anchor) = 1/3. The model's own chi is
/// ignored; its rates and fiber are used as-is.
inline ProcessMatrix calibrated_surrogate_chi(const LinkModel& model, double anchor_km = 84.0,
                                              double anchor_dark_hz = 1.8) {
  const double s = detected_signal_rate(model, anchor_km);
  if (!(s > 0.0)) throw domain_error("calibrated_surrogate_chi: zero signal at the anchor");
  const double w = (s + anchor_dark_hz) / (3.0 * s);
  if (w > 1.0)
    throw domain_error("calibrated_surrogate_chi: anchor unreachable even for a perfect channel");
  return ProcessMatrix::depolarizing(w);
}

struct LinkBudgetResult {
  double length_km = 0.0;
  double signal_hz = 0.0;
  double noise_hz = 0.0;
  double dark_hz = 0.0;
  double snr = 0.0;                  // signal / (noise + dark)
  double snr_total_over_dark = 0.0;  // (signal + dark) / dark
  DensityMatrix state = DensityMatrix::bell_phi_plus();
  double negativity = 0.0;
};

inline LinkBudgetResult link_budget(const LinkModel& model, double length_km) {
  LinkBudgetResult out;
  out.length_km = length_km;
  out.signal_hz = detected_signal_rate(model, length_km);
  out.noise_hz = detected_noise_rate(model, length_km);
  out.dark_hz = model.detector.dark_rate_hz;
  out.snr = noise::snr(out.signal_hz, out.noise_hz, out.dark_hz,
                       noise::SnrDefinition::kSignalOverBackground);
  out.snr_total_over_dark =
      noise::snr(out.signal_hz, 0.0, out.dark_hz, noise::SnrDefinition::kTotalOverDark);
  out.state = ion_photon_state(model, length_km);
  out.negativity = qfc::negativity(out.state);
  return out;
}

}  // namespace qfc::link
