// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
//
// Pump-induced noise model: anti-Stokes Raman photon rate and its
// Boltzmann temperature dependence, white-noise bandwidth scaling,
// detector response, and signal-to-noise definitions.
#pragma once

#include <cmath>
#include <istream>
#include <vector>

#include "qfc/csv.hpp"
#include "qfc/errors.hpp"

namespace qfc::noise {

/// CODATA 2018 exact values; overridable through the toolkit config for
/// sensitivity tests.
struct PhysicalConstants {
  double planck_j_s = 6.62607015e-34;
  double boltzmann_j_per_k = 1.380649e-23;
  double speed_of_light_m_per_s = 2.99792458e8;
};

/// NPR(T) = A exp(-(h dnu / k_B) / T) with dnu fixed by the pump-target
/// frequency difference.
struct RamanNoiseModel {
  double amplitude_hz = 0.0;  // fit parameter A
  double lambda_pump_nm = 0.0;
  double lambda_target_nm = 0.0;

  void validate() const {
    if (!(amplitude_hz >= 0.0)) throw contract_error("RamanNoiseModel.amplitude_hz must be >= 0");
    if (!(lambda_target_nm > 0.0) || !(lambda_pump_nm > lambda_target_nm))
      throw contract_error("RamanNoiseModel: requires lambda_pump > lambda_target > 0");
  }
};

struct FrequencyOffset {
  double delta_nu_hz = 0.0;
  double temperature_scale_k = 0.0;  // h * dnu / k_B
};

/// Pump-target frequency difference and the equivalent Boltzmann
/// temperature scale.
inline FrequencyOffset raman_frequency_offset(const RamanNoiseModel& model,
                                              const PhysicalConstants& constants = {}) {
  model.validate();
  FrequencyOffset out;
  out.delta_nu_hz = constants.speed_of_light_m_per_s *
                    (1.0 / (model.lambda_target_nm * 1e-9) - 1.0 / (model.lambda_pump_nm * 1e-9));
  out.temperature_scale_k = constants.planck_j_s * out.delta_nu_hz / constants.boltzmann_j_per_k;
  return out;
}

inline double npr_at_temperature(const RamanNoiseModel& model, double temp_k,
                                 const PhysicalConstants& constants = {}) {
  if (!(temp_k > 0.0)) throw domain_error("npr_at_temperature: temperature must be > 0 K");
  const FrequencyOffset off = raman_frequency_offset(model, constants);
  return model.amplitude_hz * std::exp(-off.temperature_scale_k / temp_k);
}

struct NoisePoint {
  double temp_k = 0.0;
  double npr_hz = 0.0;
  double sigma = 0.0;
};

/// Weighted least squares for the single amplitude A, linear in log space:
/// ln A = weighted mean of (ln npr_i + theta/T_i).
inline double fit_boltzmann(const std::vector<NoisePoint>& points, double lambda_pump_nm,
                            double lambda_target_nm, const PhysicalConstants& constants = {}) {
  if (points.size() < 2)
    throw fit_error("fit_boltzmann: need at least 2 points, got " + std::to_string(points.size()));
  RamanNoiseModel probe{0.0, lambda_pump_nm, lambda_target_nm};
  const double theta = raman_frequency_offset(probe, constants).temperature_scale_k;

  double num = 0.0, den = 0.0;
  for (const NoisePoint& p : points) {
    if (!(p.temp_k > 0.0) || !(p.npr_hz > 0.0) || !(p.sigma > 0.0))
      throw fit_error("fit_boltzmann: points need positive temperature, rate and sigma");
    const double w = (p.npr_hz / p.sigma) * (p.npr_hz / p.sigma);
    num += w * (std::log(p.npr_hz) + theta / p.temp_k);
    den += w;
  }
  if (!(den > 0.0)) throw fit_error("fit_boltzmann: degenerate weights");
  return std::exp(num / den);
}

/// White-noise assumption: npr scales linearly with filter bandwidth.
inline double scale_npr_bandwidth(double npr_ref_hz, double bw_ref, double bw_new) {
  if (!(bw_ref > 0.0) || !(bw_new > 0.0))
    throw domain_error("scale_npr_bandwidth: bandwidths must be > 0");
  return npr_ref_hz * bw_new / bw_ref;
}

/// Spectral filter stage. Bandwidth is stored in Hz; config files may give
/// picometers instead, converted at 1550 nm.
struct FilterSpec {
  double bandwidth_hz = 0.0;
  double transmission = 1.0;
  double extinction = 1.0;  // suppression ratio outside the band

  void validate() const {
    if (!(bandwidth_hz > 0.0)) throw contract_error("FilterSpec.bandwidth_hz must be > 0");
    if (!(transmission > 0.0 && transmission <= 1.0))
      throw contract_error("FilterSpec.transmission outside (0, 1]");
  }
};

inline double bandwidth_pm_to_hz(double pm, double center_nm = 1550.0,
                                 double speed_of_light = 2.99792458e8) {
  return speed_of_light * (pm * 1e-12) / (center_nm * 1e-9 * center_nm * 1e-9);
}

struct DetectorSpec {
  double efficiency = 0.10;
  double dark_rate_hz = 1.8;
  double dead_time_s = 20e-6;

  void validate() const {
    if (!(efficiency > 0.0 && efficiency <= 1.0))
      throw contract_error("DetectorSpec.efficiency outside (0, 1]");
    if (!(dark_rate_hz >= 0.0)) throw contract_error("DetectorSpec.dark_rate_hz must be >= 0");
    if (!(dead_time_s >= 0.0)) throw contract_error("DetectorSpec.dead_time_s must be >= 0");
  }
};

/// Click rate for a photon rate at the detector input. The dead-time
/// correction r/(1 + r tau) is off by default; at kHz rates it is a
/// few-percent effect.
inline double detected_rate(double true_rate_hz, const DetectorSpec& det,
                            bool dead_time_correction = false) {
  det.validate();
  if (true_rate_hz < 0.0) throw domain_error("detected_rate: rate must be >= 0");
  double r = det.efficiency * true_rate_hz + det.dark_rate_hz;
  if (dead_time_correction) r = r / (1.0 + r * det.dead_time_s);
  return r;
}

enum class SnrDefinition {
  kSignalOverBackground,  // signal / (noise + dark)
  kTotalOverDark,         // (signal + dark) / dark
};

inline double snr(double signal_hz, double noise_hz, double dark_hz, SnrDefinition definition) {
  switch (definition) {
    case SnrDefinition::kSignalOverBackground: {
      const double bg = noise_hz + dark_hz;
      if (!(bg > 0.0)) throw domain_error("snr: background must be > 0");
      return signal_hz / bg;
    }
    case SnrDefinition::kTotalOverDark:
      if (!(dark_hz > 0.0)) throw domain_error("snr: dark rate must be > 0");
      return (signal_hz + dark_hz) / dark_hz;
  }
  throw domain_error("snr: unknown definition");
}

/// Ingest `temp_C,counts_Hz,sigma`; temperatures become kelvin.
inline std::vector<NoisePoint> noise_scan_from_csv(std::istream& in) {
  std::vector<NoisePoint> points;
  for (const csv::Row& row : csv::parse(in, "temp_C,counts_Hz,sigma")) {
    NoisePoint p;
    p.temp_k = csv::to_double(row, 0) + 273.15;
    p.npr_hz = csv::to_double(row, 1);
    p.sigma = csv::to_double(row, 2);
    points.push_back(p);
  }
  return points;
}

}  // namespace qfc::noise
