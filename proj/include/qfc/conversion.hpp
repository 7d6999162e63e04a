// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
//
// Difference-frequency conversion model: pump-power efficiency curve and
// its fit, passive-loss bookkeeping, quasi-phase-matching acceptance, and
// the two-waveguide polarization-preserving chain.
#pragma once

#include <cmath>
#include <istream>
#include <string>
#include <vector>

#include "qfc/csv.hpp"
#include "qfc/optim.hpp"
#include "qfc/states.hpp"

namespace qfc::conv {

struct WaveguideSpec {
  double length_cm = 0.0;
  double eta_nor_per_w_cm2 = 0.0;  // normalized efficiency
  double amplitude_a = 0.0;        // fit amplitude; dimensionless or Hz
  double phase_match_temp_c = 0.0;
  double temp_fwhm_c = 0.0;
  double spectral_acceptance_nm = 0.0;

  void validate() const {
    if (!(length_cm > 0.0)) throw contract_error("WaveguideSpec.length_cm must be > 0");
    if (!(eta_nor_per_w_cm2 > 0.0))
      throw contract_error("WaveguideSpec.eta_nor_per_w_cm2 must be > 0");
    if (!(amplitude_a >= 0.0)) throw contract_error("WaveguideSpec.amplitude_a must be >= 0");
    if (!(temp_fwhm_c > 0.0)) throw contract_error("WaveguideSpec.temp_fwhm_c must be > 0");
  }
};

struct Component {
  std::string label;
  double transmission = 1.0;
};

/// Ordered passive optics between measurement planes.
struct ComponentChain {
  std::vector<Component> components;

  void validate() const {
    for (const Component& c : components)
      if (!(c.transmission > 0.0 && c.transmission <= 1.0))
        throw contract_error("ComponentChain: transmission of '" + c.label +
                             "' outside (0, 1]");
  }

  double total_transmission() const {
    validate();
    double t = 1.0;
    for (const Component& c : components) t *= c.transmission;
    return t;
  }
};

/// Classical pump beam: total power plus its polarization split
/// (delta, gamma) over (|H>, |V>).
struct PumpConfig {
  double total_power_w = 0.0;
  cplx h_amplitude{1.0, 0.0};  // delta
  cplx v_amplitude{0.0, 0.0};  // gamma

  void validate() const {
    if (!(total_power_w >= 0.0)) throw contract_error("PumpConfig.total_power_w must be >= 0");
    if (std::abs(std::norm(h_amplitude) + std::norm(v_amplitude) - 1.0) > 1e-9)
      throw contract_error("PumpConfig: |delta|^2 + |gamma|^2 != 1");
  }
};

struct EfficiencyCurvePoint {
  double pump_w = 0.0;
  double value = 0.0;
  double sigma = 0.0;
};

/// eta(P) = A sin^2(sqrt(eta_nor P) L).
inline double conversion_efficiency(double pump_w, const WaveguideSpec& spec) {
  spec.validate();
  if (pump_w < 0.0) throw domain_error("conversion_efficiency: pump power must be >= 0");
  const double arg = std::sqrt(spec.eta_nor_per_w_cm2 * pump_w) * spec.length_cm;
  const double s = std::sin(arg);
  return spec.amplitude_a * s * s;
}

/// First pump power with complete conversion: P_max = (pi / (2 L sqrt(eta_nor)))^2.
inline double optimal_pump_power(const WaveguideSpec& spec) {
  spec.validate();
  const double denom = 2.0 * spec.length_cm * std::sqrt(spec.eta_nor_per_w_cm2);
  return (M_PI / denom) * (M_PI / denom);
}

struct EfficiencyFit {
  double amplitude_a = 0.0;
  double eta_nor_per_w_cm2 = 0.0;
  double residual = 0.0;  // chi^2 = sum ((model - value)/sigma)^2
};

/// Weighted least squares of (A, eta_nor) against eta(P) = A sin^2(...).
///
/// A enters linearly and is profiled out exactly, leaving a 1-D search in
/// eta_nor: a fixed log grid over [1e-2, 1e1] W^-1 cm^-2 picks the branch,
/// golden-section refines it. Fully deterministic.
inline EfficiencyFit fit_efficiency_curve(const std::vector<EfficiencyCurvePoint>& points,
                                          double length_cm) {
  if (points.size() < 4)
    throw fit_error("fit_efficiency_curve: need at least 4 points, got " +
                    std::to_string(points.size()));
  if (!(length_cm > 0.0)) throw fit_error("fit_efficiency_curve: length must be > 0");
  bool all_equal = true;
  for (const EfficiencyCurvePoint& p : points) {
    if (!(p.pump_w >= 0.0)) throw fit_error("fit_efficiency_curve: negative pump power");
    if (!(p.sigma > 0.0)) throw fit_error("fit_efficiency_curve: sigma must be > 0");
    all_equal = all_equal && (p.pump_w == points.front().pump_w);
  }
  if (all_equal) throw fit_error("fit_efficiency_curve: degenerate data (all powers equal)");

  auto profile = [&](double eta) {
    double num = 0.0, den = 0.0;
    for (const EfficiencyCurvePoint& p : points) {
      const double s = std::sin(std::sqrt(eta * p.pump_w) * length_cm);
      const double m = s * s;
      const double w = 1.0 / (p.sigma * p.sigma);
      num += w * m * p.value;
      den += w * m * m;
    }
    const double a = (den > 0.0) ? num / den : 0.0;
    double chi2 = 0.0;
    for (const EfficiencyCurvePoint& p : points) {
      const double s = std::sin(std::sqrt(eta * p.pump_w) * length_cm);
      const double r = (a * s * s - p.value) / p.sigma;
      chi2 += r * r;
    }
    return std::pair<double, double>(chi2, a);
  };

  constexpr double kEtaLo = 1e-2, kEtaHi = 1e1;
  constexpr int kGridPoints = 240;
  const double log_lo = std::log(kEtaLo), log_hi = std::log(kEtaHi);
  const double step = (log_hi - log_lo) / (kGridPoints - 1);

  double best_log_eta = log_lo;
  double best_chi2 = profile(kEtaLo).first;
  for (int i = 1; i < kGridPoints; ++i) {
    const double log_eta = log_lo + i * step;
    const double chi2 = profile(std::exp(log_eta)).first;
    if (chi2 < best_chi2) {
      best_chi2 = chi2;
      best_log_eta = log_eta;
    }
  }

  const double refined_log_eta = minimize_golden(
      [&](double le) { return profile(std::exp(le)).first; },
      std::max(log_lo, best_log_eta - step), std::min(log_hi, best_log_eta + step), 1e-12);

  EfficiencyFit fit;
  fit.eta_nor_per_w_cm2 = std::exp(refined_log_eta);
  const auto [chi2, a] = profile(fit.eta_nor_per_w_cm2);
  fit.amplitude_a = a;
  fit.residual = chi2;
  return fit;
}

/// measured / prod(transmissions); an empty chain is the identity.
inline double deduct_passive_losses(double measured, const ComponentChain& chain) {
  if (measured < 0.0) throw domain_error("deduct_passive_losses: measured must be >= 0");
  return measured / chain.total_transmission();
}

/// Energy conservation 1/lambda_t = 1/lambda_s - 1/lambda_p (all nm).
inline double dfg_target_wavelength(double lambda_s_nm, double lambda_p_nm) {
  if (!(lambda_s_nm > 0.0) || !(lambda_p_nm > lambda_s_nm))
    throw domain_error("dfg_target_wavelength: requires lambda_p > lambda_s > 0");
  return 1.0 / (1.0 / lambda_s_nm - 1.0 / lambda_p_nm);
}

/// True iff the pump photon has lower energy than the target photon, so
/// pump down-conversion cannot reach the target band. Boundary exclusive.
inline bool long_pump_regime(double lambda_t_nm, double lambda_p_nm) {
  if (!(lambda_t_nm > 0.0) || !(lambda_p_nm > 0.0))
    throw domain_error("long_pump_regime: wavelengths must be positive");
  return lambda_p_nm > lambda_t_nm;
}

namespace detail {
// Half width of sinc^2 at half maximum: sin(x)/x = 1/sqrt(2).
inline constexpr double kSincHalfPower = 1.3915573782515135;

inline double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }
}  // namespace detail

/// Relative conversion efficiency vs crystal temperature: sinc^2 profile
/// centered on the phase-matching temperature, scaled so the full width at
/// half maximum equals spec.temp_fwhm_c.
inline double temperature_acceptance(double temp_c, const WaveguideSpec& spec) {
  spec.validate();
  const double x =
      2.0 * detail::kSincHalfPower * (temp_c - spec.phase_match_temp_c) / spec.temp_fwhm_c;
  const double s = detail::sinc(x);
  return s * s;
}

/// Remaining 854-nm fraction after the waveguide:
/// T_passive * (1 - (1 - floor) * sin^2(sqrt(eta_nor P) L)).
inline double residual_854(double pump_w, const WaveguideSpec& spec, double passive_transmission,
                           double unconverted_floor) {
  spec.validate();
  if (pump_w < 0.0) throw domain_error("residual_854: pump power must be >= 0");
  if (!(passive_transmission >= 0.0 && passive_transmission <= 1.0))
    throw domain_error("residual_854: passive transmission outside [0,1]");
  if (!(unconverted_floor >= 0.0 && unconverted_floor <= 1.0))
    throw domain_error("residual_854: unconverted floor outside [0,1]");
  const double arg = std::sqrt(spec.eta_nor_per_w_cm2 * pump_w) * spec.length_cm;
  const double s = std::sin(arg);
  return passive_transmission * (1.0 - (1.0 - unconverted_floor) * s * s);
}

/// Spectral acceptance in Hz: c * d_lambda / lambda^2 around `center_nm`.
inline double spectral_acceptance_hz(const WaveguideSpec& spec, double center_nm = 854.0,
                                     double speed_of_light = 2.99792458e8) {
  spec.validate();
  return speed_of_light * (spec.spectral_acceptance_nm * 1e-9) / (center_nm * 1e-9 * center_nm * 1e-9);
}

struct ChainOutput {
  DensityMatrix output;
  double success_probability = 0.0;
};

/// Two-stage polarization-preserving conversion.
///
/// Stage 1 converts the V component with amplitude sqrt(eta1), where
/// eta1 is driven by the pump's V power; a broadband half-wave flip swaps
/// H and V on every field; stage 2 converts the remaining component with
/// amplitude sqrt(eta2) driven by the pump's H power. The heralded output
/// is the renormalized pure state beta*sqrt(eta1)|H> + alpha*sqrt(eta2)|V>
/// with success probability |alpha|^2 eta2 + |beta|^2 eta1.
inline ChainOutput polarization_chain(const PolarizationState& input, const PumpConfig& pump,
                                      const WaveguideSpec& wg1, const WaveguideSpec& wg2) {
  pump.validate();
  const double eta1 = conversion_efficiency(std::norm(pump.v_amplitude) * pump.total_power_w, wg1);
  const double eta2 = conversion_efficiency(std::norm(pump.h_amplitude) * pump.total_power_w, wg2);

  const cplx out_h = input.v * std::sqrt(eta1);
  const cplx out_v = input.h * std::sqrt(eta2);
  const double success = std::norm(out_h) + std::norm(out_v);
  if (success <= 0.0)
    throw domain_error("polarization_chain: zero conversion probability for this input");

  const double scale = 1.0 / std::sqrt(success);
  return ChainOutput{DensityMatrix::pure({out_h * scale, out_v * scale}), success};
}

/// Ingest `pump_mW,value,sigma`; powers are converted to watts.
inline std::vector<EfficiencyCurvePoint> curve_from_csv(std::istream& in) {
  std::vector<EfficiencyCurvePoint> points;
  for (const csv::Row& row : csv::parse(in, "pump_mW,value,sigma")) {
    EfficiencyCurvePoint p;
    p.pump_w = csv::to_double(row, 0) * 1e-3;
    p.value = csv::to_double(row, 1);
    p.sigma = csv::to_double(row, 2);
    if (p.pump_w < 0.0)
      throw data_error("line " + std::to_string(row.line) + ": negative pump power");
    if (!(p.sigma > 0.0))
      throw data_error("line " + std::to_string(row.line) + ": sigma must be > 0");
    points.push_back(p);
  }
  return points;
}

}  // namespace qfc::conv
