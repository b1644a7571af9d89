#pragma once

namespace mfmab {

// Physical and game constants of the offloading network. Field names follow
// the symbols used throughout the delay/reward formulas; task sizes are held
// in bits internally.
struct NetworkConfig {
  int m = 10000;  // number of devices (agents)
  int n = 2;      // number of edge servers (arms)

  double B = 10e6;   // shared uplink bandwidth [Hz]
  double F = 4e9;    // per-server CPU rate [cycles/s]
  double c = 100.0;  // processing cycles per task bit
  double rho = 0.1;  // result size as a fraction of the task size
  double nu = 10.0;  // downlink bandwidth divisor (downlink uses B/nu)

  double p0 = 0.2;                       // device transmit power [W]
  double N0 = 3.9810717055349565e-21;    // noise power [W] (-174 dBm)
  double I_min = 0.008;                  // uniform interference bounds [W]
  double I_max = 0.012;
  double gamma_max = 0.0;                // SINR normalization cap; set by ctor

  double s_a = 0.5e6;      // smallest offloadable task [bits]
  double s_b = 1.0e6;      // largest offloadable task [bits]
  double mu_s = 0.75e6;    // underlying normal mean [bits]
  double sigma_s = 0.125e6;  // underlying normal std [bits]

  double d_max = 0.0;   // deadline [s]; <= 0 means "calibrate before use"
  double beta = 0.95;   // per-round continuation probability

  NetworkConfig() { gamma_max = default_gamma_max(p0, I_min, N0); }

  // Cap such that the normalized SINR exceeds 1 only for the top 0.1% of
  // channel draws at the most favorable interference level.
  static double default_gamma_max(double p0, double I_min, double N0);

  // Throws std::invalid_argument if any invariant is violated. The deadline
  // is checked only when require_deadline is set; calibration runs on a
  // config whose d_max is not yet known.
  void validate(bool require_deadline = true) const;
};

}  // namespace mfmab
