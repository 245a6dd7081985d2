/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lonsim::cli {

/// 0 = all checks pass, 2 = numeric mismatch, 3 = input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitInputError = 3;

/// Options shared by every subcommand. Identical options produce
/// byte-identical output; every emitted artifact embeds the library
/// version, the master seed and a hash of the options that produced it.
struct GlobalOptions {
  std::uint64_t seed = 20260821;
  std::string out_dir;
  std::string format = "csv";
  std::uint64_t shots = 0;
  std::string detector_model = "ideal";
  std::string frame_cache;
};

/// Directory used for cached frames: the --frame-cache flag if given,
/// otherwise the LONSIM_FRAME_CACHE environment variable, otherwise none.
std::string resolve_frame_cache(const GlobalOptions& global);

/// Hash of an option set, hex-encoded, embedded in all emitted artifacts.
std::string config_hash(const std::string& command,
                        const std::vector<std::string>& fields);

struct TableS1Options {
  GlobalOptions global;
  /// Decimals shown for the value columns; 3 matches the bundled
  /// references, larger values expose the extended-precision theory.
  int precision = 3;
};

/// Emits the nine-row preparation table with a pass/fail column against
/// the bundled three-decimal references (tolerance 5e-4 for value columns,
/// 0.05 degrees for alpha). Returns kExitMismatch if any cell misses.
int cmd_table_s1(const TableS1Options& options, std::ostream& out);

struct Fig3Options {
  GlobalOptions global;
  double alpha_min_deg = 0.0;
  double alpha_max_deg = 90.0;
  int points = 91;
};

/// Emits the invariant theory curves i_t_prime, i_t, i_p, i_o over an
/// alpha grid for the pure family cos(alpha)|2,0> + sin(alpha)|1,1>.
int cmd_fig3_theory(const Fig3Options& options, std::ostream& out);

struct ConserveOptions {
  GlobalOptions global;
  /// "table-s2" uses the eight bundled unitaries, "haar" draws fresh ones.
  std::string unitaries = "table-s2";
  int haar_count = 8;
  /// Comma-free method list: any of exact, tomo, direct.
  std::vector<std::string> methods = {"exact"};
};

/// Runs prepared states x unitaries x methods, emitting per-cell invariant
/// values and the maximum exact-mode deviation. Returns kExitMismatch if
/// the exact-mode deviation exceeds 1e-9.
int cmd_conserve(const ConserveOptions& options, std::ostream& out);

struct InvariantsOptions {
  GlobalOptions global;
  std::string state_file;
};

/// Reads a density-matrix JSON file and emits its invariant set and frame
/// coefficients. Input problems (parse errors, physicality violations)
/// return kExitInputError with a located message on the stream.
int cmd_invariants(const InvariantsOptions& options, std::ostream& out);

struct PrepareOptions {
  GlobalOptions global;
  std::vector<double> theta_deg = {0,    7.5,  11.25, 15,  22.5,
                                   30.0, 33.75, 37.5, 45.0};
};

/// Emits the post-selected two-photon state for each preparation angle,
/// with amplitudes, alpha, and invariants.
int cmd_prepare(const PrepareOptions& options, std::ostream& out);

struct TomoSimulateOptions {
  GlobalOptions global;
  double theta_deg = 22.5;
  /// Optional named evolution from the bundled set, e.g. "U1"; empty for
  /// none.
  std::string unitary;
};

/// Simulates click counts for the six plate settings on the prepared
/// (optionally evolved) state and emits the count record as JSON. shots = 0
/// emits exact probabilities instead.
int cmd_tomo_simulate(const TomoSimulateOptions& options, std::ostream& out);

struct TomoReconstructOptions {
  GlobalOptions global;
  std::string counts_file;
  std::string method = "linear";
  /// Optional reference state JSON for a fidelity column.
  std::string reference_file;
};

/// Reconstructs a density matrix from a count-record JSON file and emits
/// it with residual, invariants, and optional reference fidelity.
int cmd_tomo_reconstruct(const TomoReconstructOptions& options,
                         std::ostream& out);

struct SampleU2Options {
  GlobalOptions global;
  /// "table-s2" emits the bundled set; "haar" draws `count` fresh samples.
  std::string set = "table-s2";
  int count = 8;
};

/// Emits named two-mode unitaries with their parameters and plate angles.
int cmd_sample_u2(const SampleU2Options& options, std::ostream& out);

struct DipFitOptions {
  GlobalOptions global;
  /// Two-column data file (delay, rate), CSV or JSON. Empty synthesizes a
  /// noisy seeded scan from the demo model before fitting.
  std::string data_file;
};

/// Fits the interference-dip model to scan data and emits the fitted
/// parameters and visibility.
int cmd_dip_fit(const DipFitOptions& options, std::ostream& out);

}  // namespace lonsim::cli
