/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "lonsim/density.hpp"
#include "lonsim/dip.hpp"
#include "lonsim/direct_measurement.hpp"
#include "lonsim/frame.hpp"
#include "lonsim/haar.hpp"
#include "lonsim/hom_preparation.hpp"
#include "lonsim/invariants.hpp"
#include "lonsim/json_io.hpp"
#include "lonsim/random.hpp"
#include "lonsim/scattering.hpp"
#include "lonsim/tomography.hpp"
#include "lonsim/version.hpp"
#include "lonsim/waveplates.hpp"

namespace lonsim::cli {

namespace {

constexpr double kRad = std::numbers::pi / 180.0;
constexpr double kValueTol = 5e-4;
constexpr double kAlphaTolDeg = 0.05;
constexpr double kConserveTol = 1e-9;

/// General-purpose deterministic number rendering, 12 significant digits.
std::string fmt_g(double value) {
  if (value == 0.0) value = 0.0;
  std::ostringstream s;
  s << std::setprecision(12) << io::round_sig(value, 12);
  return s.str();
}

std::string fmt_fixed(double value, int decimals) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(decimals) << value;
  std::string text = s.str();
  if (!text.empty() && text[0] == '-' &&
      text.find_first_not_of("-0.") == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

std::string fmt_sci(double value, int decimals = 1) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(decimals) << value;
  return s.str();
}

enum class Format { csv, json };

Format parse_format(const GlobalOptions& global) {
  if (global.format == "csv") return Format::csv;
  if (global.format == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + global.format +
                              "' (expected csv or json)");
}

DetectorModel parse_model(const GlobalOptions& global) {
  if (global.detector_model == "ideal") return DetectorModel::ideal;
  if (global.detector_model == "splitting") return DetectorModel::splitting;
  throw std::invalid_argument("unknown detector model '" +
                              global.detector_model +
                              "' (expected ideal or splitting)");
}

io::Json meta_json(const std::string& command, const GlobalOptions& global,
                   const std::vector<std::string>& fields) {
  io::Json meta = io::Json::object();
  meta["command"] = command;
  meta["version"] = std::string(kVersion);
  meta["seed"] = global.seed;
  meta["config"] = config_hash(command, fields);
  return meta;
}

void write_csv_meta(std::ostream& out, const std::string& command,
                    const GlobalOptions& global,
                    const std::vector<std::string>& fields) {
  out << "# command=" << command << "\n";
  out << "# version=" << kVersion << "\n";
  out << "# seed=" << global.seed << "\n";
  out << "# config=" << config_hash(command, fields) << "\n";
}

/// Copies the rendered stream into <out_dir>/<command>.<ext> when an
/// output directory was requested.
void mirror_artifact(const GlobalOptions& global, const std::string& command,
                     const std::string& content) {
  if (global.out_dir.empty()) return;
  std::filesystem::create_directories(global.out_dir);
  const std::string ext = global.format == "json" ? "json" : "csv";
  const std::filesystem::path path =
      std::filesystem::path(global.out_dir) / (command + "." + ext);
  io::write_text_file(path.string(), content);
}

FramePtr pair_frame(const GlobalOptions& global) {
  return load_or_build_frame(2, 2, resolve_frame_cache(global));
}

std::vector<std::string> base_fields(const GlobalOptions& global) {
  return {
      "seed=" + std::to_string(global.seed),
      "format=" + global.format,
      "shots=" + std::to_string(global.shots),
      "detector_model=" + global.detector_model,
  };
}

struct CellCheck {
  std::string label;
  double delta = 0.0;
  bool pass = true;
};

void check_cell(std::vector<CellCheck>& cells, const std::string& label,
                double value, double reference, double tol) {
  if (reference < 0.0 && label != "alpha_deg") return;
  CellCheck cell;
  cell.label = label;
  cell.delta = std::abs(value - reference);
  cell.pass = cell.delta <= tol;
  cells.push_back(cell);
}

const std::vector<double>& conserve_thetas() {
  // Eight benchmark preparations: the table angles minus the 7.5 degree
  // row, pairing with the eight bundled unitaries.
  static const std::vector<double> thetas = {0.0,  11.25, 15.0, 22.5,
                                             30.0, 33.75, 37.5, 45.0};
  return thetas;
}

struct NamedMatrix {
  std::string name;
  Eigen::Matrix2cd matrix;
};

std::vector<NamedMatrix> conserve_unitaries(const ConserveOptions& options) {
  std::vector<NamedMatrix> out;
  if (options.unitaries == "table-s2") {
    for (const NamedUnitary& u : experiment_unitaries()) {
      out.push_back({u.name, u.matrix});
    }
    return out;
  }
  if (options.unitaries == "haar") {
    if (options.haar_count < 1) {
      throw std::invalid_argument("haar_count must be >= 1");
    }
    for (int i = 0; i < options.haar_count; ++i) {
      std::mt19937_64 rng(
          derive_seed(options.global.seed, static_cast<std::uint64_t>(i)));
      const HaarU2Sample sample = sample_haar_u2(rng);
      out.push_back({"H" + std::to_string(i + 1), sample.matrix});
    }
    return out;
  }
  throw std::invalid_argument("unknown unitary set '" + options.unitaries +
                              "' (expected table-s2 or haar)");
}

const NamedUnitary& find_named_unitary(const std::string& name) {
  for (const NamedUnitary& u : experiment_unitaries()) {
    if (u.name == name) return u;
  }
  throw std::invalid_argument("unknown unitary '" + name +
                              "' (expected U1..U8)");
}

io::Json invariants_json(const InvariantSet& inv) { return io::to_json(inv); }

int finish(std::ostream& out, const GlobalOptions& global,
           const std::string& command, const std::string& content, int code) {
  out << content;
  mirror_artifact(global, command, content);
  return code;
}

int report_input_error(std::ostream& out, const std::exception& e) {
  out << "error: " << e.what() << "\n";
  return kExitInputError;
}

}  // namespace

std::string resolve_frame_cache(const GlobalOptions& global) {
  if (!global.frame_cache.empty()) return global.frame_cache;
  if (const char* env = std::getenv("LONSIM_FRAME_CACHE")) return env;
  return "";
}

std::string config_hash(const std::string& command,
                        const std::vector<std::string>& fields) {
  std::string blob = command;
  blob.push_back('\0');
  for (const std::string& field : fields) {
    blob += field;
    blob.push_back('\0');
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(blob);
  return out.str();
}

int cmd_table_s1(const TableS1Options& options, std::ostream& out) {
  try {
    const Format format = parse_format(options.global);
    if (options.precision < 1 || options.precision > 12) {
      throw std::invalid_argument("precision must lie in [1, 12]");
    }
    std::vector<std::string> fields = base_fields(options.global);
    fields.push_back("precision=" + std::to_string(options.precision));

    FramePtr frame = pair_frame(options.global);
    const std::vector<PreparationRow> rows = preparation_table(frame);
    const std::array<ReferenceRow, 9>& refs = reference_table();

    bool all_pass = true;
    double max_delta = 0.0;
    std::ostringstream body;
    io::Json json_rows = io::Json::array();

    if (format == Format::csv) {
      write_csv_meta(body, "table-s1", options.global, fields);
      body << "theta_deg,alpha_deg,amp_2h0v,amp_1h1v,i_t,i_p,i_t_prime,i_o,"
              "status,mismatches\n";
    }

    for (std::size_t i = 0; i < rows.size(); ++i) {
      const PreparationRow& row = rows[i];
      const ReferenceRow& ref = refs[i];
      const double alpha_deg = row.alpha / kRad;
      const double amp_bunched = std::cos(row.alpha);
      const double amp_split = std::sin(row.alpha);

      std::vector<CellCheck> cells;
      check_cell(cells, "alpha_deg", alpha_deg, ref.alpha_deg, kAlphaTolDeg);
      check_cell(cells, "amp_2h0v", amp_bunched, ref.amp_bunched, kValueTol);
      check_cell(cells, "amp_1h1v", amp_split, ref.amp_split, kValueTol);
      check_cell(cells, "i_t", row.inv.i_t, ref.i_t, kValueTol);
      check_cell(cells, "i_p", row.inv.i_p, ref.i_p, kValueTol);
      check_cell(cells, "i_t_prime", row.inv.i_t_prime, ref.i_t_prime,
                 kValueTol);
      check_cell(cells, "i_o", row.inv.i_o, ref.i_o, kValueTol);

      bool row_pass = true;
      std::string mismatches;
      for (const CellCheck& cell : cells) {
        if (cell.label != "alpha_deg") {
          max_delta = std::max(max_delta, cell.delta);
        }
        if (!cell.pass) {
          row_pass = false;
          if (!mismatches.empty()) mismatches += ";";
          mismatches += cell.label + "(delta=" + fmt_sci(cell.delta) + ")";
        }
      }
      all_pass = all_pass && row_pass;

      if (format == Format::csv) {
        body << fmt_g(ref.theta_deg) << ","
             << fmt_fixed(alpha_deg, options.precision) << ","
             << fmt_fixed(amp_bunched, options.precision) << ","
             << fmt_fixed(amp_split, options.precision) << ","
             << fmt_fixed(row.inv.i_t, options.precision) << ","
             << fmt_fixed(row.inv.i_p, options.precision) << ","
             << fmt_fixed(row.inv.i_t_prime, options.precision) << ","
             << fmt_fixed(row.inv.i_o, options.precision) << ","
             << (row_pass ? "pass" : "fail") << "," << mismatches << "\n";
      } else {
        io::Json entry = io::Json::object();
        entry["theta_deg"] = ref.theta_deg;
        entry["alpha_deg"] = io::round_sig(alpha_deg);
        entry["amp_2h0v"] = io::round_sig(amp_bunched);
        entry["amp_1h1v"] = io::round_sig(amp_split);
        entry["invariants"] = invariants_json(row.inv);
        entry["status"] = row_pass ? "pass" : "fail";
        entry["mismatches"] = mismatches;
        json_rows.push_back(std::move(entry));
      }
    }

    if (format == Format::csv) {
      body << "# max_value_delta=" << fmt_sci(max_delta, 3) << "\n";
      body << "# status=" << (all_pass ? "pass" : "fail") << "\n";
    } else {
      io::Json doc = io::Json::object();
      doc["meta"] = meta_json("table-s1", options.global, fields);
      doc["rows"] = std::move(json_rows);
      doc["max_value_delta"] = io::round_sig(max_delta);
      doc["status"] = all_pass ? "pass" : "fail";
      body << io::dump(doc);
    }
    return finish(out, options.global, "table-s1", body.str(),
                  all_pass ? kExitOk : kExitMismatch);
  } catch (const std::exception& e) {
    return report_input_error(out, e);
  }
}

int cmd_fig3_theory(const Fig3Options& options, std::ostream& out) {
  try {
    const Format format = parse_format(options.global);
    if (options.points < 1) {
      throw std::invalid_argument("points must be >= 1");
    }
    if (options.alpha_min_deg < 0.0 || options.alpha_max_deg > 90.0 ||
        options.alpha_min_deg > options.alpha_max_deg) {
      throw std::invalid_argument(
          "alpha range must satisfy 0 <= min <= max <= 90");
    }
    std::vector<std::string> fields = base_fields(options.global);
    fields.push_back("alpha_min_deg=" + fmt_g(options.alpha_min_deg));
    fields.push_back("alpha_max_deg=" + fmt_g(options.alpha_max_deg));
    fields.push_back("points=" + std::to_string(options.points));

    FramePtr frame = pair_frame(options.global);

    std::ostringstream body;
    io::Json json_rows = io::Json::array();
    if (format == Format::csv) {
      write_csv_meta(body, "fig3-theory", options.global, fields);
      body << "alpha_deg,i_t_prime,i_t,i_p,i_o,coord_1,coord_2,coord_3\n";
    }
    for (int i = 0; i < options.points; ++i) {
      const double alpha_deg =
          options.points == 1
              ? options.alpha_min_deg
              : options.alpha_min_deg +
                    (options.alpha_max_deg - options.alpha_min_deg) * i /
                        (options.points - 1);
      const DensityState state = state_from_alpha(alpha_deg * kRad, frame);
      const InvariantSet inv = invariants(state);
      const std::array<double, 3> coords = ellipse_coordinates(alpha_deg * kRad);
      if (format == Format::csv) {
        body << fmt_g(alpha_deg) << "," << fmt_g(inv.i_t_prime) << ","
             << fmt_g(inv.i_t) << "," << fmt_g(inv.i_p) << ","
             << fmt_g(inv.i_o) << "," << fmt_g(coords[0]) << ","
             << fmt_g(coords[1]) << "," << fmt_g(coords[2]) << "\n";
      } else {
        io::Json entry = io::Json::object();
        entry["alpha_deg"] = io::round_sig(alpha_deg);
        entry["invariants"] = invariants_json(inv);
        entry["coords"] = io::Json::array({io::round_sig(coords[0]),
                                           io::round_sig(coords[1]),
                                           io::round_sig(coords[2])});
        json_rows.push_back(std::move(entry));
      }
    }
    if (format == Format::json) {
      io::Json doc = io::Json::object();
      doc["meta"] = meta_json("fig3-theory", options.global, fields);
      doc["rows"] = std::move(json_rows);
      body << io::dump(doc);
    }
    return finish(out, options.global, "fig3-theory", body.str(), kExitOk);
  } catch (const std::exception& e) {
    return report_input_error(out, e);
  }
}

int cmd_conserve(const ConserveOptions& options, std::ostream& out) {
  try {
    const Format format = parse_format(options.global);
    if (options.methods.empty()) {
      throw std::invalid_argument("need at least one method");
    }
    std::vector<std::string> methods;
    for (const std::string& method : options.methods) {
      if (method != "exact" && method != "tomo" && method != "direct") {
        throw std::invalid_argument("unknown method '" + method +
                                    "' (expected exact, tomo or direct)");
      }
      if (std::find(methods.begin(), methods.end(), method) == methods.end()) {
        methods.push_back(method);
      }
    }
    const DetectorModel model = parse_model(options.global);

    std::vector<std::string> fields = base_fields(options.global);
    fields.push_back("unitaries=" + options.unitaries);
    fields.push_back("haar_count=" + std::to_string(options.haar_count));
    for (const std::string& method : methods) {
      fields.push_back("method=" + method);
    }

    FramePtr frame = pair_frame(options.global);
    const std::vector<NamedMatrix> unitaries = conserve_unitaries(options);
    const std::vector<MeasurementSetting> settings =
        std::find(methods.begin(), methods.end(), "tomo") != methods.end()
            ? tomography_settings(frame)
            : std::vector<MeasurementSetting>{};

    std::ostringstream body;
    io::Json json_rows = io::Json::array();
    if (format == Format::csv) {
      write_csv_meta(body, "conserve", options.global, fields);
      body << "theta_deg,unitary,method,i_t_prime,i_t,i_p,i_o,deviation,"
              "std_error\n";
    }

    double max_exact_deviation = 0.0;
    std::uint64_t cell_index = 0;
    for (const double theta_deg : conserve_thetas()) {
      const PreparedState prepared =
          prepare_state_hom(theta_deg * kRad, frame);
      const InvariantSet before = invariants(prepared.state);
      for (const NamedMatrix& named : unitaries) {
        const MultiPhotonUnitary lifted =
            photonic_homomorphism(CMatrix(named.matrix), 2);
        const DensityState evolved = evolve(prepared.state, lifted);
        const InvariantSet after = invariants(evolved);

        for (const std::string& method : methods) {
          std::mt19937_64 rng(derive_seed(options.global.seed, cell_index));
          ++cell_index;

          double i_t_prime = 0.0;
          double i_t = -1.0;
          double i_p = -1.0;
          double i_o = -1.0;
          double deviation = 0.0;
          double std_error = -1.0;

          if (method == "exact") {
            i_t_prime = after.i_t_prime;
            i_t = after.i_t;
            i_p = after.i_p;
            i_o = after.i_o;
            deviation = std::max(
                {std::abs(after.i_n - before.i_n),
                 std::abs(after.i_t_prime - before.i_t_prime),
                 std::abs(after.i_t - before.i_t),
                 std::abs(after.i_p - before.i_p),
                 std::abs(after.i_o - before.i_o)});
            max_exact_deviation = std::max(max_exact_deviation, deviation);
          } else if (method == "tomo") {
            TomographyResult recon = [&] {
              if (options.global.shots == 0) {
                std::vector<std::array<double, 3>> probs;
                probs.reserve(settings.size());
                for (const MeasurementSetting& setting : settings) {
                  probs.push_back(exact_probabilities(evolved, setting));
                }
                return reconstruct_ls(settings, probs, frame);
              }
              const CountRecord record = simulate_counts(
                  evolved, settings, options.global.shots, model, rng);
              return reconstruct_from_counts(settings, record, frame);
            }();
            const InvariantSet inv = invariants(recon.state);
            i_t_prime = inv.i_t_prime;
            i_t = inv.i_t;
            i_p = inv.i_p;
            i_o = inv.i_o;
            deviation = std::abs(inv.i_t_prime - after.i_t_prime);
          } else {
            const DirectItprime direct =
                direct_measure_itprime(evolved, options.global.shots, rng);
            i_t_prime = direct.value;
            std_error = direct.std_error;
            deviation = std::abs(direct.value - after.i_t_prime);
          }

          if (format == Format::csv) {
            body << fmt_g(theta_deg) << "," << named.name << "," << method
                 << "," << fmt_g(i_t_prime) << ","
                 << (i_t < 0.0 ? "" : fmt_g(i_t)) << ","
                 << (i_p < 0.0 ? "" : fmt_g(i_p)) << ","
                 << (i_o < 0.0 ? "" : fmt_g(i_o)) << "," << fmt_sci(deviation, 3)
                 << "," << (std_error < 0.0 ? "" : fmt_g(std_error)) << "\n";
          } else {
            io::Json entry = io::Json::object();
            entry["theta_deg"] = io::round_sig(theta_deg);
            entry["unitary"] = named.name;
            entry["method"] = method;
            entry["i_t_prime"] = io::round_sig(i_t_prime);
            if (i_t >= 0.0) entry["i_t"] = io::round_sig(i_t);
            if (i_p >= 0.0) entry["i_p"] = io::round_sig(i_p);
            if (i_o >= 0.0) entry["i_o"] = io::round_sig(i_o);
            entry["deviation"] = io::round_sig(deviation);
            if (std_error >= 0.0) {
              entry["std_error"] = io::round_sig(std_error);
            }
            json_rows.push_back(std::move(entry));
          }
        }
      }
    }

    const bool exact_requested =
        std::find(methods.begin(), methods.end(), "exact") != methods.end();
    const bool pass = !exact_requested || max_exact_deviation <= kConserveTol;
    if (format == Format::csv) {
      body << "# max_exact_deviation=" << fmt_sci(max_exact_deviation, 3)
           << "\n";
      body << "# status=" << (pass ? "pass" : "fail") << "\n";
    } else {
      io::Json doc = io::Json::object();
      doc["meta"] = meta_json("conserve", options.global, fields);
      doc["rows"] = std::move(json_rows);
      doc["max_exact_deviation"] = io::round_sig(max_exact_deviation);
      doc["status"] = pass ? "pass" : "fail";
      body << io::dump(doc);
    }
    return finish(out, options.global, "conserve", body.str(),
                  pass ? kExitOk : kExitMismatch);
  } catch (const std::exception& e) {
    return report_input_error(out, e);
  }
}

int cmd_invariants(const InvariantsOptions& options, std::ostream& out) {
  try {
    const Format format = parse_format(options.global);
    if (options.state_file.empty()) {
      throw std::invalid_argument("missing state file (--state)");
    }
    std::vector<std::string> fields = base_fields(options.global);
    fields.push_back("state_file=" + options.state_file);

    const io::Json doc = io::parse_file(options.state_file);
    const int photons = doc.at("photons").get<int>();
    const int modes = doc.at("modes").get<int>();
    FramePtr frame =
        load_or_build_frame(photons, modes, resolve_frame_cache(options.global));
    const DensityState state = io::density_from_json(doc, frame);
    const InvariantSet inv = invariants(state);

    std::ostringstream body;
    if (format == Format::csv) {
      write_csv_meta(body, "invariants", options.global, fields);
      body << "quantity,value\n";
      body << "photons," << photons << "\n";
      body << "modes," << modes << "\n";
      body << "i_n," << fmt_g(inv.i_n) << "\n";
      body << "i_t_prime," << fmt_g(inv.i_t_prime) << "\n";
      body << "i_t," << fmt_g(inv.i_t) << "\n";
      body << "i_p," << fmt_g(inv.i_p) << "\n";
      body << "i_o," << fmt_g(inv.i_o) << "\n";
      body << "purity," << fmt_g(inv.purity) << "\n";
      for (int i = 0; i < state.coeffs().size(); ++i) {
        body << "coeff_" << std::setw(3) << std::setfill('0') << i
             << std::setfill(' ') << "," << fmt_g(state.coeffs()(i)) << "\n";
      }
    } else {
      io::Json json = io::Json::object();
      json["meta"] = meta_json("invariants", options.global, fields);
      json["photons"] = photons;
      json["modes"] = modes;
      json["invariants"] = invariants_json(inv);
      io::Json coeffs = io::Json::array();
      for (int i = 0; i < state.coeffs().size(); ++i) {
        coeffs.push_back(io::round_sig(state.coeffs()(i)));
      }
      json["coeffs"] = std::move(coeffs);
      body << io::dump(json);
    }
    return finish(out, options.global, "invariants", body.str(), kExitOk);
  } catch (const std::exception& e) {
    return report_input_error(out, e);
  }
}

int cmd_prepare(const PrepareOptions& options, std::ostream& out) {
  try {
    const Format format = parse_format(options.global);
    if (options.theta_deg.empty()) {
      throw std::invalid_argument("need at least one angle");
    }
    std::vector<std::string> fields = base_fields(options.global);
    for (const double theta : options.theta_deg) {
      fields.push_back("theta_deg=" + fmt_g(theta));
    }

    FramePtr frame = pair_frame(options.global);
    std::ostringstream body;
    io::Json json_rows = io::Json::array();
    if (format == Format::csv) {
      write_csv_meta(body, "prepare", options.global, fields);
      body << "theta_deg,alpha_deg,amp_2h0v,amp_1h1v,amp_0h2v,"
              "postselect_probability,i_n,i_t_prime,i_t,i_p,i_o,purity\n";
    }
    for (const double theta_deg : options.theta_deg) {
      if (theta_deg < 0.0 || theta_deg > 45.0) {
        throw std::invalid_argument("theta_deg must lie in [0, 45]");
      }
      const PreparedState prepared =
          prepare_state_hom(theta_deg * kRad, frame);
      const InvariantSet inv = invariants(prepared.state);
      const double c = std::cos(2.0 * theta_deg * kRad);
      const double postselect = (1.0 + c * c) / 4.0;
      const double amp_bunched = std::cos(prepared.alpha);
      const double amp_split = std::sin(prepared.alpha);
      if (format == Format::csv) {
        body << fmt_g(theta_deg) << "," << fmt_g(prepared.alpha / kRad) << ","
             << fmt_g(amp_bunched) << "," << fmt_g(amp_split) << "," << fmt_g(0.0)
             << "," << fmt_g(postselect) << "," << fmt_g(inv.i_n) << ","
             << fmt_g(inv.i_t_prime) << "," << fmt_g(inv.i_t) << ","
             << fmt_g(inv.i_p) << "," << fmt_g(inv.i_o) << ","
             << fmt_g(inv.purity) << "\n";
      } else {
        io::Json entry = io::Json::object();
        entry["theta_deg"] = io::round_sig(theta_deg);
        entry["alpha_deg"] = io::round_sig(prepared.alpha / kRad);
        entry["amplitudes"] = io::Json::array({io::round_sig(amp_bunched),
                                               io::round_sig(amp_split), 0.0});
        entry["postselect_probability"] = io::round_sig(postselect);
        entry["invariants"] = invariants_json(inv);
        json_rows.push_back(std::move(entry));
      }
    }
    if (format == Format::json) {
      io::Json doc = io::Json::object();
      doc["meta"] = meta_json("prepare", options.global, fields);
      doc["rows"] = std::move(json_rows);
      body << io::dump(doc);
    }
    return finish(out, options.global, "prepare", body.str(), kExitOk);
  } catch (const std::exception& e) {
    return report_input_error(out, e);
  }
}

int cmd_tomo_simulate(const TomoSimulateOptions& options, std::ostream& out) {
  try {
    const Format format = parse_format(options.global);
    if (options.theta_deg < 0.0 || options.theta_deg > 45.0) {
      throw std::invalid_argument("theta_deg must lie in [0, 45]");
    }
    const DetectorModel model = parse_model(options.global);
    std::vector<std::string> fields = base_fields(options.global);
    fields.push_back("theta_deg=" + fmt_g(options.theta_deg));
    fields.push_back("unitary=" + options.unitary);

    FramePtr frame = pair_frame(options.global);
    DensityState state =
        prepare_state_hom(options.theta_deg * kRad, frame).state;
    if (!options.unitary.empty()) {
      const NamedUnitary& named = find_named_unitary(options.unitary);
      state = evolve(state,
                     photonic_homomorphism(CMatrix(named.matrix), 2));
    }
    const std::vector<MeasurementSetting> settings =
        tomography_settings(frame);

    std::ostringstream body;
    if (options.global.shots == 0) {
      if (format == Format::csv) {
        write_csv_meta(body, "tomo-simulate", options.global, fields);
        body << "setting,qwp_deg,hwp_deg,p_2h0v,p_1h1v,p_0h2v\n";
        for (std::size_t i = 0; i < settings.size(); ++i) {
          const std::array<double, 3> probs =
              exact_probabilities(state, settings[i]);
          body << i << "," << fmt_g(settings[i].qwp.angle / kRad) << ","
               << fmt_g(settings[i].hwp.angle / kRad) << ","
               << fmt_g(probs[0]) << "," << fmt_g(probs[1]) << ","
               << fmt_g(probs[2]) << "\n";
        }
      } else {
        io::Json doc = io::Json::object();
        doc["meta"] = meta_json("tomo-simulate", options.global, fields);
        doc["theta_deg"] = io::round_sig(options.theta_deg);
        doc["unitary"] = options.unitary;
        io::Json rows = io::Json::array();
        for (const MeasurementSetting& setting : settings) {
          const std::array<double, 3> probs =
              exact_probabilities(state, setting);
          io::Json entry = io::Json::object();
          entry["qwp_deg"] = io::round_sig(setting.qwp.angle / kRad);
          entry["hwp_deg"] = io::round_sig(setting.hwp.angle / kRad);
          entry["probabilities"] =
              io::Json::array({io::round_sig(probs[0]), io::round_sig(probs[1]),
                               io::round_sig(probs[2])});
          rows.push_back(std::move(entry));
        }
        doc["probabilities"] = std::move(rows);
        body << io::dump(doc);
      }
      return finish(out, options.global, "tomo-simulate", body.str(), kExitOk);
    }

    std::mt19937_64 rng(derive_seed(options.global.seed, 0));
    const CountRecord record =
        simulate_counts(state, settings, options.global.shots, model, rng);
    if (format == Format::csv) {
      write_csv_meta(body, "tomo-simulate", options.global, fields);
      body << "setting,qwp_deg,hwp_deg,shots,recorded,c_2h0v,c_1h1v,c_0h2v,"
              "pair_12,pair_13,pair_14,pair_23,pair_24,pair_34\n";
      for (std::size_t i = 0; i < record.settings.size(); ++i) {
        const SettingCounts& counts = record.settings[i];
        body << i << "," << fmt_g(settings[i].qwp.angle / kRad) << ","
             << fmt_g(settings[i].hwp.angle / kRad) << "," << counts.shots
             << "," << counts.recorded;
        for (const long c : counts.class_counts) body << "," << c;
        for (const long c : counts.pair_counts) body << "," << c;
        body << "\n";
      }
    } else {
      io::Json doc = io::Json::object();
      doc["meta"] = meta_json("tomo-simulate", options.global, fields);
      doc["theta_deg"] = io::round_sig(options.theta_deg);
      doc["unitary"] = options.unitary;
      io::Json plate_list = io::Json::array();
      for (const MeasurementSetting& setting : settings) {
        io::Json entry = io::Json::object();
        entry["qwp_deg"] = io::round_sig(setting.qwp.angle / kRad);
        entry["hwp_deg"] = io::round_sig(setting.hwp.angle / kRad);
        plate_list.push_back(std::move(entry));
      }
      doc["settings"] = std::move(plate_list);
      doc["record"] = io::to_json(record);
      body << io::dump(doc);
    }
    return finish(out, options.global, "tomo-simulate", body.str(), kExitOk);
  } catch (const std::exception& e) {
    return report_input_error(out, e);
  }
}

int cmd_tomo_reconstruct(const TomoReconstructOptions& options,
                         std::ostream& out) {
  try {
    const Format format = parse_format(options.global);
    if (options.counts_file.empty()) {
      throw std::invalid_argument("missing counts file (--counts)");
    }
    ReconstructionMethod method = ReconstructionMethod::linear;
    if (options.method == "constrained") {
      method = ReconstructionMethod::constrained;
    } else if (options.method != "linear") {
      throw std::invalid_argument("unknown method '" + options.method +
                                  "' (expected linear or constrained)");
    }
    std::vector<std::string> fields = base_fields(options.global);
    fields.push_back("counts_file=" + options.counts_file);
    fields.push_back("method=" + options.method);
    fields.push_back("reference_file=" + options.reference_file);

    const io::Json doc = io::parse_file(options.counts_file);
    const CountRecord record = io::count_record_from_json(
        doc.contains("record") ? doc.at("record") : doc);

    FramePtr frame = pair_frame(options.global);
    const std::vector<MeasurementSetting> settings =
        tomography_settings(frame);
    if (record.settings.size() != settings.size()) {
      throw std::invalid_argument(
          "count record must cover the six benchmark settings");
    }
    const TomographyResult result =
        reconstruct_from_counts(settings, record, frame, method);
    const InvariantSet inv = invariants(result.state);

    double ref_fidelity = -1.0;
    if (!options.reference_file.empty()) {
      const io::Json ref_doc = io::parse_file(options.reference_file);
      const DensityState reference = io::density_from_json(ref_doc, frame);
      ref_fidelity = fidelity(result.state.rho(), reference.rho());
    }

    std::ostringstream body;
    if (format == Format::csv) {
      write_csv_meta(body, "tomo-reconstruct", options.global, fields);
      body << "quantity,value\n";
      body << "method," << options.method << "\n";
      body << "residual," << fmt_g(result.residual) << "\n";
      body << "cost," << fmt_g(result.cost) << "\n";
      if (ref_fidelity >= 0.0) {
        body << "reference_fidelity," << fmt_g(ref_fidelity) << "\n";
      }
      body << "i_n," << fmt_g(inv.i_n) << "\n";
      body << "i_t_prime," << fmt_g(inv.i_t_prime) << "\n";
      body << "i_t," << fmt_g(inv.i_t) << "\n";
      body << "i_p," << fmt_g(inv.i_p) << "\n";
      body << "i_o," << fmt_g(inv.i_o) << "\n";
      body << "purity," << fmt_g(inv.purity) << "\n";
      const CMatrix& rho = result.state.rho();
      for (int i = 0; i < rho.rows(); ++i) {
        for (int j = 0; j < rho.cols(); ++j) {
          body << "rho_" << i << j << "_re," << fmt_g(rho(i, j).real()) << "\n";
          body << "rho_" << i << j << "_im," << fmt_g(rho(i, j).imag()) << "\n";
        }
      }
    } else {
      io::Json json = io::Json::object();
      json["meta"] = meta_json("tomo-reconstruct", options.global, fields);
      json["method"] = options.method;
      json["residual"] = io::round_sig(result.residual);
      json["cost"] = io::round_sig(result.cost);
      if (ref_fidelity >= 0.0) {
        json["reference_fidelity"] = io::round_sig(ref_fidelity);
      }
      json["invariants"] = invariants_json(inv);
      json["state"] = io::to_json(result.state);
      body << io::dump(json);
    }
    return finish(out, options.global, "tomo-reconstruct", body.str(),
                  kExitOk);
  } catch (const std::exception& e) {
    return report_input_error(out, e);
  }
}

int cmd_sample_u2(const SampleU2Options& options, std::ostream& out) {
  try {
    const Format format = parse_format(options.global);
    std::vector<std::string> fields = base_fields(options.global);
    fields.push_back("set=" + options.set);
    fields.push_back("count=" + std::to_string(options.count));

    struct SampleRow {
      std::string name;
      HaarU2Params params;
      double theta1_deg, theta2_deg, theta3_deg;
      double plate_residual;
    };
    std::vector<SampleRow> rows;

    if (options.set == "table-s2") {
      for (const NamedUnitary& u : experiment_unitaries()) {
        rows.push_back({u.name, u.params, u.theta1_deg, u.theta2_deg,
                        u.theta3_deg,
                        phase_distance(u.plate_matrix(), u.matrix)});
      }
    } else if (options.set == "haar") {
      if (options.count < 1) {
        throw std::invalid_argument("count must be >= 1");
      }
      for (int i = 0; i < options.count; ++i) {
        std::mt19937_64 rng(
            derive_seed(options.global.seed, static_cast<std::uint64_t>(i)));
        const HaarU2Sample sample = sample_haar_u2(rng);
        const QhqAngles angles = qhq_decompose(sample.matrix);
        rows.push_back({"H" + std::to_string(i + 1), sample.params,
                        angles.theta1 / kRad, angles.theta2 / kRad,
                        angles.theta3 / kRad, angles.residual});
      }
    } else {
      throw std::invalid_argument("unknown set '" + options.set +
                                  "' (expected table-s2 or haar)");
    }

    std::ostringstream body;
    if (format == Format::csv) {
      write_csv_meta(body, "sample-u2", options.global, fields);
      body << "name,psi,chi,xi,alpha,theta1_deg,theta2_deg,theta3_deg,"
              "plate_residual\n";
      for (const SampleRow& row : rows) {
        body << row.name << "," << fmt_g(row.params.psi) << ","
             << fmt_g(row.params.chi) << "," << fmt_g(row.params.xi) << ","
             << fmt_g(row.params.alpha) << "," << fmt_g(row.theta1_deg) << ","
             << fmt_g(row.theta2_deg) << "," << fmt_g(row.theta3_deg) << ","
             << fmt_sci(row.plate_residual, 3) << "\n";
      }
    } else {
      io::Json doc = io::Json::object();
      doc["meta"] = meta_json("sample-u2", options.global, fields);
      io::Json json_rows = io::Json::array();
      for (const SampleRow& row : rows) {
        io::Json entry = io::Json::object();
        entry["name"] = row.name;
        entry["psi"] = io::round_sig(row.params.psi);
        entry["chi"] = io::round_sig(row.params.chi);
        entry["xi"] = io::round_sig(row.params.xi);
        entry["alpha"] = io::round_sig(row.params.alpha);
        entry["theta1_deg"] = io::round_sig(row.theta1_deg);
        entry["theta2_deg"] = io::round_sig(row.theta2_deg);
        entry["theta3_deg"] = io::round_sig(row.theta3_deg);
        entry["plate_residual"] = io::round_sig(row.plate_residual);
        json_rows.push_back(std::move(entry));
      }
      doc["rows"] = std::move(json_rows);
      body << io::dump(doc);
    }
    return finish(out, options.global, "sample-u2", body.str(), kExitOk);
  } catch (const std::exception& e) {
    return report_input_error(out, e);
  }
}

int cmd_dip_fit(const DipFitOptions& options, std::ostream& out) {
  try {
    const Format format = parse_format(options.global);
    std::vector<std::string> fields = base_fields(options.global);
    fields.push_back("data_file=" + options.data_file);

    RVector delays;
    RVector rates;
    bool synthesized = false;
    DipModel truth{1.0, 0.968, 0.9, 0.3, 3.0};

    if (options.data_file.empty()) {
      synthesized = true;
      const int count = 81;
      delays.resize(count);
      rates.resize(count);
      std::mt19937_64 rng(derive_seed(options.global.seed, 0));
      std::normal_distribution<double> noise(0.0, 0.01);
      for (int i = 0; i < count; ++i) {
        delays(i) = -4.5 + 0.12 * i;
        rates(i) = truth(delays(i)) + noise(rng);
      }
    } else if (options.data_file.size() > 5 &&
               options.data_file.substr(options.data_file.size() - 5) ==
                   ".json") {
      const io::Json doc = io::parse_file(options.data_file);
      std::vector<double> d;
      std::vector<double> r;
      if (doc.is_object() && doc.contains("delays") && doc.contains("rates")) {
        for (const auto& v : doc.at("delays")) d.push_back(v.get<double>());
        for (const auto& v : doc.at("rates")) r.push_back(v.get<double>());
      } else if (doc.is_array()) {
        for (const auto& pair : doc) {
          if (!pair.is_array() || pair.size() != 2) {
            throw std::runtime_error(options.data_file +
                                     ": expected [delay, rate] pairs");
          }
          d.push_back(pair.at(0).get<double>());
          r.push_back(pair.at(1).get<double>());
        }
      } else {
        throw std::runtime_error(options.data_file +
                                 ": expected delays/rates object or pair list");
      }
      if (d.size() != r.size()) {
        throw std::runtime_error(options.data_file +
                                 ": delays and rates differ in length");
      }
      delays = Eigen::Map<RVector>(d.data(), static_cast<Eigen::Index>(d.size()));
      rates = Eigen::Map<RVector>(r.data(), static_cast<Eigen::Index>(r.size()));
    } else {
      const std::string text = io::read_text_file(options.data_file);
      std::vector<double> d;
      std::vector<double> r;
      std::istringstream lines(text);
      std::string line;
      while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream cells(line);
        double delay, rate;
        if (cells >> delay >> rate) {
          d.push_back(delay);
          r.push_back(rate);
        }
      }
      if (d.empty()) {
        throw std::runtime_error(options.data_file +
                                 ": no numeric delay/rate rows found");
      }
      delays = Eigen::Map<RVector>(d.data(), static_cast<Eigen::Index>(d.size()));
      rates = Eigen::Map<RVector>(r.data(), static_cast<Eigen::Index>(r.size()));
    }

    const DipFit fit = fit_hom_dip(delays, rates);

    std::ostringstream body;
    if (format == Format::csv) {
      write_csv_meta(body, "dip-fit", options.global, fields);
      body << "quantity,value\n";
      body << "samples," << delays.size() << "\n";
      body << "a," << fmt_g(fit.model.a) << "\n";
      body << "b," << fmt_g(fit.model.b) << "\n";
      body << "sigma," << fmt_g(fit.model.sigma) << "\n";
      body << "x0," << fmt_g(fit.model.x0) << "\n";
      body << "k," << fmt_g(fit.model.k) << "\n";
      body << "visibility," << fmt_g(fit.model.visibility()) << "\n";
      body << "residual," << fmt_g(fit.residual) << "\n";
      body << "iterations," << fit.iterations << "\n";
      body << "converged," << (fit.converged ? "true" : "false") << "\n";
      if (synthesized) {
        body << "true_a," << fmt_g(truth.a) << "\n";
        body << "true_b," << fmt_g(truth.b) << "\n";
        body << "true_sigma," << fmt_g(truth.sigma) << "\n";
        body << "true_x0," << fmt_g(truth.x0) << "\n";
        body << "true_k," << fmt_g(truth.k) << "\n";
        body << "true_visibility," << fmt_g(truth.visibility()) << "\n";
      }
    } else {
      io::Json doc = io::Json::object();
      doc["meta"] = meta_json("dip-fit", options.global, fields);
      doc["samples"] = delays.size();
      io::Json model = io::Json::object();
      model["a"] = io::round_sig(fit.model.a);
      model["b"] = io::round_sig(fit.model.b);
      model["sigma"] = io::round_sig(fit.model.sigma);
      model["x0"] = io::round_sig(fit.model.x0);
      model["k"] = io::round_sig(fit.model.k);
      model["visibility"] = io::round_sig(fit.model.visibility());
      doc["model"] = std::move(model);
      doc["residual"] = io::round_sig(fit.residual);
      doc["iterations"] = fit.iterations;
      doc["converged"] = fit.converged;
      if (synthesized) {
        io::Json true_model = io::Json::object();
        true_model["a"] = io::round_sig(truth.a);
        true_model["b"] = io::round_sig(truth.b);
        true_model["sigma"] = io::round_sig(truth.sigma);
        true_model["x0"] = io::round_sig(truth.x0);
        true_model["k"] = io::round_sig(truth.k);
        true_model["visibility"] = io::round_sig(truth.visibility());
        doc["true_model"] = std::move(true_model);
      }
      body << io::dump(doc);
    }
    return finish(out, options.global, "dip-fit", body.str(), kExitOk);
  } catch (const std::exception& e) {
    return report_input_error(out, e);
  }
}

}  // namespace lonsim::cli
