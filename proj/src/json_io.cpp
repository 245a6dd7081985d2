/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "lonsim/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lonsim/random.hpp"
#include "lonsim/version.hpp"

namespace lonsim::io {

namespace {

Json complex_to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::runtime_error("expected [re, im] pair");
  }
  return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

std::string model_to_string(DetectorModel model) {
  return model == DetectorModel::ideal ? "ideal" : "splitting";
}

DetectorModel model_from_string(const std::string& name) {
  if (name == "ideal") return DetectorModel::ideal;
  if (name == "splitting") return DetectorModel::splitting;
  throw std::runtime_error("unknown detector model '" + name + "'");
}

}  // namespace

double round_sig(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  const double magnitude = std::floor(std::log10(std::abs(value)));
  const double factor = std::pow(10.0, digits - 1 - magnitude);
  return std::round(value * factor) / factor;
}

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CVector& v) {
  Json row = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    row.push_back(complex_to_json(v(i)));
  }
  return row;
}

CMatrix cmatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::runtime_error("matrix: expected non-empty array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
  if (cols == 0) {
    throw std::runtime_error("matrix: expected non-empty rows");
  }
  CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) {
      throw std::runtime_error("matrix: ragged rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          complex_from_json(row.at(c));
    }
  }
  return m;
}

CVector cvector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::runtime_error("vector: expected non-empty array");
  }
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j.at(i));
  }
  return v;
}

Json to_json(const FockState& state) {
  Json out = Json::array();
  for (const int occ : state.occupations) out.push_back(occ);
  return out;
}

FockState fock_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::runtime_error("occupation list: expected array");
  }
  FockState state;
  state.occupations.reserve(j.size());
  for (const Json& entry : j) {
    const int occ = entry.get<int>();
    if (occ < 0) throw std::runtime_error("occupation list: negative entry");
    state.occupations.push_back(occ);
  }
  return state;
}

Json to_json(const InvariantSet& inv) {
  Json out = Json::object();
  out["i_n"] = round_sig(inv.i_n);
  out["i_t_prime"] = round_sig(inv.i_t_prime);
  out["i_t"] = round_sig(inv.i_t);
  out["i_p"] = round_sig(inv.i_p);
  out["i_o"] = round_sig(inv.i_o);
  out["purity"] = round_sig(inv.purity);
  return out;
}

InvariantSet invariants_from_json(const Json& j) {
  InvariantSet inv;
  inv.i_n = j.at("i_n").get<double>();
  inv.i_t_prime = j.at("i_t_prime").get<double>();
  inv.i_t = j.at("i_t").get<double>();
  inv.i_p = j.at("i_p").get<double>();
  inv.i_o = j.at("i_o").get<double>();
  inv.purity = j.at("purity").get<double>();
  return inv;
}

Json to_json(const DensityState& state) {
  Json out = Json::object();
  out["photons"] = state.frame().photons();
  out["modes"] = state.frame().modes();
  out["rho"] = to_json(state.rho());
  return out;
}

DensityState density_from_json(const Json& j, FramePtr frame,
                               StateValidation mode) {
  if (!frame) {
    throw std::runtime_error("density_from_json: frame must be set");
  }
  const int photons = j.at("photons").get<int>();
  const int modes = j.at("modes").get<int>();
  if (photons != frame->photons() || modes != frame->modes()) {
    std::ostringstream msg;
    msg << "density_from_json: state sector (" << photons << ", " << modes
        << ") does not match frame (" << frame->photons() << ", "
        << frame->modes() << ")";
    throw std::runtime_error(msg.str());
  }
  const CMatrix rho = cmatrix_from_json(j.at("rho"));
  return density_vector(rho, std::move(frame), mode);
}

Json to_json(const SettingCounts& counts) {
  Json out = Json::object();
  out["class_counts"] = counts.class_counts;
  out["pair_counts"] = counts.pair_counts;
  out["shots"] = counts.shots;
  out["recorded"] = counts.recorded;
  return out;
}

SettingCounts setting_counts_from_json(const Json& j) {
  SettingCounts counts;
  const Json& classes = j.at("class_counts");
  const Json& pairs = j.at("pair_counts");
  if (!classes.is_array() || classes.size() != 3) {
    throw std::runtime_error("setting counts: class_counts needs 3 entries");
  }
  if (!pairs.is_array() || pairs.size() != 6) {
    throw std::runtime_error("setting counts: pair_counts needs 6 entries");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    counts.class_counts[i] = classes.at(i).get<long>();
  }
  for (std::size_t i = 0; i < 6; ++i) {
    counts.pair_counts[i] = pairs.at(i).get<long>();
  }
  counts.shots = j.at("shots").get<long>();
  counts.recorded = j.at("recorded").get<long>();
  return counts;
}

Json to_json(const CountRecord& record) {
  Json out = Json::object();
  out["model"] = model_to_string(record.model);
  out["shots_per_setting"] = record.shots_per_setting;
  Json settings = Json::array();
  for (const SettingCounts& counts : record.settings) {
    settings.push_back(to_json(counts));
  }
  out["settings"] = std::move(settings);
  return out;
}

CountRecord count_record_from_json(const Json& j) {
  CountRecord record;
  record.model = model_from_string(j.at("model").get<std::string>());
  record.shots_per_setting = j.at("shots_per_setting").get<std::uint64_t>();
  const Json& settings = j.at("settings");
  if (!settings.is_array() || settings.empty()) {
    throw std::runtime_error("count record: settings must be non-empty");
  }
  record.settings.reserve(settings.size());
  for (const Json& entry : settings) {
    record.settings.push_back(setting_counts_from_json(entry));
  }
  return record;
}

Json to_json(const HermitianFrame& frame) {
  Json out = Json::object();
  out["photons"] = frame.photons();
  out["modes"] = frame.modes();
  out["ordering_version"] = kOrderingVersion;
  const int tangent = frame.tangent_size();
  out["partition"] = Json::array({1, tangent - 1, frame.size() - tangent});
  Json elements = Json::array();
  for (const CMatrix& e : frame.elements()) {
    elements.push_back(to_json(e));
  }
  out["elements"] = std::move(elements);
  Json observables = Json::array();
  for (const CMatrix& o : frame.observables()) {
    observables.push_back(to_json(o));
  }
  out["observables"] = std::move(observables);
  return out;
}

FramePtr frame_from_json(const Json& j) {
  const int photons = j.at("photons").get<int>();
  const int modes = j.at("modes").get<int>();
  const int version = j.at("ordering_version").get<int>();
  if (version != kOrderingVersion) {
    std::ostringstream msg;
    msg << "frame: ordering version " << version << " does not match "
        << kOrderingVersion;
    throw std::runtime_error(msg.str());
  }
  auto basis = std::make_shared<const FockBasis>(
      enumerate_fock_basis(photons, modes));

  const Json& partition = j.at("partition");
  if (!partition.is_array() || partition.size() != 3 ||
      partition.at(0).get<int>() != 1 ||
      partition.at(1).get<int>() != modes * modes - 1 ||
      partition.at(2).get<int>() !=
          basis->dim() * basis->dim() - modes * modes) {
    throw std::runtime_error("frame: partition does not match sector");
  }

  std::vector<CMatrix> elements;
  const Json& element_list = j.at("elements");
  elements.reserve(element_list.size());
  for (const Json& entry : element_list) {
    elements.push_back(cmatrix_from_json(entry));
  }
  std::vector<CMatrix> observables;
  const Json& observable_list = j.at("observables");
  observables.reserve(observable_list.size());
  for (const Json& entry : observable_list) {
    observables.push_back(cmatrix_from_json(entry));
  }
  return std::make_shared<const HermitianFrame>(
      std::move(basis), std::move(elements), std::move(observables));
}

std::string frame_cache_name(int photons, int modes) {
  std::ostringstream tag;
  tag << "frame-n" << photons << "-m" << modes << "-ord" << kOrderingVersion;
  std::ostringstream out;
  out << tag.str() << '-' << std::hex << fnv1a64(tag.str()) << ".json";
  return out.str();
}

void save_frame(const HermitianFrame& frame, const std::string& path) {
  write_text_file(path, dump(to_json(frame)));
}

FramePtr load_frame(const std::string& path) {
  return frame_from_json(parse_file(path));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text, const std::string& source_label) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(source_label + ": " + e.what());
  }
}

Json parse_file(const std::string& path) {
  return parse(read_text_file(path), path);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace lonsim::io
