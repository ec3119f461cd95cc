// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#include "secsim/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace secsim {

namespace {

constexpr std::uint64_t kCurveSeedSalt = 0x5eedc04ad1cebeefULL;

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid number for '" + key + "': " + value);
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid integer for '" + key + "': " + value);
  }
}

}  // namespace

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::rho2:
      return "rho2";
    case SweepAxis::power_db:
      return "power_db";
    case SweepAxis::target_rate:
      return "target_rate";
  }
  throw std::logic_error("unknown axis");
}

SweepAxis axis_from_string(const std::string& name) {
  if (name == "rho2") return SweepAxis::rho2;
  if (name == "power_db") return SweepAxis::power_db;
  if (name == "target_rate") return SweepAxis::target_rate;
  throw std::invalid_argument("unknown sweep axis '" + name +
                              "' (expected rho2, power_db or target_rate)");
}

void SweepSpec::validate() const {
  if (points.empty()) throw std::invalid_argument("sweep needs at least one point");
  if (!std::is_sorted(points.begin(), points.end()))
    throw std::invalid_argument("sweep points must be sorted ascending");
  if (schemes.empty()) throw std::invalid_argument("sweep needs at least one scheme");
  if (variants.empty()) throw std::invalid_argument("sweep needs at least one (M, N) variant");
  if (trials < 1000) throw std::invalid_argument("sweep trials must be >= 1e3");
  if (grid_resolution < 11)
    throw std::invalid_argument("grid_resolution must be >= 11");
  if (curve_mc_samples < 10000)
    throw std::invalid_argument("curve_mc_samples must be >= 1e4");
  if (axis == SweepAxis::rho2)
    for (double v : points)
      if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("rho2 points must lie in [0, 1]");
  if (axis == SweepAxis::target_rate)
    for (double v : points)
      if (!(v >= 0.0))
        throw std::invalid_argument("target_rate points must be >= 0");
}

SystemConfig row_config(const SweepSpec& spec, double axis_value, Scheme scheme,
                        int alice_antennas, int relay_antennas) {
  SystemConfig cfg = spec.base;
  cfg.scheme = scheme;
  cfg.alice_antennas = alice_antennas;
  cfg.relay_antennas = relay_antennas;
  switch (spec.axis) {
    case SweepAxis::rho2:
      cfg.rho2 = axis_value;
      break;
    case SweepAxis::power_db:
      cfg.power = db_to_linear(axis_value);
      break;
    case SweepAxis::target_rate:
      cfg.target_rate = axis_value;
      break;
  }
  cfg.validate();
  return cfg;
}

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();

  SweepResult result;
  result.spec = spec;

  std::map<std::uint64_t, ExpectedWiretapCurve> curve_cache;
  std::size_t row_index = 0;
  const std::size_t total_rows =
      spec.points.size() * spec.schemes.size() * spec.variants.size();

  for (double value : spec.points) {
    for (Scheme scheme : spec.schemes) {
      for (const auto& [m, n] : spec.variants) {
        const SystemConfig cfg = row_config(spec, value, scheme, m, n);
        const std::uint64_t digest = curve_config_digest(cfg);
        auto it = curve_cache.find(digest);
        if (it == curve_cache.end()) {
          const std::uint64_t curve_seed =
              derive_stream_key(spec.seed ^ kCurveSeedSalt, digest);
          it = curve_cache
                   .emplace(digest,
                            build_curve(cfg, spec.grid_resolution,
                                        spec.curve_mc_samples, curve_seed,
                                        options.workers))
                   .first;
          ++result.curve_builds;
        }

        const std::uint64_t row_seed = derive_stream_key(spec.seed, row_index);
        OutageOptions outage_options;
        outage_options.workers = options.workers;
        outage_options.trace_rows = options.trace_rows;
        std::vector<TrialRecord> records;
        OutageEstimate est =
            estimate_outage(cfg, it->second, spec.trials, row_seed, outage_options,
                            options.trace ? &records : nullptr);

        SweepRow row{spec.axis, value, scheme, m, n, est};
        result.rows.push_back(row);
        if (options.trace) {
          for (std::size_t t = 0; t < records.size(); ++t) {
            const TrialRecord& rec = records[t];
            char buf[256];
            std::snprintf(buf, sizeof buf, "%s,%s,%s,%d,%d,%zu,%.9g,%.9g,%.9g,%.9g,%d\n",
                          to_string(spec.axis).c_str(), fmt6(value).c_str(),
                          to_string(scheme).c_str(), m, n, t, rec.g_b, rec.g_e,
                          rec.jam_gain, rec.ratio, rec.outage ? 1 : 0);
            *options.trace << buf;
          }
        }
        ++row_index;
        if (options.progress) {
          *options.progress << "row " << row_index << "/" << total_rows << " "
                            << to_string(spec.axis) << "=" << fmt6(value) << " "
                            << to_string(scheme) << " M=" << m << " N=" << n
                            << " p_out=" << fmt6(est.p_out) << "\n";
        }
      }
    }
  }

  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void emit_csv(const SweepResult& result, std::ostream& os) {
  const SweepSpec& spec = result.spec;
  os << "# secsim " << SECSIM_VERSION << " sweep\n";
  os << "# name=" << (spec.name.empty() ? "-" : spec.name) << "\n";
  os << "# axis=" << to_string(spec.axis) << "\n";
  os << "# points=";
  for (std::size_t i = 0; i < spec.points.size(); ++i)
    os << (i ? "," : "") << fmt6(spec.points[i]);
  os << "\n# schemes=";
  for (std::size_t i = 0; i < spec.schemes.size(); ++i)
    os << (i ? "," : "") << to_string(spec.schemes[i]);
  os << "\n# variants=";
  for (std::size_t i = 0; i < spec.variants.size(); ++i)
    os << (i ? "," : "") << spec.variants[i].first << ":" << spec.variants[i].second;
  os << "\n";
  os << "# base: power_db=" << fmt6(linear_to_db(spec.base.power))
     << " rho2=" << fmt6(spec.base.rho2)
     << " target_rate_bits=" << fmt6(spec.base.target_rate)
     << " sigma2_ab=" << fmt6(spec.base.sigma2_ab)
     << " sigma2_ae=" << fmt6(spec.base.sigma2_ae)
     << " sigma2_rb=" << fmt6(spec.base.sigma2_rb)
     << " sigma2_re=" << fmt6(spec.base.sigma2_re) << "\n";
  os << "# trials=" << spec.trials << " seed=" << spec.seed
     << " grid_resolution=" << spec.grid_resolution
     << " curve_mc_samples=" << spec.curve_mc_samples << "\n";
  os << "# curve_builds=" << result.curve_builds << "\n";
  os << "# wall_time_s=" << fmt6(result.wall_time_s) << "\n";
  os << "axis,value,scheme,M,N,p_out,ci95,trials,seed\n";
  for (const SweepRow& row : result.rows) {
    os << to_string(row.axis) << "," << fmt6(row.value) << ","
       << to_string(row.scheme) << "," << row.alice_antennas << ","
       << row.relay_antennas << "," << fmt6(row.estimate.p_out) << ","
       << fmt6(row.estimate.ci95_half_width) << "," << row.estimate.trials << ","
       << row.estimate.seed << "\n";
  }
}

void emit_csv(const SweepResult& result, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit_csv(result, os);
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

std::string csv_string(const SweepResult& result) {
  std::ostringstream os;
  emit_csv(result, os);
  return os.str();
}

std::vector<SweepRow> parse_csv(std::istream& is) {
  std::vector<SweepRow> rows;
  std::string line;
  bool saw_header = false;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != "axis,value,scheme,M,N,p_out,ci95,trials,seed")
        throw std::invalid_argument("unexpected CSV header: " + line);
      saw_header = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 9)
      throw std::invalid_argument("malformed CSV row: " + line);
    SweepRow row;
    row.axis = axis_from_string(fields[0]);
    row.value = parse_double("value", fields[1]);
    row.scheme = scheme_from_string(fields[2]);
    row.alice_antennas = static_cast<int>(parse_u64("M", fields[3]));
    row.relay_antennas = static_cast<int>(parse_u64("N", fields[4]));
    row.estimate.p_out = parse_double("p_out", fields[5]);
    row.estimate.ci95_half_width = parse_double("ci95", fields[6]);
    row.estimate.trials = parse_u64("trials", fields[7]);
    row.estimate.seed = parse_u64("seed", fields[8]);
    rows.push_back(row);
  }
  if (!saw_header) throw std::invalid_argument("CSV has no header row");
  return rows;
}

SweepSpec parse_sweep_spec(std::istream& is, const std::string& name) {
  SweepSpec spec;
  spec.name = name;
  spec.base = SystemConfig{};
  spec.base.power = db_to_linear(3.0);
  spec.schemes = {Scheme::traditional_alice_an, Scheme::relay_jamming};
  spec.variants = {{4, 2}};

  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 'key = value', got: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "axis") {
      spec.axis = axis_from_string(value);
    } else if (key == "points") {
      spec.points.clear();
      for (const auto& item : split(value, ','))
        spec.points.push_back(parse_double(key, item));
    } else if (key == "schemes") {
      spec.schemes.clear();
      for (const auto& item : split(value, ','))
        spec.schemes.push_back(scheme_from_string(item));
    } else if (key == "variants") {
      spec.variants.clear();
      for (const auto& item : split(value, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("variant must be M:N, got: " + item);
        spec.variants.emplace_back(
            static_cast<int>(parse_u64(key, trim(item.substr(0, colon)))),
            static_cast<int>(parse_u64(key, trim(item.substr(colon + 1)))));
      }
    } else if (key == "trials") {
      spec.trials = parse_u64(key, value);
    } else if (key == "seed") {
      spec.seed = parse_u64(key, value);
    } else if (key == "grid_resolution") {
      spec.grid_resolution = static_cast<int>(parse_u64(key, value));
    } else if (key == "curve_mc_samples") {
      spec.curve_mc_samples = parse_u64(key, value);
    } else if (key == "power_db") {
      // dB-to-linear conversion happens here, exactly once
      spec.base.power = db_to_linear(parse_double(key, value));
    } else if (key == "rho2") {
      spec.base.rho2 = parse_double(key, value);
    } else if (key == "target_rate_bits") {
      spec.base.target_rate = parse_double(key, value);
    } else if (key == "sigma2_ab") {
      spec.base.sigma2_ab = parse_double(key, value);
    } else if (key == "sigma2_ae") {
      spec.base.sigma2_ae = parse_double(key, value);
    } else if (key == "sigma2_rb") {
      spec.base.sigma2_rb = parse_double(key, value);
    } else if (key == "sigma2_re") {
      spec.base.sigma2_re = parse_double(key, value);
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config file '" + path + "'");
  return parse_sweep_spec(is, path);
}

namespace {

std::vector<double> linspace_points(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return out;
}

SweepSpec preset_base(const std::string& name) {
  SweepSpec spec;
  spec.name = name;
  spec.base = SystemConfig{};
  spec.base.power = db_to_linear(3.0);
  spec.base.rho2 = 0.9;
  spec.base.target_rate = 0.0;
  spec.trials = 100000;
  spec.seed = 1;
  spec.schemes = {Scheme::traditional_alice_an, Scheme::relay_jamming};
  return spec;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig2", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11"};
}

SweepSpec preset_spec(const std::string& name) {
  SweepSpec spec = preset_base(name);
  const auto rho_axis = [&spec] {
    spec.axis = SweepAxis::rho2;
    spec.points = linspace_points(0.0, 1.0, 11);
  };
  const auto power_axis = [&spec] {
    spec.axis = SweepAxis::power_db;
    spec.points = linspace_points(0.0, 20.0, 11);
  };
  const auto rate_axis = [&spec] {
    spec.axis = SweepAxis::target_rate;
    spec.points = linspace_points(0.0, 1.0, 11);
  };
  const std::vector<std::pair<int, int>> alice_scan = {{2, 2}, {4, 2}, {8, 2}};
  const std::vector<std::pair<int, int>> relay_scan = {{8, 2}, {8, 4}, {8, 8}};

  if (name == "fig2") {
    // expectation-curve scenario, not a real sweep: one point, one scheme
    spec.axis = SweepAxis::rho2;
    spec.points = {0.9};
    spec.schemes = {Scheme::traditional_alice_an};
    spec.variants = {{4, 2}};
  } else if (name == "fig4") {
    rho_axis();
    spec.variants = alice_scan;
  } else if (name == "fig5") {
    // relay deployed closer to Bob/Eve; pair with fig4 for the sigma2 = 1/2
    // baseline (one CSV cannot carry both variance settings)
    rho_axis();
    spec.variants = alice_scan;
    spec.base.sigma2_rb = 1.0;
    spec.base.sigma2_re = 1.0;
  } else if (name == "fig6") {
    rho_axis();
    spec.variants = relay_scan;
  } else if (name == "fig7") {
    power_axis();
    spec.variants = alice_scan;
  } else if (name == "fig8") {
    power_axis();
    spec.variants = alice_scan;
    spec.base.rho2 = 1.0;
  } else if (name == "fig9") {
    power_axis();
    spec.variants = relay_scan;
  } else if (name == "fig10") {
    rate_axis();
    spec.variants = alice_scan;
  } else if (name == "fig11") {
    rate_axis();
    spec.variants = relay_scan;
  } else {
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown preset '" + name + "' (known: " + known + ")");
  }
  spec.validate();
  return spec;
}

}  // namespace secsim
