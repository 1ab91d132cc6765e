#include "radwig/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "radwig/error.hpp"

namespace radwig::io {

namespace {

double parse_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Axis recovered from its samples; exact when they came from a Grid1D.
Grid1D axis_from_samples(const std::vector<double>& xs) {
  if (xs.empty()) throw InputError("empty axis");
  return Grid1D(xs.front(), xs.back(), xs.size());
}

nlohmann::json meta_to_json(const WignerMeta& m) {
  nlohmann::json j;
  if (m.l) j["l"] = *m.l;
  j["s"] = m.s;
  j["hbar"] = 1;
  j["route"] = m.route;
  j["max_imag"] = m.max_imag;
  j["overlap_factor"] = m.overlap_factor;
  j["diagnostics"] = m.diagnostics;
  j["warnings"] = m.warnings;
  return j;
}

}  // namespace

Grid1D parse_axis(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw InputError("axis spec '" + std::string(spec) + "' is not min:max:steps");
  const double lo = parse_double(parts[0], "axis minimum");
  const double hi = parse_double(parts[1], "axis maximum");
  long long steps = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), steps);
  if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || steps < 1) {
    throw InputError("axis step count '" + std::string(parts[2]) + "' is not a positive integer");
  }
  return Grid1D(lo, hi, static_cast<std::size_t>(steps));
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string grid_to_csv(const WignerGrid& w) {
  std::string out = "gamma,delta,w\n";
  out.reserve(w.values.size() * 48);
  for (std::size_t i = 0; i < w.gamma.size(); ++i) {
    const std::string g = format_double(w.gamma[i]);
    for (std::size_t j = 0; j < w.delta.size(); ++j) {
      out += g;
      out += ',';
      out += format_double(w.delta[j]);
      out += ',';
      out += format_double(w.at(i, j));
      out += '\n';
    }
  }
  return out;
}

WignerGrid grid_from_csv(std::string_view text) {
  auto lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != "gamma,delta,w") {
    throw InputError("CSV grid must start with header gamma,delta,w");
  }
  std::vector<double> gs, ds, vs;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto cols = split(lines[k], ',');
    if (cols.size() != 3) throw InputError("CSV line " + std::to_string(k + 1) + " needs 3 columns");
    const double g = parse_double(cols[0], "gamma");
    const double d = parse_double(cols[1], "delta");
    if (gs.empty() || gs.back() != g) gs.push_back(g);
    if (gs.size() == 1) ds.push_back(d);
    vs.push_back(parse_double(cols[2], "w"));
  }
  if (vs.size() != gs.size() * ds.size()) throw InputError("CSV grid is not rectangular");
  WignerGrid w(axis_from_samples(gs), axis_from_samples(ds));
  w.values = std::move(vs);
  return w;
}

std::string grid_to_json(const WignerGrid& w) {
  nlohmann::json doc;
  doc["meta"] = meta_to_json(w.meta);
  doc["gamma"] = w.gamma.values();
  doc["delta"] = w.delta.values();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < w.gamma.size(); ++i) {
    rows.push_back(std::vector<double>(w.values.begin() + static_cast<std::ptrdiff_t>(i * w.delta.size()),
                                       w.values.begin() + static_cast<std::ptrdiff_t>((i + 1) * w.delta.size())));
  }
  doc["w"] = std::move(rows);
  return doc.dump();
}

WignerGrid grid_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    WignerGrid w(axis_from_samples(doc.at("gamma").get<std::vector<double>>()),
                 axis_from_samples(doc.at("delta").get<std::vector<double>>()));
    const auto& rows = doc.at("w");
    if (rows.size() != w.gamma.size()) throw InputError("JSON grid row count mismatch");
    for (std::size_t i = 0; i < w.gamma.size(); ++i) {
      const auto row = rows[i].get<std::vector<double>>();
      if (row.size() != w.delta.size()) throw InputError("JSON grid column count mismatch");
      std::copy(row.begin(), row.end(), w.values.begin() + static_cast<std::ptrdiff_t>(i * w.delta.size()));
    }
    if (doc.contains("meta")) {
      const auto& m = doc["meta"];
      if (m.contains("l")) w.meta.l = m["l"].get<int>();
      w.meta.s = m.value("s", 0.0);
      w.meta.route = m.value("route", std::string());
      w.meta.max_imag = m.value("max_imag", 0.0);
      if (m.contains("diagnostics")) w.meta.diagnostics = m["diagnostics"].get<std::map<std::string, double>>();
      if (m.contains("warnings")) w.meta.warnings = m["warnings"].get<std::vector<std::string>>();
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON grid: ") + e.what());
  }
}

std::string wavefunction_to_csv(const WavefunctionV& psi, std::string_view coordinate) {
  std::string out = std::string(coordinate) + ",re,im\n";
  for (std::size_t i = 0; i < psi.values.size(); ++i) {
    out += format_double(psi.grid[i]) + ',' + format_double(psi.values[i].real()) + ',' +
           format_double(psi.values[i].imag()) + '\n';
  }
  return out;
}

std::string wavefunction_to_json(const WavefunctionV& psi) {
  nlohmann::json doc;
  doc["vbar"] = psi.grid.values();
  std::vector<double> re, im;
  for (const auto& v : psi.values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  doc["re"] = re;
  doc["im"] = im;
  doc["warnings"] = psi.warnings;
  return doc.dump();
}

std::string marginal_to_csv(const Marginal& m, std::string_view coordinate) {
  std::string out = std::string(coordinate) + ",density\n";
  for (std::size_t i = 0; i < m.density.size(); ++i) {
    out += format_double(m.axis[i]) + ',' + format_double(m.density[i]) + '\n';
  }
  return out;
}

std::string gnuplot_script(const std::filesystem::path& data_file, std::string_view title) {
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set title '" << title << "'\n"
     << "set xlabel 'gamma'\nset ylabel 'delta'\n"
     << "set palette defined (-1 'blue', 0 'white', 1 'red')\n"
     << "set view map\n"
     << "plot '" << data_file.filename().string() << "' skip 1 using 1:2:3 with image notitle\n";
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot open '" + tmp.string() + "' for writing");
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!f) throw InputError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw InputError("cannot move output into '" + path.string() + "': " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace radwig::io
