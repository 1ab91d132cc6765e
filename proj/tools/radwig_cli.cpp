#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "radwig/error.hpp"
#include "radwig/fock.hpp"
#include "radwig/invariants.hpp"
#include "radwig/io.hpp"
#include "radwig/operators.hpp"
#include "radwig/special_fn.hpp"
#include "radwig/states.hpp"
#include "radwig/wigner.hpp"

namespace fs = std::filesystem;
using namespace radwig;

namespace {

enum class Format { Csv, Json };

struct Common {
  std::string format = "csv";
  int threads = 1;

  Format fmt() const { return format == "json" ? Format::Json : Format::Csv; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
}

void check_writable(const fs::path& out) {
  const fs::path dir = out.parent_path().empty() ? fs::path(".") : out.parent_path();
  if (!fs::is_directory(dir)) throw InputError("output directory '" + dir.string() + "' does not exist");
}

fs::path with_suffix(const fs::path& out, const std::string& suffix) {
  fs::path p = out.parent_path() / (out.stem().string() + suffix);
  p += out.extension();
  return p;
}

fs::path with_extension(fs::path p, const char* ext) {
  p.replace_extension(ext);
  return p;
}

void write_grid(const WignerGrid& w, const fs::path& out, Format fmt, const std::string& title) {
  check_writable(out);
  if (fmt == Format::Json) {
    io::write_file(out, io::grid_to_json(w));
    return;
  }
  io::write_file(out, io::grid_to_csv(w));
  io::write_file(with_extension(out, ".gp"), io::gnuplot_script(out, title));
}

void report_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

cdouble parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    const double re = std::stod(s.substr(0, comma), &used);
    if (used != (comma == std::string::npos ? s.size() : comma)) throw std::invalid_argument(s);
    double im = 0.0;
    if (comma != std::string::npos) {
      const std::string tail = s.substr(comma + 1);
      im = std::stod(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(s);
    }
    return {re, im};
  } catch (const std::logic_error&) {
    throw InputError("cannot parse complex number '" + s + "' (expected re or re,im)");
  }
}

void guard_gamma(const Grid1D& g, double floor, double ceiling) {
  if (g.min() < floor || g.max() > ceiling) {
    std::ostringstream os;
    os << "gamma axis [" << g.min() << ", " << g.max() << "] leaves the guard [" << floor << ", "
       << ceiling << "]; widen it with --gamma-floor/--gamma-ceiling";
    throw InputError(os.str());
  }
}

// --- wl ---------------------------------------------------------------------------

struct WlConfig {
  Common common;
  std::vector<int> l{0};
  std::string gamma = "-3:2:251";
  std::string delta = "-4:4:321";
  std::string route = "closed";
  std::string vbar = "-10:4:1401";
  double s = 0.0;
  double gamma_floor = -10.0;
  double gamma_ceiling = 4.0;
  std::string out = "wigner.csv";
};

int cmd_wl(const WlConfig& c) {
  const Grid1D gamma = io::parse_axis(c.gamma);
  const Grid1D delta = io::parse_axis(c.delta);
  guard_gamma(gamma, c.gamma_floor, c.gamma_ceiling);
  WignerOptions opts;
  opts.threads = c.common.threads;
  opts.gamma_floor = c.gamma_floor;
  for (int l : c.l) {
    if (l < 0 || l > kDefaultMaxLaguerreDegree) throw InputError("l must lie in [0, 64]");
    WignerGrid w = [&] {
      if (c.route == "density") {
        const auto rho = DensityMatrixV::pure(schwinger_state_l0(l, io::parse_axis(c.vbar)));
        WignerGrid d = wigner_from_density(rho, gamma, delta, opts);
        d.meta.l = l;
        return d;
      }
      return wigner_l0_closed_grid(l, gamma, delta, opts);
    }();
    if (c.s != 0.0) w = s_smooth(w, c.s);
    const fs::path out = c.l.size() > 1 ? with_suffix(c.out, "_l" + std::to_string(l)) : fs::path(c.out);
    write_grid(w, out, c.common.fmt(), "W_" + std::to_string(l));
    report_warnings(w.meta.warnings);
    std::cout << out.string() << "\n";
  }
  return 0;
}

// --- vacuum / coherent --------------------------------------------------------------

struct StateConfig {
  Common common;
  std::string alpha = "0";
  std::string grid = "-10:10:2001";
  std::string basis = "vbar";
  std::string out = "state.csv";
  std::string wigner_out;
  std::string gamma = "-4:4:161";
  std::string delta = "-4:4:161";
};

int write_state(const StateConfig& c, const WavefunctionV& psi) {
  const fs::path out = c.out;
  check_writable(out);
  if (c.basis == "r") {
    // sample ⟨r|ψ⟩ = ψ•(ln r)/r on the given r axis
    const Grid1D r = io::parse_axis(c.grid);
    if (r.min() <= 0.0) throw InputError("r axis must be strictly positive");
    WavefunctionV rs{r, std::vector<cdouble>(r.size()), {}};
    const cdouble alpha = parse_complex(c.alpha);
    const double q = std::sqrt(2.0) * alpha.real(), p = std::sqrt(2.0) * alpha.imag();
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double lv = std::log(r[i]);
      const cdouble phase = std::exp(cdouble(0.0, p * lv - q * p / 2.0));
      rs.values[i] = phase * dilaton_vacuum(Basis::VBar, lv - q) / r[i];
    }
    io::write_file(out, c.common.fmt() == Format::Json ? io::wavefunction_to_json(rs)
                                                        : io::wavefunction_to_csv(rs, "r"));
  } else {
    io::write_file(out, c.common.fmt() == Format::Json ? io::wavefunction_to_json(psi)
                                                        : io::wavefunction_to_csv(psi, "vbar"));
  }
  report_warnings(psi.warnings);
  std::cout << out.string() << "\n";
  if (!c.wigner_out.empty()) {
    WignerOptions opts;
    opts.threads = c.common.threads;
    const WignerGrid w = wigner_from_density(DensityMatrixV::pure(psi), io::parse_axis(c.gamma),
                                             io::parse_axis(c.delta), opts);
    write_grid(w, c.wigner_out, c.common.fmt(), "W");
    std::cout << c.wigner_out << "\n";
  }
  return 0;
}

int cmd_state(const StateConfig& c) {
  const Grid1D v = c.basis == "r" ? Grid1D(-12.0, 12.0, 2401) : io::parse_axis(c.grid);
  return write_state(c, dilaton_coherent(parse_complex(c.alpha), v));
}

// --- fock ---------------------------------------------------------------------------

struct FockConfig {
  Common common;
  std::string input;
  std::string gamma = "-3:2:251";
  std::string delta = "-4:4:321";
  std::string vbar = "-10:4:1401";
  std::string out = "fock_wigner.csv";
  bool strict_marginals = false;
};

int cmd_fock(const FockConfig& c) {
  const FockDensityMatrix rho = FockDensityMatrix::from_json(io::read_file(c.input));
  PipelineGrids grids;
  grids.vbar = io::parse_axis(c.vbar);
  grids.gamma = io::parse_axis(c.gamma);
  grids.delta = io::parse_axis(c.delta);
  WignerOptions opts;
  opts.threads = c.common.threads;
  const WignerGrid w = end_to_end(rho, grids, opts);
  write_grid(w, c.out, c.common.fmt(), "pipeline W");
  report_warnings(w.meta.warnings);
  std::cout << c.out << "\n";

  const double limit = c.strict_marginals ? 1e-6 : std::numeric_limits<double>::infinity();
  const Marginal mp = marginal_position(w, limit);
  const Marginal mm = marginal_momentum(w, limit);
  for (const Marginal* m : {&mp, &mm}) {
    report_warnings(m->warnings);
    if (m->edge_mass > 1e-6) {
      std::cerr << "warning: marginal edge mass " << m->edge_mass << " exceeds 1e-6; widen the axes\n";
    }
  }
  const fs::path out = c.out;
  const fs::path pos = with_extension(with_suffix(out, "_position"), ".csv");
  const fs::path mom = with_extension(with_suffix(out, "_momentum"), ".csv");
  io::write_file(pos, io::marginal_to_csv(mp, "gamma"));
  io::write_file(mom, io::marginal_to_csv(mm, "delta"));
  std::cout << pos.string() << "\n" << mom.string() << "\n";
  return 0;
}

// --- marginals -----------------------------------------------------------------------

struct MarginalConfig {
  std::string input;
  std::string out_position = "marginal_position.csv";
  std::string out_momentum = "marginal_momentum.csv";
  double max_edge_mass = 1e-6;
};

int cmd_marginals(const MarginalConfig& c) {
  const std::string text = io::read_file(c.input);
  const WignerGrid w = fs::path(c.input).extension() == ".json" ? io::grid_from_json(text)
                                                                 : io::grid_from_csv(text);
  const Marginal mp = marginal_position(w, c.max_edge_mass);
  const Marginal mm = marginal_momentum(w, c.max_edge_mass);
  report_warnings(mp.warnings);
  report_warnings(mm.warnings);
  check_writable(c.out_position);
  check_writable(c.out_momentum);
  io::write_file(c.out_position, io::marginal_to_csv(mp, "gamma"));
  io::write_file(c.out_momentum, io::marginal_to_csv(mm, "delta"));
  std::cout << c.out_position << "\n" << c.out_momentum << "\n";
  return 0;
}

// --- check ---------------------------------------------------------------------------

struct CheckConfig {
  std::string only;
  std::optional<double> tolerance;
  std::string out;
  bool list = false;
  int threads = 1;
};

int cmd_check(const CheckConfig& c) {
  if (c.list) {
    for (const auto& n : invariant_names()) std::cout << n << "\n";
    return 0;
  }
  CheckOptions opts;
  if (!c.only.empty()) opts.only = c.only;
  opts.tolerance = c.tolerance;
  opts.threads = c.threads;
  const auto results = run_invariants(opts);
  nlohmann::json report = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : results) {
    nlohmann::json j{{"name", r.name}, {"tolerance", r.tolerance}, {"pass", r.pass}};
    j["measured"] = std::isfinite(r.measured) ? nlohmann::json(r.measured) : nlohmann::json(nullptr);
    if (!r.error.empty()) j["error"] = r.error;
    report.push_back(std::move(j));
    ok = ok && r.pass;
  }
  const std::string text = report.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    check_writable(c.out);
    io::write_file(c.out, text);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial Wigner functions of 2D oscillator states"};
  app.require_subcommand(1);

  WlConfig wl;
  auto* wl_cmd = app.add_subcommand("wl", "Wigner grids W_l(gamma, delta) for |l,0>");
  add_common(wl_cmd, wl.common);
  wl_cmd->add_option("--l", wl.l, "Angular label(s) l")->expected(1, -1);
  wl_cmd->add_option("--gamma", wl.gamma, "gamma axis min:max:steps");
  wl_cmd->add_option("--delta", wl.delta, "delta axis min:max:steps");
  wl_cmd->add_option("--route", wl.route, "closed | density")->check(CLI::IsMember({"closed", "density"}));
  wl_cmd->add_option("--vbar", wl.vbar, "v-bar axis for the density route");
  wl_cmd->add_option("--s", wl.s, "s-ordering (<= 0)");
  wl_cmd->add_option("--gamma-floor", wl.gamma_floor, "Lowest gamma accepted");
  wl_cmd->add_option("--gamma-ceiling", wl.gamma_ceiling, "Highest gamma accepted");
  wl_cmd->add_option("--out", wl.out, "Output path (suffix _l<l> for several l)");

  StateConfig vac;
  auto* vac_cmd = app.add_subcommand("vacuum", "Dilaton vacuum wavefunction");
  StateConfig coh;
  auto* coh_cmd = app.add_subcommand("coherent", "Dilaton coherent state D(alpha)|0>");
  for (auto [cmd, cfg] : {std::pair{vac_cmd, &vac}, {coh_cmd, &coh}}) {
    add_common(cmd, cfg->common);
    cmd->add_option("--grid", cfg->grid, "Sample axis min:max:steps (v-bar, or r for --basis r)");
    cmd->add_option("--basis", cfg->basis, "vbar | r")->check(CLI::IsMember({"vbar", "r"}));
    cmd->add_option("--out", cfg->out, "Wavefunction output path");
    cmd->add_option("--wigner-out", cfg->wigner_out, "Also write the state's Wigner grid here");
    cmd->add_option("--gamma", cfg->gamma, "gamma axis for --wigner-out");
    cmd->add_option("--delta", cfg->delta, "delta axis for --wigner-out");
  }
  coh_cmd->add_option("--alpha", coh.alpha, "alpha as re or re,im")->required();

  FockConfig fock;
  auto* fock_cmd = app.add_subcommand("fock", "Fock-basis density matrix to radial Wigner grid");
  add_common(fock_cmd, fock.common);
  fock_cmd->add_option("--input", fock.input, "Fock density matrix JSON")->required();
  fock_cmd->add_option("--gamma", fock.gamma, "gamma axis min:max:steps");
  fock_cmd->add_option("--delta", fock.delta, "delta axis min:max:steps");
  fock_cmd->add_option("--vbar", fock.vbar, "v-bar axis for the radial density matrix");
  fock_cmd->add_option("--out", fock.out, "Wigner grid output path");
  fock_cmd->add_flag("--strict-marginals", fock.strict_marginals, "Fail when marginal edge mass exceeds 1e-6");

  MarginalConfig marg;
  auto* marg_cmd = app.add_subcommand("marginals", "Position and momentum marginals of a stored grid");
  marg_cmd->add_option("--input", marg.input, "Grid file (.csv or .json)")->required();
  marg_cmd->add_option("--out-position", marg.out_position);
  marg_cmd->add_option("--out-momentum", marg.out_momentum);
  marg_cmd->add_option("--max-edge-mass", marg.max_edge_mass);

  CheckConfig chk;
  auto* chk_cmd = app.add_subcommand("check", "Run the invariant suite");
  chk_cmd->add_option("--only", chk.only, "Run a single invariant");
  chk_cmd->add_option("--tolerance", chk.tolerance, "Override every tolerance");
  chk_cmd->add_option("--out", chk.out, "Write the JSON report here instead of stdout");
  chk_cmd->add_option("--threads", chk.threads)->check(CLI::PositiveNumber);
  chk_cmd->add_flag("--list", chk.list, "List invariant names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*wl_cmd) return cmd_wl(wl);
    if (*vac_cmd) {
      vac.alpha = "0";
      return cmd_state(vac);
    }
    if (*coh_cmd) return cmd_state(coh);
    if (*fock_cmd) return cmd_fock(fock);
    if (*marg_cmd) return cmd_marginals(marg);
    if (*chk_cmd) return cmd_check(chk);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeOverflowError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const TruncationError& e) {
    std::cerr << "numerical error: " << e.what() << " (lost mass " << e.lost_mass() << ")\n";
    return 1;
  } catch (const AccuracyError& e) {
    std::cerr << "numerical error: " << e.what() << " (residual " << e.residual() << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
