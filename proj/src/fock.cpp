#include "radwig/fock.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "radwig/error.hpp"

namespace radwig {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-8;

std::string fock_pair(int nx, int ny, int nxp, int nyp) {
  std::ostringstream os;
  os << "<" << nx << "," << ny << "|rho|" << nxp << "," << nyp << ">";
  return os.str();
}

}  // namespace

FockDensityMatrix::FockDensityMatrix(int n_max, Eigen::MatrixXcd entries)
    : n_max_(n_max), entries_(std::move(entries)) {
  if (n_max < 0) throw InputError("n_max must be nonnegative");
  if (n_max > kMaxFockCutoff) {
    std::ostringstream os;
    os << "n_max " << n_max << " exceeds the supported cutoff " << kMaxFockCutoff;
    throw InputError(os.str());
  }
  const auto d = static_cast<Eigen::Index>(dim());
  if (entries_.rows() != d || entries_.cols() != d) {
    throw InputError("Fock density matrix size does not match (n_max + 1)^2");
  }

  double worst = 0.0;
  Eigen::Index wi = 0, wj = 0;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = j; i < d; ++i) {
      const double e = std::abs(entries_(i, j) - std::conj(entries_(j, i)));
      if (e > worst) {
        worst = e;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > kHermTol) {
    const int n1 = n_max_ + 1;
    const int ix = static_cast<int>(wi) / n1, iy = static_cast<int>(wi) % n1;
    const int jx = static_cast<int>(wj) / n1, jy = static_cast<int>(wj) % n1;
    std::ostringstream os;
    os << "Fock density matrix is not Hermitian: " << fock_pair(ix, iy, jx, jy) << " and "
       << fock_pair(jx, jy, ix, iy) << " differ from conjugates by " << worst;
    throw ValidationError(os.str());
  }
  const double tr = trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "Fock density matrix trace " << tr << " differs from 1";
    throw ValidationError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries_, Eigen::EigenvaluesOnly);
  const double lowest = es.eigenvalues().minCoeff();
  if (lowest < -kPsdTol) {
    std::ostringstream os;
    os << "Fock density matrix is not positive semidefinite: eigenvalue " << lowest;
    throw ValidationError(os.str());
  }
}

FockDensityMatrix FockDensityMatrix::pure(int n_max, const Eigen::VectorXcd& amplitudes) {
  return FockDensityMatrix(n_max, amplitudes * amplitudes.adjoint());
}

FockDensityMatrix FockDensityMatrix::from_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("Fock input is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("Fock input must be a JSON object");
  if (!doc.contains("n_max") || !doc["n_max"].is_number_integer()) {
    throw ValidationError("Fock input: field \"n_max\" missing or not an integer");
  }
  const int n_max = doc["n_max"].get<int>();
  if (n_max < 0 || n_max > kMaxFockCutoff) {
    std::ostringstream os;
    os << "Fock input: n_max " << n_max << " outside [0, " << kMaxFockCutoff << "]";
    throw InputError(os.str());
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ValidationError("Fock input: field \"entries\" missing or not an array");
  }
  const int n1 = n_max + 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n1 * n1, n1 * n1);
  std::size_t k = 0;
  for (const auto& e : doc["entries"]) {
    auto fail = [&](const char* field, const char* problem) {
      std::ostringstream os;
      os << "Fock input: entry " << k << ", field \"" << field << "\" " << problem;
      throw ValidationError(os.str());
    };
    if (!e.is_object()) {
      std::ostringstream os;
      os << "Fock input: entry " << k << " is not an object";
      throw ValidationError(os.str());
    }
    int idx[4];
    const char* names[4] = {"nx", "ny", "nxp", "nyp"};
    for (int q = 0; q < 4; ++q) {
      if (!e.contains(names[q])) fail(names[q], "is missing");
      if (!e[names[q]].is_number_integer()) fail(names[q], "is not an integer");
      idx[q] = e[names[q]].get<int>();
      if (idx[q] < 0 || idx[q] > n_max) fail(names[q], "is outside [0, n_max]");
    }
    double parts[2];
    const char* cnames[2] = {"re", "im"};
    for (int q = 0; q < 2; ++q) {
      if (!e.contains(cnames[q])) fail(cnames[q], "is missing");
      if (!e[cnames[q]].is_number()) fail(cnames[q], "is not a number");
      parts[q] = e[cnames[q]].get<double>();
    }
    m(idx[0] * n1 + idx[1], idx[2] * n1 + idx[3]) += cdouble(parts[0], parts[1]);
    ++k;
  }
  return FockDensityMatrix(n_max, std::move(m));
}

std::string FockDensityMatrix::to_json() const {
  nlohmann::json doc;
  doc["n_max"] = n_max_;
  doc["entries"] = nlohmann::json::array();
  const int n1 = n_max_ + 1;
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      const cdouble v = entries_(i, j);
      if (v == cdouble(0.0, 0.0)) continue;
      doc["entries"].push_back({{"nx", i / n1}, {"ny", i % n1}, {"nxp", j / n1},
                                {"nyp", j % n1}, {"re", v.real()}, {"im", v.imag()}});
    }
  }
  return doc.dump(2);
}

// Columns built by ladder steps: |n_x,n_y⟩ = a_x†|n_x-1,n_y⟩/√n_x, with
// a_x† = (A_+† + A_-†)/√2 and a_y† = -i(A_+† - A_-†)/√2.
Eigen::MatrixXcd fock_to_schwinger_block(int total) {
  if (total < 0) throw InputError("sector number must be nonnegative");
  // vectors over n_+ = 0..N of the current sector
  std::vector<Eigen::VectorXcd> prev(1, Eigen::VectorXcd::Ones(1));  // |0,0⟩
  for (int n = 1; n <= total; ++n) {
    std::vector<Eigen::VectorXcd> cur(static_cast<std::size_t>(n + 1));
    const double s = 1.0 / std::sqrt(2.0);
    for (int nx = 0; nx <= n; ++nx) {
      const int ny = n - nx;
      const bool via_x = nx > 0;
      const Eigen::VectorXcd& src = prev[static_cast<std::size_t>(via_x ? nx - 1 : nx)];
      Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n + 1);
      // src lives on sector n-1: component j ↔ |j, n-1-j⟩
      for (int j = 0; j < n; ++j) {
        const cdouble c = src[j];
        if (c == cdouble(0.0, 0.0)) continue;
        const double up_plus = std::sqrt(static_cast<double>(j + 1));       // A_+†
        const double up_minus = std::sqrt(static_cast<double>(n - 1 - j + 1));  // A_-†
        if (via_x) {
          out[j + 1] += s * up_plus * c;
          out[j] += s * up_minus * c;
        } else {
          out[j + 1] += cdouble(0.0, -1.0) * s * up_plus * c;
          out[j] += cdouble(0.0, 1.0) * s * up_minus * c;
        }
      }
      out /= std::sqrt(static_cast<double>(via_x ? nx : ny));
      cur[static_cast<std::size_t>(nx)] = std::move(out);
    }
    prev = std::move(cur);
  }
  Eigen::MatrixXcd u(total + 1, total + 1);
  for (int nx = 0; nx <= total; ++nx) u.col(nx) = prev[static_cast<std::size_t>(nx)];
  return u;
}

SchwingerDensityMatrix::SchwingerDensityMatrix(int max_total, Blocks blocks)
    : max_total_(max_total), blocks_(std::move(blocks)) {
  for (const auto& [key, b] : blocks_) {
    if (key.first < 0 || key.second < 0 || key.first > max_total || key.second > max_total ||
        b.rows() != key.first + 1 || b.cols() != key.second + 1) {
      throw InputError("Schwinger block shape does not match its sector labels");
    }
  }
}

cdouble SchwingerDensityMatrix::entry(const SchwingerLabel& a, const SchwingerLabel& b) const {
  const int na = a.n_plus() + a.n_minus();
  const int nb = b.n_plus() + b.n_minus();
  const auto it = blocks_.find({na, nb});
  if (it == blocks_.end()) return {0.0, 0.0};
  return it->second(a.n_plus(), b.n_plus());
}

double SchwingerDensityMatrix::trace() const {
  double t = 0.0;
  for (const auto& [key, b] : blocks_) {
    if (key.first == key.second) t += b.trace().real();
  }
  return t;
}

double SchwingerDensityMatrix::hermiticity_error() const {
  double worst = 0.0;
  for (const auto& [key, b] : blocks_) {
    const auto it = blocks_.find({key.second, key.first});
    if (it == blocks_.end()) {
      worst = std::max(worst, b.cwiseAbs().maxCoeff());
      continue;
    }
    worst = std::max(worst, (b - it->second.adjoint()).cwiseAbs().maxCoeff());
  }
  return worst;
}

SchwingerDensityMatrix fock_to_schwinger(const FockDensityMatrix& rho) {
  const int n_max = rho.n_max();
  const int max_total = 2 * n_max;
  std::vector<Eigen::MatrixXcd> u(static_cast<std::size_t>(max_total + 1));
  for (int n = 0; n <= max_total; ++n) u[static_cast<std::size_t>(n)] = fock_to_schwinger_block(n);

  const auto& m = rho.entries();
  SchwingerDensityMatrix::Blocks blocks;
  for (int na = 0; na <= max_total; ++na) {
    for (int nb = 0; nb <= max_total; ++nb) {
      // ρ restricted to sectors (na, nb); Fock states beyond the cutoff carry zero.
      Eigen::MatrixXcd sub = Eigen::MatrixXcd::Zero(na + 1, nb + 1);
      bool any = false;
      for (int ax = std::max(0, na - n_max); ax <= std::min(na, n_max); ++ax) {
        for (int bx = std::max(0, nb - n_max); bx <= std::min(nb, n_max); ++bx) {
          const cdouble v = m(static_cast<Eigen::Index>(rho.index(ax, na - ax)),
                              static_cast<Eigen::Index>(rho.index(bx, nb - bx)));
          if (v != cdouble(0.0, 0.0)) {
            sub(ax, bx) = v;
            any = true;
          }
        }
      }
      if (!any) continue;
      blocks[{na, nb}] = u[static_cast<std::size_t>(na)] * sub *
                         u[static_cast<std::size_t>(nb)].adjoint();
    }
  }
  return SchwingerDensityMatrix(max_total, std::move(blocks));
}

DensityMatrixV radial_reduce(const SchwingerDensityMatrix& rho_s, const Grid1D& grid) {
  const int max_total = rho_s.max_total();
  const auto npts = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(npts, npts);

  // Group labels by 2m = n_+ - n_-; only blocks whose sectors share parity couple.
  for (int twice_m = -max_total; twice_m <= max_total; ++twice_m) {
    std::vector<std::pair<int, int>> labels;  // (N, n_+)
    for (int n = std::abs(twice_m); n <= max_total; n += 2) {
      labels.emplace_back(n, (n + twice_m) / 2);
    }
    const auto k = static_cast<Eigen::Index>(labels.size());
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(k, k);
    bool any = false;
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) {
        const auto it = rho_s.blocks().find({labels[a].first, labels[b].first});
        if (it == rho_s.blocks().end()) continue;
        const cdouble v = it->second(labels[a].second, labels[b].second);
        if (v != cdouble(0.0, 0.0)) {
          c(a, b) = v;
          any = true;
        }
      }
    }
    if (!any) continue;
    Eigen::MatrixXd u(k, npts);
    for (Eigen::Index a = 0; a < k; ++a) {
      const auto [n, n_plus] = labels[static_cast<std::size_t>(a)];
      const SchwingerLabel label = SchwingerLabel::from_occupations(n_plus, n - n_plus);
      for (Eigen::Index i = 0; i < npts; ++i) {
        u(a, i) = vbar_schwinger(label, grid[static_cast<std::size_t>(i)]);
      }
    }
    out.noalias() += u.transpose().cast<cdouble>() * c * u.cast<cdouble>();
  }
  out = 0.5 * (out + out.adjoint()).eval();

  DensityMatrixV result(grid, std::move(out), DensityMatrixV::TraceCheck::Warn, 1e-10, 1e-8);
  return result;
}

WignerGrid end_to_end(const FockDensityMatrix& rho, const PipelineGrids& grids,
                      const WignerOptions& opts) {
  const SchwingerDensityMatrix rho_s = fock_to_schwinger(rho);
  const DensityMatrixV rho_v = radial_reduce(rho_s, grids.vbar);
  WignerGrid w = wigner_from_density(rho_v, grids.gamma, grids.delta, opts);
  w.meta.route = "pipeline";
  w.meta.diagnostics["fock_trace"] = rho.trace();
  w.meta.diagnostics["schwinger_trace"] = rho_s.trace();
  w.meta.diagnostics["schwinger_hermiticity"] = rho_s.hermiticity_error();
  w.meta.diagnostics["radial_trace"] = rho_v.trace();
  w.meta.diagnostics["radial_hermiticity"] = rho_v.hermiticity_error();
  w.meta.diagnostics["max_imag"] = w.meta.max_imag;
  w.meta.diagnostics["max_imag_tol"] = opts.max_imag_tol;
  w.meta.diagnostics["twice_m_max"] = rho_s.max_total();
  for (const auto& msg : rho_v.warnings()) w.meta.warnings.push_back(msg);
  return w;
}

}  // namespace radwig
