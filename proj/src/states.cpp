#include "radwig/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "radwig/error.hpp"
#include "radwig/special_fn.hpp"

namespace radwig {

namespace {

const double kQuarticRootPi = std::pow(std::numbers::pi, -0.25);

// exp(log_mag) * sign with clean underflow to zero.
double from_log(double log_mag, int sign) {
  if (sign == 0 || log_mag < -745.0) return 0.0;
  return sign * std::exp(log_mag);
}

void check_state_norm(WavefunctionV& psi) {
  const double norm = psi.norm_squared();
  if (std::abs(norm - 1.0) > 1e-6) {
    std::ostringstream os;
    os << "grid [" << psi.grid.min() << ", " << psi.grid.max()
       << "] holds probability " << norm << " (expected 1 within 1e-6)";
    psi.warnings.push_back(os.str());
  }
}

// Fritsch–Carlson monotone cubic on strictly increasing x.
class MonotoneCubic {
 public:
  MonotoneCubic(const std::vector<double>& x, std::vector<double> y)
      : x_(x), y_(std::move(y)), d_(x.size(), 0.0) {
    const std::size_t n = x_.size();
    if (n < 2) return;
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      h[k] = x_[k + 1] - x_[k];
      delta[k] = (y_[k + 1] - y_[k]) / h[k];
    }
    if (n == 2) {
      d_[0] = d_[1] = delta[0];
      return;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
      if (delta[k - 1] * delta[k] <= 0.0) {
        d_[k] = 0.0;
      } else {
        const double w1 = 2.0 * h[k] + h[k - 1];
        const double w2 = h[k] + 2.0 * h[k - 1];
        d_[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
      }
    }
    d_[0] = edge(h[0], h[1], delta[0], delta[1]);
    d_[n - 1] = edge(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  }

  double operator()(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t k = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    if (k + 1 >= x_.size()) k = x_.size() - 2;
    const double h = x_[k + 1] - x_[k];
    const double t = (x - x_[k]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[k] + h10 * h * d_[k] + h01 * y_[k + 1] + h11 * h * d_[k + 1];
  }

 private:
  // One-sided three-point derivative, limited to keep monotonicity.
  static double edge(double h0, double h1, double m0, double m1) {
    double d = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if (d * m0 <= 0.0) return 0.0;
    if (m0 * m1 <= 0.0 && std::abs(d) > std::abs(3.0 * m0)) return 3.0 * m0;
    return d;
  }

  const std::vector<double>& x_;
  std::vector<double> y_;
  std::vector<double> d_;
};

}  // namespace

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

SchwingerLabel SchwingerLabel::from_occupations(int n_plus, int n_minus, double beta) {
  if (n_plus < 0 || n_minus < 0) {
    throw DomainError("Schwinger occupations n± = l ± m must be nonnegative");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive");
  return SchwingerLabel(n_plus, n_minus, beta);
}

SchwingerLabel SchwingerLabel::from_lm(HalfInt l, HalfInt m, double beta) {
  const int sum = l.twice() + m.twice();
  const int diff = l.twice() - m.twice();
  if (sum % 2 != 0 || diff % 2 != 0) {
    throw DomainError("l ± m must be integers (got l=" + l.to_string() + ", m=" + m.to_string() + ")");
  }
  return from_occupations(sum / 2, diff / 2, beta);
}

double WavefunctionV::norm_squared() const {
  const auto w = trapezoid_weights(grid);
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += w[i] * std::norm(values[i]);
  return s;
}

WavefunctionR::WavefunctionR(std::vector<double> radii, std::vector<cdouble> samples)
    : r(std::move(radii)), values(std::move(samples)) {
  if (r.size() != values.size()) throw DomainError("radius and sample counts differ");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0.0)) throw DomainError("radial grid must be strictly positive");
    if (i > 0 && !(r[i] > r[i - 1])) throw DomainError("radial grid must be strictly increasing");
  }
}

double WavefunctionR::norm_squared() const {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double f0 = r[i] * std::norm(values[i]);
    const double f1 = r[i + 1] * std::norm(values[i + 1]);
    s += 0.5 * (r[i + 1] - r[i]) * (f0 + f1);
  }
  return s;
}

std::vector<double> log_spaced_radii(double r_min, double r_max, std::size_t n) {
  if (!(r_min > 0.0) || !(r_max > r_min) || n < 2) {
    throw DomainError("log-spaced radii need 0 < r_min < r_max and n >= 2");
  }
  const Grid1D lg(std::log(r_min), std::log(r_max), n);
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = std::exp(lg[i]);
  r.front() = r_min;
  r.back() = r_max;
  return r;
}

Grid1D default_vbar_grid() { return Grid1D(-10.0, 4.0, 1401); }

double radial_wavefunction(const SchwingerLabel& label, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("radial_wavefunction needs r > 0");
  const int n = label.radial_degree();
  const int alpha = label.angular_order();
  const double beta = label.beta();
  const double x = beta * beta * r * r;
  const LaguerreEval lag = laguerre_assoc(n, alpha, x);
  double log_mag = std::log(beta) +
                   0.5 * (std::log(2.0) + log_factorial(n) - log_factorial(n + alpha)) - 0.5 * x +
                   lag.log_abs;
  if (alpha > 0) log_mag += alpha * std::log(beta * r);
  const int sign = lag.sign * ((n % 2 == 0) ? 1 : -1);
  return from_log(log_mag, sign);
}

double vbar_schwinger(const SchwingerLabel& label, double vbar) {
  const int n = label.radial_degree();
  const int alpha = label.angular_order();
  const double beta = label.beta();
  const double log_br = std::log(beta) + vbar;  // ln(βr), r = e^{v̄}
  const double x = std::exp(2.0 * log_br);
  const LaguerreEval lag = laguerre_assoc(n, alpha, x);
  const double log_mag = vbar + std::log(beta) +
                         0.5 * (std::log(2.0) + log_factorial(n) - log_factorial(n + alpha)) +
                         alpha * log_br - 0.5 * x + lag.log_abs;
  const int sign = lag.sign * ((n % 2 == 0) ? 1 : -1);
  return from_log(log_mag, sign);
}

double vbar_schwinger_l0(int l, double vbar) {
  return vbar_schwinger(SchwingerLabel::from_occupations(l, l), vbar);
}

WavefunctionR sample_radial(const SchwingerLabel& label, std::vector<double> radii) {
  std::vector<cdouble> values(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) values[i] = radial_wavefunction(label, radii[i]);
  return WavefunctionR(std::move(radii), std::move(values));
}

WavefunctionV schwinger_state_v(const SchwingerLabel& label, const Grid1D& grid) {
  WavefunctionV psi{grid, std::vector<cdouble>(grid.size()), {}};
  for (std::size_t i = 0; i < grid.size(); ++i) psi.values[i] = vbar_schwinger(label, grid[i]);
  check_state_norm(psi);
  return psi;
}

WavefunctionV schwinger_state_l0(int l, const Grid1D& grid) {
  return schwinger_state_v(SchwingerLabel::from_occupations(l, l), grid);
}

WavefunctionV to_vbar(const WavefunctionR& psi, const Grid1D& target) {
  if (psi.r.size() < 2) throw DomainError("to_vbar needs at least two radial samples");
  const double r_lo = psi.r.front();
  const double r_hi = psi.r.back();

  std::vector<double> re(psi.values.size()), im(psi.values.size());
  for (std::size_t i = 0; i < psi.values.size(); ++i) {
    re[i] = psi.values[i].real();
    im[i] = psi.values[i].imag();
  }
  const MonotoneCubic interp_re(psi.r, std::move(re));
  const MonotoneCubic interp_im(psi.r, std::move(im));

  WavefunctionV out{target, std::vector<cdouble>(target.size()), psi.warnings};
  std::size_t inside = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    const double r = std::exp(target[i]);
    if (r < r_lo || r > r_hi) continue;
    ++inside;
    out.values[i] = r * cdouble(interp_re(r), interp_im(r));
  }
  if (inside == 0) throw DomainError("to_vbar: target v̄ range does not overlap the r grid");
  if (inside < target.size()) {
    std::ostringstream os;
    os << (target.size() - inside) << " v̄ samples map outside r ∈ [" << r_lo << ", " << r_hi
       << "] and were set to 0";
    out.warnings.push_back(os.str());
  }
  return out;
}

WavefunctionV to_vbar(const std::function<cdouble(double)>& psi_r, const Grid1D& target) {
  WavefunctionV out{target, std::vector<cdouble>(target.size()), {}};
  for (std::size_t i = 0; i < target.size(); ++i) {
    const double r = std::exp(target[i]);
    out.values[i] = r * psi_r(r);
  }
  return out;
}

cdouble dilaton_vacuum(Basis basis, double point) {
  if (basis == Basis::VBar) return kQuarticRootPi * std::exp(-0.5 * point * point);
  if (!(point > 0.0)) throw DomainError("dilaton_vacuum in the r basis needs r > 0");
  const double v = std::log(point);
  return kQuarticRootPi * std::exp(-0.5 * v * v) / point;
}

WavefunctionV dilaton_vacuum_state(const Grid1D& grid) {
  return dilaton_coherent(cdouble(0.0, 0.0), grid);
}

WavefunctionV dilaton_coherent(cdouble alpha, const Grid1D& grid) {
  const double q = std::numbers::sqrt2 * alpha.real();
  const double p = std::numbers::sqrt2 * alpha.imag();
  WavefunctionV psi{grid, std::vector<cdouble>(grid.size()), {}};
  const cdouble global = std::polar(1.0, -0.5 * q * p);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = grid[i];
    const double d = v - q;
    psi.values[i] = global * std::polar(kQuarticRootPi * std::exp(-0.5 * d * d), p * v);
  }
  const double held = 0.5 * (std::erf(grid.max() - q) - std::erf(grid.min() - q));
  if (held < 1.0 - 1e-8) {
    std::ostringstream os;
    os << "coherent state truncated: grid holds probability " << held;
    psi.warnings.push_back(os.str());
  }
  return psi;
}

}  // namespace radwig
