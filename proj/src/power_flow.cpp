#include "gpsim/power_flow.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "gpsim/errors.hpp"

namespace gpsim {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Admittance build_admittance(const Network& network) {
  const int n = static_cast<int>(network.buses.size());
  std::vector<Eigen::Triplet<double>> tg, tb;
  tg.reserve(4 * network.lines.size() + n);
  tb.reserve(4 * network.lines.size() + n);

  for (const auto& line : network.lines) {
    if (line.r == 0.0 && line.x == 0.0)
      throw ValidationError("line '" + line.id + "' has zero series impedance");
    const std::complex<double> ys = 1.0 / std::complex<double>(line.r, line.x);
    const std::complex<double> ysh(0.0, line.charging / 2.0);
    const double tau = line.tap == 0.0 ? 1.0 : line.tap;
    const std::complex<double> a = std::polar(tau, line.shift_rad);

    const std::complex<double> yff = (ys + ysh) / (tau * tau);
    const std::complex<double> ytt = ys + ysh;
    const std::complex<double> yft = -ys / std::conj(a);
    const std::complex<double> ytf = -ys / a;

    tg.emplace_back(line.from, line.from, yff.real());
    tb.emplace_back(line.from, line.from, yff.imag());
    tg.emplace_back(line.to, line.to, ytt.real());
    tb.emplace_back(line.to, line.to, ytt.imag());
    tg.emplace_back(line.from, line.to, yft.real());
    tb.emplace_back(line.from, line.to, yft.imag());
    tg.emplace_back(line.to, line.from, ytf.real());
    tb.emplace_back(line.to, line.from, ytf.imag());
  }
  for (int i = 0; i < n; ++i) {
    const auto& bus = network.buses[i];
    tg.emplace_back(i, i, bus.shunt_gs_mw / network.base_mva);
    tb.emplace_back(i, i, bus.shunt_bs_mvar / network.base_mva);
  }

  Admittance y;
  y.n = n;
  y.g.resize(n, n);
  y.b.resize(n, n);
  // tg and tb carry entries at identical positions, so G and B end up with the
  // same sparsity pattern (Eigen keeps explicit zeros) and can be walked in
  // lockstep.
  y.g.setFromTriplets(tg.begin(), tg.end());
  y.b.setFromTriplets(tb.begin(), tb.end());
  return y;
}

double day_factor(double t_s) {
  // reduce the phase first so the quarter-day factors come out exact
  const double u = std::fmod(t_s / kSecondsPerDay, 1.0);
  return 0.9 + 0.4 * std::sin(2.0 * kPi * u);
}

std::pair<double, double> load_at(double t_s, double p300_mw, double q300_mvar) {
  const double f = day_factor(t_s);
  return {p300_mw * f, q300_mvar * f};
}

void pf_injections(const Admittance& y, const Eigen::VectorXd& v,
                   const Eigen::VectorXd& phi, Eigen::VectorXd& p_calc,
                   Eigen::VectorXd& q_calc) {
  p_calc.setZero(y.n);
  q_calc.setZero(y.n);
  // G and B share a pattern; iterate one and look the other up in lockstep.
  for (int col = 0; col < y.g.outerSize(); ++col) {
    Eigen::SparseMatrix<double>::InnerIterator ig(y.g, col);
    Eigen::SparseMatrix<double>::InnerIterator ib(y.b, col);
    for (; ig; ++ig, ++ib) {
      const int i = static_cast<int>(ig.row());
      const int j = col;
      const double th = phi[i] - phi[j];
      const double c = std::cos(th), s = std::sin(th);
      const double vv = v[i] * v[j];
      p_calc[i] += vv * (ig.value() * c + ib.value() * s);
      q_calc[i] += vv * (ig.value() * s - ib.value() * c);
    }
  }
}

Eigen::VectorXd pf_residual(const Admittance& y, const Eigen::VectorXd& v,
                            const Eigen::VectorXd& phi, const Eigen::VectorXd& p,
                            const Eigen::VectorXd& q) {
  Eigen::VectorXd p_calc, q_calc;
  pf_injections(y, v, phi, p_calc, q_calc);
  Eigen::VectorXd r(2 * y.n);
  r.head(y.n) = p - p_calc;
  r.tail(y.n) = q - q_calc;
  return r;
}

}  // namespace gpsim
