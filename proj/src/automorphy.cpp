#include "mll/automorphy.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "mll/error.hpp"

namespace mll {

namespace {

// Phase of J(g, z) = j^nu(g, z) j^mu(rho(g), tau(z)).
double J_phase(const ModelParams& p, const GroupElement& g, Complex z) {
  const Complex c = g.inverse().b();
  const Complex cr = p.pair.rho(g).inverse().b();
  return 2.0 * p.nu * im_hermitian(z, c) + 2.0 * p.mu * im_hermitian(p.pair.tau(z), cr);
}

}  // namespace

Complex j_factor(double alpha, const GroupElement& g, Complex z) {
  return unit_phase(2.0 * alpha * im_hermitian(z, g.inverse().b()));
}

Complex J_factor(const ModelParams& p, const GroupElement& g, Complex z) { return unit_phase(J_phase(p, g, z)); }

Complex J_factor_negated(const ModelParams& p, const GroupElement& g, Complex z) {
  return unit_phase(-J_phase(p, g, z));
}

PhaseValue chain_phase(const ModelParams& p, const GroupElement& g, const GroupElement& gp) {
  const GroupElement ginv = g.inverse();
  const Complex first = hermitian(ginv.b(), gp.b());
  const Complex second = hermitian(p.pair.rho(ginv).b(), p.pair.rho(gp).b());
  return {std::imag(p.nu * first + p.mu * second)};
}

double check_chain_rule(const ModelParams& p, const GroupElement& g, const GroupElement& gp, Complex z) {
  const Complex lhs = J_factor(p, g * gp, z);
  const Complex rhs =
      unit_phase(2.0 * chain_phase(p, g, gp).value) * J_factor(p, g, gp.act(z)) * J_factor(p, gp, z);
  return std::abs(lhs - rhs);
}

std::string NontrivialityReport::summary() const {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%s: word ball radius %d, worst pair (%.6g%+.6gi, %.6g%+.6gi) phase/pi = %.12g, deviation %.3e",
                nontrivial ? "integral" : "NOT integral", word_len, worst.gamma.real(), worst.gamma.imag(),
                worst.gamma_prime.real(), worst.gamma_prime.imag(), worst.phase_over_pi, worst.deviation);
  return buf;
}

NontrivialityReport nontriviality_test(const ModelParams& p, const Lattice& lat, int word_len) {
  if (word_len < 1) throw Error(ErrorCode::InvalidArgument, "word length must be at least 1");
  NontrivialityReport report;
  report.word_len = word_len;
  const auto ball = word_ball(lat, word_len);
  report.entries.reserve(ball.size() * ball.size());
  double worst = -1.0;
  for (Complex g : ball) {
    for (Complex gp : ball) {
      const double ratio =
          chain_phase(p, GroupElement::translation(g), GroupElement::translation(gp)).value / M_PI;
      const double nearest = std::round(ratio);
      CocycleEntry e{g, gp, ratio, static_cast<long>(nearest), std::abs(ratio - nearest)};
      if (e.deviation > worst) {
        worst = e.deviation;
        report.worst = e;
      }
      report.entries.push_back(e);
    }
  }
  report.nontrivial = report.worst.deviation <= NontrivialityReport::kIntegerTol;
  return report;
}

Complex multiplier_hat(const ModelParams& p, Complex gamma, Complex z, double field_offset) {
  const double field = magnetic_field(p) + field_offset;
  const Complex shift = p.pair.rho(GroupElement::translation(gamma)).inverse().b();
  const double gauge_diff = gauge_phase(p, z + gamma) - gauge_phase(p, z);
  const double correction = (field - p.nu) * im_hermitian(z, gamma) + p.mu * im_hermitian(p.pair.tau(z), shift);
  return unit_phase(gauge_diff - 2.0 * correction);
}

Complex multiplier_chi(const ModelParams& p, Complex gamma) { return multiplier_hat(p, gamma, Complex{}); }

double check_multiplier_independence(const ModelParams& p, Complex gamma, const std::vector<Complex>& z_samples,
                                     double field_offset) {
  const Complex at_origin = multiplier_hat(p, gamma, Complex{}, field_offset);
  double worst = 0.0;
  for (Complex z : z_samples) {
    worst = std::max(worst, std::abs(multiplier_hat(p, gamma, z, field_offset) - at_origin));
  }
  return worst;
}

double pseudo_character_deviation(const ModelParams& p, Complex gamma, Complex gamma_prime) {
  const double field = magnetic_field(p);
  const Complex lhs = multiplier_chi(p, gamma + gamma_prime);
  const Complex rhs = unit_phase(2.0 * field * im_hermitian(gamma, gamma_prime)) * multiplier_chi(p, gamma) *
                      multiplier_chi(p, gamma_prime);
  return std::abs(lhs - rhs);
}

double pseudo_character_check(const ModelParams& p, const Lattice& lat, int word_len) {
  const auto ball = word_ball(lat, word_len);
  double worst = 0.0;
  for (Complex g : ball) {
    for (Complex gp : ball) worst = std::max(worst, pseudo_character_deviation(p, g, gp));
  }
  return worst;
}

double functional_eq_residual(const ModelParams& p, const SampledFunction& f, Complex gamma, Complex z) {
  const Complex lhs = f(z + gamma);
  const Complex rhs = J_factor_negated(p, GroupElement::translation(gamma), z) * f(z);
  return std::abs(lhs - rhs);
}

}  // namespace mll
