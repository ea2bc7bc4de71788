#include "mll/model.hpp"

#include <array>
#include <random>
#include <sstream>

#include "mll/error.hpp"

namespace mll {

namespace {

constexpr double kEquivarianceTol = 1e-9;
constexpr double kConstancyTol = 1e-8;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void verify_affine_equivariance(const EquivariantPair& pair) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 3; ++trial) {
    const GroupElement g(unit_phase(u(rng) * M_PI), Complex{u(rng), u(rng)});
    const Complex z{u(rng), u(rng)};
    const double r = check_equivariance(pair, g, z);
    if (r > kEquivarianceTol) {
      std::ostringstream os;
      os << "affine pair fails equivariance, residual " << r;
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
  }
}

// Fixed sample points used to check that a generic field is constant.
const std::array<Complex, 10>& constancy_samples() {
  static const std::array<Complex, 10> pts = [] {
    std::array<Complex, 10> out{};
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (auto& z : out) z = Complex{u(rng), u(rng)};
    return out;
  }();
  return pts;
}

double field_at(const ModelParams& p, Complex z) {
  return p.nu + p.mu * (std::norm(p.pair.dtau_dz(z)) - std::norm(p.pair.dtau_dzbar(z)));
}

}  // namespace

EquivariantPair EquivariantPair::inner(const GroupElement& h) {
  EquivariantPair pair{InnerAffine{h}};
  verify_affine_equivariance(pair);
  return pair;
}

EquivariantPair EquivariantPair::conjugate(const GroupElement& h) {
  EquivariantPair pair{ConjugateAffine{h}};
  verify_affine_equivariance(pair);
  return pair;
}

EquivariantPair EquivariantPair::generic(GenericPair pair) {
  if (!pair.tau || !pair.dtau_dz || !pair.dtau_dzbar || !pair.lap_tau || !pair.rho) {
    throw Error(ErrorCode::InvalidArgument, "generic pair requires tau, its derivatives, its Laplacian and rho");
  }
  return EquivariantPair{std::move(pair)};
}

AffineTau EquivariantPair::affine_tau() const {
  return std::visit(Overloaded{
                        [](const InnerAffine& v) { return AffineTau{v.h.a(), Complex{}, v.h.b()}; },
                        [](const ConjugateAffine& v) { return AffineTau{Complex{}, v.h.a(), v.h.b()}; },
                        [](const GenericPair&) -> AffineTau {
                          throw Error(ErrorCode::NotAffine, "generic equivariant pair has no affine form");
                        },
                    },
                    v_);
}

Complex EquivariantPair::tau(Complex z) const {
  if (const auto* g = std::get_if<GenericPair>(&v_)) return g->tau(z);
  const AffineTau t = affine_tau();
  return t.p * z + t.q * std::conj(z) + t.r;
}

Complex EquivariantPair::dtau_dz(Complex z) const {
  if (const auto* g = std::get_if<GenericPair>(&v_)) return g->dtau_dz(z);
  return affine_tau().p;
}

Complex EquivariantPair::dtau_dzbar(Complex z) const {
  if (const auto* g = std::get_if<GenericPair>(&v_)) return g->dtau_dzbar(z);
  return affine_tau().q;
}

Complex EquivariantPair::lap_tau(Complex z) const {
  if (const auto* g = std::get_if<GenericPair>(&v_)) return g->lap_tau(z);
  return {};
}

GroupElement EquivariantPair::rho(const GroupElement& g) const {
  return std::visit(Overloaded{
                        [&](const InnerAffine& v) { return v.h * g * v.h.inverse(); },
                        [&](const ConjugateAffine& v) {
                          const Complex alpha = v.h.a();
                          const Complex beta = v.h.b();
                          const Complex abar = std::conj(g.a());
                          return GroupElement(abar, alpha * std::conj(g.b()) + beta * (1.0 - abar));
                        },
                        [&](const GenericPair& v) { return v.rho(g); },
                    },
                    v_);
}

ModelParams::ModelParams(double nu_, double mu_, EquivariantPair pair_) : nu(nu_), mu(mu_), pair(std::move(pair_)) {
  if (!std::isfinite(nu) || !std::isfinite(mu) || nu < 0.0 || mu < 0.0) {
    std::ostringstream os;
    os << "weights must be finite and non-negative (nu = " << nu << ", mu = " << mu << ")";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

ModelParams ModelParams::landau(double field) { return ModelParams(field, 0.0, EquivariantPair::identity()); }

Complex s_function(const ModelParams& p, Complex z) {
  const Complex t = p.pair.tau(z);
  // d(conj tau)/d(conj z) = conj(d tau / dz)
  return p.nu * z + p.mu * (t * std::conj(p.pair.dtau_dz(z)) - std::conj(t) * p.pair.dtau_dzbar(z));
}

AffineS s_affine(const ModelParams& p) {
  const AffineTau t = p.pair.affine_tau();
  const double slope = p.nu + p.mu * (std::norm(t.p) - std::norm(t.q));
  const Complex offset = p.mu * (std::conj(t.p) * t.r - t.q * std::conj(t.r));
  return {slope, offset};
}

double magnetic_field_unchecked(const ModelParams& p) {
  const double b0 = field_at(p, Complex{});
  if (!p.pair.is_affine()) {
    for (Complex z : constancy_samples()) {
      const double bz = field_at(p, z);
      if (std::abs(bz - b0) > kConstancyTol) {
        std::ostringstream os;
        os << "field varies: B(0) = " << b0 << ", B(" << z << ") = " << bz;
        throw Error(ErrorCode::NotConstant, os.str());
      }
    }
  }
  return b0;
}

double magnetic_field(const ModelParams& p) {
  const double b = magnetic_field_unchecked(p);
  if (!(b > 0.0)) {
    std::ostringstream os;
    os << "magnetic field B = " << b << " is not positive";
    throw Error(ErrorCode::NonPositiveField, os.str());
  }
  return b;
}

Complex gauge_phi(const ModelParams& p) { return s_affine(p).offset; }

double gauge_phase(const ModelParams& p, Complex z) { return -2.0 * im_hermitian(z, gauge_phi(p)); }

Complex harmonic_defect(const ModelParams& p, Complex z) {
  const Complex t = p.pair.tau(z);
  const Complex lap = p.pair.lap_tau(z);
  return t * std::conj(lap) - std::conj(t) * lap;
}

double check_equivariance(const EquivariantPair& pair, const GroupElement& g, Complex z) {
  return std::abs(pair.tau(g.act(z)) - pair.rho(g).act(pair.tau(z)));
}

}  // namespace mll
