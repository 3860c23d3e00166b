#include "fsw/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fsw/kernels.hpp"
#include "fsw/spectral.hpp"

namespace fsw {

using CT = CoefficientTable;
using cplx = std::complex<double>;

std::string coefficient_table_text() {
  std::ostringstream os;
  const auto line = [&](const char* name, Rational r) { os << name << '=' << r.num << '/' << r.den << '\n'; };
  line("transport", CT::transport);
  line("bracket_linear", CT::bracket_linear);
  line("bracket_quadratic", CT::bracket_quadratic);
  line("bracket_slope_squared", CT::bracket_slope_squared);
  line("bracket_cubic", CT::bracket_cubic);
  line("bracket_quartic", CT::bracket_quartic);
  line("third_eta_eta_x", CT::third_eta_eta_x);
  line("third_eta2_eta_x", CT::third_eta2_eta_x);
  line("third_eta3_eta_x", CT::third_eta3_eta_x);
  line("third_eta_xxx", CT::third_eta_xxx);
  line("third_eta_xxt", CT::third_eta_xxt);
  line("third_eta_eta_xxx", CT::third_eta_eta_xxx);
  line("third_eta_x_eta_xx", CT::third_eta_x_eta_xx);
  return os.str();
}

FamilyCoefficients family_coefficients(double q, double mu, double eps_amp) {
  FamilyCoefficients c;
  c.q = q;
  c.alpha = q;
  c.beta = q - 1.0 / 6.0;
  c.gamma = -1.5 * q - 1.0 / 6.0;
  c.delta = -4.5 * q - 5.0 / 24.0;
  c.mu = mu;
  c.eps_amp = eps_amp;
  c.mu_alpha = mu * c.alpha;
  c.mu_beta = mu * c.beta;
  c.eps_mu_gamma = eps_amp * mu * c.gamma;
  c.eps_mu_delta = eps_amp * mu * c.delta;
  return c;
}

std::string to_string(RhsKind k) {
  switch (k) {
    case RhsKind::nonlocal_exact: return "nonlocal_exact";
    case RhsKind::mollified_A: return "mollified_A";
    case RhsKind::mollified_B: return "mollified_B";
  }
  throw std::invalid_argument("bad RhsKind");
}

RhsKind parse_rhs_kind(const std::string& s) {
  if (s == "nonlocal_exact") return RhsKind::nonlocal_exact;
  if (s == "mollified_A") return RhsKind::mollified_A;
  if (s == "mollified_B") return RhsKind::mollified_B;
  throw std::invalid_argument("unknown rhs variant '" + s + "'");
}

void RhsVariant::validate() const {
  const bool wants = kind != RhsKind::nonlocal_exact;
  if (wants != mollifier.has_value()) {
    throw std::invalid_argument(wants ? "mollified rhs variant requires a mollifier"
                                      : "exact rhs variant must not carry a mollifier");
  }
}

namespace {

void require_finite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw NumericalBreakdown(std::string("non-finite value in ") + what);
  }
}

struct Products {
  SpectralField square;  // P(eta^2)
  SpectralField bracket; // P(nonlinear part of the bracket)
};

// Dealiased eta^2 and the nonlinear bracket polynomial of the field with coefficients c.
Products padded_products(const SpectralField& c, const kernels::PolynomialCoefficients& pc) {
  const std::size_t n = c.grid().n();
  const std::size_t m = dealias::padded_size(n);
  const SpectralField cx = derivative(c, 1);
  const std::vector<double> u = dealias::to_padded(c.half_spectrum(), m);
  const std::vector<double> ux = dealias::to_padded(cx.half_spectrum(), m);
  std::vector<double> sq(m), poly(m);
  kernels::omp::polynomial_terms(u, ux, pc, sq, poly);
  require_finite(poly, "nonlinear terms");
  return {SpectralField(c.grid(), dealias::from_padded(sq, n)), SpectralField(c.grid(), dealias::from_padded(poly, n))};
}

kernels::PolynomialCoefficients bracket_polynomial(bool with_slope) {
  return {CT::bracket_quadratic.value(), with_slope ? CT::bracket_slope_squared.value() : 0.0,
          CT::bracket_cubic.value(), CT::bracket_quartic.value()};
}

RealField mollify_spectral(const SpectralField& c, const MollifierSpec& spec) {
  return mollify(to_physical(c), spec);
}

}  // namespace

RealField rhs(const RealField& eta) {
  const SpectralField c = to_spectral(eta);
  const Products p = padded_products(c, bracket_polynomial(true));
  const GridSpec& g = eta.grid();
  const std::size_t nyq = g.n() / 2;
  const double half_transport = 0.5 * CT::transport.value();
  const double lin = CT::bracket_linear.value();
  std::vector<cplx> out(nyq + 1);
  for (std::size_t k = 0; k < nyq; ++k) {
    const double xi = g.frequency(static_cast<std::ptrdiff_t>(k));
    const cplx ck = c.half_spectrum()[k];
    const cplx inner = ck + half_transport * p.square.half_spectrum()[k] +
                       (lin * ck + p.bracket.half_spectrum()[k]) / (1.0 + xi * xi);
    out[k] = cplx(0.0, xi) * inner;
  }
  std::vector<double> values(g.n());
  fft::inverse(out, values);
  require_finite(values, "rhs");
  return RealField(g, std::move(values));
}

RealField rhs_linear(const RealField& eta) {
  const RealField ex = derivative(eta, 1);
  return ex + CT::bracket_linear.value() * helmholtz_inverse(ex);
}

RealField rhs_mollified(const RealField& eta, const RhsVariant& variant) {
  variant.validate();
  if (variant.kind == RhsKind::nonlocal_exact) throw std::invalid_argument("rhs_mollified needs a mollified variant");
  const MollifierSpec& spec = *variant.mollifier;
  const GridSpec& g = eta.grid();
  spec.validate_for(g);

  const SpectralField c = to_spectral(eta);
  const RealField j_eta = mollify(eta, spec);
  const SpectralField cj = to_spectral(j_eta);

  // Bracket: -2 J eta + J(nonlinear polynomial of eta), then J H d_x of it.
  const Products p = padded_products(c, bracket_polynomial(true));
  const RealField bracket = CT::bracket_linear.value() * j_eta + mollify_spectral(p.bracket, spec);
  const RealField nonlocal = mollify(derivative(helmholtz_inverse(bracket), 1), spec);

  // (7/2) (J eta)(J eta_x) = (7/4) d_x (J eta)^2, dealiased.
  const Products pj = padded_products(cj, {});
  const RealField transport =
      to_physical(apply_symbol(pj.square, [&](double xi, std::size_t k) {
        return k == g.n() / 2 ? cplx(0.0) : cplx(0.0, 0.5 * CT::transport.value() * xi);
      }));

  return variant.kind == RhsKind::mollified_A
             ? derivative(j_eta, 1) + transport + nonlocal
             : derivative(eta, 1) + mollify(transport, spec) + nonlocal;
}

RealField evaluate_rhs(const RealField& eta, const RhsVariant& variant) {
  return variant.kind == RhsKind::nonlocal_exact ? rhs(eta) : rhs_mollified(eta, variant);
}

RealField third_order_residual(const RealField& eta) {
  const GridSpec& g = eta.grid();
  const std::size_t n = g.n();
  const std::size_t m = dealias::padded_size(n);
  const SpectralField c = to_spectral(eta);
  const SpectralField c1 = derivative(c, 1);
  const SpectralField c2 = derivative(c, 2);
  const SpectralField c3 = derivative(c, 3);
  const std::vector<double> u = dealias::to_padded(c.half_spectrum(), m);
  const std::vector<double> u1 = dealias::to_padded(c1.half_spectrum(), m);
  const std::vector<double> u2 = dealias::to_padded(c2.half_spectrum(), m);
  const std::vector<double> u3 = dealias::to_padded(c3.half_spectrum(), m);

  const double a1 = CT::third_eta_eta_x.value();
  const double a2 = CT::third_eta2_eta_x.value();
  const double a3 = CT::third_eta3_eta_x.value();
  const double b1 = CT::third_eta_eta_xxx.value();
  const double b2 = CT::third_eta_x_eta_xx.value();
  std::vector<double> prod(m);
#pragma omp parallel for schedule(static) if (m >= 4096)
  for (std::size_t i = 0; i < m; ++i) {
    const double v = u[i];
    prod[i] = v * u1[i] * (a1 + v * (a2 + v * a3)) + b1 * v * u3[i] + b2 * u1[i] * u2[i];
  }
  require_finite(prod, "residual products");
  const RealField nonlinear = to_physical(SpectralField(g, dealias::from_padded(prod, n)));

  const RealField eta_t = rhs(eta);
  const RealField eta_xxt = derivative(eta_t, 2);
  return eta_t + to_physical(c1) + nonlinear + CT::third_eta_xxx.value() * to_physical(c3) +
         CT::third_eta_xxt.value() * eta_xxt;
}

namespace {

RealField f_from_bracket(const RealField& eta, bool with_slope) {
  const GridSpec& g = eta.grid();
  const SpectralField c = to_spectral(eta);
  const Products p = padded_products(c, bracket_polynomial(with_slope));
  const double lin = CT::bracket_linear.value();
  std::vector<cplx> out(g.n() / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double xi = g.frequency(static_cast<std::ptrdiff_t>(k));
    out[k] = -xi * xi * (lin * c.half_spectrum()[k] + p.bracket.half_spectrum()[k]) / (1.0 + xi * xi);
  }
  out.back() = 0.0;
  return to_physical(SpectralField(g, std::move(out)));
}

}  // namespace

RealField f_functional(const RealField& eta) { return f_from_bracket(eta, false); }

RealField f_functional_complete(const RealField& eta) { return f_from_bracket(eta, true); }

}  // namespace fsw
