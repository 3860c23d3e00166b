#pragma once

#include <optional>
#include <string>

#include "fsw/grid.hpp"
#include "fsw/mollifier.hpp"

namespace fsw {

struct Rational {
  long num = 0;
  long den = 1;
  constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Fixed coefficients of the model, stored exactly. The nonlocal form is
///   eta_t = eta_x + (7/2) eta eta_x
///         + (1 - d_xx)^{-1} d_x ( -2 eta - (5/2) eta^2 + (7/4) eta_x^2 + (1/8) eta^3 - (3/64) eta^4 ),
/// and the third-order form it is equivalent to is
///   eta_t + eta_x + (3/2) eta eta_x - (3/8) eta^2 eta_x + (3/16) eta^3 eta_x + eta_xxx - eta_xxt
///         = -(7/2) eta eta_xxx - 7 eta_x eta_xx.
struct CoefficientTable {
  // nonlocal form
  static constexpr Rational transport{7, 2};
  static constexpr Rational bracket_linear{-2, 1};
  static constexpr Rational bracket_quadratic{-5, 2};
  static constexpr Rational bracket_slope_squared{7, 4};
  static constexpr Rational bracket_cubic{1, 8};
  static constexpr Rational bracket_quartic{-3, 64};
  // third-order form, all terms moved to the left-hand side
  static constexpr Rational third_eta_eta_x{3, 2};
  static constexpr Rational third_eta2_eta_x{-3, 8};
  static constexpr Rational third_eta3_eta_x{3, 16};
  static constexpr Rational third_eta_xxx{1, 1};
  static constexpr Rational third_eta_xxt{-1, 1};
  static constexpr Rational third_eta_eta_xxx{7, 2};
  static constexpr Rational third_eta_x_eta_xx{7, 1};
};

/// "name=num/den" lines for every entry of CoefficientTable.
std::string coefficient_table_text();

/// Coefficients of the q-family of surface equations and the third-order
/// coefficients they induce for given mu and amplitude parameter.
struct FamilyCoefficients {
  double q = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double mu = 0.0;
  double eps_amp = 0.0;
  double mu_alpha = 0.0;
  double mu_beta = 0.0;
  double eps_mu_gamma = 0.0;
  double eps_mu_delta = 0.0;
};

FamilyCoefficients family_coefficients(double q, double mu = 12.0, double eps_amp = 1.0);

enum class RhsKind { nonlocal_exact, mollified_A, mollified_B };

std::string to_string(RhsKind k);
RhsKind parse_rhs_kind(const std::string& s);

struct RhsVariant {
  RhsKind kind = RhsKind::nonlocal_exact;
  std::optional<MollifierSpec> mollifier;

  static RhsVariant exact() { return {}; }
  static RhsVariant mollified(RhsKind kind, MollifierSpec spec) { return {kind, spec}; }

  /// Throws std::invalid_argument unless a mollifier is present exactly when
  /// the kind is a mollified one.
  void validate() const;

  bool operator==(const RhsVariant&) const = default;
};

/// Right-hand side of the nonlocal Cauchy problem. Products are formed on a
/// 3x padded grid. Throws NumericalBreakdown on non-finite values.
RealField rhs(const RealField& eta);

/// Linear part of `rhs`: eta_x - 2 (1 - d_xx)^{-1} eta_x.
RealField rhs_linear(const RealField& eta);

/// Regularized right-hand sides. mollified_A places the mollifier as in
///   J eta_x + (7/2) (J eta)(J eta_x) + J (1-d_xx)^{-1} d_x [ -2 J eta - (5/2) J eta^2 + ... ],
/// mollified_B as in
///   eta_x + (7/2) J[(J eta)(J eta_x)] + J (1-d_xx)^{-1} d_x [ same bracket ].
RealField rhs_mollified(const RealField& eta, const RhsVariant& variant);

/// Dispatches on variant.kind.
RealField evaluate_rhs(const RealField& eta, const RhsVariant& variant);

/// Pointwise residual of the third-order equation with eta_t := rhs(eta) and
/// eta_xxt := d_xx rhs(eta).
RealField third_order_residual(const RealField& eta);

/// f = -2 g_x*eta_x - 5 g_x*(eta eta_x) + (3/8) g_x*(eta^2 eta_x) - (3/16) g_x*(eta^3 eta_x),
/// with g_x* realized as d_x (1 - d_xx)^{-1}.
RealField f_functional(const RealField& eta);

/// f plus the (7/2) g_x*(eta_x eta_xx) term, i.e. the full nonlocal part of
/// d_x eta_t. With it, d/dt M = (7/2) M^2 + f_complete(xi) holds at a critical
/// point xi of eta_x.
RealField f_functional_complete(const RealField& eta);

}  // namespace fsw
