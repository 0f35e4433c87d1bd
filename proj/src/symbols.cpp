#include "berg/symbols.hpp"

#include <cmath>
#include <sstream>

#include "berg/disk_geometry.hpp"

namespace berg {

AnalyticSymbol AnalyticSymbol::poly(std::vector<Complex> coeffs, SymbolRole role) {
  if (coeffs.empty()) coeffs.push_back(Complex{0.0});
  AnalyticSymbol s;
  TaylorPoly p;
  p.coeffs = Eigen::Map<const Eigen::VectorXcd>(coeffs.data(), static_cast<int>(coeffs.size()));
  s.rep_ = std::move(p);
  s.role_ = role;
  return s;
}

AnalyticSymbol AnalyticSymbol::lft(Complex a, Complex b, Complex c, Complex d, SymbolRole role) {
  if (!(std::abs(d) > std::abs(c))) {
    throw std::invalid_argument("AnalyticSymbol::lft: requires |d| > |c| so cz + d != 0 on the closed disk");
  }
  AnalyticSymbol s;
  s.rep_ = LinearFractional{a, b, c, d};
  s.role_ = role;
  return s;
}

int AnalyticSymbol::poly_degree() const {
  const auto& c = as_poly().coeffs;
  for (int n = static_cast<int>(c.size()) - 1; n >= 0; --n) {
    if (c(n) != Complex{0.0}) return n;
  }
  return -1;
}

Complex eval_symbol(const AnalyticSymbol& s, DiskPoint z, int order) {
  if (order < 0) throw std::invalid_argument("eval_symbol: order must be >= 0");
  if (s.is_poly()) {
    const auto& c = s.as_poly().coeffs;
    const int n = static_cast<int>(c.size());
    // Horner on the derivative coefficients c_k * k!/(k-order)!
    Complex acc{0.0};
    for (int k = n - 1; k >= order; --k) {
      double fall = 1.0;
      for (int j = 0; j < order; ++j) fall *= (k - j);
      acc = acc * z + fall * c(k);
    }
    return acc;
  }
  const auto& m = s.as_lft();
  const Complex denom = m.c * z + m.d;
  switch (order) {
    case 0:
      return (m.a * z + m.b) / denom;
    case 1:
      return (m.a * m.d - m.b * m.c) / (denom * denom);
    case 2:
      return -2.0 * m.c * (m.a * m.d - m.b * m.c) / (denom * denom * denom);
    default:
      throw std::invalid_argument("eval_symbol: closed-form orders above 2 unsupported for lft");
  }
}

ValidationReport validate_self_map(const AnalyticSymbol& s) {
  ValidationReport rep;
  rep.passed = true;
  const int samples = 1024;
  for (int k = 1; k <= 20; ++k) {
    const double radius = 1.0 - std::pow(2.0, -k);
    for (int l = 0; l < samples; ++l) {
      const DiskPoint z = std::polar(radius, 2.0 * kPi * l / samples);
      const double v = std::abs(eval_symbol(s, z));
      if (v > rep.sup_observed) {
        rep.sup_observed = v;
        rep.witness = z;
      }
      if (v >= 1.0) rep.passed = false;
    }
  }
  std::ostringstream os;
  os << (rep.passed ? "self-map check passed" : "self-map check failed") << ": sup |s| = "
     << rep.sup_observed << " near z = " << rep.witness.real() << " + " << rep.witness.imag()
     << "i";
  rep.message = os.str();
  return rep;
}

SymbolQuadruple SymbolQuadruple::make(AnalyticSymbol u, AnalyticSymbol v, AnalyticSymbol phi,
                                      AnalyticSymbol psi) {
  for (const auto* m : {&phi, &psi}) {
    const ValidationReport rep = validate_self_map(*m);
    if (!rep.passed) {
      throw std::invalid_argument("SymbolQuadruple: not a self-map; " + rep.message);
    }
  }
  return SymbolQuadruple{std::move(u), std::move(v), std::move(phi), std::move(psi)};
}

double rho_at(const SymbolQuadruple& q, DiskPoint z) {
  return pseudo_distance(eval_symbol(q.phi, z), eval_symbol(q.psi, z));
}

Eigen::VectorXcd taylor_series(const AnalyticSymbol& s, int length) {
  if (length < 1) throw std::invalid_argument("taylor_series: length must be >= 1");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(length);
  if (s.is_poly()) {
    const auto& c = s.as_poly().coeffs;
    const int n = std::min<int>(length, static_cast<int>(c.size()));
    out.head(n) = c.head(n);
    return out;
  }
  // (az + b)/(cz + d) = (az + b) * (1/d) * sum_k (-c/d)^k z^k
  const auto& m = s.as_lft();
  const Complex q = -m.c / m.d;
  Complex qk{1.0};
  for (int k = 0; k < length; ++k) {
    const Complex geom = qk / m.d;
    out(k) += m.b * geom;
    if (k + 1 < length) out(k + 1) += m.a * geom;
    qk *= q;
  }
  return out;
}

Eigen::VectorXcd convolve_trunc(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, int length) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(length);
  const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  for (int i = 0; i < std::min(na, length); ++i) {
    if (a(i) == Complex{0.0}) continue;
    const int jmax = std::min(nb, length - i);
    for (int j = 0; j < jmax; ++j) out(i + j) += a(i) * b(j);
  }
  return out;
}

AnalyticSymbol derivative_symbol(const AnalyticSymbol& s, int length) {
  std::vector<Complex> out;
  if (s.is_poly()) {
    const auto& c = s.as_poly().coeffs;
    for (int k = 1; k < c.size(); ++k) out.push_back(static_cast<double>(k) * c(k));
    if (out.empty()) out.push_back(Complex{0.0});
    return AnalyticSymbol::poly(std::move(out));
  }
  const Eigen::VectorXcd series = taylor_series(s, length + 1);
  out.resize(length);
  for (int k = 1; k <= length; ++k) out[k - 1] = static_cast<double>(k) * series(k);
  return AnalyticSymbol::poly(std::move(out));
}

AnalyticSymbol product_symbol(const AnalyticSymbol& lhs, const AnalyticSymbol& rhs, int length) {
  int len = length;
  if (lhs.is_poly() && rhs.is_poly()) {
    len = std::max(1, lhs.poly_degree() + rhs.poly_degree() + 1);  // exact
  }
  const Eigen::VectorXcd prod =
      convolve_trunc(taylor_series(lhs, len), taylor_series(rhs, len), len);
  std::vector<Complex> out(prod.data(), prod.data() + prod.size());
  return AnalyticSymbol::poly(std::move(out));
}

double circle_sup(const AnalyticSymbol& s, double radius, int samples) {
  double sup = 0.0;
  for (int l = 0; l < samples; ++l) {
    const DiskPoint z = std::polar(radius, 2.0 * kPi * l / samples);
    sup = std::max(sup, std::abs(eval_symbol(s, z)));
  }
  return sup;
}

}  // namespace berg
