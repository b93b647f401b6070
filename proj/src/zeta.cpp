#include "asmorph/zeta.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "asmorph/error.hpp"

namespace asmorph {

namespace {

using RPoly = std::vector<Rational>;  // lowest degree first

void trim(RPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Quotient and remainder in Q[x].
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  RPoly quot(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  return {quot, a};
}

RPoly rgcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RPoly derivative(const RPoly& a) {
  RPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long long>(i));
  return d;
}

using Cx = std::complex<long double>;

Cx horner(const std::vector<long double>& c, Cx z) {
  Cx acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

// Aberth-Ehrlich iteration on a monic polynomial with simple roots.
std::vector<Cx> aberth_roots(const std::vector<long double>& c, long double radius) {
  const std::size_t deg = c.size() - 1;
  std::vector<long double> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<long double>(i));
  std::vector<Cx> z(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(i) /
                                  static_cast<long double>(deg) + 0.4L;
    z[i] = std::polar(radius * 1.05L, angle);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      const Cx f = horner(c, z[i]);
      const Cx df = horner(dc, z[i]);
      if (std::abs(f) == 0) continue;
      const Cx ratio = f / df;
      Cx repulse = 0;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i) repulse += 1.0L / (z[i] - z[j]);
      }
      const Cx w = ratio / (1.0L - ratio * repulse);
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

}  // namespace

CountSeries count_series(const CurveBk& curve, unsigned upto, const Config& cfg) {
  CountSeries s{curve, {}};
  for (unsigned n = 1; n <= upto; ++n) s.counts.push_back(count_points(curve, n, cfg));
  return s;
}

bool weil_bound_holds(const BigInt& count, const BigInt& q, unsigned n, const BigInt& genus) {
  const BigInt qn = ipow(q, n);
  const BigInt dev = count - qn - 1;
  return dev * dev <= 4 * genus * genus * qn;
}

LPolynomial lpolynomial_from_counts(const BigInt& q, unsigned g, const std::vector<BigInt>& counts) {
  ensure(counts.size() >= g, ErrorKind::InvalidParameters, "need N_1..N_g");
  std::vector<BigInt> s(g + 1, 0);
  for (unsigned r = 1; r <= g; ++r) s[r] = 1 + ipow(q, r) - counts[r - 1];

  LPolynomial L{q, g, std::vector<BigInt>(2 * g + 1, 0)};
  L.coeffs[0] = 1;
  for (unsigned i = 1; i <= g; ++i) {
    BigInt acc = 0;
    for (unsigned j = 1; j <= i; ++j) acc += s[j] * L.coeffs[i - j];
    if (acc % i != 0) {
      fail(ErrorKind::InternalInconsistency, "inexact Newton division at i = " + std::to_string(i));
    }
    L.coeffs[i] = -acc / i;
  }
  for (unsigned i = 0; i < g; ++i) L.coeffs[2 * g - i] = ipow(q, g - i) * L.coeffs[i];
  return L;
}

bool satisfies_functional_equation(const LPolynomial& L) {
  if (L.coeffs.size() != 2 * L.g + 1 || L.coeffs[0] != 1) return false;
  for (unsigned i = 0; i <= L.g; ++i) {
    if (L.coeffs[2 * L.g - i] != ipow(L.q, L.g - i) * L.coeffs[i]) return false;
  }
  return true;
}

double max_root_modulus_deviation(const LPolynomial& L) {
  if (L.g == 0) return 0.0;
  // Reciprocal roots of L are the roots of T^(2g) L(1/T).
  const std::size_t deg = 2 * L.g;
  RPoly rev(deg + 1);
  for (std::size_t j = 0; j <= deg; ++j) rev[j] = Rational(L.coeffs[deg - j]);
  trim(rev);
  RPoly g = rgcd(rev, derivative(rev));
  RPoly sq = divmod(rev, g).first;
  const Rational lead = sq.back();
  std::vector<long double> c;
  for (const Rational& v : sq) c.push_back(static_cast<long double>(v / lead));
  if (c.size() < 2) return 0.0;

  const long double sqrt_q = std::sqrt(static_cast<long double>(L.q));
  double worst = 0.0;
  for (const Cx& z : aberth_roots(c, sqrt_q)) {
    worst = std::max(worst, static_cast<double>(std::abs(std::abs(z) - sqrt_q)));
  }
  return worst;
}

void validate(const LPolynomial& L, double tol) {
  ensure(!L.coeffs.empty() && L.coeffs[0] == 1, ErrorKind::InternalInconsistency, "L(0) != 1");
  ensure(satisfies_functional_equation(L), ErrorKind::InternalInconsistency, "functional equation fails");
  const double dev = max_root_modulus_deviation(L);
  ensure(dev <= tol, ErrorKind::InternalInconsistency,
         "reciprocal root off the circle |z| = sqrt(q) by " + std::to_string(dev));
}

LPolynomial lpolynomial(const CurveBk& curve, const Config& cfg) {
  const unsigned g = to_u64(curve.genus(), "genus") > 64 ? 65 : static_cast<unsigned>(curve.genus());
  ensure(g <= 64, ErrorKind::GuardExceeded, "genus too large");
  make_field(curve.p, std::max(1U, std::min(g, kMaxDegree))).require_enumerable(cfg);
  ensure(g <= kMaxDegree, ErrorKind::GuardExceeded, "F_{p^g} beyond supported extension degrees");
  const CountSeries series = count_series(curve, g, cfg);
  for (unsigned n = 1; n <= g; ++n) {
    ensure(weil_bound_holds(series.counts[n - 1], BigInt(curve.p), n, curve.genus()),
           ErrorKind::InternalInconsistency, "count violates the Weil bound at n = " + std::to_string(n));
  }
  LPolynomial L = lpolynomial_from_counts(BigInt(curve.p), g, series.counts);
  validate(L);
  return L;
}

std::vector<BigInt> predicted_counts(const LPolynomial& L, unsigned upto) {
  auto a = [&](unsigned i) -> BigInt { return i < L.coeffs.size() ? L.coeffs[i] : BigInt(0); };
  std::vector<BigInt> s(upto + 1, 0);
  std::vector<BigInt> counts;
  for (unsigned i = 1; i <= upto; ++i) {
    BigInt acc = -BigInt(i) * a(i);
    for (unsigned j = 1; j < i; ++j) acc -= s[j] * a(i - j);
    s[i] = acc;
    counts.push_back(1 + ipow(L.q, i) - s[i]);
  }
  return counts;
}

bool divides(const LPolynomial& small, const LPolynomial& big) {
  ensure(small.q == big.q, ErrorKind::BaseFieldMismatch, "L-polynomials over different base fields");
  const auto& d = small.coeffs;
  const auto& n = big.coeffs;
  if (d.size() > n.size()) return false;
  ensure(!d.empty() && d[0] == 1, ErrorKind::InvalidParameters, "divisor must have constant term 1");
  // Constant term 1 is a unit, so dividing as power series stays in Z.
  const std::size_t qdeg = n.size() - d.size();
  std::vector<BigInt> quot(qdeg + 1, 0);
  for (std::size_t i = 0; i <= qdeg; ++i) {
    BigInt v = n[i];
    for (std::size_t j = 1; j < d.size() && j <= i; ++j) v -= d[j] * quot[i - j];
    quot[i] = v;
  }
  std::vector<BigInt> prod(n.size(), 0);
  for (std::size_t i = 0; i < quot.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) prod[i + j] += quot[i] * d[j];
  return prod == n;
}

Obstruction kleiman_serre_obstruction(std::uint64_t p, unsigned k, unsigned l, std::int64_t c, const Config& cfg) {
  const LPolynomial source = lpolynomial(make_curve(p, k, c), cfg);
  const LPolynomial target = lpolynomial(make_curve(p, l, c), cfg);
  return divides(target, source) ? Obstruction::NoObstruction : Obstruction::Obstructed;
}

}  // namespace asmorph
