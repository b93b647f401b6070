#include "asmorph/ffield.hpp"

#include <algorithm>
#include <map>
#include <shared_mutex>

#include "asmorph/error.hpp"

namespace asmorph {

namespace {

// Dense polynomials over F_p, lowest degree first, used only while choosing
// and testing moduli.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime, a != 0 mod p
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = (a[shift + j] + (p - c) * m[j]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e != 0) {
    if (e & 1U) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1U;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint32_t> canonical_modulus(std::uint64_t p, unsigned n) {
  if (n == 1) return {0, 1};
  // Odometer over (c_0, ..., c_{n-1}) with c_0 the slowest digit, which is
  // lexicographic order compared low degree first. c_0 = 0 is divisible by X.
  std::vector<std::uint32_t> m(n + 1, 0);
  m[n] = 1;
  m[0] = 1;
  for (;;) {
    if (is_irreducible(m, p)) return m;
    unsigned pos = n - 1;
    for (;;) {
      if (++m[pos] < p) break;
      m[pos] = 0;
      if (pos == 0) fail(ErrorKind::InternalInconsistency, "no irreducible polynomial found");
      --pos;
    }
  }
}

struct SolverKey {
  const FieldCtx* ctx;
  std::vector<std::uint32_t> c;
  auto operator<=>(const SolverKey&) const = default;
};

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint64_t p) {
  ensure(!monic.empty() && monic.back() == 1, ErrorKind::InvalidParameters, "polynomial must be monic");
  const std::size_t n = monic.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  Poly f(monic.begin(), monic.end());
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = poly_powmod(h, p, f, p);  // X^(p^i) mod f
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    Poly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx(std::uint64_t p, unsigned n, std::vector<std::uint32_t> modulus) : p_(p), n_(n) {
  std::copy(modulus.begin(), modulus.end(), modulus_.begin());
  size_ = ipow(p, n);
  unit_order_ = size_ - 1;
}

FieldCtx::~FieldCtx() = default;

bool FieldCtx::within_guard(const Config& cfg) const {
  return size_ <= ipow(BigInt(2), cfg.max_field_log2);
}

void FieldCtx::require_enumerable(const Config& cfg) const {
  if (!within_guard(cfg)) {
    fail(ErrorKind::GuardExceeded, "F_" + std::to_string(p_) + "^" + std::to_string(n_) +
                                       " exceeds 2^" + std::to_string(cfg.max_field_log2));
  }
}

const FieldElem& FieldCtx::primitive_element() const {
  std::call_once(primitive_once_, [this] {
    const std::uint64_t order = to_u64(unit_order_, "p^n - 1");
    const auto primes = factor(order);
    const std::uint64_t q = order + 1;
    for (std::uint64_t i = 1; i < q; ++i) {
      FieldElem g = FieldElem::from_index(*this, i);
      if (g.is_zero()) continue;
      bool generates = true;
      for (auto [prime, e] : primes) {
        if (pow(g, order / prime).is_one()) {
          generates = false;
          break;
        }
      }
      if (generates) {
        primitive_ = std::make_unique<FieldElem>(g);
        return;
      }
    }
    fail(ErrorKind::InternalInconsistency, "multiplicative group has no generator");
  });
  return *primitive_;
}

const FieldCtx& make_field(std::uint64_t p, unsigned n) {
  ensure(p != 2, ErrorKind::NotOdd, "p = 2");
  ensure(is_prime(p), ErrorKind::NotPrime, std::to_string(p));
  ensure(p < kMaxPrime, ErrorKind::InvalidParameters, "p too large for word-sized coefficients");
  ensure(n >= 1 && n <= kMaxDegree, ErrorKind::InvalidParameters,
         "extension degree must be in [1, " + std::to_string(kMaxDegree) + "]");

  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FieldCtx>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, n}];
  if (!slot) slot.reset(new FieldCtx(p, n, canonical_modulus(p, n)));
  return *slot;
}

// --------------------------------------------------------------- FieldElem

FieldElem FieldElem::from_int(const FieldCtx& ctx, std::int64_t v) {
  FieldElem r(ctx);
  const auto p = static_cast<std::int64_t>(ctx.p());
  std::int64_t m = v % p;
  if (m < 0) m += p;
  r.c_[0] = static_cast<std::uint32_t>(m);
  return r;
}

FieldElem FieldElem::from_coeffs(const FieldCtx& ctx, std::span<const std::int64_t> coeffs) {
  ensure(coeffs.size() <= ctx.degree(), ErrorKind::InvalidParameters, "too many coefficients");
  FieldElem r(ctx);
  const auto p = static_cast<std::int64_t>(ctx.p());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t m = coeffs[i] % p;
    if (m < 0) m += p;
    r.c_[i] = static_cast<std::uint32_t>(m);
  }
  return r;
}

FieldElem FieldElem::from_index(const FieldCtx& ctx, std::uint64_t index) {
  FieldElem r(ctx);
  const std::uint64_t p = ctx.p();
  for (unsigned j = ctx.degree(); j-- > 0;) {
    r.c_[j] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  ensure(index == 0, ErrorKind::InvalidParameters, "index out of range");
  return r;
}

const FieldCtx& FieldElem::ctx() const {
  ensure(ctx_ != nullptr, ErrorKind::CtxMismatch, "element has no field");
  return *ctx_;
}

std::span<const std::uint32_t> FieldElem::coeffs() const { return {c_.data(), ctx().degree()}; }

std::uint64_t FieldElem::index() const {
  const std::uint64_t p = ctx().p();
  std::uint64_t idx = 0;
  for (unsigned j = 0; j < ctx_->degree(); ++j) idx = idx * p + c_[j];
  return idx;
}

bool FieldElem::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElem::is_one() const noexcept {
  return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElem::in_prime_subfield() const noexcept {
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

void FieldElem::check_same(const FieldElem& o) const {
  if (ctx_ == nullptr || ctx_ != o.ctx_) fail(ErrorKind::CtxMismatch, "operands live in different fields");
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  const auto p = static_cast<std::uint32_t>(ctx_->p());
  for (unsigned i = 0; i < ctx_->degree(); ++i) {
    std::uint32_t s = c_[i] + o.c_[i];
    c_[i] = s >= p ? s - p : s;
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(o);
  const auto p = static_cast<std::uint32_t>(ctx_->p());
  for (unsigned i = 0; i < ctx_->degree(); ++i) {
    c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  }
  return *this;
}

FieldElem FieldElem::operator-() const {
  FieldElem r(ctx());
  const auto p = static_cast<std::uint32_t>(ctx_->p());
  for (unsigned i = 0; i < ctx_->degree(); ++i) r.c_[i] = c_[i] == 0 ? 0 : p - c_[i];
  return r;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  const std::uint64_t p = ctx_->p();
  const unsigned n = ctx_->degree();
  // p < 2^24 keeps 2n-1 <= 63 accumulated products below 2^54.
  std::array<std::uint64_t, 2 * kMaxDegree> acc{};
  for (unsigned i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) acc[i + j] += std::uint64_t{c_[i]} * o.c_[j];
  }
  for (unsigned i = 0; i + 1 < 2 * n; ++i) acc[i] %= p;
  const auto mod = ctx_->modulus();
  for (unsigned d = 2 * n - 2; d >= n; --d) {
    const std::uint64_t c = acc[d] % p;
    if (c != 0) {
      const std::uint64_t neg = p - c;
      for (unsigned j = 0; j < n; ++j) acc[d - n + j] = (acc[d - n + j] + neg * mod[j]) % p;
    }
  }
  for (unsigned i = 0; i < n; ++i) c_[i] = static_cast<std::uint32_t>(acc[i]);
  return *this;
}

FieldElem FieldElem::inverse() const {
  ensure(!is_zero(), ErrorKind::DivisionByZero, "inverse of 0");
  return pow(*this, ctx_->unit_order() - 1);
}

bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
  return a.ctx_ == b.ctx_ && a.c_ == b.c_;
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) noexcept {
  if (a.ctx_ != b.ctx_) return std::less<>{}(a.ctx_, b.ctx_) ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.c_ <=> b.c_;
}

FieldElem pow(const FieldElem& a, std::uint64_t e) {
  FieldElem result = FieldElem::from_int(a.ctx(), 1);
  FieldElem base = a;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

FieldElem pow(const FieldElem& a, const BigInt& e) {
  ensure(e >= 0, ErrorKind::InvalidParameters, "negative exponent");
  if (a.is_zero()) return e == 0 ? FieldElem::from_int(a.ctx(), 1) : a;
  BigInt reduced = e % a.ctx().unit_order();
  if (fits_u64(reduced)) return pow(a, reduced.convert_to<std::uint64_t>());
  FieldElem result = FieldElem::from_int(a.ctx(), 1);
  const auto bits = boost::multiprecision::msb(reduced);
  for (auto i = static_cast<long>(bits); i >= 0; --i) {
    result *= result;
    if (boost::multiprecision::bit_test(reduced, static_cast<unsigned>(i))) result *= a;
  }
  return result;
}

std::uint64_t mult_order(const FieldElem& a) {
  ensure(!a.is_zero(), ErrorKind::ZeroElement, "order of 0");
  std::uint64_t e = to_u64(a.ctx().unit_order(), "p^n - 1");
  for (auto [prime, mult] : factor(e)) {
    for (unsigned i = 0; i < mult; ++i) {
      if (pow(a, e / prime).is_one()) {
        e /= prime;
      } else {
        break;
      }
    }
  }
  return e;
}

FieldElem root_of_unity(const FieldCtx& ctx, std::uint64_t ord) {
  ensure(ord >= 1, ErrorKind::InvalidParameters, "order must be positive");
  if (!divides(BigInt(ord), ctx.unit_order())) {
    fail(ErrorKind::OrderNotAvailable,
         std::to_string(ord) + " does not divide " + to_string(ctx.unit_order()));
  }
  return pow(ctx.primitive_element(), BigInt(ctx.unit_order() / ord));
}

unsigned min_extension_with_order(std::uint64_t p, const BigInt& ord) {
  ensure(ord >= 1, ErrorKind::InvalidParameters, "order must be positive");
  ensure(gcd(BigInt(p), ord) == 1, ErrorKind::NotCoprime, "gcd(p, ord) != 1");
  if (ord == 1) return 1;
  BigInt pn = p % ord;
  unsigned n = 1;
  while (pn != 1) {
    pn = pn * p % ord;
    ++n;
    ensure(n <= 1'000'000, ErrorKind::InvalidParameters, "order of p is too large");
  }
  return n;
}

// ---------------------------------------------------------- AdditiveSolver

AdditiveSolver::AdditiveSolver(const FieldElem& c) : ctx_(&c.ctx()) {
  ensure(!c.is_zero(), ErrorKind::ZeroCoefficient, "c = 0");
  const unsigned n = ctx_->degree();
  const std::uint64_t p = ctx_->p();

  // Column j of A is the image of X^j.
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  for (unsigned j = 0; j < n; ++j) {
    std::vector<std::int64_t> unit(n, 0);
    unit[j] = 1;
    FieldElem xj = FieldElem::from_coeffs(*ctx_, unit);
    FieldElem img = pow(xj, p) + c * xj;
    for (unsigned i = 0; i < n; ++i) a[i][j] = img.coeffs()[i];
  }
  std::vector<std::vector<std::uint64_t>> t(n, std::vector<std::uint64_t>(n, 0));
  for (unsigned i = 0; i < n; ++i) t[i][i] = 1;

  unsigned row = 0;
  for (unsigned col = 0; col < n && row < n; ++col) {
    unsigned piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    std::swap(t[piv], t[row]);
    const std::uint64_t inv = inv_mod(a[row][col], p);
    for (unsigned k = 0; k < n; ++k) {
      a[row][k] = a[row][k] * inv % p;
      t[row][k] = t[row][k] * inv % p;
    }
    for (unsigned r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const std::uint64_t f = p - a[r][col];
      for (unsigned k = 0; k < n; ++k) {
        a[r][k] = (a[r][k] + f * a[row][k]) % p;
        t[r][k] = (t[r][k] + f * t[row][k]) % p;
      }
    }
    pivot_cols_.push_back(col);
    ++row;
  }
  rank_ = row;

  transform_.assign(n, std::vector<std::uint32_t>(n, 0));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) transform_[i][k] = static_cast<std::uint32_t>(t[i][k]);

  std::vector<bool> is_pivot(n, false);
  for (unsigned pc : pivot_cols_) is_pivot[pc] = true;
  for (unsigned f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::int64_t> v(n, 0);
    v[f] = 1;
    for (unsigned i = 0; i < rank_; ++i) v[pivot_cols_[i]] = static_cast<std::int64_t>((p - a[i][f]) % p);
    kernel_.push_back(FieldElem::from_coeffs(*ctx_, v));
  }
  for (unsigned i = 0; i < kernel_dim(); ++i) fiber_size_ *= p;
}

std::vector<std::uint32_t> AdditiveSolver::transformed(const FieldElem& u) const {
  ensure(&u.ctx() == ctx_, ErrorKind::CtxMismatch, "u lives in a different field");
  const unsigned n = ctx_->degree();
  const std::uint64_t p = ctx_->p();
  const auto uc = u.coeffs();
  std::vector<std::uint32_t> v(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (unsigned k = 0; k < n; ++k) acc = (acc + std::uint64_t{transform_[i][k]} * uc[k]) % p;
    v[i] = static_cast<std::uint32_t>(acc);
  }
  return v;
}

bool AdditiveSolver::in_image(const FieldElem& u) const {
  ensure(&u.ctx() == ctx_, ErrorKind::CtxMismatch, "u lives in a different field");
  const unsigned n = ctx_->degree();
  const std::uint64_t p = ctx_->p();
  const auto uc = u.coeffs();
  for (unsigned i = rank_; i < n; ++i) {
    std::uint64_t acc = 0;
    for (unsigned k = 0; k < n; ++k) acc = (acc + std::uint64_t{transform_[i][k]} * uc[k]) % p;
    if (acc != 0) return false;
  }
  return true;
}

std::optional<FieldElem> AdditiveSolver::particular(const FieldElem& u) const {
  const auto v = transformed(u);
  const unsigned n = ctx_->degree();
  for (unsigned i = rank_; i < n; ++i) {
    if (v[i] != 0) return std::nullopt;
  }
  std::vector<std::int64_t> y(n, 0);
  for (unsigned i = 0; i < rank_; ++i) y[pivot_cols_[i]] = v[i];
  return FieldElem::from_coeffs(*ctx_, y);
}

std::vector<FieldElem> AdditiveSolver::solve(const FieldElem& u) const {
  auto base = particular(u);
  if (!base) return {};
  std::vector<FieldElem> out{*base};
  const std::uint64_t p = ctx_->p();
  for (const FieldElem& kb : kernel_) {
    const std::size_t sz = out.size();
    FieldElem step = kb;
    for (std::uint64_t mult = 1; mult < p; ++mult) {
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] + step);
      step += kb;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const AdditiveSolver> additive_solver(const FieldElem& c) {
  ensure(!c.is_zero(), ErrorKind::ZeroCoefficient, "c = 0");
  static std::shared_mutex mu;
  static std::map<SolverKey, std::shared_ptr<const AdditiveSolver>> cache;
  SolverKey key{&c.ctx(), std::vector<std::uint32_t>(c.coeffs().begin(), c.coeffs().end())};
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto solver = std::make_shared<const AdditiveSolver>(c);
  std::unique_lock lock(mu);
  auto [it, inserted] = cache.emplace(std::move(key), std::move(solver));
  return it->second;
}

std::vector<FieldElem> solve_additive(const FieldElem& c, const FieldElem& u) {
  ensure(&c.ctx() == &u.ctx(), ErrorKind::CtxMismatch, "c and u live in different fields");
  return additive_solver(c)->solve(u);
}

}  // namespace asmorph
