#pragma once

// Exact arithmetic in F_{p^n}, p an odd prime.
//
// Contexts are interned: make_field(p, n) always returns the same object for
// the same (p, n), built on the lexicographically smallest monic irreducible
// polynomial (coefficients compared low degree first). Elements carry a
// pointer to their context, so contexts are never destroyed.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "asmorph/arith.hpp"
#include "asmorph/config.hpp"

namespace asmorph {

inline constexpr unsigned kMaxDegree = 32;
inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 24;

class FieldElem;

class FieldCtx {
 public:
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;
  ~FieldCtx();

  std::uint64_t p() const noexcept { return p_; }
  unsigned degree() const noexcept { return n_; }
  /// n+1 coefficients, lowest degree first; the last one is 1.
  std::span<const std::uint32_t> modulus() const noexcept { return {modulus_.data(), n_ + 1}; }

  /// p^n
  const BigInt& size() const noexcept { return size_; }
  /// p^n - 1
  const BigInt& unit_order() const noexcept { return unit_order_; }

  bool within_guard(const Config& cfg) const;
  /// Throws GuardExceeded unless p^n <= 2^max_field_log2.
  void require_enumerable(const Config& cfg) const;
  /// p^n as a machine word; only valid for enumerable fields.
  std::uint64_t size_u64() const { return to_u64(size_, "field size"); }

  /// First element, in index order, generating the multiplicative group.
  const FieldElem& primitive_element() const;

 private:
  FieldCtx(std::uint64_t p, unsigned n, std::vector<std::uint32_t> modulus);
  friend const FieldCtx& make_field(std::uint64_t p, unsigned n);

  std::uint64_t p_;
  unsigned n_;
  std::array<std::uint32_t, kMaxDegree + 1> modulus_{};
  BigInt size_;
  BigInt unit_order_;
  mutable std::once_flag primitive_once_;
  mutable std::unique_ptr<FieldElem> primitive_;
};

/// Errors: NotPrime, NotOdd, InvalidParameters (n outside [1, kMaxDegree], p too large).
const FieldCtx& make_field(std::uint64_t p, unsigned n);

class FieldElem {
 public:
  FieldElem() = default;
  explicit FieldElem(const FieldCtx& ctx) : ctx_(&ctx) {}

  static FieldElem from_int(const FieldCtx& ctx, std::int64_t v);
  static FieldElem from_coeffs(const FieldCtx& ctx, std::span<const std::int64_t> coeffs);
  /// Inverse of index().
  static FieldElem from_index(const FieldCtx& ctx, std::uint64_t index);

  bool attached() const noexcept { return ctx_ != nullptr; }
  const FieldCtx& ctx() const;
  std::span<const std::uint32_t> coeffs() const;

  /// Position in coefficient-lexicographic order: the constant coefficient is
  /// the most significant base-p digit.
  std::uint64_t index() const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool in_prime_subfield() const noexcept;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem operator-() const;

  /// Throws DivisionByZero for 0.
  FieldElem inverse() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept;
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) noexcept;

 private:
  void check_same(const FieldElem& o) const;

  const FieldCtx* ctx_ = nullptr;
  std::array<std::uint32_t, kMaxDegree> c_{};
};

FieldElem pow(const FieldElem& a, const BigInt& e);
FieldElem pow(const FieldElem& a, std::uint64_t e);

/// Least e >= 1 with a^e = 1. Errors: ZeroElement.
std::uint64_t mult_order(const FieldElem& a);

/// g^((p^n-1)/ord) for the primitive element g. Errors: OrderNotAvailable.
FieldElem root_of_unity(const FieldCtx& ctx, std::uint64_t ord);

/// Multiplicative order of p modulo ord. Errors: NotCoprime.
unsigned min_extension_with_order(std::uint64_t p, const BigInt& ord);

/// Ben-Or test on a monic polynomial (low degree first).
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint64_t p);

/// Calls f(elem) for every element in index order. Guarded.
template <class F>
void for_each_element(const FieldCtx& ctx, const Config& cfg, F&& f) {
  ctx.require_enumerable(cfg);
  const std::uint64_t q = ctx.size_u64();
  for (std::uint64_t i = 0; i < q; ++i) f(FieldElem::from_index(ctx, i));
}

/// The F_p-linear map y -> y^p + c*y on F_{p^n}, factored once.
/// solve(u) returns the fiber over u: empty or a coset of the kernel.
class AdditiveSolver {
 public:
  explicit AdditiveSolver(const FieldElem& c);

  const FieldCtx& ctx() const noexcept { return *ctx_; }
  unsigned rank() const noexcept { return rank_; }
  unsigned kernel_dim() const noexcept { return ctx_->degree() - rank_; }
  /// p^kernel_dim
  std::uint64_t fiber_size() const noexcept { return fiber_size_; }
  const std::vector<FieldElem>& kernel_basis() const noexcept { return kernel_; }

  bool in_image(const FieldElem& u) const;
  std::optional<FieldElem> particular(const FieldElem& u) const;
  /// All solutions sorted by index.
  std::vector<FieldElem> solve(const FieldElem& u) const;

 private:
  std::vector<std::uint32_t> transformed(const FieldElem& u) const;

  const FieldCtx* ctx_;
  unsigned rank_ = 0;
  std::uint64_t fiber_size_ = 1;
  std::vector<std::vector<std::uint32_t>> transform_;  // T with T*A in reduced echelon form
  std::vector<unsigned> pivot_cols_;
  std::vector<FieldElem> kernel_;
};

/// Cached per (context, c). Errors: ZeroCoefficient.
std::shared_ptr<const AdditiveSolver> additive_solver(const FieldElem& c);

/// All y with y^p + c*y = u. Errors: ZeroCoefficient, CtxMismatch.
std::vector<FieldElem> solve_additive(const FieldElem& c, const FieldElem& u);

}  // namespace asmorph
