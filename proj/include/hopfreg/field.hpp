#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hopfreg {

using Index = std::size_t;

/// Runtime description of the ground field: GF(p) for a prime p, or the
/// rationals.  Used by the document layer; computations dispatch to one of
/// the two concrete field types below.
struct FieldSpec {
  enum class Kind { prime, rational };
  Kind kind = Kind::rational;
  std::int64_t p = 0;

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static FieldSpec prime(std::int64_t p) {
    if (!is_prime(p)) throw UsageError("field modulus " + std::to_string(p) + " is not prime");
    if (p >= (std::int64_t{1} << 31)) throw UsageError("field modulus too large");
    return FieldSpec{Kind::prime, p};
  }
  static FieldSpec rational() { return FieldSpec{Kind::rational, 0}; }

  bool operator==(const FieldSpec&) const = default;

  std::string name() const {
    return kind == Kind::prime ? "GF(" + std::to_string(p) + ")" : "QQ";
  }
};

/// Prime field GF(p) with canonical representatives 0..p-1 stored in int64.
struct PrimeField {
  using Elem = std::int64_t;
  static constexpr bool enumerable = true;

  std::int64_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::int64_t modulus) : p(modulus) {
    if (!FieldSpec::is_prime(p)) throw UsageError("modulus " + std::to_string(p) + " is not prime");
    if (p >= (std::int64_t{1} << 31)) throw UsageError("field modulus too large");
  }

  bool operator==(const PrimeField&) const = default;

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
  Elem sub(Elem a, Elem b) const { Elem s = a - b; return s < 0 ? s + p : s; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem inv(Elem a) const {
    if (a == 0) throw UsageError("division by zero in GF(" + std::to_string(p) + ")");
    // extended Euclid
    Elem t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      Elem q = r / nr;
      Elem tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    return t < 0 ? t + p : t;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  std::int64_t characteristic() const { return p; }
  Elem from_int(std::int64_t n) const {
    Elem v = n % p;
    return v < 0 ? v + p : v;
  }
  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("scalar '" + s + "' is not a canonical GF(" + std::to_string(p) + ") representative");
    Elem v = 0;
    for (char c : s) {
      v = v * 10 + (c - '0');
      if (v >= (std::int64_t{1} << 40))
        throw ValidationError("scalar '" + s + "' out of range for GF(" + std::to_string(p) + ")");
    }
    if (v >= p) throw ValidationError("scalar '" + s + "' out of range for GF(" + std::to_string(p) + ")");
    return v;
  }
  FieldSpec spec() const { return FieldSpec::prime(p); }
  /// Total order on canonical representatives, used for deterministic sorts.
  static int cmp(Elem a, Elem b) { return a < b ? -1 : a > b ? 1 : 0; }
};

/// The rationals with exact arbitrary-precision arithmetic.
struct RationalField {
  using Elem = boost::multiprecision::cpp_rational;
  static constexpr bool enumerable = false;

  bool operator==(const RationalField&) const = default;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
  Elem neg(const Elem& a) const { return Elem(-a); }
  Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
  Elem inv(const Elem& a) const {
    if (a == 0) throw UsageError("division by zero in QQ");
    return Elem(1 / a);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  std::int64_t characteristic() const { return 0; }
  Elem from_int(std::int64_t n) const { return Elem(n); }
  std::string to_string(const Elem& a) const {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
  }
  Elem parse(const std::string& s) const {
    auto bad = [&] { throw ValidationError("scalar '" + s + "' is not a valid rational"); };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto check_int = [&](const std::string& t, bool sign_ok) {
      if (t.empty()) bad();
      Index start = (sign_ok && t[0] == '-') ? 1 : 0;
      if (start == t.size()) bad();
      for (Index i = start; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
    };
    check_int(num, true);
    check_int(den, false);
    boost::multiprecision::cpp_int n(num), d(den);
    if (d == 0) bad();
    return Elem(n, d);
  }
  FieldSpec spec() const { return FieldSpec::rational(); }
  static int cmp(const Elem& a, const Elem& b) { return a < b ? -1 : a > b ? 1 : 0; }
};

template <class F>
concept ExactField = requires(const F f, typename F::Elem a) {
  typename F::Elem;
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.add(a, a) } -> std::same_as<typename F::Elem>;
  { f.sub(a, a) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.characteristic() } -> std::same_as<std::int64_t>;
  { f.from_int(std::int64_t{}) } -> std::same_as<typename F::Elem>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { F::enumerable } -> std::convertible_to<bool>;
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<RationalField>);

/// Runs fn with the concrete field object matching the spec.
template <class Fn>
decltype(auto) dispatch_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::prime) return fn(PrimeField(spec.p));
  return fn(RationalField{});
}

}  // namespace hopfreg
