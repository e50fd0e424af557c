#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"
#include "subspace.hpp"

namespace hopfreg {

/// Dense univariate polynomial, coefficient of x^i at position i.
template <ExactField F>
struct Poly {
  using Elem = typename F::Elem;
  F f{};
  std::vector<Elem> c;  // trimmed: back() nonzero unless empty (zero poly)

  static Poly zero(F f) { return Poly{f, {}}; }
  static Poly constant(F f, Elem v) {
    Poly p{f, {v}};
    p.trim();
    return p;
  }
  static Poly x(F f) { return Poly{f, {f.zero(), f.one()}}; }

  void trim() {
    while (!c.empty() && f.is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  Elem leading() const { return c.back(); }

  Poly operator+(const Poly& o) const {
    Poly out = *this;
    if (o.c.size() > out.c.size()) out.c.resize(o.c.size(), f.zero());
    for (Index i = 0; i < o.c.size(); ++i) out.c[i] = f.add(out.c[i], o.c[i]);
    out.trim();
    return out;
  }
  Poly operator-(const Poly& o) const {
    Poly out = *this;
    if (o.c.size() > out.c.size()) out.c.resize(o.c.size(), f.zero());
    for (Index i = 0; i < o.c.size(); ++i) out.c[i] = f.sub(out.c[i], o.c[i]);
    out.trim();
    return out;
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero(f);
    Poly out{f, std::vector<Elem>(c.size() + o.c.size() - 1, f.zero())};
    for (Index i = 0; i < c.size(); ++i) {
      if (f.is_zero(c[i])) continue;
      for (Index j = 0; j < o.c.size(); ++j)
        out.c[i + j] = f.add(out.c[i + j], f.mul(c[i], o.c[j]));
    }
    out.trim();
    return out;
  }
  Poly scaled(const Elem& s) const {
    Poly out = *this;
    for (auto& x : out.c) x = f.mul(x, s);
    out.trim();
    return out;
  }
  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(f.inv(leading()));
  }

  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw UsageError("polynomial division by zero");
    Poly r = *this;
    Poly q{f, {}};
    if (r.degree() >= d.degree()) q.c.assign(r.degree() - d.degree() + 1, f.zero());
    Elem lead_inv = f.inv(d.leading());
    while (!r.is_zero() && r.degree() >= d.degree()) {
      Index shift = r.degree() - d.degree();
      Elem coef = f.mul(r.leading(), lead_inv);
      q.c[shift] = f.add(q.c[shift], coef);
      for (Index i = 0; i < d.c.size(); ++i)
        r.c[shift + i] = f.sub(r.c[shift + i], f.mul(coef, d.c[i]));
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  Elem eval(const Elem& x) const {
    Elem acc = f.zero();
    for (Index i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c[i]);
    return acc;
  }

  Poly derivative() const {
    Poly out{f, {}};
    for (Index i = 1; i < c.size(); ++i) out.c.push_back(f.mul(f.from_int(static_cast<std::int64_t>(i)), c[i]));
    out.trim();
    return out;
  }

  bool operator==(const Poly& o) const { return c == o.c; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (Index i = c.size(); i-- > 0;) {
      if (f.is_zero(c[i])) continue;
      if (!s.empty()) s += " + ";
      s += f.to_string(c[i]);
      if (i > 0) s += "*x^" + std::to_string(i);
    }
    return s;
  }
};

template <ExactField F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    a = b;
    b = r;
  }
  return a.monic();
}

/// Product of the distinct irreducible factors (monic).  In characteristic p
/// parts with multiplicity divisible by p have zero derivative and are
/// reduced by taking p-th roots of exponents, valid over prime fields.
template <ExactField F>
Poly<F> squarefree_part(const Poly<F>& p) {
  if (p.is_zero() || p.degree() == 0) return p.monic();
  auto d = p.derivative();
  if (d.is_zero()) {
    std::int64_t ch = p.f.characteristic();
    if (ch == 0) throw UsageError("zero derivative in characteristic 0");
    Poly<F> h{p.f, {}};
    for (Index i = 0; i < p.c.size(); i += static_cast<Index>(ch)) h.c.push_back(p.c[i]);
    h.trim();
    return squarefree_part(h);
  }
  auto g = poly_gcd(p, d);
  if (g.degree() == 0) return p.monic();
  auto w = p.divmod(g).first.monic();  // factors with multiplicity not divisible by char
  // strip all w-divisible content; what remains has zero derivative
  Poly<F> r = p.monic();
  for (auto h = poly_gcd(r, w); h.degree() > 0; h = poly_gcd(r, w)) r = r.divmod(h).first;
  if (r.degree() == 0) return w;
  return (w * squarefree_part(r)).monic();
}

/// All roots in GF(p) by evaluation; guarded so huge moduli fail loudly.
inline std::vector<std::int64_t> prime_field_roots(const Poly<PrimeField>& p) {
  if (p.f.p > (1 << 20))
    throw ResourceError("root scan over GF(p) needs p <= 2^20", static_cast<std::uint64_t>(p.f.p));
  std::vector<std::int64_t> roots;
  for (std::int64_t c = 0; c < p.f.p; ++c)
    if (p.f.is_zero(p.eval(c))) roots.push_back(c);
  return roots;
}

namespace detail {
inline std::vector<boost::multiprecision::cpp_int> divisors_of(const boost::multiprecision::cpp_int& n0) {
  using boost::multiprecision::cpp_int;
  cpp_int n = n0 < 0 ? cpp_int(-n0) : n0;
  std::vector<cpp_int> out;
  if (n == 0) return out;
  if (n > cpp_int(std::int64_t{1} << 40)) throw NotSplitOverRationals("coefficient too large for rational root search");
  std::int64_t m = n.convert_to<std::int64_t>();
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.emplace_back(d);
    if (d != m / d) out.emplace_back(m / d);
  }
  return out;
}
}  // namespace detail

/// Rational roots of a polynomial over QQ via the rational root theorem.
inline std::vector<RationalField::Elem> rational_roots(const Poly<RationalField>& p) {
  using boost::multiprecision::cpp_int;
  using R = RationalField::Elem;
  if (p.is_zero() || p.degree() == 0) return {};
  // clear denominators
  cpp_int lcm = 1;
  for (const auto& c : p.c) {
    cpp_int d = denominator(c);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<cpp_int> ic;
  for (const auto& c : p.c) ic.push_back(cpp_int(numerator(c) * (lcm / denominator(c))));
  std::vector<R> roots;
  if (p.f.is_zero(p.eval(p.f.zero()))) roots.push_back(R(0));
  // strip trailing zero coefficients (root at 0 handled above)
  Index low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  std::vector<cpp_int> cc(ic.begin() + low, ic.end());
  if (cc.size() < 2) return roots;
  auto nums = detail::divisors_of(cc.front());
  auto dens = detail::divisors_of(cc.back());
  for (const auto& n : nums)
    for (const auto& d : dens) {
      for (int sign : {1, -1}) {
        R cand(sign * n, d);
        if (p.f.is_zero(p.eval(cand))) {
          bool seen = false;
          for (const auto& r : roots) seen |= (r == cand);
          if (!seen) roots.push_back(cand);
        }
      }
    }
  return roots;
}

/// Characteristic polynomial via the Berkowitz algorithm (division free).
/// Returns coefficients of det(xI - M) in ascending powers of x, degree n.
template <ExactField F>
Poly<F> char_poly(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw UsageError("characteristic polynomial of a non-square matrix");
  const F& f = m.field();
  Index n = m.rows();
  // vec holds the coefficients of the char poly of the leading r x r block,
  // in DESCENDING powers (vec[0] is the leading 1).
  std::vector<typename F::Elem> vec{f.one()};
  for (Index r = 1; r <= n; ++r) {
    // Toeplitz column for Samuelson's identity on the leading r x r block.
    // t = [1, -a_rr, -(d c), -(d M c), -(d M^2 c), ...]
    std::vector<typename F::Elem> t(r + 1, f.zero());
    t[0] = f.one();
    t[1] = f.neg(m.at(r - 1, r - 1));
    if (r >= 2) {
      Index k = r - 1;  // size of the leading block M
      std::vector<typename F::Elem> w(k);  // starts as c, then M c, M^2 c, ...
      for (Index i = 0; i < k; ++i) w[i] = m.at(i, r - 1);
      for (Index step = 2; step <= r; ++step) {
        typename F::Elem dot = f.zero();
        for (Index i = 0; i < k; ++i) dot = f.add(dot, f.mul(m.at(r - 1, i), w[i]));
        t[step] = f.neg(dot);
        if (step == r) break;
        std::vector<typename F::Elem> nw(k, f.zero());
        for (Index i = 0; i < k; ++i) {
          typename F::Elem acc = f.zero();
          for (Index j = 0; j < k; ++j) acc = f.add(acc, f.mul(m.at(i, j), w[j]));
          nw[i] = acc;
        }
        w = std::move(nw);
      }
    }
    std::vector<typename F::Elem> next(r + 1, f.zero());
    for (Index i = 0; i <= r; ++i)
      for (Index j = 0; j < vec.size() && j <= i; ++j)
        next[i] = f.add(next[i], f.mul(t[i - j], vec[j]));
    vec = std::move(next);
  }
  // convert to ascending order
  Poly<F> p{f, std::vector<typename F::Elem>(n + 1, f.zero())};
  for (Index i = 0; i <= n; ++i) p.c[n - i] = vec[i];
  p.trim();
  return p;
}

/// Coefficient c_j of det(xI - M) = x^n - c_1 x^{n-1} + c_2 x^{n-2} - ...
/// (sign-adjusted elementary symmetric function of the eigenvalues).
template <ExactField F>
typename F::Elem char_poly_coefficient(const Matrix<F>& m, Index j) {
  auto p = char_poly(m);
  Index n = m.rows();
  typename F::Elem a = (n - j) < p.c.size() ? p.c[n - j] : m.field().zero();
  // det(xI - M) carries (-1)^j c_j at x^{n-j}
  return (j % 2 == 0) ? a : m.field().neg(a);
}

/// Minimal polynomial of a square matrix (monic), by Krylov elimination on
/// the flattened powers I, M, M^2, ...
template <ExactField F>
Poly<F> minimal_polynomial(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw UsageError("minimal polynomial of a non-square matrix");
  const F& f = m.field();
  Index n = m.rows();
  std::vector<std::vector<typename F::Elem>> flat;  // flattened powers
  Matrix<F> power = Matrix<F>::identity(f, n);
  for (Index d = 0; d <= n; ++d) {
    std::vector<typename F::Elem> v(n * n);
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) v[r * n + c] = power.at(r, c);
    flat.push_back(std::move(v));
    // solve for dependence: flat[d] in span(flat[0..d-1])
    if (d >= 1) {
      Matrix<F> sys(f, n * n, d);
      for (Index col = 0; col < d; ++col)
        for (Index row = 0; row < n * n; ++row) sys.at(row, col) = flat[col][row];
      if (auto sol = sys.solve_particular(flat[d])) {
        Poly<F> p{f, std::vector<typename F::Elem>(d + 1, f.zero())};
        p.c[d] = f.one();
        for (Index i = 0; i < d; ++i) p.c[i] = f.neg((*sol)[i]);
        p.trim();
        return p;
      }
    }
    power = power * m;
  }
  throw TheoremViolation("minimal polynomial not found within dimension bound");
}

}  // namespace hopfreg
