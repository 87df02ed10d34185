#include "trsect/upoly.hpp"

#include <sstream>

namespace trsect {

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rational& a) {
  UPoly p;
  if (sgn(a) != 0) p.c_ = {a};
  return p;
}

UPoly UPoly::x() {
  UPoly p;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

UPoly UPoly::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return UPoly(std::move(c));
}

const Rational& UPoly::coeff(size_t i) const {
  static const Rational zero(0);
  return i < c_.size() ? c_[i] : zero;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  std::vector<Rational> c(c_);
  for (auto& v : c) v = -v;
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const Rational& a) const {
  std::vector<Rational> c(c_);
  for (auto& v : c) v *= a;
  return UPoly(std::move(c));
}

UPoly UPoly::shifted_up(unsigned k) const {
  if (is_zero()) return UPoly();
  std::vector<Rational> c(k, Rational(0));
  c.insert(c.end(), c_.begin(), c_.end());
  return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
  if (is_zero()) return UPoly();
  Rational inv = Rational(1) / leading();
  return *this * inv;
}

Rational UPoly::eval(const Rational& a) const {
  Rational r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
  return r;
}

UPoly UPoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring on a + b*y
  UPoly lin(std::vector<Rational>{a, b});
  UPoly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * lin + UPoly::constant(c_[i]);
  return r;
}

UPoly UPoly::reversed() const {
  std::vector<Rational> c(c_.rbegin(), c_.rend());
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw ZeroPolynomial();
  UPoly r = *this;
  UPoly q;
  int dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    Rational f = r.leading() / d.leading();
    unsigned k = static_cast<unsigned>(r.degree() - dd);
    UPoly t = UPoly::constant(f).shifted_up(k);
    q = q + t;
    r = r - d * t;
  }
  return {q, r};
}

std::optional<UPoly> UPoly::div_exact(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& a = c_[i];
    if (sgn(a) == 0) continue;
    Rational mag = abs_rat(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (!unit) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  while (e) {
    if (e & 1u) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1u;
  }
  return r;
}

// monic gcd in Z/m[x], m prime; ascending coefficients, empty = zero
std::vector<u64> gcd_modp(std::vector<u64> a, std::vector<u64> b, u64 m) {
  auto trim = [](std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    u64 inv = powmod(b.back(), m - 2, m);
    while (a.size() >= b.size()) {
      u64 f = mulmod(a.back(), inv, m);
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        u64 s = mulmod(f, b[i], m);
        a[off + i] = (a[off + i] + m - s) % m;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = powmod(a.back(), m - 2, m);
    for (auto& c : a) c = mulmod(c, inv, m);
  }
  return a;
}

// exact division test of integer polynomials; G must be primitive
// (Gauss: a primitive divisor over Q divides over Z)
bool divides_int(const std::vector<mpz_class>& A, const std::vector<mpz_class>& G) {
  if (A.size() < G.size()) return false;
  std::vector<mpz_class> r = A;
  const mpz_class& lg = G.back();
  const int dg = static_cast<int>(G.size()) - 1;
  for (int k = static_cast<int>(r.size()) - 1; k >= dg; --k) {
    if (r[k] == 0) continue;
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r[k].get_mpz_t(), lg.get_mpz_t());
    if (rem != 0) return false;
    int off = k - dg;
    for (size_t i = 0; i < G.size(); ++i) r[off + i] -= q * G[i];
  }
  for (int i = 0; i < dg; ++i)
    if (r[i] != 0) return false;
  return true;
}

void make_primitive(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& c : v) g = gcd(g, c);
  if (sgn(v.back()) < 0) g = -g;
  if (g != 0 && g != 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::vector<mpz_class> gcd_int_coeffs(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b) {
  mpz_class lg = gcd(a.back(), b.back());
  mpz_class prime = 2147483648_mpz;
  mpz_class M = 0;
  std::vector<mpz_class> crt, last_lift;
  int best_deg = -1;
  for (int iter = 0; iter < 100000; ++iter) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    u64 m = prime.get_ui();
    if (mpz_fdiv_ui(a.back().get_mpz_t(), m) == 0 ||
        mpz_fdiv_ui(b.back().get_mpz_t(), m) == 0)
      continue;
    auto red = [&](const std::vector<mpz_class>& src) {
      std::vector<u64> out(src.size());
      for (size_t i = 0; i < src.size(); ++i)
        out[i] = mpz_fdiv_ui(src[i].get_mpz_t(), static_cast<unsigned long>(m));
      return out;
    };
    auto g = gcd_modp(red(a), red(b), m);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return {mpz_class(1)};
    if (best_deg >= 0 && dg > best_deg) continue;  // unlucky prime
    u64 scale = mpz_fdiv_ui(lg.get_mpz_t(), static_cast<unsigned long>(m));
    for (auto& c : g) c = mulmod(c, scale, m);
    if (best_deg < 0 || dg < best_deg) {
      best_deg = dg;
      crt.assign(g.begin(), g.end());
      last_lift.clear();
      M = prime;
    } else {
      mpz_class minv;
      mpz_invert(minv.get_mpz_t(), M.get_mpz_t(), prime.get_mpz_t());
      for (size_t i = 0; i < crt.size(); ++i) {
        mpz_class t = ((mpz_class(g[i]) - crt[i]) * minv) % prime;
        if (t < 0) t += prime;
        crt[i] += M * t;
      }
      M *= prime;
    }
    // trial-divide only once the symmetric lift stops changing
    std::vector<mpz_class> lift(crt.size());
    for (size_t i = 0; i < crt.size(); ++i) {
      lift[i] = crt[i];
      if (lift[i] * 2 > M) lift[i] -= M;
    }
    if (lift != last_lift || lift.back() == 0) {
      last_lift = std::move(lift);
      continue;
    }
    make_primitive(lift);
    if (divides_int(a, lift) && divides_int(b, lift)) return lift;
  }
  throw std::runtime_error("modular gcd did not stabilize");
}

UPoly gcd_upoly(const UPoly& p, const UPoly& q) {
  if (p.is_zero()) return q.is_zero() ? q : q.monic();
  if (q.is_zero()) return p.monic();
  if (p.degree() == 0 || q.degree() == 0) return UPoly::constant(Rational(1));
  auto ints = [](const UPoly& u) {
    mpz_class l(1);
    for (const auto& c : u.coeffs()) l = lcm(l, c.get_den());
    std::vector<mpz_class> v;
    v.reserve(u.coeffs().size());
    for (const auto& c : u.coeffs()) {
      Rational s = c * Rational(l);
      v.push_back(s.get_num());
    }
    return v;
  };
  auto g = gcd_int_coeffs(ints(p), ints(q));
  std::vector<Rational> cs;
  cs.reserve(g.size());
  for (const auto& c : g) cs.emplace_back(c);
  return UPoly(std::move(cs)).monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (p.degree() == 0) return UPoly::constant(Rational(1));
  UPoly g = gcd_upoly(p, p.derivative());
  return p.div_exact(g)->monic();
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

static int variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int sturm_variations_at(const std::vector<UPoly>& seq, const Rational& a) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& f : seq) s.push_back(sgn(f.eval(a)));
  return variations(s);
}

int sturm_variations_at_neg_inf(const std::vector<UPoly>& seq) {
  std::vector<int> s;
  for (const auto& f : seq) {
    int lc = sgn(f.leading());
    s.push_back(f.degree() % 2 == 0 ? lc : -lc);
  }
  return variations(s);
}

int sturm_variations_at_pos_inf(const std::vector<UPoly>& seq) {
  std::vector<int> s;
  for (const auto& f : seq) s.push_back(sgn(f.leading()));
  return variations(s);
}

int count_real_roots(const UPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (p.degree() == 0) return 0;
  auto seq = sturm_sequence(squarefree_part(p));
  return sturm_variations_at_neg_inf(seq) - sturm_variations_at_pos_inf(seq);
}

int count_real_roots_in(const UPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (p.degree() == 0) return 0;
  auto seq = sturm_sequence(squarefree_part(p));
  return sturm_variations_at(seq, a) - sturm_variations_at(seq, b);
}

Rational root_bound(const UPoly& p) {
  if (p.is_zero() || p.degree() == 0) return Rational(1);
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs_rat(p.coeff(i)) / abs_rat(p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

int descartes_interval_bound(const UPoly& p, const Rational& a, const Rational& b) {
  // Map (a, b) to (0, oo): count sign variations of (1+y)^d p((a+b*y)/(1+y)).
  UPoly q = p.compose_affine(a, b - a);  // roots in (a,b) -> (0,1)
  UPoly m = q.reversed().compose_affine(Rational(1), Rational(1));
  std::vector<int> s;
  for (const auto& cf : m.coeffs()) s.push_back(sgn(cf));
  int v = 0;
  int prev = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (prev != 0 && x != prev) ++v;
    prev = x;
  }
  return v;
}

}  // namespace trsect
