#include "trsect/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace trsect {

VarSet::VarSet(std::vector<std::string> names, size_t nparams)
    : names_(std::move(names)), nparams_(nparams) {
  if (nparams_ > names_.size()) throw std::invalid_argument("nparams exceeds name count");
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name " + names_[i]);
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names, size_t nparams) {
  return std::make_shared<const VarSet>(std::move(names), nparams);
}

std::optional<size_t> VarSet::index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

namespace {

unsigned range_degree(const Exponents& a, size_t b, size_t e) {
  unsigned d = 0;
  for (size_t i = b; i < e; ++i) d += a[i];
  return d;
}

// 0 if equal, -1 if a < b, +1 if a > b; grevlex restricted to [b, e)
int grevlex_cmp(const Exponents& a, const Exponents& x, size_t b, size_t e) {
  unsigned da = range_degree(a, b, e), dx = range_degree(x, b, e);
  if (da != dx) return da < dx ? -1 : 1;
  for (size_t i = e; i-- > b;) {
    if (a[i] != x[i]) return a[i] > x[i] ? -1 : 1;
  }
  return 0;
}

int lex_cmp(const Exponents& a, const Exponents& x) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != x[i]) return a[i] < x[i] ? -1 : 1;
  return 0;
}

}  // namespace

bool MonomialOrder::less(const Exponents& a, const Exponents& b, const VarSet& vs) const {
  switch (kind) {
    case OrderKind::Grevlex:
      return grevlex_cmp(a, b, 0, vs.size()) < 0;
    case OrderKind::BlockXoverY: {
      int c = grevlex_cmp(a, b, vs.nparams(), vs.size());
      if (c != 0) return c < 0;
      return grevlex_cmp(a, b, 0, vs.nparams()) < 0;
    }
    case OrderKind::Lex:
      return lex_cmp(a, b) < 0;
  }
  return false;
}

MPoly MPoly::constant(VarSetPtr vs, const Rational& a) {
  MPoly p(std::move(vs));
  if (sgn(a) != 0) p.terms_.emplace(Exponents(p.vs_->size(), 0), a);
  return p;
}

MPoly MPoly::variable(VarSetPtr vs, size_t idx) {
  MPoly p(std::move(vs));
  Exponents e(p.vs_->size(), 0);
  e[idx] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MPoly MPoly::monomial(VarSetPtr vs, const Exponents& e, const Rational& a) {
  MPoly p(std::move(vs));
  if (sgn(a) != 0) p.terms_.emplace(e, a);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
}

Rational MPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return d;
}

int MPoly::degree_in(size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return is_zero() ? -1 : d;
}

bool MPoly::depends_on(size_t var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] > 0) return true;
  return false;
}

void MPoly::check_same(const MPoly& o) const {
  if (vs_ == o.vs_) return;
  if (!(*vs_ == *o.vs_)) throw VarSetMismatch();
}

void MPoly::add_term(const Exponents& e, const Rational& a) {
  if (sgn(a) == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, a);
  } else {
    it->second += a;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_same(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  check_same(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(vs_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_same(o);
  MPoly r(vs_);
  Exponents sum(vs_->size());
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (size_t i = 0; i < sum.size(); ++i) sum[i] = e1[i] + e2[i];
      r.add_term(sum, c1 * c2);
    }
  }
  return r;
}

MPoly MPoly::operator*(const Rational& a) const {
  MPoly r(vs_);
  if (sgn(a) == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * a);
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  return (*vs_ == *o.vs_) && terms_ == o.terms_;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = MPoly::constant(vs_, Rational(1));
  MPoly b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    if (e >>= 1u) b = b * b;
  }
  return r;
}

Exponents MPoly::leading_exponents(const MonomialOrder& ord) const {
  if (is_zero()) throw std::logic_error("leading term of zero polynomial");
  auto it = terms_.begin();
  Exponents best = it->first;
  for (++it; it != terms_.end(); ++it)
    if (ord.less(best, it->first, *vs_)) best = it->first;
  return best;
}

const Rational& MPoly::coeff(const Exponents& e) const {
  static const Rational zero(0);
  auto it = terms_.find(e);
  return it == terms_.end() ? zero : it->second;
}

std::vector<MPoly> MPoly::coeffs_in(size_t var) const {
  int d = degree_in(var);
  std::vector<MPoly> cs(static_cast<size_t>(std::max(d, -1) + 1), MPoly(vs_));
  for (const auto& [e, c] : terms_) {
    Exponents r = e;
    unsigned k = r[var];
    r[var] = 0;
    cs[k].add_term(r, c);
  }
  return cs;
}

MPoly MPoly::from_coeffs_in(VarSetPtr vs, size_t var, const std::vector<MPoly>& cs) {
  MPoly r(vs);
  for (size_t k = 0; k < cs.size(); ++k) {
    for (const auto& [e, c] : cs[k].terms_) {
      Exponents f = e;
      f[var] += static_cast<unsigned>(k);
      r.add_term(f, c);
    }
  }
  return r;
}

MPoly MPoly::leading_coeff_in(size_t var) const {
  auto cs = coeffs_in(var);
  if (cs.empty()) return MPoly(vs_);
  return cs.back();
}

MPoly MPoly::derivative(size_t var) const {
  MPoly r(vs_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, c * Rational(static_cast<long>(e[var])));
  }
  return r;
}

MPoly MPoly::substitute(size_t var, const MPoly& value) const {
  auto cs = coeffs_in(var);
  MPoly r(vs_);
  for (size_t k = cs.size(); k-- > 0;) r = r * value + cs[k];
  return r;
}

MPoly MPoly::substitute(size_t var, const Rational& value) const {
  return substitute(var, MPoly::constant(vs_, value));
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != vs_->size()) throw std::invalid_argument("evaluation point arity mismatch");
  Rational r(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= pow_rat(point[i], e[i]);
    r += t;
  }
  return r;
}

MPoly MPoly::eval_params(const std::vector<Rational>& eta) const {
  if (eta.size() != vs_->nparams()) throw std::invalid_argument("parameter point arity mismatch");
  MPoly r = *this;
  for (size_t i = 0; i < eta.size(); ++i) r = r.substitute(i, eta[i]);
  return r;
}

std::optional<MPoly> MPoly::div_exact(const MPoly& d) const {
  check_same(d);
  if (d.is_zero()) return std::nullopt;
  MonomialOrder ord{OrderKind::Grevlex};
  MPoly r = *this;
  MPoly q(vs_);
  Exponents dl = d.leading_exponents(ord);
  const Rational& dc = d.coeff(dl);
  while (!r.is_zero()) {
    Exponents rl = r.leading_exponents(ord);
    Exponents m(rl.size());
    for (size_t i = 0; i < rl.size(); ++i) {
      if (rl[i] < dl[i]) return std::nullopt;
      m[i] = rl[i] - dl[i];
    }
    MPoly t = MPoly::monomial(vs_, m, r.coeff(rl) / dc);
    q = q + t;
    r = r - t * d;
  }
  return q;
}

Rational MPoly::content_rat() const {
  if (is_zero()) return Rational(1);
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

MPoly MPoly::primitive_rat() const {
  if (is_zero()) return *this;
  Rational c = content_rat();
  MonomialOrder ord{OrderKind::Grevlex};
  if (sgn(coeff(leading_exponents(ord))) < 0) c = -c;
  return *this * (Rational(1) / c);
}

MPoly MPoly::transplant(const VarSetPtr& to) const {
  std::vector<size_t> map(vs_->size());
  for (size_t i = 0; i < vs_->size(); ++i) {
    auto idx = to->index(vs_->name(i));
    if (!idx) {
      if (depends_on(i)) throw VarSetMismatch();
      map[i] = static_cast<size_t>(-1);
    } else {
      map[i] = *idx;
    }
  }
  MPoly r(to);
  for (const auto& [e, c] : terms_) {
    Exponents f(to->size(), 0);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) f[map[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

UPoly MPoly::to_upoly(size_t var) const {
  std::vector<Rational> c(static_cast<size_t>(std::max(degree_in(var), -1) + 1), Rational(0));
  for (const auto& [e, cf] : terms_) {
    for (size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::logic_error("polynomial is not univariate in " + vs_->name(var));
    c[e[var]] = cf;
  }
  return UPoly(std::move(c));
}

MPoly MPoly::from_upoly(VarSetPtr vs, size_t var, const UPoly& p) {
  MPoly r(std::move(vs));
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    Exponents e(r.vs_->size(), 0);
    e[var] = static_cast<unsigned>(i);
    r.add_term(e, p.coeffs()[i]);
  }
  return r;
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  MonomialOrder ord{OrderKind::Grevlex};
  std::vector<const std::pair<const Exponents, Rational>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) { return ord.less(b->first, a->first, *vs_); });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    const Rational& c = t->second;
    Rational mag = abs_rat(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    std::string mono;
    for (size_t i = 0; i < t->first.size(); ++i) {
      unsigned e = t->first[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += vs_->name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << "*" << mono;
    }
  }
  return os.str();
}

namespace {

// pseudo remainder of A by B with respect to var v: lc(B)^(dA-dB+1)*A mod B
MPoly prem(const MPoly& A, const MPoly& B, size_t v) {
  int dB = B.degree_in(v);
  MPoly lcB = B.leading_coeff_in(v);
  MPoly R = A;
  int e = A.degree_in(v) - dB + 1;
  while (!R.is_zero() && R.degree_in(v) >= dB) {
    int d = R.degree_in(v) - dB;
    MPoly lcR = R.leading_coeff_in(v);
    Exponents shift(A.varset()->size(), 0);
    shift[v] = static_cast<unsigned>(d);
    MPoly vd = MPoly::monomial(A.varset(), shift, Rational(1));
    R = R * lcB - B * (lcR * vd);
    --e;
  }
  for (int i = 0; i < e; ++i) R = R * lcB;
  return R;
}

MPoly normalize_gcd(const MPoly& p) { return p.primitive_rat(); }

// univariate gcds route through Z/p images with CRT lifting (gcd_int_coeffs);
// the subresultant PRS is far too slow once coefficients grow
MPoly gcd_univariate_modular(const MPoly& A, const MPoly& B, size_t v) {
  auto ints = [&](const MPoly& p) {
    std::vector<mpz_class> out;
    auto cs = p.coeffs_in(v);
    for (const auto& c : cs)
      out.push_back(c.is_zero() ? mpz_class(0) : mpz_class(c.constant_value().get_num()));
    return out;
  };
  auto g = gcd_int_coeffs(ints(A), ints(B));
  MPoly res(A.varset());
  Exponents e(A.varset()->size(), 0);
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    e[v] = static_cast<unsigned>(i);
    res.add_term(e, Rational(g[i]));
  }
  return res;
}

}  // namespace

MPoly content_in(const MPoly& p, size_t var) {
  auto cs = p.coeffs_in(var);
  MPoly g(p.varset());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd_mpoly(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MPoly gcd_mpoly(const MPoly& p, const MPoly& q) {
  if (p.is_zero()) return normalize_gcd(q);
  if (q.is_zero()) return normalize_gcd(p);
  if (p.is_constant() || q.is_constant())
    return MPoly::constant(p.varset(), Rational(1));
  // main variable: the last one either operand depends on
  size_t v = 0;
  bool found = false;
  for (size_t i = p.varset()->size(); i-- > 0;) {
    if (p.depends_on(i) || q.depends_on(i)) {
      v = i;
      found = true;
      break;
    }
  }
  if (!found) return MPoly::constant(p.varset(), Rational(1));
  if (!p.depends_on(v)) return gcd_mpoly(p, content_in(q, v));
  if (!q.depends_on(v)) return gcd_mpoly(content_in(p, v), q);

  MPoly cp = content_in(p, v), cq = content_in(q, v);
  MPoly pp = *p.div_exact(cp), qq = *q.div_exact(cq);
  MPoly c = gcd_mpoly(cp, cq);

  bool univariate = true;
  for (size_t i = 0; i < p.varset()->size() && univariate; ++i)
    if (i != v && (pp.depends_on(i) || qq.depends_on(i))) univariate = false;
  if (univariate)
    return normalize_gcd(c * gcd_univariate_modular(pp.primitive_rat(), qq.primitive_rat(), v));

  MPoly A = pp, B = qq;
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  MPoly g = MPoly::constant(p.varset(), Rational(1));
  MPoly h = g;
  while (true) {
    int delta = A.degree_in(v) - B.degree_in(v);
    MPoly R = prem(A, B, v);
    if (R.is_zero()) break;
    if (R.degree_in(v) == 0) {
      // gcd is free of v
      return normalize_gcd(c);
    }
    A = B;
    MPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    B = *R.div_exact(divisor);
    g = A.leading_coeff_in(v);
    if (delta > 0) {
      MPoly gp = g.pow(static_cast<unsigned>(delta));
      h = delta == 1 ? gp : *gp.div_exact(h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  // B is the gcd of the primitive parts, up to content in v
  MPoly res = *B.div_exact(content_in(B, v));
  return normalize_gcd(c * res);
}

MPoly squarefree_part_mpoly(const MPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  MPoly g = p;
  for (size_t v = 0; v < p.varset()->size(); ++v) {
    if (!p.depends_on(v)) continue;
    g = gcd_mpoly(g, p.derivative(v));
    if (g.is_constant()) break;
  }
  if (g.is_constant()) return normalize_gcd(p);
  return normalize_gcd(*p.div_exact(g));
}

MPoly resultant(const MPoly& p, const MPoly& q, size_t v) {
  if (p.degree_in(v) < 1 || q.degree_in(v) < 1)
    throw DegenerateInput("resultant requires positive degree in the chosen variable");
  MPoly A = p, B = q;
  int s = 1;
  if (A.degree_in(v) < B.degree_in(v)) {
    std::swap(A, B);
    if ((A.degree_in(v) % 2) && (B.degree_in(v) % 2)) s = -s;
  }
  MPoly g = MPoly::constant(p.varset(), Rational(1));
  MPoly h = g;
  while (true) {
    int dA = A.degree_in(v), dB = B.degree_in(v);
    int delta = dA - dB;
    if ((dA % 2) && (dB % 2)) s = -s;
    MPoly R = prem(A, B, v);
    A = B;
    MPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    if (R.is_zero()) {
      B = MPoly(p.varset());
    } else {
      B = *R.div_exact(divisor);
    }
    g = A.leading_coeff_in(v);
    if (delta > 0) {
      MPoly gp = g.pow(static_cast<unsigned>(delta));
      h = delta == 1 ? gp : *gp.div_exact(h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (B.is_zero()) return MPoly(p.varset());  // common factor of positive degree
    if (B.degree_in(v) == 0) {
      int dAf = A.degree_in(v);
      MPoly lcBd = B.pow(static_cast<unsigned>(dAf));
      MPoly out = dAf <= 1 ? (dAf == 1 ? lcBd : h)
                           : *lcBd.div_exact(h.pow(static_cast<unsigned>(dAf - 1)));
      if (dAf == 0) out = h;  // unreachable: A always has positive degree here
      return s < 0 ? -out : out;
    }
  }
}

MPoly discriminant(const MPoly& p, size_t v) {
  if (p.degree_in(v) < 2) throw DegenerateInput("discriminant requires degree >= 2");
  MPoly r = resultant(p, p.derivative(v), v);
  return *r.div_exact(p.leading_coeff_in(v));
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  const VarSetPtr& vs;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  MPoly expr() {
    MPoly r = eat('-') ? -term() : (eat('+'), term());
    while (true) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        break;
    }
    return r;
  }

  MPoly term() {
    MPoly r = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i;
        r = r * factor();
      } else if (c == '/') {
        ++i;
        MPoly d = factor();
        if (!d.is_constant() || sgn(d.constant_value()) == 0)
          throw std::invalid_argument("'/' only divides by a nonzero constant");
        r = r * (Rational(1) / d.constant_value());
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                 std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        r = r * factor();  // juxtaposition
      } else {
        break;
      }
    }
    return r;
  }

  MPoly factor() {
    MPoly b = base();
    if (eat('^')) {
      skip();
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) throw std::invalid_argument("exponent expected at position " + std::to_string(i));
      unsigned e = static_cast<unsigned>(std::stoul(s.substr(start, i - start)));
      return b.pow(e);
    }
    return b;
  }

  MPoly base() {
    skip();
    if (i >= s.size()) throw std::invalid_argument("unexpected end of polynomial text");
    char c = s[i];
    if (c == '(') {
      ++i;
      MPoly r = expr();
      if (!eat(')')) throw std::invalid_argument("missing ')'");
      return r;
    }
    if (c == '-') {
      ++i;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
      return MPoly::constant(vs, parse_rational(s.substr(start, i - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      std::string name = s.substr(start, i - start);
      auto idx = vs->index(name);
      if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
      return MPoly::variable(vs, *idx);
    }
    throw std::invalid_argument(std::string("unexpected character '") + c + "' in polynomial");
  }
};

}  // namespace

MPoly parse_mpoly(const std::string& text, const VarSetPtr& vs) {
  Parser p{text, 0, vs};
  MPoly r = p.expr();
  p.skip();
  if (p.i != text.size())
    throw std::invalid_argument("trailing input in polynomial at position " + std::to_string(p.i));
  return r;
}

}  // namespace trsect
