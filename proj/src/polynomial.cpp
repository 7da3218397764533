#include "glink/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace glink {

namespace {

const PolyRing& ring_of(const Polynomial& a, const Polynomial& b, const char* what) {
  if (!a.ring() || !b.ring()) throw AlgebraError(std::string("polynomial without ring in ") + what);
  require_same_ring(a.ring(), b.ring(), what);
  return *a.ring();
}

}  // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return order.compare(x.mono, y.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = field.add(out.back().coef, t.coef);
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  FieldElement v = ring->field().from_int(c);
  std::vector<Term> t;
  if (!v.is_zero()) t.push_back({v, Monomial()});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw AlgebraError("variable index out of range");
  return Polynomial(std::move(ring), {{FieldElement{1}, Monomial::variable(index)}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, FieldElement c) {
  std::vector<Term> t;
  if (!c.is_zero()) t.push_back({c, m});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::linear_form(RingPtr ring, std::span<const FieldElement> coefs) {
  if (coefs.size() > ring->nvars()) throw AlgebraError("too many coefficients for linear form");
  std::vector<Term> t;
  for (std::size_t i = 0; i < coefs.size(); ++i) {
    if (!coefs[i].is_zero()) t.push_back({coefs[i], Monomial::variable(i)});
  }
  return from_terms(std::move(ring), std::move(t));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

std::uint64_t Polynomial::weighted_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, ring_->weighted_degree(t.mono));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint64_t d = ring_->weighted_degree(terms_[0].mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return ring_->weighted_degree(t.mono) == d; });
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_[0].coef.value == 1) return *this;
  return scaled(ring_->field().inv(terms_[0].coef));
}

Polynomial Polynomial::scaled(FieldElement c) const {
  if (c.is_zero()) return Polynomial(ring_);
  const auto& field = ring_->field();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = field.mul(t.coef, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(FieldElement c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({field.mul(t.coef, c), t.mono * m});
  return Polynomial(ring_, std::move(out));
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != ring_->nvars()) throw AlgebraError("point dimension does not match ring");
  const auto& field = ring_->field();
  FieldElement sum{0};
  for (const auto& t : terms_) {
    FieldElement v = t.coef;
    for (std::size_t i = 0; i < point.size() && !v.is_zero(); ++i) {
      if (t.mono[i] != 0) v = field.mul(v, field.pow(point[i], t.mono[i]));
    }
    sum = field.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mono)) throw AlgebraError("monomial does not divide polynomial");
    out.push_back({t.coef, t.mono / m});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const RingPtr& target, std::span<const Polynomial> images) const {
  if (images.size() != ring_->nvars()) throw AlgebraError("substitution needs one image per variable");
  // powers[i][k] = images[i]^k, built lazily
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto pw = [&](std::size_t i, std::size_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial p = Polynomial::constant(target, 1).scaled(t.coef);
    for (std::size_t i = 0; i < images.size() && !p.is_zero(); ++i) {
      if (t.mono[i] != 0) p = p * pw(i, t.mono[i]);
    }
    acc.insert(acc.end(), p.terms_.begin(), p.terms_.end());
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::remap(const RingPtr& target, std::span<const int> map) const {
  if (map.size() != ring_->nvars()) throw AlgebraError("variable map length mismatch");
  if (target->field().prime() != ring_->field().prime()) throw AlgebraError("ring mismatch in remap");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    bool vanishes = false;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] < 0) {
        vanishes = true;
        break;
      }
      m.set(static_cast<std::size_t>(map[i]), m[static_cast<std::size_t>(map[i])] + t.mono[i]);
    }
    if (!vanishes) out.push_back({t.coef, m});
  }
  return from_terms(target, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const PolyRing& ring = ring_of(a, b, "addition");
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    int c = order.compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      FieldElement s = field.add(i->coef, j->coef);
      if (!s.is_zero()) out.push_back({s, i->mono});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.terms_.end());
  out.insert(out.end(), j, b.terms_.end());
  return Polynomial(a.ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  const auto& field = ring_->field();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = field.neg(t.coef);
  return Polynomial(ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial sub_mul(const Polynomial& a, FieldElement c, const Monomial& m, const Polynomial& b) {
  const PolyRing& ring = *a.ring();
  const auto& order = ring.order();
  const auto& field = ring.field();
  FieldElement nc = field.neg(c);
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto i = a.terms().begin(), j = b.terms().begin();
  const auto ie = a.terms().end(), je = b.terms().end();
  Monomial bm;
  bool have_bm = false;
  while (i != ie && j != je) {
    if (!have_bm) {
      bm = j->mono * m;
      have_bm = true;
    }
    int cmp = order.compare(i->mono, bm);
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back({field.mul(nc, j->coef), bm});
      ++j;
      have_bm = false;
    } else {
      FieldElement s = field.add(i->coef, field.mul(nc, j->coef));
      if (!s.is_zero()) out.push_back({s, i->mono});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  out.insert(out.end(), i, ie);
  for (; j != je; ++j) out.push_back({field.mul(nc, j->coef), j->mono * m});
  return Polynomial::from_sorted_terms(a.ring(), std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const PolyRing& ring = ring_of(a, b, "multiplication");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return big.times_term(small.terms_[0].coef, small.terms_[0].mono);
  const auto& field = ring.field();
  std::unordered_map<Monomial, FieldElement> acc;
  acc.reserve(big.size() * 2);
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, FieldElement{0});
      it->second = field.add(it->second, field.mul(s.coef, t.coef));
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back({c, m});
  }
  const auto& order = ring.order();
  std::sort(out.begin(), out.end(),
            [&](const Term& x, const Term& y) { return order.compare(x.mono, y.mono) > 0; });
  return Polynomial(a.ring_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].coef == b.terms_[i].coef) || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  }
  return true;
}

Polynomial product(std::span<const Polynomial> factors, const RingPtr& ring) {
  Polynomial p = Polynomial::constant(ring, 1);
  for (const auto& f : factors) p = p * f;
  return p;
}

Polynomial power(const Polynomial& f, unsigned k) {
  Polynomial p = Polynomial::constant(f.ring(), 1);
  for (unsigned i = 0; i < k; ++i) p = p * f;
  return p;
}

std::string monomial_to_string(const PolyRing& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    if (t.mono.is_one()) {
      s += std::to_string(t.coef.value);
    } else if (t.coef.value == 1) {
      s += monomial_to_string(*ring_, t.mono);
    } else {
      s += std::to_string(t.coef.value) + "*" + monomial_to_string(*ring_, t.mono);
    }
  }
  return s;
}

// ---- parser ----

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      bool negate = false;
      if (eat('-')) {
        negate = true;
      } else if (!eat('+') && !first) {
        break;
      }
      Polynomial t = product_term();
      acc = negate ? acc - t : acc + t;
      first = false;
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial product_term() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (eat('^')) {
      skip_ws();
      std::uint64_t e = integer();
      if (e > kMaxExponent) fail("exponent too large");
      base = power(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = integer();
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v % ring_->field().prime()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::uint64_t integer() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::uint64_t{1} << 58)) fail("integer literal too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return PolyParser(ring, text).parse();
}

}  // namespace glink
