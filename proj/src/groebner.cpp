#include "glink/groebner.hpp"

#include <algorithm>
#include <queue>

namespace glink {

namespace {

std::uint32_t divmask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m[i] != 0) mask |= 1u << i;
  }
  return mask;
}

struct Reducer {
  Monomial lm;
  std::uint32_t mask;
  const std::vector<Term>* terms;  // monic, descending
};

// out = a[from..] - c*m*b, where the caller knows the leading terms cancel.
void sub_mul_into(std::vector<Term>& out, const std::vector<Term>& a, std::size_t from,
                  FieldElement c, const Monomial& m, const std::vector<Term>& b,
                  const PolyRing& ring) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  FieldElement nc = field.neg(c);
  out.clear();
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono * m;
    int cmp = order.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({field.mul(nc, b[j].coef), bm});
      ++j;
    } else {
      FieldElement s = field.add(a[i].coef, field.mul(nc, b[j].coef));
      if (!s.is_zero()) out.push_back({s, bm});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({field.mul(nc, b[j].coef), b[j].mono * m});
}

// Full reduction. Reducers are monic. Returns the remainder (not normalized).
std::vector<Term> reduce_full(std::vector<Term> cur, const std::vector<Reducer>& reducers,
                              const PolyRing& ring, bool monic_reducers) {
  const auto& field = ring.field();
  std::vector<Term> rem;
  std::vector<Term> scratch;
  std::size_t head = 0;
  while (head < cur.size()) {
    const Term lt = cur[head];
    const std::uint32_t mask = divmask(lt.mono);
    const Reducer* hit = nullptr;
    for (const auto& r : reducers) {
      if ((r.mask & ~mask) == 0 && r.lm.divides(lt.mono)) {
        hit = &r;
        break;
      }
    }
    if (!hit) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    FieldElement c = monic_reducers ? lt.coef : field.div(lt.coef, hit->terms->front().coef);
    sub_mul_into(scratch, cur, head, c, lt.mono / hit->lm, *hit->terms, ring);
    cur.swap(scratch);
    head = 0;
  }
  return rem;
}

struct Pair {
  std::size_t i;
  std::size_t j;  // j == kGenerator: input generator number i
  Monomial lcm;
  std::uint64_t sugar;
};

constexpr std::size_t kGenerator = static_cast<std::size_t>(-1);

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

  std::vector<Polynomial> run(std::span<const Polynomial> gens) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      require_same_ring(g.ring(), ring_, "groebner");
      Polynomial m = g.monic();
      if (m.is_constant()) return {Polynomial::constant(ring_, 1)};
      inputs_.push_back(m.terms());
      inputs_sugar_.push_back(m.weighted_degree());
    }
    for (std::size_t k = 0; k < inputs_.size(); ++k) {
      queue_.push_back({k, kGenerator, inputs_[k].front().mono, inputs_sugar_[k]});
    }
    while (!queue_.empty()) {
      std::size_t best = select();
      Pair p = queue_[best];
      queue_[best] = queue_.back();
      queue_.pop_back();

      std::vector<Term> h;
      std::uint64_t sugar = p.sugar;
      if (p.j == kGenerator) {
        h = inputs_[p.i];
      } else {
        h = spoly(p);
      }
      if (h.empty()) continue;
      std::vector<Term> r = reduce_full(std::move(h), reducers(), *ring_, true);
      if (r.empty()) continue;
      if (r.front().mono.is_one()) return {Polynomial::constant(ring_, 1)};
      make_monic(r);
      add(std::move(r), sugar);
    }
    return finish();
  }

 private:
  std::size_t select() const {
    const auto& order = ring_->order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue_.size(); ++k) {
      const Pair& a = queue_[k];
      const Pair& b = queue_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = order.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = k;
    }
    return best;
  }

  std::vector<Term> spoly(const Pair& p) const {
    const auto& f = basis_[p.i];
    const auto& g = basis_[p.j];
    Monomial mf = p.lcm / f.front().mono;
    Monomial mg = p.lcm / g.front().mono;
    std::vector<Term> a;
    a.reserve(f.size());
    for (const auto& t : f) a.push_back({t.coef, t.mono * mf});
    std::vector<Term> out;
    sub_mul_into(out, a, 0, FieldElement{1}, mg, g, *ring_);
    return out;
  }

  std::vector<Reducer> reducers() const {
    std::vector<Reducer> rs;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) rs.push_back({basis_[k].front().mono, masks_[k], &basis_[k]});
    }
    return rs;
  }

  void make_monic(std::vector<Term>& r) const {
    const auto& field = ring_->field();
    if (r.front().coef.value == 1) return;
    FieldElement inv = field.inv(r.front().coef);
    for (auto& t : r) t.coef = field.mul(t.coef, inv);
  }

  void add(std::vector<Term> h, std::uint64_t sugar) {
    const std::size_t hi = basis_.size();
    const Monomial lmh = h.front().mono;
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    masks_.push_back(divmask(lmh));
    active_.push_back(true);

    // Gebauer-Moeller update.
    std::vector<Pair> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      c.push_back({g, hi, lcm(basis_[g].front().mono, lmh), pair_sugar(g, hi)});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = basis_[p.i].front().mono.coprime(lmh);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l) {
          if (c[l].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t l = 0; l < d.size() && keep; ++l) {
          if (d[l].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (const auto& p : d) {
      if (!basis_[p.i].front().mono.coprime(lmh)) e.push_back(p);
    }
    std::vector<Pair> kept;
    kept.reserve(queue_.size() + e.size());
    for (const auto& p : queue_) {
      if (p.j == kGenerator) {
        kept.push_back(p);
        continue;
      }
      bool drop = lmh.divides(p.lcm) &&
                  !(lcm(basis_[p.i].front().mono, lmh) == p.lcm) &&
                  !(lcm(basis_[p.j].front().mono, lmh) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    kept.insert(kept.end(), e.begin(), e.end());
    queue_.swap(kept);
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lmh.divides(basis_[g].front().mono)) active_[g] = false;
    }
  }

  std::uint64_t pair_sugar(std::size_t a, std::size_t b) const {
    Monomial l = lcm(basis_[a].front().mono, basis_[b].front().mono);
    std::uint64_t wl = ring_->weighted_degree(l);
    std::uint64_t sa = sugar_[a] + wl - ring_->weighted_degree(basis_[a].front().mono);
    std::uint64_t sb = sugar_[b] + wl - ring_->weighted_degree(basis_[b].front().mono);
    return std::max(sa, sb);
  }

  std::vector<Polynomial> finish() const {
    const auto& order = ring_->order();
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (active_[k]) idx.push_back(k);
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return order.compare(basis_[a].front().mono, basis_[b].front().mono) < 0;
    });
    // active set is already minimal; inter-reduce tails
    std::vector<Reducer> rs;
    for (std::size_t k : idx) rs.push_back({basis_[k].front().mono, masks_[k], &basis_[k]});
    std::vector<Polynomial> out;
    out.reserve(idx.size());
    for (std::size_t k : idx) {
      const auto& f = basis_[k];
      std::vector<Term> tail(f.begin() + 1, f.end());
      std::vector<Term> r = reduce_full(std::move(tail), rs, *ring_, true);
      std::vector<Term> full;
      full.reserve(r.size() + 1);
      full.push_back(f.front());
      full.insert(full.end(), r.begin(), r.end());
      out.push_back(Polynomial::from_sorted_terms(ring_, std::move(full)));
    }
    return out;
  }

  RingPtr ring_;
  std::vector<std::vector<Term>> inputs_;
  std::vector<std::uint64_t> inputs_sugar_;
  std::vector<std::vector<Term>> basis_;
  std::vector<std::uint64_t> sugar_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
  std::vector<Pair> queue_;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (f.is_zero() || divisors.empty()) return f;
  std::vector<Reducer> rs;
  for (const auto& g : divisors) {
    require_same_ring(f.ring(), g.ring(), "normal_form");
    if (g.is_zero()) continue;
    rs.push_back({g.leading_monomial(), divmask(g.leading_monomial()), &g.terms()});
  }
  std::vector<Term> r = reduce_full(f.terms(), rs, *f.ring(), false);
  return Polynomial::from_sorted_terms(f.ring(), std::move(r));
}

std::vector<Polynomial> groebner(std::span<const Polynomial> gens) {
  RingPtr ring;
  for (const auto& g : gens) {
    if (g.ring()) {
      ring = g.ring();
      break;
    }
  }
  if (!ring) return {};
  return Buchberger(ring).run(gens);
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      if (f.is_zero() || g.is_zero()) continue;
      Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
      const auto& field = f.ring()->field();
      Polynomial s = f.times_term(field.inv(f.leading_coef()), l / f.leading_monomial()) -
                     g.times_term(field.inv(g.leading_coef()), l / g.leading_monomial());
      if (!normal_form(s, basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace glink
