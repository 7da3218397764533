#include "glink/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "glink/hilbert.hpp"

namespace glink {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  if (!ring_) throw AlgebraError("ideal without ring");
  for (auto& g : generators) {
    if (!g.ring()) g = Polynomial(ring_);
    require_same_ring(ring_, g.ring(), "ideal construction");
    if (!g.is_homogeneous()) {
      throw AlgebraError("ideal generator is not homogeneous: " + g.to_string());
    }
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return from_reduced_basis(std::move(ring), {one});
}

Ideal Ideal::from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis) {
  Ideal I(std::move(ring), basis);
  std::call_once(I.cache_->gb_once, [&] { I.cache_->gb = std::move(basis); });
  return I;
}

Ideal Ideal::parse(const RingPtr& ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const auto& s : generators) gens.push_back(parse_polynomial(ring, s));
  return Ideal(ring, std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->gb_once, [&] { cache_->gb = groebner(gens_); });
  return cache_->gb;
}

const std::vector<std::int64_t>& Ideal::hilbert_numerator() const {
  std::call_once(cache_->hs_once, [&] {
    if (!ring_->standard_grading()) throw AlgebraError("Hilbert series needs the standard grading");
    std::vector<Monomial> lead;
    for (const auto& g : groebner_basis()) lead.push_back(g.leading_monomial());
    cache_->numerator = monomial_hilbert_numerator(lead, ring_->nvars());
  });
  return cache_->numerator;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "membership");
  return normal_form(f, groebner_basis()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "containment");
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool operator==(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_, b.ring_, "ideal comparison");
  return a.groebner_basis() == b.groebner_basis();
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

HVector make_hvector(std::vector<std::int64_t> entries) {
  while (!entries.empty() && entries.back() == 0) entries.pop_back();
  HVector h;
  h.has_negative = std::any_of(entries.begin(), entries.end(), [](std::int64_t v) { return v < 0; });
  h.entries = std::move(entries);
  return h;
}

std::int64_t HVector::sum() const {
  std::int64_t s = 0;
  for (auto v : entries) s += v;
  return s;
}

bool HVector::symmetric() const { return std::equal(entries.begin(), entries.end(), entries.rbegin()); }

std::string HVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(entries[i]);
  }
  return s + ")";
}

std::string HVector::table() const {
  std::vector<std::string> top{"deg"}, bottom{"h-vector"};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    top.push_back(std::to_string(i));
    bottom.push_back(std::to_string(entries[i]));
  }
  std::ostringstream out;
  for (int row = 0; row < 2; ++row) {
    const auto& cells = row == 0 ? top : bottom;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::size_t w = std::max(top[i].size(), bottom[i].size());
      if (i == 0) {
        out << cells[i] << std::string(w - cells[i].size(), ' ');
      } else {
        out << "  " << std::string(w - cells[i].size(), ' ') << cells[i];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace glink
