#include "glink/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace glink {

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::DegRevLex:
      return "degrevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::BlockElimination:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "degrevlex" || name == "grevlex") return degrevlex();
  if (name == "lex") return lex();
  if (name.rfind("elim(", 0) == 0 && name.size() > 6 && name.back() == ')') {
    return elimination(std::stoul(name.substr(5, name.size() - 6)));
  }
  throw AlgebraError("unknown monomial order '" + name + "'");
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

PolyRing::PolyRing(std::vector<std::string> names, std::uint32_t prime, MonomialOrder order,
                   std::vector<std::uint32_t> weights)
    : names_(std::move(names)), field_(prime), order_(order), weights_(std::move(weights)) {
  if (names_.size() > kMaxVars) {
    throw AlgebraError("too many variables (max " + std::to_string(kMaxVars) + ")");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw AlgebraError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw AlgebraError("duplicate variable name '" + n + "'");
  }
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw AlgebraError("weight vector length mismatch");
  if (order_.kind() == OrderKind::BlockElimination && order_.block() > names_.size()) {
    throw AlgebraError("elimination block larger than the number of variables");
  }
}

RingPtr PolyRing::make(std::vector<std::string> names, std::uint32_t prime, MonomialOrder order,
                       std::vector<std::uint32_t> weights) {
  return std::make_shared<const PolyRing>(std::move(names), prime, order, std::move(weights));
}

RingPtr PolyRing::standard(std::size_t nvars, std::uint32_t prime, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(names), prime);
}

bool PolyRing::standard_grading() const {
  return std::all_of(weights_.begin(), weights_.end(), [](std::uint32_t w) { return w == 1; });
}

int PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr PolyRing::extend(const std::string& name) const {
  if (index_of(name) >= 0) throw AlgebraError("variable name collision: '" + name + "'");
  auto names = names_;
  names.push_back(name);
  auto weights = weights_;
  weights.push_back(1);
  return make(std::move(names), field_.prime(), order_, std::move(weights));
}

RingPtr PolyRing::with_leading_aux(const std::string& name, std::uint32_t weight) const {
  if (index_of(name) >= 0) throw AlgebraError("variable name collision: '" + name + "'");
  std::vector<std::string> names{name};
  names.insert(names.end(), names_.begin(), names_.end());
  std::vector<std::uint32_t> weights{weight};
  weights.insert(weights.end(), weights_.begin(), weights_.end());
  return make(std::move(names), field_.prime(), MonomialOrder::elimination(1), std::move(weights));
}

RingPtr PolyRing::without_variable(std::size_t index) const {
  if (index >= names_.size()) throw AlgebraError("variable index out of range");
  auto names = names_;
  auto weights = weights_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(index));
  weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(index));
  MonomialOrder order = order_;
  if (order.kind() == OrderKind::BlockElimination) order = MonomialOrder::degrevlex();
  return make(std::move(names), field_.prime(), order, std::move(weights));
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return make(names_, field_.prime(), order, weights_);
}

std::string PolyRing::fresh_name(const std::string& stem) const {
  if (index_of(stem) < 0) return stem;
  for (int i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (index_of(candidate) < 0) return candidate;
  }
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (!same_ring(a, b)) throw AlgebraError(std::string("ring mismatch in ") + what);
}

}  // namespace glink
