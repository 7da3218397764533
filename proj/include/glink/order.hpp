#pragma once

#include <cstddef>
#include <string>

#include "glink/monomial.hpp"

namespace glink {

enum class OrderKind { DegRevLex, Lex, BlockElimination };

/// Monomial order. BlockElimination(k) compares the first k variables by degrevlex and
/// breaks ties with degrevlex on the remaining ones, so it eliminates the first block.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static MonomialOrder elimination(std::size_t k) {
    return MonomialOrder(OrderKind::BlockElimination, k);
  }

  OrderKind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  // Negative, zero, positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::DegRevLex:
        return revlex_block(a, b, 0, kMaxVars);
      case OrderKind::Lex:
        for (std::size_t i = 0; i < kMaxVars; ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      case OrderKind::BlockElimination: {
        int c = revlex_block(a, b, 0, block_);
        return c != 0 ? c : revlex_block(a, b, block_, kMaxVars);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;
  static MonomialOrder parse(const std::string& name);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::size_t block) : kind_(kind), block_(block) {}

  static int revlex_block(const Monomial& a, const Monomial& b, std::size_t begin,
                          std::size_t end) {
    std::uint32_t da = a.block_degree(begin, end), db = b.block_degree(begin, end);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = end; i-- > begin;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  OrderKind kind_;
  std::size_t block_;
};

}  // namespace glink
