#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "clonoid/common.hpp"

namespace clonoid {

/// A finitary operation on {0..domain-1} stored as its full output table.
/// Inputs are enumerated lexicographically with coordinate 0 most
/// significant: index(a) = a0*d^(n-1) + a1*d^(n-2) + ... + a_{n-1}.
struct FinOp {
  uint8_t domain = 2;
  uint8_t arity = 0;
  std::vector<uint8_t> table;

  static size_t table_size(uint8_t domain, uint8_t arity);
  static FinOp projection(uint8_t domain, uint8_t arity, uint8_t i);
  static FinOp constant(uint8_t domain, uint8_t arity, uint8_t v);

  uint8_t eval(std::span<const uint8_t> args) const;
  bool depends_on(uint8_t coord) const;
  /// max essential coordinate + 1 (0 for constants)
  uint8_t essential_arity() const;
  /// drop trailing dummy coordinates; canonical representative of f^T
  FinOp normalized() const;
  /// append dummy coordinates up to new_arity
  FinOp padded(uint8_t new_arity) const;

  bool operator==(const FinOp& o) const {
    return domain == o.domain && arity == o.arity && table == o.table;
  }
  int compare(const FinOp& o) const;
  size_t hash() const;
  std::string repr() const;
};

/// Clone composition f(g1..gn)_k; all gs must share arity k and the domain.
FinOp compose(const FinOp& f, std::span<const FinOp> gs);

struct FinOpHash {
  size_t operator()(const FinOp& f) const { return f.hash(); }
};

/// Named boolean tables accepted in structure files and on the CLI.
FinOp builtin_finop(const std::string& name, uint8_t domain);

}  // namespace clonoid
