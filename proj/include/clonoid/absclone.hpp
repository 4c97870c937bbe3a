#pragma once

#include <span>
#include <string>

#include "clonoid/clonealg.hpp"
#include "clonoid/domain.hpp"
#include "clonoid/finop.hpp"

namespace clonoid {

/// Arity-bounded concrete clone on a finite set: per-arity operation sets,
/// all projections included, closed under composition within the bound.
struct ConcreteClone {
  uint8_t domain = 2;
  size_t max_arity = 0;
  std::vector<std::vector<FinOp>> ops;  // ops[k], sorted

  size_t count(size_t arity) const { return ops.at(arity).size(); }
};

/// Least clone containing the generators, by fixpoint iteration with table
/// interning; throws BudgetExceeded past op_guard distinct operations.
ConcreteClone clone_generate(uint8_t domain, std::vector<FinOp> gens, size_t max_arity,
                             size_t op_guard = 100000);

/// Many-sorted abstract clone interface. Sort-n elements are plain Elements;
/// the sort index travels alongside in every call.
struct AbstractClone {
  std::string name;
  size_t max_sort = 0;
  std::function<StreamResult(size_t sort, size_t budget, uint64_t seed)> sort_stream;
  /// q_n^k(x, y0..y_{n-1}) with x of sort n, ys of sort k
  std::function<Element(size_t n, size_t k, const Element&, std::span<const Element>)> q;
  /// e_i^n for i < n
  std::function<Element(size_t n, size_t i)> e;
  /// y of sort n-1 with y^{+1} = x, when one exists
  std::function<std::optional<Element>(size_t n, const Element&)> unlift;
};

AbstractClone as_abstract(const ConcreteClone& cc);

/// x^{+k} = q_n^{n+k}(x, e_0^{n+k}, ..., e_{n-1}^{n+k})
Element lift_plus(const AbstractClone& b, const Element& x, size_t n, size_t k);

/// x in B_n, y in B_m: y = x^{+(m-n)} or x = y^{+(n-m)}
bool approx_equiv(const AbstractClone& b, const Element& x, size_t n, const Element& y,
                  size_t m);

/// minimal representative (sort, element) of the approx-class of x in B_n
std::pair<size_t, Element> ac_class_of(const AbstractClone& b, const Element& x, size_t n);

/// quotient clone algebra B/approx; elements are pair(sort, representative)
CloneAlgebra ac_to_ca(const AbstractClone& b, size_t sort_bound);

/// R_C: sort k = { a : dim(a) <= k } acting by q_k; requires dimension
/// certificates on enumerated elements
AbstractClone ca_to_ac(const CloneAlgebra& c, size_t arity_bound);

}  // namespace clonoid
