#pragma once

#include <string>

#include "clonoid/clonealg.hpp"
#include "clonoid/domain.hpp"
#include "clonoid/seq.hpp"

namespace clonoid {

/// Partial infinitary clone algebra: q(a, z) defined for z in the trace D,
/// which is representable as the basic trace of `domain_base`.
struct Pica {
  std::string name;
  CarrierTag tag = 0;      // carrier elements
  CarrierTag dom_tag = 0;  // boxed domain sequences
  Stream stream;
  std::function<Element(size_t)> e;
  BaseSeqPtr domain_base;
  Stream domain_stream;  // Element::seq values over domain_base
  std::function<Element(const Element&, const OmegaSeq&)> q;
  /// Neumann case: D is the full representable A^omega fragment
  bool full_domain = false;
};

/// q with the domain guard (OutsideDomain on base mismatch)
Element pica_q(const Pica& a, const Element& x, const OmegaSeq& z);

/// clone algebra as a PICA with D = the basic trace of (e_0, e_1, ...)
Pica pica_from_ca(const CloneAlgebra& c, size_t support_bound, size_t value_budget);

/// Finite quantale: elements 0..size-1, join/dot tables, unit, bottom.
/// Construction validates the quantale laws (NotAQuantale).
struct Quantale {
  std::string id;
  uint8_t size = 2;
  std::vector<uint8_t> join;  // size x size, row-major
  std::vector<uint8_t> dot;
  uint8_t unit = 1;
  uint8_t bottom = 0;
};
Quantale boolean_quantale();

/// Matrices over a finite quantale: carrier = finitely supported columns,
/// q(s, M)_i = join_k (M_i^k dot s_k); an infinitary clone algebra fragment.
Pica quantale_pica(const Quantale& q, size_t support_bound);

struct OmegaFinDimVerdict {
  bool holds = false;
  std::optional<size_t> witness_n;
  bool exhaustive = false;
};
/// search n <= bound with q(a, z[e_0..e_{n-1}]) = a for all enumerated z
OmegaFinDimVerdict omega_findim_pica(const Pica& a, const Element& x, size_t bound,
                                     const TestDomain& dom);

}  // namespace clonoid
