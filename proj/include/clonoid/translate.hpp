#pragma once

#include <string>

#include "clonoid/absclone.hpp"
#include "clonoid/clonealg.hpp"
#include "clonoid/domain.hpp"
#include "clonoid/mmonoid.hpp"
#include "clonoid/pica.hpp"

namespace clonoid {

/// C |-> C^cm: canonical cm-monoid on the basic trace of (e_0, e_1, ...)
/// with b . a = (q_k(b_i, a_0..a_{k-1}))_i, k the support bound of a.
MMonoid ca_to_cm(const CloneAlgebra& c, size_t support_bound, size_t value_budget);

/// hat chain over rank<=1 elements: hat() = 1, hat(b0..b_{n-1}) as in the
/// choice-function construction; RankViolation unless each b_i has rank <= 1
Element hat(const MMonoid& m, std::span<const Element> bs);

/// M |-> M^ca on the rank<=1 carrier: e_n = 1[n],
/// q_n(a, b) = (a . hat(b))_{<1}. Unless presume_cm, a small CM gate runs
/// first (FlavorViolation on failure).
CloneAlgebra cm_to_ca(const MMonoid& m, bool presume_cm = false,
                      size_t gate_budget = 24);

struct Morphism {
  std::string source, target;
  std::function<Element(const Element&)> map;
};

struct RoundtripVerdict {
  bool pass = false;
  bool e_preserved = false;
  bool q_preserved = false;
  bool injective = false;
  bool surjective = false;
  size_t checked = 0;
  std::string note;
};

/// a |-> <a> = (a, e_1, e_2, ...): C -> (C^cm)^ca; bijection and e/q
/// preservation over the enumerated fragment
RoundtripVerdict roundtrip_ca(const CloneAlgebra& c, const TestDomain& dom,
                              Morphism* out = nullptr);

/// x |-> x_[] : M_{|omega} -> (M^ca)^cm; merge/monoid homomorphism and
/// bijection within budget
RoundtripVerdict roundtrip_cm(const MMonoid& m, const TestDomain& dom,
                              Morphism* out = nullptr);

struct TriVerdict {
  bool pass = false;
  size_t checked = 0;
  std::string note;
};

/// both triangular identities of the (_)^cm -| (_)^ca adjunction, evaluated
/// elementwise on C and C^cm
TriVerdict triangular_ca_cm(const CloneAlgebra& c, const TestDomain& dom);

/// both triangular identities of the (_)^ac-ca -| R_(_) adjunction, plus the
/// unit/counit isomorphism checks, on an abstract clone instance
TriVerdict triangular_ac_ca(const AbstractClone& b, const TestDomain& dom);

/// A |-> A^ecm: extensional cm-monoid of an infinitary fragment
MMonoid pica_to_ecm(const Pica& p, size_t support_bound, size_t value_budget);

/// M |-> M^pica on the rank<=1 carrier with D = the coordinate image trace;
/// NotExtensional unless the extensionality verdict passes
Pica ecm_to_pica(const MMonoid& m, const TestDomain& dom, size_t support_bound);

/// clone-algebra morphism check on enumerated tuples
bool check_clone_hom(const CloneAlgebra& src, const CloneAlgebra& dst, const Morphism& f,
                     const TestDomain& dom, std::string* why = nullptr);

/// cm-monoid morphism check on enumerated tuples
bool check_cm_hom(const MMonoid& src, const MMonoid& dst, const Morphism& f,
                  const TestDomain& dom, std::string* why = nullptr);

/// PICA morphism law f(q(a,s)) = q(f(a), f^omega(s)) on enumerated pairs
bool check_pica_hom(const Pica& src, const Pica& dst, const Morphism& f,
                    const TestDomain& dom, std::string* why = nullptr);

}  // namespace clonoid
