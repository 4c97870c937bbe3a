#pragma once

#include <optional>
#include <span>
#include <string>

#include "clonoid/domain.hpp"
#include "clonoid/seq.hpp"

namespace clonoid {

/// One-sorted clone algebra (C, q_n, e_n). q receives its index n implicitly
/// as the argument count.
struct CloneAlgebra {
  std::string name;
  CarrierTag tag = 0;
  Stream stream;
  std::function<Element(size_t)> e;
  std::function<Element(const Element&, std::span<const Element>)> q;
  /// exact dimension when structurally certified (essential arity, max
  /// variable index + 1, ...); nullopt when no certificate exists
  std::function<std::optional<size_t>(const Element&)> dim_cert;
};

/// The minimal clone algebra on omega; a finite window {0..window-1} makes
/// the carrier finite (it is closed under every q_n).
CloneAlgebra projection_algebra(std::optional<size_t> window = std::nullopt);

/// Functional clone algebra over {0..domain-1}: top extensions of tables
/// with essential arity <= arity_bound, plus the projections e_n for
/// n <= e_cap which the signature constants require.
CloneAlgebra fca(uint8_t domain, uint8_t arity_bound, size_t e_cap = 6);

struct Signature {
  std::vector<std::pair<std::string, uint32_t>> ops;
};

/// Absolutely free term clone algebra: e_n = v_n, q_n = simultaneous
/// substitution of the first n variables.
CloneAlgebra term_clone_algebra(const Signature& sig, size_t var_budget = 4);

/// q_n on tables of omega-operations (n = psis.size()):
/// q_n(f, psi_0..psi_{n-1})(s) = f(s[psi_0(s),...,psi_{n-1}(s)]),
/// computed over a common finite arity and normalized
FinOp omega_op_q(const FinOp& f, std::span<const FinOp> psis);

/// q_{n+1}(a, e_0..e_{n-1}, e_{n+1}) = a, evaluated exactly
bool independent(const CloneAlgebra& c, const Element& a, size_t n);

struct Dimension {
  enum class Kind { Exact, Bounded, Omega, Unknown } kind = Kind::Unknown;
  size_t value = 0;  // for Exact/Bounded the least m; for Unknown the bound
  std::string to_string() const;
};

/// least m with a independent of every e_k (k >= m); Exact only under a
/// structural certificate, Bounded when the scan up to `bound` supports m
Dimension dimension_ca(const CloneAlgebra& c, const Element& a, size_t bound);

/// restriction to elements with certified finite dimension <= bound
CloneAlgebra fin_subalgebra(const CloneAlgebra& c, size_t bound);

}  // namespace clonoid
