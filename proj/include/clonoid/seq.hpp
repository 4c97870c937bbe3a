#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clonoid/element.hpp"

namespace clonoid {

class BaseSeq;
using BaseSeqPtr = std::shared_ptr<const BaseSeq>;

/// A named, effective tail rule. Sequences are only comparable within one
/// base (a Mixed base rebases onto its tail first).
class BaseSeq {
 public:
  enum class Kind { Constant, Indexed, Mixed };

  static BaseSeqPtr constant(Element v);
  static BaseSeqPtr indexed(std::string id, CarrierTag value_tag,
                            std::function<Element(size_t)> rule,
                            bool injective);
  static BaseSeqPtr mixed(std::vector<Element> prefix, BaseSeqPtr tail);

  const std::string& id() const { return id_; }
  Kind kind() const { return kind_; }
  CarrierTag value_tag() const { return value_tag_; }
  Element at(size_t i) const;
  /// rule provably injective (pairwise distinct values at all indices)
  bool injective() const { return injective_; }
  /// rule provably constant
  bool is_constant() const { return kind_ == Kind::Constant; }
  const BaseSeqPtr& tail() const { return tail_; }
  const std::vector<Element>& prefix() const { return prefix_; }

 private:
  BaseSeq() = default;
  std::string id_;
  Kind kind_ = Kind::Constant;
  CarrierTag value_tag_ = 0;
  Element const_value_;
  std::function<Element(size_t)> rule_;
  bool injective_ = false;
  std::vector<Element> prefix_;
  BaseSeqPtr tail_;
};

/// Finite permutation of omega stored as its nonfixed graph.
class FinPerm {
 public:
  FinPerm() = default;
  static FinPerm identity() { return FinPerm(); }
  static FinPerm transposition(size_t n, size_t k);
  static FinPerm from_images(std::span<const size_t> images);

  size_t apply(size_t i) const;
  size_t operator()(size_t i) const { return apply(i); }
  /// (this o rho)(i) = this(rho(i))
  FinPerm after(const FinPerm& rho) const;
  FinPerm inverse() const;
  bool is_identity() const { return graph_.empty(); }
  /// smallest k with dom(sigma) contained in {0..k-1}
  size_t dom_bound() const;
  const std::vector<std::pair<size_t, size_t>>& graph() const { return graph_; }

  bool operator==(const FinPerm& o) const { return graph_ == o.graph_; }
  size_t hash() const;
  std::string repr() const;

 private:
  explicit FinPerm(std::vector<std::pair<size_t, size_t>> g);
  // sorted by source index; no fixed points stored
  std::vector<std::pair<size_t, size_t>> graph_;
};

/// All k! finite permutations with dom contained in {0..k-1}, deterministic
/// (lexicographic by image tuple, identity first). Guarded at k <= 6.
std::vector<FinPerm> perms_upto(size_t k);

/// Omega-sequence represented as a normalized finite override map over a
/// named base. entry(i) = overrides(i) if present, else base rule.
class OmegaSeq {
 public:
  OmegaSeq() = default;
  explicit OmegaSeq(BaseSeqPtr base) : base_(std::move(base)) {}
  OmegaSeq(BaseSeqPtr base, std::vector<std::pair<size_t, Element>> overrides);

  const BaseSeqPtr& base() const { return base_; }
  const std::vector<std::pair<size_t, Element>>& overrides() const { return over_; }
  Element at(size_t i) const;
  /// max override index + 1; 0 when the sequence equals its base
  size_t support_bound() const;

  /// s[a0..a_{n-1}]: replace the first n entries
  OmegaSeq updated(std::span<const Element> prefix) const;
  /// this *_n tail : first n entries from this, the rest from tail
  OmegaSeq spliced(size_t n, const OmegaSeq& tail) const;
  /// sigma-bar: result(i) = this(sigma(i))
  OmegaSeq permuted(const FinPerm& sigma) const;
  /// rewrite a Mixed-based sequence over the tail base (identity otherwise)
  OmegaSeq rebased() const;

  bool comparable_with(const OmegaSeq& o) const;
  bool operator==(const OmegaSeq& o) const;
  bool operator!=(const OmegaSeq& o) const { return !(*this == o); }
  int compare(const OmegaSeq& o) const;
  size_t hash() const;
  std::string repr() const;

 private:
  void normalize();
  BaseSeqPtr base_;
  std::vector<std::pair<size_t, Element>> over_;  // sorted by index
};

Element seq_entry(const OmegaSeq& s, size_t i);
OmegaSeq seq_update(const OmegaSeq& s, std::span<const Element> prefix);
OmegaSeq perm_apply(const FinPerm& sigma, const OmegaSeq& s);
FinPerm perm_compose(const FinPerm& sigma, const FinPerm& rho);
/// same basic trace test; throws BaseMismatch on incomparable bases
bool equiv(const OmegaSeq& s, const OmegaSeq& r);

/// All sequences over `base` whose overrides live at indices < support_bound
/// with values drawn from `pool` (pool entries must be pairwise distinct).
/// Deterministic lexicographic order; size = |pool|^support_bound.
std::vector<OmegaSeq> enumerate_seqs(const BaseSeqPtr& base,
                                     std::span<const Element> pool,
                                     size_t support_bound);

}  // namespace clonoid
