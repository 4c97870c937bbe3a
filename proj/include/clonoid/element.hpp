#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "clonoid/common.hpp"
#include "clonoid/finop.hpp"

namespace clonoid {

class OmegaSeq;
using BigInt = boost::multiprecision::cpp_int;

struct TermNode;
using TermPtr = std::shared_ptr<const TermNode>;

/// Term over a finitary signature; var >= 0 for variables, else sym/kids.
struct TermNode {
  int32_t var = -1;
  std::string sym;
  std::vector<TermPtr> kids;
  size_t cached_hash = 0;

  static TermPtr make_var(int32_t i);
  static TermPtr make_app(std::string sym, std::vector<TermPtr> kids);
  bool equals(const TermNode& o) const;
  int compare(const TermNode& o) const;
  std::string repr() const;
};

/// A value in some effective carrier. Equality is decidable and value-based;
/// the carrier tag participates in equality so values never cross carriers.
class Element {
 public:
  enum class Kind : uint8_t { Int = 0, Big, Op, Term, Pair, Vec, Seq };

  Element() : tag_(0), v_(int64_t{0}) {}

  static Element integer(int64_t v, CarrierTag tag);
  static Element big(BigInt v, CarrierTag tag);
  static Element op(FinOp f, CarrierTag tag);
  static Element term(TermPtr t, CarrierTag tag);
  static Element pair(Element a, Element b, CarrierTag tag);
  static Element vec(std::vector<Element> xs, CarrierTag tag);
  static Element seq(OmegaSeq s, CarrierTag tag);

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  CarrierTag tag() const { return tag_; }

  int64_t as_int() const;
  const BigInt& as_big() const;
  const FinOp& as_op() const;
  const TermPtr& as_term() const;
  const std::pair<Element, Element>& as_pair() const;
  const std::vector<Element>& as_vec() const;
  const OmegaSeq& as_seq() const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }
  /// total order: (tag, kind, payload); used for deterministic emission
  int compare(const Element& o) const;
  bool operator<(const Element& o) const { return compare(o) < 0; }
  size_t hash() const;
  std::string repr() const;

 private:
  CarrierTag tag_;
  std::variant<int64_t, BigInt, FinOp, TermPtr,
               std::shared_ptr<const std::pair<Element, Element>>,
               std::shared_ptr<const std::vector<Element>>,
               std::shared_ptr<const OmegaSeq>>
      v_;
};

struct ElementHash {
  size_t operator()(const Element& e) const { return e.hash(); }
};

}  // namespace clonoid
