#include "clonoid/element.hpp"

#include <boost/functional/hash.hpp>
#include <sstream>

#include "clonoid/seq.hpp"

namespace clonoid {

TermPtr TermNode::make_var(int32_t i) {
  auto t = std::make_shared<TermNode>();
  t->var = i;
  t->cached_hash = hash_combine(0x7e47, static_cast<size_t>(i));
  return t;
}

TermPtr TermNode::make_app(std::string sym, std::vector<TermPtr> kids) {
  auto t = std::make_shared<TermNode>();
  t->var = -1;
  t->sym = std::move(sym);
  t->kids = std::move(kids);
  size_t h = fnv1a(t->sym);
  for (const auto& k : t->kids) h = hash_combine(h, k->cached_hash);
  t->cached_hash = h;
  return t;
}

bool TermNode::equals(const TermNode& o) const { return compare(o) == 0; }

int TermNode::compare(const TermNode& o) const {
  if (var != o.var) return var < o.var ? -1 : 1;
  if (var >= 0) return 0;
  if (sym != o.sym) return sym < o.sym ? -1 : 1;
  if (kids.size() != o.kids.size()) return kids.size() < o.kids.size() ? -1 : 1;
  for (size_t i = 0; i < kids.size(); ++i)
    if (int c = kids[i]->compare(*o.kids[i])) return c;
  return 0;
}

std::string TermNode::repr() const {
  if (var >= 0) return "v" + std::to_string(var);
  std::string s = sym;
  if (!kids.empty()) {
    s += "(";
    for (size_t i = 0; i < kids.size(); ++i) {
      if (i) s += ",";
      s += kids[i]->repr();
    }
    s += ")";
  }
  return s;
}

Element Element::integer(int64_t v, CarrierTag tag) {
  Element e;
  e.tag_ = tag;
  e.v_ = v;
  return e;
}

Element Element::big(BigInt v, CarrierTag tag) {
  Element e;
  e.tag_ = tag;
  e.v_ = std::move(v);
  return e;
}

Element Element::op(FinOp f, CarrierTag tag) {
  Element e;
  e.tag_ = tag;
  e.v_ = std::move(f);
  return e;
}

Element Element::term(TermPtr t, CarrierTag tag) {
  Element e;
  e.tag_ = tag;
  e.v_ = std::move(t);
  return e;
}

Element Element::pair(Element a, Element b, CarrierTag tag) {
  Element e;
  e.tag_ = tag;
  e.v_ = std::make_shared<const std::pair<Element, Element>>(std::move(a), std::move(b));
  return e;
}

Element Element::vec(std::vector<Element> xs, CarrierTag tag) {
  Element e;
  e.tag_ = tag;
  e.v_ = std::make_shared<const std::vector<Element>>(std::move(xs));
  return e;
}

Element Element::seq(OmegaSeq s, CarrierTag tag) {
  Element e;
  e.tag_ = tag;
  e.v_ = std::make_shared<const OmegaSeq>(std::move(s));
  return e;
}

int64_t Element::as_int() const {
  if (kind() != Kind::Int) throw Error(Errc::CarrierMismatch, "element is not an integer");
  return std::get<int64_t>(v_);
}
const BigInt& Element::as_big() const {
  if (kind() != Kind::Big) throw Error(Errc::CarrierMismatch, "element is not a big integer");
  return std::get<BigInt>(v_);
}
const FinOp& Element::as_op() const {
  if (kind() != Kind::Op) throw Error(Errc::CarrierMismatch, "element is not an operation");
  return std::get<FinOp>(v_);
}
const TermPtr& Element::as_term() const {
  if (kind() != Kind::Term) throw Error(Errc::CarrierMismatch, "element is not a term");
  return std::get<TermPtr>(v_);
}
const std::pair<Element, Element>& Element::as_pair() const {
  if (kind() != Kind::Pair) throw Error(Errc::CarrierMismatch, "element is not a pair");
  return *std::get<std::shared_ptr<const std::pair<Element, Element>>>(v_);
}
const std::vector<Element>& Element::as_vec() const {
  if (kind() != Kind::Vec) throw Error(Errc::CarrierMismatch, "element is not a vector");
  return *std::get<std::shared_ptr<const std::vector<Element>>>(v_);
}
const OmegaSeq& Element::as_seq() const {
  if (kind() != Kind::Seq) throw Error(Errc::CarrierMismatch, "element is not a sequence");
  return *std::get<std::shared_ptr<const OmegaSeq>>(v_);
}

bool Element::operator==(const Element& o) const { return compare(o) == 0; }

int Element::compare(const Element& o) const {
  if (tag_ != o.tag_) return tag_ < o.tag_ ? -1 : 1;
  if (kind() != o.kind()) return kind() < o.kind() ? -1 : 1;
  switch (kind()) {
    case Kind::Int: {
      int64_t a = std::get<int64_t>(v_), b = std::get<int64_t>(o.v_);
      return a == b ? 0 : (a < b ? -1 : 1);
    }
    case Kind::Big: {
      const BigInt& a = std::get<BigInt>(v_);
      const BigInt& b = std::get<BigInt>(o.v_);
      return a == b ? 0 : (a < b ? -1 : 1);
    }
    case Kind::Op:
      return std::get<FinOp>(v_).compare(std::get<FinOp>(o.v_));
    case Kind::Term:
      return std::get<TermPtr>(v_)->compare(*std::get<TermPtr>(o.v_));
    case Kind::Pair: {
      const auto& a = as_pair();
      const auto& b = o.as_pair();
      if (int c = a.first.compare(b.first)) return c;
      return a.second.compare(b.second);
    }
    case Kind::Vec: {
      const auto& a = as_vec();
      const auto& b = o.as_vec();
      if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
      for (size_t i = 0; i < a.size(); ++i)
        if (int c = a[i].compare(b[i])) return c;
      return 0;
    }
    case Kind::Seq:
      return as_seq().compare(o.as_seq());
  }
  return 0;
}

size_t Element::hash() const {
  size_t h = hash_combine(tag_, static_cast<size_t>(kind()));
  switch (kind()) {
    case Kind::Int:
      return hash_combine(h, mix64(static_cast<uint64_t>(std::get<int64_t>(v_))));
    case Kind::Big:
      return hash_combine(h, boost::hash<BigInt>{}(std::get<BigInt>(v_)));
    case Kind::Op:
      return hash_combine(h, std::get<FinOp>(v_).hash());
    case Kind::Term:
      return hash_combine(h, std::get<TermPtr>(v_)->cached_hash);
    case Kind::Pair: {
      const auto& p = as_pair();
      return hash_combine(h, hash_combine(p.first.hash(), p.second.hash()));
    }
    case Kind::Vec: {
      for (const auto& x : as_vec()) h = hash_combine(h, x.hash());
      return h;
    }
    case Kind::Seq:
      return hash_combine(h, as_seq().hash());
  }
  return h;
}

std::string Element::repr() const {
  switch (kind()) {
    case Kind::Int:
      return std::to_string(std::get<int64_t>(v_));
    case Kind::Big:
      return std::get<BigInt>(v_).str();
    case Kind::Op:
      return std::get<FinOp>(v_).repr();
    case Kind::Term:
      return std::get<TermPtr>(v_)->repr();
    case Kind::Pair: {
      const auto& p = as_pair();
      return "(" + p.first.repr() + "," + p.second.repr() + ")";
    }
    case Kind::Vec: {
      std::string s = "{";
      const auto& xs = as_vec();
      for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ";";
        s += xs[i].repr();
      }
      return s + "}";
    }
    case Kind::Seq:
      return as_seq().repr();
  }
  return "?";
}

}  // namespace clonoid
