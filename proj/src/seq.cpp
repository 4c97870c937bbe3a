#include "clonoid/seq.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace clonoid {

BaseSeqPtr BaseSeq::constant(Element v) {
  auto b = std::shared_ptr<BaseSeq>(new BaseSeq());
  b->kind_ = Kind::Constant;
  b->value_tag_ = v.tag();
  b->id_ = "const:" + v.repr();
  b->const_value_ = std::move(v);
  b->injective_ = false;
  return b;
}

BaseSeqPtr BaseSeq::indexed(std::string id, CarrierTag value_tag,
                            std::function<Element(size_t)> rule, bool injective) {
  auto b = std::shared_ptr<BaseSeq>(new BaseSeq());
  b->kind_ = Kind::Indexed;
  b->value_tag_ = value_tag;
  b->id_ = "indexed:" + id;
  b->rule_ = std::move(rule);
  b->injective_ = injective;
  return b;
}

BaseSeqPtr BaseSeq::mixed(std::vector<Element> prefix, BaseSeqPtr tail) {
  auto b = std::shared_ptr<BaseSeq>(new BaseSeq());
  b->kind_ = Kind::Mixed;
  b->value_tag_ = tail->value_tag();
  std::string ps;
  for (const auto& e : prefix) ps += e.repr() + ",";
  b->id_ = "mixed:[" + ps + "]" + tail->id();
  b->prefix_ = std::move(prefix);
  b->tail_ = std::move(tail);
  b->injective_ = false;
  return b;
}

Element BaseSeq::at(size_t i) const {
  switch (kind_) {
    case Kind::Constant:
      return const_value_;
    case Kind::Indexed:
      return rule_(i);
    case Kind::Mixed:
      if (i < prefix_.size()) return prefix_[i];
      return tail_->at(i);
  }
  return const_value_;
}

FinPerm::FinPerm(std::vector<std::pair<size_t, size_t>> g) : graph_(std::move(g)) {}

FinPerm FinPerm::transposition(size_t n, size_t k) {
  if (n == k) return FinPerm();
  if (n < k) std::swap(n, k);
  return FinPerm({{k, n}, {n, k}});
}

FinPerm FinPerm::from_images(std::span<const size_t> images) {
  std::vector<std::pair<size_t, size_t>> g;
  for (size_t i = 0; i < images.size(); ++i)
    if (images[i] != i) g.emplace_back(i, images[i]);
  return FinPerm(std::move(g));
}

size_t FinPerm::apply(size_t i) const {
  for (const auto& [k, v] : graph_)
    if (k == i) return v;
  return i;
}

FinPerm FinPerm::after(const FinPerm& rho) const {
  size_t bound = std::max(dom_bound(), rho.dom_bound());
  std::vector<std::pair<size_t, size_t>> g;
  for (size_t i = 0; i < bound; ++i) {
    size_t v = apply(rho.apply(i));
    if (v != i) g.emplace_back(i, v);
  }
  return FinPerm(std::move(g));
}

FinPerm FinPerm::inverse() const {
  std::vector<std::pair<size_t, size_t>> g;
  for (const auto& [k, v] : graph_) g.emplace_back(v, k);
  std::sort(g.begin(), g.end());
  return FinPerm(std::move(g));
}

size_t FinPerm::dom_bound() const {
  size_t b = 0;
  for (const auto& [k, v] : graph_) b = std::max(b, k + 1);
  return b;
}

size_t FinPerm::hash() const {
  size_t h = 0x5eed;
  for (const auto& [k, v] : graph_) h = hash_combine(h, hash_combine(k, v));
  return h;
}

std::string FinPerm::repr() const {
  if (graph_.empty()) return "id";
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < graph_.size(); ++i) {
    if (i) os << ",";
    os << graph_[i].first << "->" << graph_[i].second;
  }
  os << "]";
  return os.str();
}

std::vector<FinPerm> perms_upto(size_t k) {
  if (k > 6) throw Error(Errc::BudgetExceeded, "perms_upto limited to k <= 6");
  std::vector<size_t> images(k);
  for (size_t i = 0; i < k; ++i) images[i] = i;
  std::vector<FinPerm> out;
  do {
    out.push_back(FinPerm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  if (out.empty()) out.push_back(FinPerm::identity());
  return out;
}

OmegaSeq::OmegaSeq(BaseSeqPtr base, std::vector<std::pair<size_t, Element>> overrides)
    : base_(std::move(base)), over_(std::move(overrides)) {
  std::sort(over_.begin(), over_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  normalize();
}

void OmegaSeq::normalize() {
  std::vector<std::pair<size_t, Element>> keep;
  keep.reserve(over_.size());
  for (auto& [i, e] : over_) {
    if (!keep.empty() && keep.back().first == i) {
      keep.back().second = e;
      continue;
    }
    keep.emplace_back(i, e);
  }
  over_.clear();
  for (auto& [i, e] : keep)
    if (!(e == base_->at(i))) over_.emplace_back(i, std::move(e));
}

Element OmegaSeq::at(size_t i) const {
  auto it = std::lower_bound(over_.begin(), over_.end(), i,
                             [](const auto& p, size_t x) { return p.first < x; });
  if (it != over_.end() && it->first == i) return it->second;
  return base_->at(i);
}

size_t OmegaSeq::support_bound() const {
  return over_.empty() ? 0 : over_.back().first + 1;
}

OmegaSeq OmegaSeq::updated(std::span<const Element> prefix) const {
  for (const Element& e : prefix)
    if (e.tag() != base_->value_tag())
      throw Error(Errc::CarrierMismatch,
                  "prefix element " + e.repr() + " not in carrier " +
                      carrier_name(base_->value_tag()));
  std::vector<std::pair<size_t, Element>> ov;
  for (size_t i = 0; i < prefix.size(); ++i) ov.emplace_back(i, prefix[i]);
  for (const auto& [i, e] : over_)
    if (i >= prefix.size()) ov.emplace_back(i, e);
  return OmegaSeq(base_, std::move(ov));
}

OmegaSeq OmegaSeq::spliced(size_t n, const OmegaSeq& tail) const {
  std::vector<std::pair<size_t, Element>> ov;
  for (const auto& [i, e] : over_)
    if (i < n) ov.emplace_back(i, e);
  // entries of `this` below n that differ from tail's base are overrides too
  // when bases agree literally this loop only handles tail's own overrides
  for (const auto& [i, e] : tail.over_)
    if (i >= n) ov.emplace_back(i, e);
  if (base_->id() != tail.base_->id()) {
    // differing bases: materialize the first n entries explicitly
    ov.clear();
    for (size_t i = 0; i < n; ++i) ov.emplace_back(i, at(i));
    for (const auto& [i, e] : tail.over_)
      if (i >= n) ov.emplace_back(i, e);
    return OmegaSeq(tail.base_, std::move(ov));
  }
  return OmegaSeq(base_, std::move(ov));
}

OmegaSeq OmegaSeq::permuted(const FinPerm& sigma) const {
  if (sigma.is_identity()) return *this;
  std::vector<size_t> candidates;
  for (const auto& [k, v] : sigma.graph()) candidates.push_back(k);
  for (const auto& [i, e] : over_) {
    // indices mapping onto the support: sigma(i') = i means i' = sigma^{-1}(i);
    // outside dom(sigma) the preimage is i itself
    bool in_dom = false;
    for (const auto& [k, v] : sigma.graph())
      if (k == i) in_dom = true;
    if (!in_dom) candidates.push_back(i);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<std::pair<size_t, Element>> ov;
  for (size_t i : candidates) ov.emplace_back(i, at(sigma.apply(i)));
  return OmegaSeq(base_, std::move(ov));
}

OmegaSeq OmegaSeq::rebased() const {
  if (base_->kind() != BaseSeq::Kind::Mixed) return *this;
  const auto& prefix = base_->prefix();
  std::vector<std::pair<size_t, Element>> ov;
  for (size_t i = 0; i < prefix.size(); ++i) ov.emplace_back(i, at(i));
  for (const auto& [i, e] : over_)
    if (i >= prefix.size()) ov.emplace_back(i, e);
  return OmegaSeq(base_->tail(), std::move(ov));
}

bool OmegaSeq::comparable_with(const OmegaSeq& o) const {
  if (base_->id() == o.base_->id()) return true;
  if (base_->kind() == BaseSeq::Kind::Mixed &&
      base_->tail()->id() == o.base_->id())
    return true;
  if (o.base_->kind() == BaseSeq::Kind::Mixed &&
      o.base_->tail()->id() == base_->id())
    return true;
  return false;
}

bool OmegaSeq::operator==(const OmegaSeq& o) const { return compare(o) == 0; }

int OmegaSeq::compare(const OmegaSeq& o) const {
  if (base_->id() != o.base_->id()) {
    if (comparable_with(o)) return rebased().compare(o.rebased());
    return base_->id() < o.base_->id() ? -1 : 1;
  }
  if (over_.size() != o.over_.size()) return over_.size() < o.over_.size() ? -1 : 1;
  for (size_t i = 0; i < over_.size(); ++i) {
    if (over_[i].first != o.over_[i].first)
      return over_[i].first < o.over_[i].first ? -1 : 1;
    if (int c = over_[i].second.compare(o.over_[i].second)) return c;
  }
  return 0;
}

size_t OmegaSeq::hash() const {
  const OmegaSeq* s = this;
  OmegaSeq tmp;
  if (base_->kind() == BaseSeq::Kind::Mixed) {
    tmp = rebased();
    s = &tmp;
  }
  size_t h = fnv1a(s->base_->id());
  for (const auto& [i, e] : s->over_) h = hash_combine(h, hash_combine(i, e.hash()));
  return h;
}

std::string OmegaSeq::repr() const {
  std::ostringstream os;
  os << "[";
  size_t n = support_bound();
  for (size_t i = 0; i < n; ++i) {
    if (i) os << ",";
    os << at(i).repr();
  }
  os << (n ? " | " : "| ") << base_->id() << "]";
  return os.str();
}

Element seq_entry(const OmegaSeq& s, size_t i) { return s.at(i); }

OmegaSeq seq_update(const OmegaSeq& s, std::span<const Element> prefix) {
  return s.updated(prefix);
}

OmegaSeq perm_apply(const FinPerm& sigma, const OmegaSeq& s) { return s.permuted(sigma); }

FinPerm perm_compose(const FinPerm& sigma, const FinPerm& rho) { return sigma.after(rho); }

bool equiv(const OmegaSeq& s, const OmegaSeq& r) {
  if (!s.comparable_with(r))
    throw Error(Errc::BaseMismatch,
                "sequences over incomparable bases " + s.base()->id() + " and " +
                    r.base()->id());
  // finite overrides over a shared base always differ at finitely many indices
  return true;
}

std::vector<OmegaSeq> enumerate_seqs(const BaseSeqPtr& base,
                                     std::span<const Element> pool,
                                     size_t support_bound) {
  std::vector<OmegaSeq> out;
  if (support_bound == 0 || pool.empty()) {
    out.emplace_back(base);
    return out;
  }
  std::vector<size_t> idx(support_bound, 0);
  while (true) {
    std::vector<std::pair<size_t, Element>> ov;
    for (size_t i = 0; i < support_bound; ++i) ov.emplace_back(i, pool[idx[i]]);
    out.emplace_back(base, std::move(ov));
    size_t pos = support_bound;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < pool.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

}  // namespace clonoid
