#include "clonoid/common.hpp"

#include <mutex>
#include <unordered_map>
#include <vector>

namespace clonoid {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::CarrierMismatch: return "CarrierMismatch";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::RankViolation: return "RankViolation";
    case Errc::FlavorViolation: return "FlavorViolation";
    case Errc::NotExtensional: return "NotExtensional";
    case Errc::OutsideDomain: return "OutsideDomain";
    case Errc::NotAQuantale: return "NotAQuantale";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::ParseError: return "ParseError";
  }
  return "Error";
}

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {
struct CarrierRegistry {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, CarrierTag> index;
};
CarrierRegistry& registry() {
  static CarrierRegistry r;
  return r;
}
}  // namespace

CarrierTag carrier_tag(const std::string& name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.index.find(name);
  if (it != r.index.end()) return it->second;
  CarrierTag tag = static_cast<CarrierTag>(r.names.size());
  r.names.push_back(name);
  r.index.emplace(name, tag);
  return tag;
}

const std::string& carrier_name(CarrierTag tag) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  static const std::string unknown = "?";
  if (tag >= r.names.size()) return unknown;
  return r.names[tag];
}

}  // namespace clonoid
