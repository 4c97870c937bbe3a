#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clonoid {

enum class Errc {
  CarrierMismatch,
  BaseMismatch,
  ArityMismatch,
  BudgetExceeded,
  RankViolation,
  FlavorViolation,
  NotExtensional,
  OutsideDomain,
  NotAQuantale,
  SignatureMismatch,
  ZeroInput,
  NotRepresentable,
  ParseError,
};

const char* errc_name(Errc c);

/// Domain error carrying a machine-readable code; CLI maps these to exit 2.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Counter-based deterministic RNG; used for seeded shuffles and sampling.
struct SplitMix {
  uint64_t state;
  explicit SplitMix(uint64_t seed) : state(seed) {}
  uint64_t next() { return mix64(state++); }
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
};

inline size_t hash_combine(size_t a, size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

uint64_t fnv1a(std::string_view s);

// Interned carrier identifiers. Elements carry a tag marking the carrier
// they belong to; equality is tag-sensitive.
using CarrierTag = uint32_t;
CarrierTag carrier_tag(const std::string& name);
const std::string& carrier_name(CarrierTag tag);

}  // namespace clonoid
