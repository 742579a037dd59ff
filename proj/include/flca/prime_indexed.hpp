#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace flca {

struct IntPair {
  std::int64_t first = 0;
  std::int64_t second = 0;

  IntPair swapped() const { return {second, first}; }

  IntPair& operator+=(const IntPair& o) {
    first += o.first;
    second += o.second;
    return *this;
  }
  friend IntPair operator+(IntPair a, const IntPair& b) { return a += b; }
  friend IntPair operator-(const IntPair& a) { return {-a.first, -a.second}; }
  friend IntPair operator-(const IntPair& a, const IntPair& b) { return a + (-b); }
  friend IntPair operator*(std::int64_t k, const IntPair& a) { return {k * a.first, k * a.second}; }
  friend bool operator==(const IntPair&, const IntPair&) = default;
};

inline std::string to_string(const IntPair& v) {
  return "(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")";
}

// An eventually-constant function from primes to V: a default value plus a
// finite map of exceptions. Exceptions never equal the default.
template <class V>
class PrimeIndexed {
 public:
  PrimeIndexed() = default;
  explicit PrimeIndexed(V fallback) : default_(std::move(fallback)) {}

  const V& fallback() const noexcept { return default_; }
  const std::map<std::uint64_t, V>& exceptions() const noexcept { return exceptions_; }

  const V& at(std::uint64_t p) const {
    auto it = exceptions_.find(p);
    return it == exceptions_.end() ? default_ : it->second;
  }

  void set(std::uint64_t p, V value) {
    if (value == default_)
      exceptions_.erase(p);
    else
      exceptions_[p] = std::move(value);
  }

  template <class F>
  PrimeIndexed map(F&& f) const {
    PrimeIndexed out(f(default_));
    for (const auto& [p, v] : exceptions_) out.set(p, f(v));
    return out;
  }

  // Pointwise binary operation, evaluated on the union of exception primes.
  template <class F>
  friend PrimeIndexed zip(const PrimeIndexed& a, const PrimeIndexed& b, F&& f) {
    PrimeIndexed out(f(a.default_, b.default_));
    for (const auto& [p, v] : a.exceptions_) out.set(p, f(v, b.at(p)));
    for (const auto& [p, v] : b.exceptions_)
      if (!a.exceptions_.count(p)) out.set(p, f(a.at(p), v));
    return out;
  }

  friend bool operator==(const PrimeIndexed&, const PrimeIndexed&) = default;

 private:
  V default_{};
  std::map<std::uint64_t, V> exceptions_;
};

}  // namespace flca
