#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace flca {

// Finite multiset kept as a vector of (key, count) pairs sorted by key with
// every count >= 1. Two multisets are equal iff their vectors are equal.
template <class Key, class Compare = std::less<Key>>
class SortedMultiset {
 public:
  using Entry = std::pair<Key, std::uint64_t>;

  SortedMultiset() = default;

  explicit SortedMultiset(std::vector<Entry> raw) {
    for (auto& [k, c] : raw) add(k, c);
  }

  void add(const Key& key, std::uint64_t count = 1) {
    if (count == 0) return;
    auto it = lower(key);
    if (it != entries_.end() && equivalent(it->first, key))
      it->second += count;
    else
      entries_.insert(it, Entry{key, count});
  }

  void add(const SortedMultiset& other) {
    for (const auto& [k, c] : other.entries_) add(k, c);
  }

  // Removes a sub-multiset; nullopt if `other` is not contained in *this.
  std::optional<SortedMultiset> minus(const SortedMultiset& other) const {
    SortedMultiset out = *this;
    for (const auto& [k, c] : other.entries_) {
      auto it = out.lower(k);
      if (it == out.entries_.end() || !equivalent(it->first, k) || it->second < c)
        return std::nullopt;
      it->second -= c;
      if (it->second == 0) out.entries_.erase(it);
    }
    return out;
  }

  std::uint64_t count(const Key& key) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry& e, const Key& k) { return Compare{}(e.first, k); });
    return (it != entries_.end() && equivalent(it->first, key)) ? it->second : 0;
  }

  SortedMultiset scaled(std::uint64_t factor) const {
    if (factor == 0) return {};
    SortedMultiset out = *this;
    for (auto& e : out.entries_) e.second *= factor;
    return out;
  }

  // Applies f to every key and re-canonicalizes.
  template <class F>
  auto mapped(F&& f) const {
    using Out = decltype(f(std::declval<const Key&>()));
    SortedMultiset<Out> out;
    for (const auto& [k, c] : entries_) out.add(f(k), c);
    return out;
  }

  template <class Pred>
  SortedMultiset filtered(Pred&& pred) const {
    SortedMultiset out;
    for (const auto& e : entries_)
      if (pred(e.first)) out.entries_.push_back(e);
    return out;
  }

  bool empty() const noexcept { return entries_.empty(); }
  std::uint64_t total() const noexcept {
    std::uint64_t n = 0;
    for (const auto& e : entries_) n += e.second;
    return n;
  }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const SortedMultiset&, const SortedMultiset&) = default;

 private:
  static bool equivalent(const Key& a, const Key& b) {
    return !Compare{}(a, b) && !Compare{}(b, a);
  }

  auto lower(const Key& key) {
    return std::lower_bound(entries_.begin(), entries_.end(), key,
                            [](const Entry& e, const Key& k) { return Compare{}(e.first, k); });
  }

  std::vector<Entry> entries_;
};

}  // namespace flca
