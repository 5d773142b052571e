#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace bruhat {

// Hash table with concurrent readers and insert-if-absent writers. Values
// are computed outside the lock; if two threads race on the same key the
// first insertion wins and both callers observe it.
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentMemo {
public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end())
      return std::nullopt;
    return it->second;
  }

  Value insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, std::move(value));
    return it->second;
  }

  template <class Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    if (auto hit = find(key))
      return *hit;
    return insert(key, compute());
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> table_;
};

inline std::size_t hash_mix(std::size_t seed, std::size_t value) {
  // splitmix64 finalizer, applied to the running combination
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL + (value << 6) + (value >> 2);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(z ^ (z >> 31));
}

} // namespace bruhat
