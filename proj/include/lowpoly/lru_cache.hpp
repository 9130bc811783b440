#pragma once

#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace lowpoly {

/// Thread-safe LRU map bounded by the sum of caller-declared entry sizes.
/// Entries larger than the whole budget are not retained.
template <typename V>
class LruCache {
 public:
  explicit LruCache(std::size_t byte_budget) : budget_(byte_budget) {}

  std::shared_ptr<const V> get(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    order_.splice(order_.begin(), order_, it->second.position);
    return it->second.value;
  }

  void put(const std::string& key, std::shared_ptr<const V> value, std::size_t bytes) {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) {
      used_ -= it->second.bytes;
      order_.erase(it->second.position);
      entries_.erase(it);
    }
    if (bytes > budget_) return;
    while (used_ + bytes > budget_ && !order_.empty()) {
      auto victim = entries_.find(order_.back());
      used_ -= victim->second.bytes;
      entries_.erase(victim);
      order_.pop_back();
    }
    order_.push_front(key);
    entries_.emplace(key, Entry{std::move(value), bytes, order_.begin()});
    used_ += bytes;
  }

  std::size_t bytes_used() const {
    std::lock_guard lock(mutex_);
    return used_;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

 private:
  struct Entry {
    std::shared_ptr<const V> value;
    std::size_t bytes;
    std::list<std::string>::iterator position;
  };

  mutable std::mutex mutex_;
  std::size_t budget_;
  std::size_t used_ = 0;
  std::list<std::string> order_;  // front = most recent
  std::unordered_map<std::string, Entry> entries_;
};

}  // namespace lowpoly
