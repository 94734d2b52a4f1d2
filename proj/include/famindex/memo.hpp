#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace famindex::detail {

/// Write-once cache: concurrent readers, the first finished writer wins and
/// later writers for the same key discard their (identical) value.
template <class Key, class Value>
class Memo {
 public:
  template <class Compute>
  std::shared_ptr<const Value> get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(key, std::move(value));
    return it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> table_;
};

}  // namespace famindex::detail
