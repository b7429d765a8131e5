#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace longrun {

/// Thread-safe memo of immutable tables. `get_or_build` builds outside the
/// lock; if two threads race on the same key the first insert wins and both
/// callers receive that instance.
template <typename Key, typename Value>
class TableCache {
 public:
  template <typename Builder>
  std::shared_ptr<const Value> get_or_build(const Key& key, Builder&& build) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    auto built = std::make_shared<const Value>(build());
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, std::move(built));
    return it->second;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> entries_;
};

}  // namespace longrun
