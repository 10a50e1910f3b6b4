#pragma once

#include <mutex>
#include <string>
#include <unordered_map>

#include "qshift/lie_algebra.hpp"

namespace qshift {

// Node-based maps keep references stable across inserts, so a cached value
// can be handed out while other threads keep inserting.
struct LieAlgebra::Memo {
  mutable std::mutex mutex;
  std::unordered_map<std::string, Terms> products;
  std::unordered_map<std::string, Terms> derivatives;

  const Terms* find(const std::unordered_map<std::string, Terms>& map, const std::string& key) const {
    std::lock_guard lock(mutex);
    auto it = map.find(key);
    return it == map.end() ? nullptr : &it->second;
  }
  const Terms& insert(std::unordered_map<std::string, Terms>& map, std::string key, Terms value) {
    std::lock_guard lock(mutex);
    return map.try_emplace(std::move(key), std::move(value)).first->second;
  }
};

}  // namespace qshift
