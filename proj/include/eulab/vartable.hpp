#pragma once

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace eulab {

// Process-wide registry mapping variable names to dense indices. The first
// fourteen names are pre-registered in a fixed canonical order so that term
// ordering, printing, and serialization are stable across runs; names seen
// later (user variables) get the next free index in registration order.
class VarTable {
 public:
  static VarTable& instance() {
    static VarTable table;
    return table;
  }

  // Index of `name`, registering it if new.
  int intern(std::string_view name) {
    if (name.empty()) throw std::invalid_argument("variable name must be non-empty");
    {
      std::shared_lock lk(mu_);
      auto it = index_.find(std::string(name));
      if (it != index_.end()) return it->second;
    }
    std::unique_lock lk(mu_);
    auto [it, inserted] = index_.try_emplace(std::string(name), static_cast<int>(names_.size()));
    if (inserted) names_.push_back(std::string(name));
    return it->second;
  }

  // Index of `name`, or -1 when it was never registered.
  int find(std::string_view name) const {
    std::shared_lock lk(mu_);
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
  }

  std::string name(int idx) const {
    std::shared_lock lk(mu_);
    if (idx < 0 || idx >= static_cast<int>(names_.size()))
      throw std::out_of_range("variable index out of range");
    return names_[idx];
  }

  int size() const {
    std::shared_lock lk(mu_);
    return static_cast<int>(names_.size());
  }

  VarTable(const VarTable&) = delete;
  VarTable& operator=(const VarTable&) = delete;

 private:
  VarTable() {
    for (const char* v : {"x", "y", "alpha", "beta", "u1", "u2", "u3", "u4",
                          "u", "v", "w", "q", "a", "b"}) {
      index_.emplace(v, static_cast<int>(names_.size()));
      names_.emplace_back(v);
    }
  }

  mutable std::shared_mutex mu_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

inline int var_index(std::string_view name) { return VarTable::instance().intern(name); }
inline std::string var_name(int idx) { return VarTable::instance().name(idx); }

}  // namespace eulab
