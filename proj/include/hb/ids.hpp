#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hb/errors.hpp"

namespace hb {

/**
 * Bidirectional name <-> dense-id table.  Ids are assigned in insertion
 * order starting at 0, which keeps every structure built on top of it
 * deterministic for a given input order.
 */
class id_map {
 public:
  std::uint32_t intern(std::string_view name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
  }

  std::optional<std::uint32_t> find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(std::string_view name) const { return index_.find(name) != index_.end(); }

  const std::string& name(std::uint32_t id) const {
    if (id >= names_.size()) throw domain_error("id_map::name: id out of range");
    return names_[id];
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& names() const { return names_; }

 private:
  struct sv_hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t, sv_hash, std::equal_to<>> index_;
};

}  // namespace hb
