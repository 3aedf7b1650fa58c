#include "fpl/registry.hpp"

#include <set>
#include <stdexcept>

namespace fpl {

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> entries = [] {
    std::vector<IdentityEntry> out;
    registry_detail::add_zeta_entries(out);
    registry_detail::add_functional_entries(out);
    registry_detail::add_value_entries(out);
    registry_detail::add_appendix_entries(out);
    std::set<std::string> seen;
    for (const auto& e : out) {
      if (!seen.insert(e.id).second) throw std::logic_error("duplicate identity id " + e.id);
    }
    return out;
  }();
  return entries;
}

const IdentityEntry* find_entry(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

}  // namespace fpl
