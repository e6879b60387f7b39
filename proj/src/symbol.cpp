#include "osfol/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace osfol {
namespace {

struct SymbolTable {
  std::shared_mutex mutex;
  std::deque<std::string> names{std::string{}};
  std::unordered_map<std::string_view, std::uint32_t> index{{std::string_view{names.front()}, 0}};
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  auto& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (auto it = t.index.find(name); it != t.index.end()) {
      id_ = it->second;
      name_ = &t.names[id_];
      return;
    }
  }
  std::unique_lock lock(t.mutex);
  if (auto it = t.index.find(name); it != t.index.end()) {
    id_ = it->second;
    name_ = &t.names[id_];
    return;
  }
  t.names.emplace_back(name);
  id_ = static_cast<std::uint32_t>(t.names.size() - 1);
  name_ = &t.names.back();
  t.index.emplace(std::string_view{*name_}, id_);
}

const std::string& Symbol::empty_name() {
  static const std::string empty;
  return empty;
}

}  // namespace osfol
