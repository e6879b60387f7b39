#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace osfol {

/// Interned identifier. Equality is by intern id; ordering is by spelling so
/// that every ordered container iterates identically across runs.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  const std::string& name() const { return *name_; }
  std::uint32_t id() const { return id_; }
  bool empty() const { return id_ == 0; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.id_ == b.id_) return std::strong_ordering::equal;
    return a.name().compare(b.name()) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint32_t id_ = 0;  // 0 is the empty symbol
  const std::string* name_ = &empty_name();

  static const std::string& empty_name();
};

}  // namespace osfol

template <>
struct std::hash<osfol::Symbol> {
  std::size_t operator()(osfol::Symbol s) const noexcept { return std::hash<std::uint32_t>{}(s.id()); }
};
