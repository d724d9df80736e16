#include "aks/natural.hpp"

#include <cctype>

namespace aks {

std::optional<Natural> parse_natural(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  }
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (base == 10 ? !std::isdigit(uc) : !std::isxdigit(uc)) return std::nullopt;
  }
  Natural out;
  if (out.set_str(std::string(text), base) != 0) return std::nullopt;
  return out;
}

}  // namespace aks
