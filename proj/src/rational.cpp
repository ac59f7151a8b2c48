#include "rbop/rational.hpp"

#include <cctype>
#include <ostream>

namespace rbop {

std::optional<Rat> Rat::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // gmp's set_str is permissive about whitespace; enforce the strict grammar
  // [-]digits[/digits] here.
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    if (!digits(body)) return std::nullopt;
  } else {
    if (!digits(body.substr(0, slash)) || !digits(body.substr(slash + 1))) return std::nullopt;
  }
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return Rat(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_.get_str(); }

}  // namespace rbop
