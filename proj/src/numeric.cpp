#include "cobord/numeric.hpp"

#include <cctype>

namespace cobord {

namespace {

bool valid_decimal(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

} // namespace

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_decimal(text)) fail(errc::parse, "bad integer literal: '" + text + "'");
    return Rat(Int(text, 10));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!valid_decimal(num) || !valid_decimal(den))
    fail(errc::parse, "bad rational literal: '" + text + "'");
  return make_rat(Int(num, 10), Int(den, 10));
}

std::string rat_to_string(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace cobord
