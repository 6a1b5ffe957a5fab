#include "iklab/rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>

namespace iklab {

std::string rat_str(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

std::optional<Rat> rat_parse(const std::string& text) {
  auto parse_int = [](const std::string& s) -> std::optional<Int> {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    return Int(s);
  };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rat(*n, *d);
}

Int common_denominator(const std::vector<Rat>& values) {
  Int l = 1;
  for (const Rat& v : values) l = boost::multiprecision::lcm(l, rat_den(v));
  return l;
}

}  // namespace iklab
