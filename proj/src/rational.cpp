#include "ecp/rational.hpp"

#include <cstdlib>

namespace ecp {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = s.find('/');
  auto to_ll = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("empty rational component");
    std::size_t pos = 0;
    long long v;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational literal: " + t);
    }
    if (pos != t.size()) throw std::invalid_argument("bad rational literal: " + t);
    return v;
  };
  if (slash == std::string::npos) return Rational(to_ll(s));
  return Rational(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
}

}  // namespace ecp
