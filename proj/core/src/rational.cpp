#include "mcgsig/rational.hpp"

#include <stdexcept>

namespace mcgsig {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(Int(std::string(s)));
    }
    Int num(std::string(s.substr(0, slash)));
    Int den(std::string(s.substr(slash + 1)));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rat_from_string: malformed rational '" + std::string(s) + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace mcgsig
