#include "h4n/rational.hpp"

#include <stdexcept>

namespace h4n {

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  // Reject anything mpq_class would silently misparse (spaces, exponents).
  for (char ch : text) {
    if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9'))) {
      throw std::invalid_argument("bad rational literal: " + text);
    }
  }
  mpq_class value;
  if (value.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + text);
  }
  value.canonicalize();
  return value;
}

std::string rat_str(const Rat& r) {
  // GMP does not canonicalize two-argument constructions; normalize a copy
  // so the rendering is canonical for any input.
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace h4n
