#include "orthofold/rational.hpp"

#include <cctype>

#include "orthofold/errors.hpp"

namespace orthofold {

std::string to_string(const Rational& value) {
  // mpq_class::get_str already omits a unit denominator.
  return value.get_str(10);
}

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    if (!digits(body)) {
      throw ParseError("", "not a rational: \"" + std::string(text) + "\"");
    }
  } else {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!digits(num) || !digits(den)) {
      throw ParseError("", "not a rational: \"" + std::string(text) + "\"");
    }
    if (den.find_first_not_of('0') == std::string_view::npos) {
      throw ParseError("", "zero denominator: \"" + std::string(text) + "\"");
    }
  }

  Rational value;
  value.set_str(std::string(text), 10);
  value.canonicalize();
  return value;
}

}  // namespace orthofold
