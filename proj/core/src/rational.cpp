#include "dispheres/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dispheres {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat value(num, den);
  value.canonicalize();
  return value;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const std::size_t slash = body.find('/');
  const std::string_view num_part =
      slash == std::string_view::npos ? body : body.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) return std::nullopt;

  const mpz_class num{std::string(num_part)};
  const mpz_class den{std::string(den_part)};
  if (den == 0) return std::nullopt;

  Rat value = Rat(num) / Rat(den);  // exact division canonicalizes
  if (negative) value = -value;
  return value;
}

std::string to_fraction_string(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rat& value) { return value.get_d(); }

}  // namespace dispheres
