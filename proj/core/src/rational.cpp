#include "cyclecone/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cyclecone {

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const ExactRational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return ExactRational(parse_integer(num_text));
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text[0] == '-' || den_text[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return make_rational(parse_integer(num_text), den);
}

double to_double(const ExactRational& value) { return value.get_d(); }

ExactRational abs_value(const ExactRational& value) { return ExactRational(abs(value)); }

}  // namespace cyclecone
