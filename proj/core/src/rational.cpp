#include "convdec/rational.hpp"

#include <cctype>

#include "convdec/errors.hpp"

namespace convdec {

Rational make_rational(const Integer& numerator, const Integer& denominator)
{
  if (denominator == 0)
    throw ParseError("zero denominator");
  Rational result(numerator, denominator);
  result.canonicalize();
  return result;
}

namespace {

std::string_view trim(std::string_view text)
{
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

Integer parse_integer(std::string_view digits, bool allowSign)
{
  std::string_view body = digits;
  if (allowSign && !body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  if (body.empty())
    throw ParseError("empty integer in rational '" + std::string(digits) + "'");
  for (char c : body)
  {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("invalid character in rational '" + std::string(digits) + "'");
  }
  std::string owned(digits.front() == '+' ? digits.substr(1) : digits);
  return Integer(owned, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
  std::string_view trimmed = trim(text);
  auto slash = trimmed.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(trimmed, true));
  Integer numerator = parse_integer(trim(trimmed.substr(0, slash)), true);
  Integer denominator = parse_integer(trim(trimmed.substr(slash + 1)), false);
  return make_rational(numerator, denominator);
}

std::string to_string(const Rational& value)
{
  if (value.get_den() == 1)
    return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::uint64_t ceil_sqrt(std::uint64_t n)
{
  mpz_class root;
  mpz_class value(static_cast<unsigned long>(n));
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  if (root * root < value)
    root += 1;
  return root.get_ui();
}

Integer ceil(const Rational& value)
{
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

} // namespace convdec
