#include "tpb/rational.hpp"

#include "tpb/errors.hpp"

#include <cctype>
#include <string>

namespace tpb {

Rational pow(const Rational& base, unsigned exponent)
{
   Rational result(1);
   mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
   mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
   result.canonicalize();
   return result;
}

Integer pow10(unsigned exponent)
{
   Integer result;
   mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
   return result;
}

namespace {

bool is_integer_literal(std::string_view s)
{
   std::size_t i = 0;
   if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
   if (i == s.size()) return false;
   for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
   }
   return true;
}

Integer parse_integer(std::string_view s)
{
   if (!is_integer_literal(s)) {
      throw DomainError("not an integer literal: '" + std::string(s) + "'");
   }
   std::string digits(s);
   if (digits.front() == '+') digits.erase(0, 1);
   return Integer(digits, 10);
}

Rational parse_decimal(std::string_view s)
{
   std::string_view mantissa = s;
   long exponent = 0;
   if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      exponent = parse_integer(s.substr(e + 1)).get_si();
   }
   std::string digits;
   long frac_digits = 0;
   bool seen_point = false;
   for (char c : mantissa) {
      if (c == '.') {
         if (seen_point) throw DomainError("malformed decimal: '" + std::string(s) + "'");
         seen_point = true;
      } else {
         digits.push_back(c);
         if (seen_point && std::isdigit(static_cast<unsigned char>(c))) ++frac_digits;
      }
   }
   Rational q(parse_integer(digits));
   long shift = exponent - frac_digits;
   if (shift >= 0) {
      q *= Rational(pow10(static_cast<unsigned>(shift)));
   } else {
      q /= Rational(pow10(static_cast<unsigned>(-shift)));
   }
   return q;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
   while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
   while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
   if (text.empty()) throw DomainError("empty rational literal");

   if (auto slash = text.find('/'); slash != std::string_view::npos) {
      Integer num = parse_integer(text.substr(0, slash));
      Integer den = parse_integer(text.substr(slash + 1));
      if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
      Rational q(num, den);
      q.canonicalize();
      return q;
   }
   if (is_integer_literal(text)) return Rational(parse_integer(text));
   return parse_decimal(text);
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q)
{
   if (q.get_den() == 1) return q.get_num().get_str(10);
   return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

long decimal_exponent(const Rational& q)
{
   if (q == 0) throw DomainError("decimal_exponent of zero");
   Rational a = abs(q);
   // Estimate from digit counts, then correct by exact comparison.
   long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
            static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
   auto power = [](long k) {
      return k >= 0 ? Rational(pow10(static_cast<unsigned>(k)))
                    : Rational(Integer(1), pow10(static_cast<unsigned>(-k)));
   };
   while (power(e) > a) --e;
   while (power(e + 1) <= a) ++e;
   return e;
}

}  // namespace tpb
