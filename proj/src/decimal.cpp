#include "tpb/decimal.hpp"

#include "tpb/errors.hpp"

#include <cstdlib>
#include <string>

namespace tpb {

Integer round_half_even(const Rational& q)
{
   Integer floor;
   mpz_fdiv_q(floor.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
   const Rational frac = q - Rational(floor);
   const Rational half(1, 2);
   if (frac > half) return floor + 1;
   if (frac < half) return floor;
   return mpz_even_p(floor.get_mpz_t()) ? floor : Integer(floor + 1);
}

std::string render_scientific(const Rational& q, int sig)
{
   if (sig < 1) throw DomainError("significant digits must be >= 1");
   std::string sign = q < 0 ? "-" : "";
   long exponent = 0;
   Integer mantissa = 0;
   if (q != 0) {
      const Rational a = abs(q);
      exponent = decimal_exponent(a);
      const long shift = sig - 1 - exponent;
      Rational scaled = a;
      if (shift >= 0) {
         scaled *= Rational(pow10(static_cast<unsigned>(shift)));
      } else {
         scaled /= Rational(pow10(static_cast<unsigned>(-shift)));
      }
      mantissa = round_half_even(scaled);
      if (mantissa == pow10(static_cast<unsigned>(sig))) {
         mantissa /= 10;
         ++exponent;
      }
   }
   std::string digits = mantissa.get_str(10);
   digits.insert(0, static_cast<std::size_t>(sig) - digits.size(), '0');
   std::string out = sign + digits.substr(0, 1);
   if (sig > 1) out += "." + digits.substr(1);
   out += exponent < 0 ? "e-" : "e+";
   std::string exp_digits = std::to_string(std::labs(exponent));
   if (exp_digits.size() < 2) exp_digits.insert(0, 1, '0');
   return out + exp_digits;
}

std::optional<std::string> render_interval(const RationalInterval& interval, int sig)
{
   std::string low = render_scientific(interval.low, sig);
   if (low != render_scientific(interval.high, sig)) return std::nullopt;
   return low;
}

}  // namespace tpb
