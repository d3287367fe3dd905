#include "apolar/numbers.hpp"

#include <stdexcept>

namespace apolar {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int falling(long n, long k) {
  Int r = 1;
  for (long i = 0; i < k; ++i) r *= (n - i);
  return r;
}

long long to_ll(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("value exceeds long long");
  return v.get_si();
}

std::string rat_exact(const Rat& value) {
  Rat v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string rat_decimal(const Rat& value, int places) {
  Rat v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  Int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // Truncate toward zero, matching the reference rendering.
  Int scaled = (v.get_num() * scale) / v.get_den();
  bool neg = scaled < 0;
  Int mag = abs(scaled);
  std::string digits = mag.get_str();
  while (static_cast<int>(digits.size()) <= places) digits.insert(0, "0");
  std::string out = digits.substr(0, digits.size() - places) + "." +
                    digits.substr(digits.size() - places);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return (neg ? "-" : "") + out;
}

}  // namespace apolar
