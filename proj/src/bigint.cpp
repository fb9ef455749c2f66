#include "qwalk/bigint.hpp"

#include <stdexcept>

namespace qwalk {

BigInt binomial(long m, long k) {
  if (m < 0) throw std::invalid_argument("binomial: m must be non-negative");
  if (k < 0 || k > m) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return out;
}

BigInt strong_compositions(long total, long parts) {
  if (total < 0 || parts < 0) throw std::invalid_argument("strong_compositions: negative argument");
  if (parts == 0) return total == 0 ? 1 : 0;
  if (total < parts) return 0;
  return binomial(total - 1, parts - 1);
}

}  // namespace qwalk
