#include "baext/auh.hpp"

#include <stdexcept>

#include "baext/gf.hpp"

namespace baext::auh {

int kappa_bits(int lambda, uint64_t ell, int n) {
  if (lambda < 1 || ell < 1 || n < 1) throw std::invalid_argument("auh: parameters must be >= 1");
  unsigned __int128 L = (unsigned __int128)ell * uint64_t(n) * uint64_t(n);
  int ceil_log2 = 0;
  while (((unsigned __int128)1 << ceil_log2) < L) ++ceil_log2;
  long k = long(lambda) + 1 + ceil_log2;
  if (k > 64) throw std::out_of_range("auh: kappa exceeds the supported 64-bit width");
  return int(k);
}

HashParams HashParams::make(int lambda, uint64_t ell, int n) {
  HashParams p;
  p.lambda = lambda;
  p.msg_len = ell;
  p.parties = n;
  p.kappa = kappa_bits(lambda, ell, n);
  return p;
}

Bits pad(const Bits& m, int kappa) {
  if (m.size() % kappa == 0 && !m.empty()) return m;
  size_t target = ((m.size() + kappa - 1) / kappa) * size_t(kappa);
  if (target == 0) target = kappa;
  Bits out(target);
  for (size_t i = 0; i < m.size(); ++i) out.set(i, m.get(i));
  return out;
}

uint64_t hash(uint64_t key, const Bits& padded, int kappa) {
  if (padded.empty() || padded.size() % kappa != 0)
    throw std::invalid_argument("auh: message length must be a nonzero multiple of kappa");
  size_t chunks = padded.size() / kappa;
  gf::Elem acc{0, kappa};
  gf::Elem k{key, kappa};
  for (size_t j = chunks; j-- > 0;) {
    acc = gf::mul(acc, k);
    acc.v ^= padded.chunk(j * kappa, kappa);
  }
  return acc.v;
}

uint64_t joint_key(uint64_t ki, uint64_t kj, int kappa) {
  uint64_t sum = ki + kj;
  if (kappa < 64) sum &= (uint64_t{1} << kappa) - 1;
  return sum;
}

}  // namespace baext::auh
