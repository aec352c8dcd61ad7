#include "exdiv/rational.hpp"

namespace exdiv {

ExactRational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt to_big(WideNat v) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

BigInt to_big(SignedWide v) {
  if (v >= 0) return to_big(static_cast<WideNat>(v));
  return -to_big(static_cast<WideNat>(0) - static_cast<WideNat>(v));
}

std::string to_string(const ExactRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace exdiv
