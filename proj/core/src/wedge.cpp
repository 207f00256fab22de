#include "mcx/wedge.hpp"

#include "mcx/error.hpp"

namespace mcx {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

WedgeDescriptor WedgeDescriptor::sphere(int dim, const BigInt& count) {
  WedgeDescriptor w;
  w.add(dim, count);
  return w;
}

BigInt WedgeDescriptor::count(int dim) const {
  auto it = spheres_.find(dim);
  return it == spheres_.end() ? BigInt(0) : it->second;
}

BigInt WedgeDescriptor::total() const {
  BigInt t = 0;
  for (const auto& [d, c] : spheres_) t += c;
  return t;
}

std::optional<int> WedgeDescriptor::min_dim() const {
  if (spheres_.empty()) return std::nullopt;
  return spheres_.begin()->first;
}

std::optional<int> WedgeDescriptor::max_dim() const {
  if (spheres_.empty()) return std::nullopt;
  return spheres_.rbegin()->first;
}

WedgeDescriptor& WedgeDescriptor::add(int dim, const BigInt& count) {
  if (dim < -1) fail(ErrorKind::Contract, "sphere dimension below -1");
  if (sgn(count) < 0) fail(ErrorKind::Contract, "negative sphere count");
  if (sgn(count) == 0) return *this;
  spheres_[dim] += count;
  return *this;
}

WedgeDescriptor& WedgeDescriptor::add(const WedgeDescriptor& other) {
  for (const auto& [d, c] : other.spheres_) add(d, c);
  return *this;
}

WedgeDescriptor WedgeDescriptor::suspended(int times) const {
  WedgeDescriptor w;
  for (const auto& [d, c] : spheres_) w.add(d + times, c);
  return w;
}

WedgeDescriptor WedgeDescriptor::scaled(const BigInt& factor) const {
  WedgeDescriptor w;
  for (const auto& [d, c] : spheres_) w.add(d, c * factor);
  return w;
}

std::string WedgeDescriptor::to_string() const {
  if (spheres_.empty()) return "point";
  std::string out;
  for (const auto& [d, c] : spheres_) {
    if (!out.empty()) out += " v ";
    if (c != 1) out += mcx::to_string(c) + "*";
    out += "S^" + std::to_string(d);
  }
  return out;
}

}  // namespace mcx
