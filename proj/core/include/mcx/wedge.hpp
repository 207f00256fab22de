#pragma once

#include <map>
#include <optional>
#include <string>

#include "mcx/bigint.hpp"

namespace mcx {

// Homotopy type "point" (empty map) or a wedge of spheres given as
// dimension -> count. Dimension -1 stands for the complex {∅}.
class WedgeDescriptor {
 public:
  WedgeDescriptor() = default;
  static WedgeDescriptor contractible() { return {}; }
  static WedgeDescriptor sphere(int dim, const BigInt& count = 1);

  bool is_contractible() const { return spheres_.empty(); }
  const std::map<int, BigInt>& spheres() const { return spheres_; }
  BigInt count(int dim) const;
  BigInt total() const;
  std::optional<int> min_dim() const;
  std::optional<int> max_dim() const;

  // Adds count copies of S^dim; zero counts are dropped.
  WedgeDescriptor& add(int dim, const BigInt& count);
  WedgeDescriptor& add(const WedgeDescriptor& other);
  WedgeDescriptor suspended(int times = 1) const;
  WedgeDescriptor scaled(const BigInt& factor) const;

  // "point" or e.g. "S^0 v 3*S^1"
  std::string to_string() const;

  friend bool operator==(const WedgeDescriptor&, const WedgeDescriptor&) = default;

 private:
  std::map<int, BigInt> spheres_;
};

}  // namespace mcx
