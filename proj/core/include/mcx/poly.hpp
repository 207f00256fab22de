#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mcx/bigint.hpp"

namespace mcx {

// Sorted, strictly increasing variable indices (1-based).
using Monomial = std::vector<int>;

// Colexicographic order: compare largest indices first; {3} < {1,3} < {6}.
struct ColexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};
// Degree first, then lexicographic on the index sequence.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class MonomialOrder { Colex, GradedLex };

// Integer polynomial whose monomials are squarefree.
class MultilinearPoly {
 public:
  MultilinearPoly() = default;
  static MultilinearPoly constant(const BigInt& c);
  static MultilinearPoly variable(int i);
  static MultilinearPoly monomial(Monomial m, const BigInt& c = 1);

  const std::map<Monomial, BigInt, ColexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Monomial& m) const;
  int max_variable() const;  // 0 for constants

  MultilinearPoly& operator+=(const MultilinearPoly& o);
  MultilinearPoly& operator-=(const MultilinearPoly& o);
  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }
  // Throws ErrorKind::Contract if a product would square a variable.
  friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b);
  MultilinearPoly scaled(const BigInt& c) const;
  MultilinearPoly times_variable(int i) const;
  // t_i -> t_i + c
  MultilinearPoly shifted(int i, const BigInt& c) const;
  // t_i -> t_{f(i)}; f must be injective on the variables present.
  MultilinearPoly renamed(const std::function<int(int)>& f) const;

  // values[i-1] is the value of t_i.
  BigInt evaluate(const std::vector<BigInt>& values) const;

  std::string to_string(char var = 't', MonomialOrder order = MonomialOrder::Colex) const;
  // Accepts the to_string format, e.g. "1 + 2t1 + t3 + t1t3"; spaces optional.
  static MultilinearPoly parse(const std::string& text, char var = 't');

  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

 private:
  void add_term(const Monomial& m, const BigInt& c);
  std::map<Monomial, BigInt, ColexLess> terms_;
};

}  // namespace mcx
