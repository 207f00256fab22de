#include "mcx/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mcx/error.hpp"

namespace mcx {

bool ColexLess::operator()(const Monomial& a, const Monomial& b) const {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

MultilinearPoly MultilinearPoly::constant(const BigInt& c) { return monomial({}, c); }
MultilinearPoly MultilinearPoly::variable(int i) { return monomial({i}, 1); }

MultilinearPoly MultilinearPoly::monomial(Monomial m, const BigInt& c) {
  std::sort(m.begin(), m.end());
  if (std::adjacent_find(m.begin(), m.end()) != m.end()) fail(ErrorKind::Contract, "monomial is not squarefree");
  if (!m.empty() && m.front() < 1) fail(ErrorKind::Contract, "variable indices start at 1");
  MultilinearPoly p;
  p.add_term(m, c);
  return p;
}

void MultilinearPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultilinearPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int MultilinearPoly::max_variable() const {
  int v = 0;
  for (const auto& [m, c] : terms_)
    if (!m.empty()) v = std::max(v, m.back());
  return v;
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
  MultilinearPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      if (m.size() != ma.size() + mb.size()) fail(ErrorKind::Contract, "product is not multilinear");
      out.add_term(m, ca * cb);
    }
  return out;
}

MultilinearPoly MultilinearPoly::scaled(const BigInt& c) const {
  MultilinearPoly out;
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  return out;
}

MultilinearPoly MultilinearPoly::times_variable(int i) const { return *this * variable(i); }

MultilinearPoly MultilinearPoly::shifted(int i, const BigInt& c) const {
  MultilinearPoly out;
  for (const auto& [m, v] : terms_) {
    out.add_term(m, v);
    auto it = std::find(m.begin(), m.end(), i);
    if (it != m.end()) {
      Monomial rest = m;
      rest.erase(rest.begin() + (it - m.begin()));
      out.add_term(rest, v * c);
    }
  }
  return out;
}

MultilinearPoly MultilinearPoly::renamed(const std::function<int(int)>& f) const {
  MultilinearPoly out;
  for (const auto& [m, v] : terms_) {
    Monomial r;
    for (int i : m) r.push_back(f(i));
    out += monomial(r, v);
  }
  return out;
}

BigInt MultilinearPoly::evaluate(const std::vector<BigInt>& values) const {
  if (max_variable() > static_cast<int>(values.size())) fail(ErrorKind::Contract, "too few values for polynomial");
  BigInt sum = 0;
  for (const auto& [m, c] : terms_) {
    BigInt p = c;
    for (int i : m) p *= values[i - 1];
    sum += p;
  }
  return sum;
}

std::string MultilinearPoly::to_string(char var, MonomialOrder order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, BigInt>> items(terms_.begin(), terms_.end());
  if (order == MonomialOrder::GradedLex)
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& x, const auto& y) { return GradedLexLess{}(x.first, y.first); });
  std::string s;
  bool first = true;
  for (const auto& [m, c] : items) {
    BigInt mag = abs(c);
    if (first)
      s += (c < 0 ? "-" : "");
    else
      s += (c < 0 ? " - " : " + ");
    first = false;
    if (m.empty() || mag != 1) s += mag.get_str();
    for (int i : m) {
      s += var;
      s += std::to_string(i);
    }
  }
  return s;
}

MultilinearPoly MultilinearPoly::parse(const std::string& text, char var) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) fail(ErrorKind::Parse, "empty polynomial");
  if (t == "0") return {};
  MultilinearPoly out;
  std::size_t i = 0;
  auto digits = [&](std::string& d) {
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) d += t[i++];
  };
  bool first = true;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail(ErrorKind::Parse, "expected '+' or '-' in polynomial: " + text);
    }
    first = false;
    std::string coeff;
    digits(coeff);
    Monomial m;
    while (i < t.size() && t[i] == var) {
      ++i;
      std::string idx;
      digits(idx);
      if (idx.empty()) fail(ErrorKind::Parse, "variable without index in polynomial: " + text);
      m.push_back(std::stoi(idx));
    }
    if (coeff.empty() && m.empty()) fail(ErrorKind::Parse, "empty term in polynomial: " + text);
    BigInt c = coeff.empty() ? BigInt(1) : BigInt(coeff);
    std::set<int> uniq(m.begin(), m.end());
    if (uniq.size() != m.size() || (!m.empty() && *uniq.begin() < 1))
      fail(ErrorKind::Parse, "monomial is not squarefree: " + text);
    out.add_term(Monomial(uniq.begin(), uniq.end()), sign * c);
  }
  return out;
}

}  // namespace mcx
