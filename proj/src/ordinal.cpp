#include "coxflag/ordinal.hpp"

#include <algorithm>
#include <map>

namespace coxflag {

  Ordinal Ordinal::finite(std::uint64_t n) {
    return omega_power(0, n);
  }

  Ordinal Ordinal::omega_power(unsigned exponent, std::uint64_t coefficient) {
    Ordinal out;
    if (coefficient > 0) {
      out._terms.push_back({exponent, coefficient});
    }
    return out;
  }

  Ordinal Ordinal::operator+(Ordinal const& other) const {
    if (other.is_zero()) {
      return *this;
    }
    unsigned const lead = other._terms.front().exponent;
    Ordinal        out;
    for (Term const& t : _terms) {
      if (t.exponent > lead) {
        out._terms.push_back(t);
      } else if (t.exponent == lead) {
        out._terms.push_back({lead, t.coefficient});
      }
    }
    for (Term const& t : other._terms) {
      if (!out._terms.empty() && out._terms.back().exponent == t.exponent) {
        out._terms.back().coefficient += t.coefficient;
      } else {
        out._terms.push_back(t);
      }
    }
    return out;
  }

  Ordinal Ordinal::natural_sum(Ordinal const& other) const {
    std::map<unsigned, std::uint64_t, std::greater<>> merged;
    for (Term const& t : _terms) {
      merged[t.exponent] += t.coefficient;
    }
    for (Term const& t : other._terms) {
      merged[t.exponent] += t.coefficient;
    }
    Ordinal out;
    for (auto const& [e, c] : merged) {
      out._terms.push_back({e, c});
    }
    return out;
  }

  std::string Ordinal::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (Term const& t : _terms) {
      if (!out.empty()) {
        out += "+";
      }
      if (t.exponent == 0) {
        out += std::to_string(t.coefficient);
        continue;
      }
      out += "w";
      if (t.exponent > 1) {
        out += "^" + std::to_string(t.exponent);
      }
      if (t.coefficient > 1) {
        out += "*" + std::to_string(t.coefficient);
      }
    }
    return out;
  }

  std::strong_ordering operator<=>(Ordinal const& a, Ordinal const& b) {
    std::size_t const n = std::min(a._terms.size(), b._terms.size());
    for (std::size_t i = 0; i < n; ++i) {
      Ordinal::Term const& x = a._terms[i];
      Ordinal::Term const& y = b._terms[i];
      if (x.exponent != y.exponent) {
        return x.exponent <=> y.exponent;
      }
      if (x.coefficient != y.coefficient) {
        return x.coefficient <=> y.coefficient;
      }
    }
    return a._terms.size() <=> b._terms.size();
  }

}  // namespace coxflag
