#ifndef COXFLAG_ORDINAL_HPP_
#define COXFLAG_ORDINAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coxflag {

  // An ordinal below omega^omega in Cantor normal form.
  class Ordinal {
   public:
    struct Term {
      unsigned      exponent;
      std::uint64_t coefficient;

      friend bool operator==(Term const&, Term const&) = default;
    };

    Ordinal() = default;

    static Ordinal finite(std::uint64_t n);
    static Ordinal omega_power(unsigned exponent, std::uint64_t coefficient = 1);

    std::vector<Term> const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    // Ordinal (non-commutative) sum.
    Ordinal operator+(Ordinal const& other) const;
    // Hessenberg natural sum.
    Ordinal natural_sum(Ordinal const& other) const;

    std::string to_string() const;

    friend bool operator==(Ordinal const&, Ordinal const&) = default;
    friend std::strong_ordering operator<=>(Ordinal const& a,
                                            Ordinal const& b);

   private:
    std::vector<Term> _terms;
  };

}  // namespace coxflag

#endif  // COXFLAG_ORDINAL_HPP_
