//
// osg - finite ordered semigroups
//
// Regularity classes of elements and the pi-variants, which ask the same
// question of some power of every element.

#ifndef OSG_ELEMENT_CLASSES_HPP_
#define OSG_ELEMENT_CLASSES_HPP_

#include <optional>  // for optional
#include <string>    // for string

#include "element_set.hpp"        // for ElementSet
#include "ideals.hpp"             // for closure_product, Factor
#include "ordered_semigroup.hpp"  // for OrderedSemigroup, power_orbit

namespace osg {

  enum class RegularityKind {
    Regular,            // a in (aSa]
    LeftRegular,        // a in (Sa^2]
    RightRegular,       // a in (a^2 S]
    IntraRegular,       // a in (Sa^2 S]
    CompletelyRegular,  // a in (a^2 S a^2]
    OrderedIdempotent,  // a <= a^2
    Nilpotent           // a^k <= 0 for some k
  };

  inline char const* to_string(RegularityKind kind) noexcept {
    switch (kind) {
      case RegularityKind::Regular:
        return "Reg";
      case RegularityKind::LeftRegular:
        return "LReg";
      case RegularityKind::RightRegular:
        return "RReg";
      case RegularityKind::IntraRegular:
        return "Intra";
      case RegularityKind::CompletelyRegular:
        return "Gr";
      case RegularityKind::OrderedIdempotent:
        return "E";
      case RegularityKind::Nilpotent:
        return "Nil";
    }
    return "";
  }

  //! The two-sided multiplicative zero, if S has one.
  inline std::optional<element_type> zero_element(OrderedSemigroup const& S) {
    for (element_type z = 0; z < S.size(); ++z) {
      bool is_zero = true;
      for (element_type x = 0; x < S.size() && is_zero; ++x) {
        is_zero = S.product(z, x) == z && S.product(x, z) == z;
      }
      if (is_zero) {
        return z;
      }
    }
    return std::nullopt;
  }

  namespace detail {
    inline bool is_in_class(OrderedSemigroup const& S,
                            element_type            a,
                            RegularityKind          kind,
                            element_type            zero) {
      auto const  A   = Factor::element(a);
      auto const  A2  = Factor::element(S.product(a, a));
      auto const  All = Factor::all(S);
      switch (kind) {
        case RegularityKind::Regular:
          return closure_product(S, {A, All, A}).contains(a);
        case RegularityKind::LeftRegular:
          return closure_product(S, {All, A2}).contains(a);
        case RegularityKind::RightRegular:
          return closure_product(S, {A2, All}).contains(a);
        case RegularityKind::IntraRegular:
          return closure_product(S, {All, A2, All}).contains(a);
        case RegularityKind::CompletelyRegular:
          return closure_product(S, {A2, All, A2}).contains(a);
        case RegularityKind::OrderedIdempotent:
          return S.leq(a, S.product(a, a));
        case RegularityKind::Nilpotent: {
          auto const orbit = power_orbit(S, a);
          auto const pw    = powers(S, a, orbit.span());
          for (std::size_t k = 1; k <= orbit.span(); ++k) {
            if (S.leq(pw[k], zero)) {
              return true;
            }
          }
          return false;
        }
      }
      return false;
    }
  }  // namespace detail

  //! Whether the single element a belongs to the class. Nilpotent throws
  //! NoZero when S has no zero.
  inline bool is_in_class(OrderedSemigroup const& S,
                          element_type            a,
                          RegularityKind          kind) {
    element_type zero = 0;
    if (kind == RegularityKind::Nilpotent) {
      auto z = zero_element(S);
      if (!z) {
        throw Error(ErrorKind::NoZero, "nilpotency needs a zero element");
      }
      zero = *z;
    }
    return detail::is_in_class(S, a, kind, zero);
  }

  //! The set of elements of the given kind. Nilpotent throws NoZero when S
  //! has no zero.
  inline ElementSet element_class(OrderedSemigroup const& S,
                                  RegularityKind          kind) {
    element_type zero = 0;
    if (kind == RegularityKind::Nilpotent) {
      auto z = zero_element(S);
      if (!z) {
        throw Error(ErrorKind::NoZero, "nilpotency needs a zero element");
      }
      zero = *z;
    }
    ElementSet result;
    for (element_type a = 0; a < S.size(); ++a) {
      if (detail::is_in_class(S, a, kind, zero)) {
        result.insert(a);
      }
    }
    return result;
  }

  //! Every element of S is of the given kind, i.e. S is a regular (left
  //! regular, ...) ordered semigroup in its own right.
  inline bool is_everywhere(OrderedSemigroup const& S, RegularityKind kind) {
    return element_class(S, kind) == S.elements();
  }

  //! Completely pi-regular in the form a^m <= a^(m+1) x a^(m+1).
  inline bool is_completely_pi_regular_shifted(OrderedSemigroup const& S) {
    for (element_type a = 0; a < S.size(); ++a) {
      auto const orbit = power_orbit(S, a);
      auto const pw    = powers(S, a, orbit.span() + 1);
      bool       found = false;
      for (std::size_t m = 1; m <= orbit.span() && !found; ++m) {
        auto const P = Factor::element(pw[m + 1]);
        found = closure_product(S, {P, Factor::all(S), P}).contains(pw[m]);
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  //! For every a some power a^m (m within the orbit span) is of the given
  //! kind. Supported kinds: Regular, IntraRegular, CompletelyRegular; any
  //! other throws UnsupportedKind.
  //!
  //! For CompletelyRegular the shifted form a^m <= a^(m+1) x a^(m+1) is
  //! evaluated too; the two must agree.
  inline bool pi_property(OrderedSemigroup const& S, RegularityKind kind) {
    if (kind != RegularityKind::Regular && kind != RegularityKind::IntraRegular
        && kind != RegularityKind::CompletelyRegular) {
      throw Error(ErrorKind::UnsupportedKind,
                  std::string("no pi-variant for ") + to_string(kind));
    }
    ElementSet const cls    = element_class(S, kind);
    bool             result = true;
    for (element_type a = 0; a < S.size() && result; ++a) {
      auto const orbit = power_orbit(S, a);
      auto const pw    = powers(S, a, orbit.span());
      bool       found = false;
      for (std::size_t m = 1; m <= orbit.span() && !found; ++m) {
        found = cls.contains(pw[m]);
      }
      result = found;
    }
    if (kind == RegularityKind::CompletelyRegular
        && result != is_completely_pi_regular_shifted(S)) {
      throw std::logic_error(
          "completely pi-regular: the two equivalent forms disagree");
    }
    return result;
  }

  //! Outcome of the two regular-element properties: every regular a has a
  //! regular x with a <= axa, and every right regular a has a^k in
  //! (a^(k+n) S] for all k, n.
  struct PropertyReport {
    bool        passed = true;
    std::string violation;
  };

  inline PropertyReport check_regular_element_properties(
      OrderedSemigroup const& S) {
    ElementSet const reg  = element_class(S, RegularityKind::Regular);
    ElementSet const rreg = element_class(S, RegularityKind::RightRegular);
    for (auto a : reg) {
      bool found = false;
      for (auto x : reg) {
        if (S.leq(a, S.product(S.product(a, x), a))) {
          found = true;
          break;
        }
      }
      if (!found) {
        return {false,
                "regular element " + std::to_string(a)
                    + " has no regular x with a <= axa"};
      }
    }
    for (auto a : rreg) {
      auto const   orbit = power_orbit(S, a);
      std::size_t  bound = orbit.span();
      auto const   pw    = powers(S, a, 2 * bound);
      for (std::size_t k = 1; k <= bound; ++k) {
        for (std::size_t n = 1; n <= bound; ++n) {
          auto const rhs = closure_product(
              S, {Factor::element(pw[k + n]), Factor::all(S)});
          if (!rhs.contains(pw[k])) {
            return {false,
                    "right regular element " + std::to_string(a)
                        + ": a^" + std::to_string(k) + " not in (a^"
                        + std::to_string(k + n) + "S]"};
          }
        }
      }
    }
    return {};
  }

}  // namespace osg

#endif  // OSG_ELEMENT_CLASSES_HPP_
