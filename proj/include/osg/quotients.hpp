//
// osg - finite ordered semigroups
//
// Zero elements, nil ordered semigroups, Rees factor ordered semigroups
// and nil extensions.

#ifndef OSG_QUOTIENTS_HPP_
#define OSG_QUOTIENTS_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "element_classes.hpp"    // for zero_element, element_class
#include "element_set.hpp"        // for ElementSet
#include "ideals.hpp"             // for is_ideal
#include "ordered_semigroup.hpp"  // for OrderedSemigroup

namespace osg {

  //! A zero exists and every element is nilpotent.
  inline bool is_nil(OrderedSemigroup const& S) {
    if (!zero_element(S)) {
      return false;
    }
    return element_class(S, RegularityKind::Nilpotent) == S.elements();
  }

  //! S/I: the elements of S outside I keep their relative order and come
  //! first; the collapsed ideal is the last element, `zero`.
  struct ReesQuotient {
    OrderedSemigroup quotient;
    element_type     zero;
    //! project[a] is the image of a in the quotient.
    std::vector<element_type> project;
  };

  namespace detail {
    inline void require_ideal(OrderedSemigroup const& S,
                              ElementSet              I,
                              char const*             who) {
      if (!is_ideal(S, I, Sidedness::TwoSided)) {
        throw Error(ErrorKind::NotAnIdeal,
                    std::string(who) + ": " + to_string(I)
                        + " is not a two-sided ideal");
      }
    }
  }  // namespace detail

  //! The Rees factor ordered semigroup: products landing in I become the
  //! zero, the order is the original one off I plus the zero below
  //! everything. The result is validated on construction.
  //!
  //! Throws NotAnIdeal if I is not a two-sided ideal.
  inline ReesQuotient rees_quotient(OrderedSemigroup const& S, ElementSet I) {
    detail::require_ideal(S, I, "rees_quotient");
    std::size_t const         m    = S.size() - I.size() + 1;
    element_type const        zero = m - 1;
    std::vector<element_type> project(S.size(), zero);
    std::vector<element_type> outside;
    for (element_type a = 0; a < S.size(); ++a) {
      if (!I.contains(a)) {
        project[a] = outside.size();
        outside.push_back(a);
      }
    }
    table_type    mul(m, std::vector<element_type>(m, zero));
    relation_type leq(m, std::vector<bool>(m, false));
    for (element_type x = 0; x < outside.size(); ++x) {
      for (element_type y = 0; y < outside.size(); ++y) {
        mul[x][y] = project[S.product(outside[x], outside[y])];
        leq[x][y] = S.leq(outside[x], outside[y]);
      }
    }
    for (element_type x = 0; x < m; ++x) {
      leq[zero][x] = true;
    }
    return {OrderedSemigroup::validate(mul, leq), zero, std::move(project)};
  }

  //! S/I is a nil ordered semigroup. Throws NotAnIdeal.
  inline bool is_nil_extension(OrderedSemigroup const& S, ElementSet I) {
    return is_nil(rees_quotient(S, I).quotient);
  }

  namespace detail {
    inline bool every_element_has_power_in(OrderedSemigroup const& S,
                                           ElementSet              I) {
      for (element_type a = 0; a < S.size(); ++a) {
        auto const orbit = power_orbit(S, a);
        auto const pw    = powers(S, a, orbit.span());
        bool       found = false;
        for (std::size_t m = 1; m <= orbit.span() && !found; ++m) {
          found = I.contains(pw[m]);
        }
        if (!found) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  //! Every element has a power inside I. Throws NotAnIdeal.
  inline bool is_nil_extension_powers(OrderedSemigroup const& S,
                                      ElementSet              I) {
    detail::require_ideal(S, I, "is_nil_extension_powers");
    return detail::every_element_has_power_in(S, I);
  }

  //! Whether V is an ideal extension of the ideal `inner` by Q, i.e.
  //! V/inner is isomorphic to Q. When `base` is given, the ordered
  //! subsemigroup on `inner` must also be isomorphic to it.
  inline bool is_ideal_extension(OrderedSemigroup const&                V,
                                 ElementSet                             inner,
                                 OrderedSemigroup const&                Q,
                                 std::optional<OrderedSemigroup> const& base
                                 = std::nullopt) {
    if (!is_ideal(V, inner, Sidedness::TwoSided)) {
      return false;
    }
    if (base
        && !are_isomorphic(induced_subsemigroup(V, inner).structure, *base)) {
      return false;
    }
    return are_isomorphic(rees_quotient(V, inner).quotient, Q).has_value();
  }

}  // namespace osg

#endif  // OSG_QUOTIENTS_HPP_
