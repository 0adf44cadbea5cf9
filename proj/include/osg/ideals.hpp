//
// osg - finite ordered semigroups
//
// Downward closures, sided ideals, the kernel, simplicity and the
// group-like predicates.

#ifndef OSG_IDEALS_HPP_
#define OSG_IDEALS_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "element_set.hpp"       // for ElementSet
#include "ordered_semigroup.hpp"  // for OrderedSemigroup

namespace osg {

  enum class Sidedness { Left, Right, TwoSided };

  inline char const* to_string(Sidedness side) noexcept {
    switch (side) {
      case Sidedness::Left:
        return "left";
      case Sidedness::Right:
        return "right";
      case Sidedness::TwoSided:
        return "two-sided";
    }
    return "";
  }

  //! (H] = {t : t <= h for some h in H}
  inline ElementSet downward_closure(OrderedSemigroup const& S, ElementSet H) {
    ElementSet result;
    for (auto h : H) {
      result |= S.down(h);
    }
    return result;
  }

  //! AB = {ab : a in A, b in B}
  inline ElementSet product(OrderedSemigroup const& S,
                            ElementSet              A,
                            ElementSet              B) {
    ElementSet result;
    for (auto a : A) {
      for (auto b : B) {
        result.insert(S.product(a, b));
      }
    }
    return result;
  }

  //! One factor of a product expression. An optional factor may also be
  //! skipped, which models factors ranging over S^1.
  struct Factor {
    ElementSet set;
    bool       optional = false;

    static Factor element(element_type a) {
      return {ElementSet::singleton(a), false};
    }

    static Factor all(OrderedSemigroup const& S) {
      return {S.elements(), false};
    }

    //! S^1: any element, or nothing.
    static Factor all_or_none(OrderedSemigroup const& S) {
      return {S.elements(), true};
    }
  };

  //! (X_1 X_2 ... X_k] for the given factors.
  inline ElementSet closure_product(OrderedSemigroup const&    S,
                                    std::vector<Factor> const& factors) {
    if (factors.empty()) {
      throw std::invalid_argument("closure_product: no factors");
    }
    ElementSet products;
    bool       empty_product = true;
    for (auto const& f : factors) {
      ElementSet next = product(S, products, f.set);
      if (empty_product) {
        next |= f.set;
      }
      if (f.optional) {
        next |= products;
      }
      products      = next;
      empty_product = empty_product && f.optional;
    }
    return downward_closure(S, products);
  }

  //! L(a) = (a u Sa], R(a) = (a u aS], I(a) = (a u Sa u aS u SaS].
  inline ElementSet principal_ideal(OrderedSemigroup const& S,
                                    element_type            a,
                                    Sidedness               side) {
    ElementSet const A  = ElementSet::singleton(a);
    ElementSet const SS = S.elements();
    ElementSet       generated = A;
    if (side != Sidedness::Right) {
      generated |= product(S, SS, A);
    }
    if (side != Sidedness::Left) {
      generated |= product(S, A, SS);
    }
    if (side == Sidedness::TwoSided) {
      generated |= product(S, product(S, SS, A), SS);
    }
    return downward_closure(S, generated);
  }

  //! Whether the nonempty set A absorbs multiplication on the given side(s)
  //! and is downward closed. The empty set is never an ideal.
  inline bool is_ideal(OrderedSemigroup const& S,
                       ElementSet              A,
                       Sidedness               side) {
    if (A.empty()) {
      return false;
    }
    if (side != Sidedness::Right
        && !product(S, S.elements(), A).is_subset_of(A)) {
      return false;
    }
    if (side != Sidedness::Left
        && !product(S, A, S.elements()).is_subset_of(A)) {
      return false;
    }
    return downward_closure(S, A) == A;
  }

  //! Every ideal of the given sidedness, ascending by bit mask.
  inline std::vector<ElementSet> all_ideals(OrderedSemigroup const& S,
                                            Sidedness               side) {
    std::vector<ElementSet> result;
    auto const              top = S.elements().bits();
    for (ElementSet::bits_type bits = 1; bits <= top; ++bits) {
      if (is_ideal(S, ElementSet::from_bits(bits), side)) {
        result.push_back(ElementSet::from_bits(bits));
      }
    }
    return result;
  }

  //! Intersection of all two-sided ideals, if nonempty.
  inline std::optional<ElementSet> kernel(OrderedSemigroup const& S) {
    ElementSet result = S.elements();
    for (auto const& I : all_ideals(S, Sidedness::TwoSided)) {
      result &= I;
    }
    if (result.empty()) {
      return std::nullopt;
    }
    return result;
  }

  //! No proper ideals of the given sidedness. Decided through principal
  //! ideals: every ideal contains the principal ideal of each member.
  inline bool is_simple(OrderedSemigroup const& S, Sidedness side) {
    for (element_type a = 0; a < S.size(); ++a) {
      if (principal_ideal(S, a, side) != S.elements()) {
        return false;
      }
    }
    return true;
  }

  //! Left: a <= xb is solvable for all a, b; Right: a <= by is; TwoSided:
  //! both are.
  inline bool is_group_like(OrderedSemigroup const& S, Sidedness side) {
    ElementSet const SS = S.elements();
    for (element_type b = 0; b < S.size(); ++b) {
      auto const B = ElementSet::singleton(b);
      if (side != Sidedness::Right
          && downward_closure(S, product(S, SS, B)) != SS) {
        return false;
      }
      if (side != Sidedness::Left
          && downward_closure(S, product(S, B, SS)) != SS) {
        return false;
      }
    }
    return true;
  }

}  // namespace osg

#endif  // OSG_IDEALS_HPP_
