//
// osg - finite ordered semigroups
//
// Green's relations, the divisibility relations and Archimedean
// predicates.

#ifndef OSG_GREEN_HPP_
#define OSG_GREEN_HPP_

#include <algorithm>  // for find
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <vector>     // for vector

#include "element_set.hpp"        // for ElementSet
#include "ideals.hpp"             // for principal_ideal, closure_product
#include "ordered_semigroup.hpp"  // for OrderedSemigroup, power_orbit

namespace osg {

  //! An equivalence relation on {0, ..., n - 1}. Classes are numbered in
  //! order of their least element.
  class Partition {
   public:
    Partition() = default;

    //! From a class assignment; ids are renumbered by least element, so
    //! any labelling of the same relation yields the same Partition.
    explicit Partition(std::vector<std::size_t> const& labels) {
      std::vector<std::size_t> renumber(labels.size(), labels.size());
      _class_of.resize(labels.size());
      for (element_type a = 0; a < labels.size(); ++a) {
        if (labels[a] >= renumber.size()) {
          throw std::invalid_argument("Partition: label out of range");
        }
        if (renumber[labels[a]] == labels.size()) {
          renumber[labels[a]] = _classes.size();
          _classes.emplace_back();
        }
        _class_of[a] = renumber[labels[a]];
        _classes[_class_of[a]].insert(a);
      }
    }

    static Partition identity(std::size_t n) {
      std::vector<std::size_t> labels(n);
      for (std::size_t a = 0; a < n; ++a) {
        labels[a] = a;
      }
      return Partition(labels);
    }

    static Partition universal(std::size_t n) {
      return Partition(std::vector<std::size_t>(n, 0));
    }

    std::size_t size() const noexcept {
      return _class_of.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _classes.size();
    }

    std::size_t class_of(element_type a) const {
      return _class_of[a];
    }

    ElementSet const& operator[](std::size_t id) const {
      return _classes[id];
    }

    ElementSet const& class_containing(element_type a) const {
      return _classes[_class_of[a]];
    }

    std::vector<ElementSet> const& classes() const noexcept {
      return _classes;
    }

    bool related(element_type a, element_type b) const {
      return _class_of[a] == _class_of[b];
    }

    //! Whether every class of this partition lies inside a class of other.
    bool refines(Partition const& other) const {
      for (element_type a = 0; a < size(); ++a) {
        for (element_type b = a + 1; b < size(); ++b) {
          if (related(a, b) && !other.related(a, b)) {
            return false;
          }
        }
      }
      return true;
    }

    //! The intersection of the two equivalence relations.
    Partition meet(Partition const& other) const {
      std::vector<std::size_t> labels(size());
      for (element_type a = 0; a < size(); ++a) {
        labels[a] = _class_of[a] * other.number_of_classes()
                    + other._class_of[a];
      }
      // labels may exceed size(); compress them first.
      std::vector<std::size_t> seen;
      for (auto& l : labels) {
        auto it = std::find(seen.begin(), seen.end(), l);
        if (it == seen.end()) {
          seen.push_back(l);
          l = seen.size() - 1;
        } else {
          l = static_cast<std::size_t>(it - seen.begin());
        }
      }
      return Partition(labels);
    }

    friend bool operator==(Partition const& x, Partition const& y) {
      return x._class_of == y._class_of;
    }

   private:
    std::vector<std::size_t> _class_of;
    std::vector<ElementSet>  _classes;
  };

  inline std::string to_string(Partition const& p) {
    return to_string(p.classes());
  }

  enum class GreenKind { L, R, J, H };

  //! a ~ b iff the corresponding principal ideals coincide; H = L meet R.
  inline Partition green_partition(OrderedSemigroup const& S, GreenKind kind) {
    if (kind == GreenKind::H) {
      return green_partition(S, GreenKind::L)
          .meet(green_partition(S, GreenKind::R));
    }
    Sidedness const side = kind == GreenKind::L   ? Sidedness::Left
                           : kind == GreenKind::R ? Sidedness::Right
                                                  : Sidedness::TwoSided;
    std::vector<ElementSet>  ideal(S.size());
    std::vector<std::size_t> labels(S.size());
    for (element_type a = 0; a < S.size(); ++a) {
      ideal[a]  = principal_ideal(S, a, side);
      labels[a] = a;
      for (element_type b = 0; b < a; ++b) {
        if (ideal[b] == ideal[a]) {
          labels[a] = labels[b];
          break;
        }
      }
    }
    return Partition(labels);
  }

  //! Which multipliers a divisibility relation may use.
  enum class DivisorUniverse {
    WithIdentity,  // x, y in S^1
    Strict         // x, y in S
  };

  //! a | b: b <= x a y for some x, y (in S^1 by default).
  inline bool divides(OrderedSemigroup const& S,
                      element_type            a,
                      element_type            b,
                      DivisorUniverse universe = DivisorUniverse::WithIdentity) {
    auto const outer = universe == DivisorUniverse::WithIdentity
                           ? Factor::all_or_none(S)
                           : Factor::all(S);
    return closure_product(S, {outer, Factor::element(a), outer}).contains(b);
  }

  //! Left: b in (S^1 a]; Right: b in (a S^1].
  inline bool divides_sided(OrderedSemigroup const& S,
                            element_type            a,
                            element_type            b,
                            Side                    side) {
    auto const A = Factor::element(a);
    auto const X = Factor::all_or_none(S);
    return side == Side::Left ? closure_product(S, {X, A}).contains(b)
                              : closure_product(S, {A, X}).contains(b);
  }

  //! For all a, b some power b^m lies in (SaS] (TwoSided), (Sa] (Left) or
  //! (aS] (Right). Closures are taken inside S.
  inline bool is_archimedean(OrderedSemigroup const& S, Sidedness side) {
    auto const All = Factor::all(S);
    for (element_type a = 0; a < S.size(); ++a) {
      auto const A      = Factor::element(a);
      ElementSet target = side == Sidedness::Left
                              ? closure_product(S, {All, A})
                          : side == Sidedness::Right
                              ? closure_product(S, {A, All})
                              : closure_product(S, {All, A, All});
      for (element_type b = 0; b < S.size(); ++b) {
        auto const orbit = power_orbit(S, b);
        auto const pw    = powers(S, b, orbit.span());
        bool       found = false;
        for (std::size_t m = 1; m <= orbit.span() && !found; ++m) {
          found = target.contains(pw[m]);
        }
        if (!found) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace osg

#endif  // OSG_GREEN_HPP_
