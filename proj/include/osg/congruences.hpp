//
// osg - finite ordered semigroups
//
// Congruences, (complete) semilattice congruences and the search for a
// complete semilattice decomposition whose classes are of a given type.

#ifndef OSG_CONGRUENCES_HPP_
#define OSG_CONGRUENCES_HPP_

#include <algorithm>   // for max
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "element_classes.hpp"    // for is_everywhere
#include "element_set.hpp"        // for ElementSet
#include "green.hpp"              // for Partition, is_archimedean
#include "ideals.hpp"             // for all_ideals, is_simple
#include "ordered_semigroup.hpp"  // for OrderedSemigroup
#include "quotients.hpp"          // for is_nil_extension_powers

namespace osg {

  //! Calls f(labels) for every set partition of {0, ..., n - 1}, given as a
  //! restricted growth string, in lexicographic order.
  template <typename Func>
  void for_each_partition(std::size_t n, Func&& f) {
    std::vector<std::size_t> rgs(n, 0);
    std::vector<std::size_t> max_before(n, 0);  // max of rgs[0..i)
    while (true) {
      f(static_cast<std::vector<std::size_t> const&>(rgs));
      std::size_t i     = n;
      bool        found = false;
      while (i-- > 1) {
        if (rgs[i] <= max_before[i]) {
          found = true;
          break;
        }
      }
      if (!found) {
        return;
      }
      ++rgs[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs[j]        = 0;
        max_before[j] = std::max(max_before[j - 1], rgs[j - 1]);
      }
    }
  }

  //! a ~ b implies ac ~ bc and ca ~ cb.
  inline bool is_congruence(OrderedSemigroup const& S, Partition const& p) {
    for (element_type a = 0; a < S.size(); ++a) {
      for (element_type b = a + 1; b < S.size(); ++b) {
        if (!p.related(a, b)) {
          continue;
        }
        for (element_type c = 0; c < S.size(); ++c) {
          if (!p.related(S.product(a, c), S.product(b, c))
              || !p.related(S.product(c, a), S.product(c, b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace detail {
    inline bool semilattice_conditions(OrderedSemigroup const& S,
                                       Partition const&        p) {
      for (element_type a = 0; a < S.size(); ++a) {
        if (!p.related(a, S.product(a, a))) {
          return false;
        }
        for (element_type b = a + 1; b < S.size(); ++b) {
          if (!p.related(S.product(a, b), S.product(b, a))) {
            return false;
          }
        }
      }
      return true;
    }

    inline bool completeness_conditions(OrderedSemigroup const& S,
                                        Partition const&        p) {
      for (element_type a = 0; a < S.size(); ++a) {
        for (auto b : S.up(a)) {
          if (!p.related(a, S.product(a, b))) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  //! A congruence with its semilattice and completeness flags evaluated.
  struct Congruence {
    Partition partition;
    bool      is_semilattice = false;
    bool      is_complete    = false;

    bool is_complete_semilattice() const noexcept {
      return is_semilattice && is_complete;
    }
  };

  //! Throws NotACongruence if p is not a congruence.
  inline Congruence make_congruence(OrderedSemigroup const& S, Partition p) {
    if (!is_congruence(S, p)) {
      throw Error(ErrorKind::NotACongruence,
                  to_string(p) + " is not a congruence");
    }
    Congruence result{std::move(p)};
    result.is_semilattice
        = detail::semilattice_conditions(S, result.partition);
    result.is_complete = result.is_semilattice
                         && detail::completeness_conditions(S, result.partition);
    return result;
  }

  //! Every congruence of S, in restricted-growth-string order (so the
  //! universal partition comes first and the identity last).
  inline std::vector<Congruence> enumerate_congruences(
      OrderedSemigroup const& S) {
    std::vector<Congruence> result;
    for_each_partition(S.size(), [&](std::vector<std::size_t> const& labels) {
      Partition p(labels);
      if (is_congruence(S, p)) {
        result.push_back(make_congruence(S, std::move(p)));
      }
    });
    return result;
  }

  //! a ~ a^2 and ab ~ ba for all a, b. Throws NotACongruence.
  inline bool is_semilattice_congruence(OrderedSemigroup const& S,
                                        Partition const&        p) {
    if (!is_congruence(S, p)) {
      throw Error(ErrorKind::NotACongruence,
                  to_string(p) + " is not a congruence");
    }
    return detail::semilattice_conditions(S, p);
  }

  //! a <= b implies a ~ ab. Throws NotSemilattice unless p is a
  //! semilattice congruence.
  inline bool is_complete_congruence(OrderedSemigroup const& S,
                                     Partition const&        p) {
    if (!is_semilattice_congruence(S, p)) {
      throw Error(ErrorKind::NotSemilattice,
                  to_string(p) + " is not a semilattice congruence");
    }
    return detail::completeness_conditions(S, p);
  }

  //! All complete semilattice congruences, in enumeration order.
  inline std::vector<Congruence> complete_semilattice_congruences(
      OrderedSemigroup const& S) {
    std::vector<Congruence> result;
    for (auto& c : enumerate_congruences(S)) {
      if (c.is_complete_semilattice()) {
        result.push_back(std::move(c));
      }
    }
    return result;
  }

  //! The intersection of all complete semilattice congruences; checked to
  //! be one itself.
  inline Congruence finest_complete_semilattice_congruence(
      OrderedSemigroup const& S) {
    Partition finest = Partition::universal(S.size());
    for (auto const& c : complete_semilattice_congruences(S)) {
      finest = finest.meet(c.partition);
    }
    Congruence result = make_congruence(S, finest);
    if (!result.is_complete_semilattice()) {
      throw std::logic_error(
          "intersection of complete semilattice congruences is not one");
    }
    return result;
  }

  //! The semilattice Y of classes of a complete semilattice congruence, with
  //! the verdict on the family conditions: the classes are disjoint and
  //! cover S, S_a S_b lies in S_ab, and S_b meeting (S_a] forces b <= a in Y.
  struct FamilyCheck {
    bool             holds;
    OrderedSemigroup index_semilattice;
    std::string      violation;
  };

  //! Throws NotCompleteSemilattice unless p is a complete semilattice
  //! congruence.
  inline FamilyCheck check_family_conditions(OrderedSemigroup const& S,
                                             Partition const&        p) {
    if (!is_congruence(S, p) || !detail::semilattice_conditions(S, p)
        || !detail::completeness_conditions(S, p)) {
      throw Error(ErrorKind::NotCompleteSemilattice,
                  to_string(p) + " is not a complete semilattice congruence");
    }
    std::size_t const k = p.number_of_classes();
    table_type        mul(k, std::vector<element_type>(k));
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        mul[x][y] = p.class_of(S.product(p[x].min(), p[y].min()));
      }
    }
    // alpha <= beta iff alpha = alpha beta
    relation_type leq(k, std::vector<bool>(k));
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        leq[x][y] = mul[x][y] == x;
      }
    }
    FamilyCheck result{true, OrderedSemigroup::validate(mul, leq), {}};

    ElementSet covered;
    for (std::size_t x = 0; x < k; ++x) {
      if (covered.intersects(p[x])) {
        return {false, result.index_semilattice, "classes overlap"};
      }
      covered |= p[x];
    }
    if (covered != S.elements()) {
      return {false, result.index_semilattice, "classes do not cover S"};
    }
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        if (!product(S, p[x], p[y]).is_subset_of(p[mul[x][y]])) {
          return {false,
                  result.index_semilattice,
                  "S_" + std::to_string(x) + " S_" + std::to_string(y)
                      + " is not inside S_" + std::to_string(mul[x][y])};
        }
        if (p[y].intersects(downward_closure(S, p[x])) && !leq[y][x]) {
          return {false,
                  result.index_semilattice,
                  "S_" + std::to_string(y) + " meets (S_" + std::to_string(x)
                      + "] but is not below it"};
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Class types
  ////////////////////////////////////////////////////////////////////////

  //! A property of an ordered semigroup, evaluated intrinsically (all
  //! closures taken inside the structure itself).
  struct ClassType {
    enum class Kind {
      Simple,
      LeftSimple,
      Regular,
      RightRegular,
      CompletelyRegular,
      Archimedean,
      LeftArchimedean,
      LeftGroupLike,
      LeftClifford,
      //! Has a two-sided ideal K satisfying every `inner` type such that
      //! every element has a power in K.
      NilExtensionOf
    };

    Kind                   kind;
    std::vector<ClassType> inner = {};

    static ClassType nil_extension_of(std::vector<ClassType> inner) {
      return {Kind::NilExtensionOf, std::move(inner)};
    }
  };

  inline std::string to_string(ClassType const& type) {
    using K = ClassType::Kind;
    switch (type.kind) {
      case K::Simple:
        return "Simple";
      case K::LeftSimple:
        return "LeftSimple";
      case K::Regular:
        return "Regular";
      case K::RightRegular:
        return "RightRegular";
      case K::CompletelyRegular:
        return "CompletelyRegular";
      case K::Archimedean:
        return "Archimedean";
      case K::LeftArchimedean:
        return "LeftArchimedean";
      case K::LeftGroupLike:
        return "LeftGroupLike";
      case K::LeftClifford:
        return "LeftClifford";
      case K::NilExtensionOf: {
        std::string out = "NilExtensionOf(";
        for (std::size_t i = 0; i < type.inner.size(); ++i) {
          out += (i == 0 ? "" : ", ") + to_string(type.inner[i]);
        }
        return out + ")";
      }
    }
    return "";
  }

  //! Readings of class types whose definition admits more than one form.
  struct ClassTypeOptions {
    //! Left Clifford = regular and ab in (Sa] for all a, b; false drops the
    //! regularity requirement.
    bool left_clifford_regular = true;
    //! Left group like = a <= xb solvable (false), or additionally regular
    //! (true).
    bool left_group_like_regular = false;
  };

  //! Left Clifford: (optionally regular and) ab in (Sa] for all a, b.
  inline bool is_left_clifford(OrderedSemigroup const& T,
                               bool                    require_regular = true) {
    if (require_regular && !is_everywhere(T, RegularityKind::Regular)) {
      return false;
    }
    for (element_type a = 0; a < T.size(); ++a) {
      ElementSet const Ta
          = downward_closure(T, product(T, T.elements(), ElementSet{a}));
      for (element_type b = 0; b < T.size(); ++b) {
        if (!Ta.contains(T.product(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::optional<ElementSet> find_nil_extension_kernel(
      OrderedSemigroup const&                C,
      std::vector<ClassType> const&          inner,
      ClassTypeOptions const&                options,
      std::function<bool(ElementSet)> const& accept = {});

  inline bool holds(ClassType const&        type,
                    OrderedSemigroup const& T,
                    ClassTypeOptions const& options = {}) {
    using K = ClassType::Kind;
    switch (type.kind) {
      case K::Simple:
        return is_simple(T, Sidedness::TwoSided);
      case K::LeftSimple:
        return is_simple(T, Sidedness::Left);
      case K::Regular:
        return is_everywhere(T, RegularityKind::Regular);
      case K::RightRegular:
        return is_everywhere(T, RegularityKind::RightRegular);
      case K::CompletelyRegular:
        return is_everywhere(T, RegularityKind::CompletelyRegular);
      case K::Archimedean:
        return is_archimedean(T, Sidedness::TwoSided);
      case K::LeftArchimedean:
        return is_archimedean(T, Sidedness::Left);
      case K::LeftGroupLike:
        return is_group_like(T, Sidedness::Left)
               && (!options.left_group_like_regular
                   || is_everywhere(T, RegularityKind::Regular));
      case K::LeftClifford:
        return is_left_clifford(T, options.left_clifford_regular);
      case K::NilExtensionOf:
        return find_nil_extension_kernel(T, type.inner, options).has_value();
    }
    return false;
  }

  //! The first two-sided ideal K of C (ascending) whose induced ordered
  //! semigroup satisfies every inner type, every element of C having a
  //! power in K, and for which `accept(K)` holds when given.
  inline std::optional<ElementSet> find_nil_extension_kernel(
      OrderedSemigroup const&                C,
      std::vector<ClassType> const&          inner,
      ClassTypeOptions const&                options,
      std::function<bool(ElementSet)> const& accept) {
    for (auto const& K : all_ideals(C, Sidedness::TwoSided)) {
      if (!detail::every_element_has_power_in(C, K)) {
        continue;
      }
      auto const sub = induced_subsemigroup(C, K).structure;
      bool       ok  = true;
      for (auto const& t : inner) {
        if (!holds(t, sub, options)) {
          ok = false;
          break;
        }
      }
      if (ok && (!accept || accept(K))) {
        return K;
      }
    }
    return std::nullopt;
  }

  //! A complete semilattice congruence whose classes are of the requested
  //! type. For nil-extension types, `kernels[i]` is the ideal found inside
  //! class i (in elements of S); otherwise it is the class itself.
  struct Decomposition {
    Congruence              congruence;
    std::vector<ElementSet> kernels;
  };

  //! Optional extra requirement on a class and its chosen kernel, both given
  //! as sets of elements of S.
  using KernelFilter = std::function<bool(ElementSet cls, ElementSet kernel)>;

  namespace detail {
    inline std::optional<std::vector<ElementSet>>
    classes_of_type(OrderedSemigroup const& S,
                    Partition const&        p,
                    ClassType const&        type,
                    ClassTypeOptions const& options,
                    KernelFilter const&     extra) {
      std::vector<ElementSet> kernels;
      for (auto const& cls : p.classes()) {
        auto const sub = induced_subsemigroup(S, cls);
        if (type.kind == ClassType::Kind::NilExtensionOf) {
          std::function<bool(ElementSet)> accept;
          if (extra) {
            accept = [&](ElementSet K) { return extra(cls, sub.lift(K)); };
          }
          auto K = find_nil_extension_kernel(
              sub.structure, type.inner, options, accept);
          if (!K) {
            return std::nullopt;
          }
          kernels.push_back(sub.lift(*K));
        } else {
          if (!holds(type, sub.structure, options)
              || (extra && !extra(cls, cls))) {
            return std::nullopt;
          }
          kernels.push_back(cls);
        }
      }
      return kernels;
    }
  }  // namespace detail

  //! The complete semilattice congruences of S in search order: the finest
  //! one first, then the others in enumeration order.
  inline std::vector<Congruence>
  decomposition_candidates(OrderedSemigroup const& S) {
    auto const              finest = finest_complete_semilattice_congruence(S);
    std::vector<Congruence> result{finest};
    for (auto& c : complete_semilattice_congruences(S)) {
      if (!(c.partition == finest.partition)) {
        result.push_back(std::move(c));
      }
    }
    return result;
  }

  //! The first candidate congruence whose classes (as induced ordered
  //! subsemigroups) all satisfy `type` and the optional `extra` filter.
  inline std::optional<Decomposition>
  decomposition_check(OrderedSemigroup const&        S,
                      std::vector<Congruence> const& candidates,
                      ClassType const&               type,
                      ClassTypeOptions const&        options = {},
                      KernelFilter const&            extra   = {}) {
    for (auto const& c : candidates) {
      auto kernels
          = detail::classes_of_type(S, c.partition, type, options, extra);
      if (kernels) {
        return Decomposition{c, std::move(*kernels)};
      }
    }
    return std::nullopt;
  }

  //! Searches the complete semilattice congruences of S, finest first, for
  //! one whose classes all satisfy `type` and `extra`.
  inline std::optional<Decomposition>
  decomposition_check(OrderedSemigroup const& S,
                      ClassType const&        type,
                      ClassTypeOptions const& options = {},
                      KernelFilter const&     extra   = {}) {
    return decomposition_check(
        S, decomposition_candidates(S), type, options, extra);
  }

}  // namespace osg

#endif  // OSG_CONGRUENCES_HPP_
