//
// osg - finite ordered semigroups
//
// Evaluators for the five characterisation theorems of nil extensions.
// Each theorem equates a structural description ("S is a nil extension of
// ..." or "S is a complete semilattice of ...") with element-wise
// conditions. Every condition is evaluated independently on a finite
// ordered semigroup and the report says whether they all agree.
//
// Existential exponents are searched up to the span of the relevant power
// orbit, beyond which the powers repeat.

#ifndef OSG_THEOREMS_HPP_
#define OSG_THEOREMS_HPP_

#include <numeric>   // for lcm
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "congruences.hpp"        // for decomposition_check, ClassType
#include "element_classes.hpp"    // for element_class, pi_property
#include "element_set.hpp"        // for ElementSet
#include "green.hpp"              // for green_partition, divides
#include "ideals.hpp"             // for closure_product
#include "ordered_semigroup.hpp"  // for OrderedSemigroup
#include "quotients.hpp"          // for is_nil_extension_powers

namespace osg {

  //! The characterisations, named by their structural side. The labels
  //! returned by `theorem_label` are the identifiers used on the command
  //! line and in reports.
  enum class TheoremId {
    NilExtensionLeftSimpleRightRegular,
    NilExtensionSimpleRegular,
    NilExtensionCompletelyRegular,
    SemilatticeNilExtensionSimpleRegular,
    SemilatticeNilExtensionLeftGroupLike
  };

  inline std::vector<TheoremId> all_theorems() {
    return {TheoremId::NilExtensionLeftSimpleRightRegular,
            TheoremId::NilExtensionSimpleRegular,
            TheoremId::NilExtensionCompletelyRegular,
            TheoremId::SemilatticeNilExtensionSimpleRegular,
            TheoremId::SemilatticeNilExtensionLeftGroupLike};
  }

  inline char const* theorem_label(TheoremId id) noexcept {
    switch (id) {
      case TheoremId::NilExtensionLeftSimpleRightRegular:
        return "3.1";
      case TheoremId::NilExtensionSimpleRegular:
        return "3.2";
      case TheoremId::NilExtensionCompletelyRegular:
        return "3.3";
      case TheoremId::SemilatticeNilExtensionSimpleRegular:
        return "4.1";
      case TheoremId::SemilatticeNilExtensionLeftGroupLike:
        return "4.2";
    }
    return "";
  }

  inline std::optional<TheoremId> parse_theorem_label(std::string const& s) {
    for (auto id : all_theorems()) {
      if (s == theorem_label(id)) {
        return id;
      }
    }
    return std::nullopt;
  }

  //! How "a <= ba and a <= ab both separately imply ..." is read.
  enum class HypothesisReading {
    Conjunctive,  // the two hypotheses together imply the conclusion
    Separate      // each hypothesis alone implies it
  };

  //! Whether "regular subsemigroup" is judged inside the subsemigroup or
  //! by membership of Reg(S).
  enum class RegularityScope { Intrinsic, Ambient };

  //! Alternative readings of conditions whose wording is ambiguous. The
  //! defaults are the primary readings.
  struct Variants {
    //! Hypotheses of the completely regular characterisation.
    HypothesisReading hypotheses = HypothesisReading::Conjunctive;
    //! Multipliers in the divisibility conditions of the simple regular
    //! semilattice characterisation.
    DivisorUniverse divisors = DivisorUniverse::WithIdentity;
    //! Regularity of J-classes containing an intra-regular element.
    RegularityScope j_class_regularity = RegularityScope::Intrinsic;
    //! Readings of the left Clifford and left group like class types.
    ClassTypeOptions class_types;

    friend bool operator==(Variants const& x, Variants const& y) {
      return x.hypotheses == y.hypotheses && x.divisors == y.divisors
             && x.j_class_regularity == y.j_class_regularity
             && x.class_types.left_clifford_regular
                    == y.class_types.left_clifford_regular
             && x.class_types.left_group_like_regular
                    == y.class_types.left_group_like_regular;
    }
  };

  //! One evaluated condition. `witness` names the violating elements when
  //! the condition is false, or the ideal / congruence found when a
  //! structural condition is true.
  struct Condition {
    std::string label;
    bool        value;
    std::string witness;
  };

  struct ConditionReport {
    TheoremId theorem;
    //! The conditions the theorem claims to be equivalent.
    std::vector<Condition> compared;
    //! Sub-verdicts and alternative readings, not part of the comparison.
    std::vector<Condition> details;

    bool equivalent() const {
      for (auto const& c : compared) {
        if (c.value != compared.front().value) {
          return false;
        }
      }
      return true;
    }
  };

  namespace detail {

    inline std::string pair_witness(element_type a, element_type b) {
      return "a=" + std::to_string(a) + " b=" + std::to_string(b);
    }

    // Everything the evaluators of one structure share, computed once.
    class Context {
     public:
      explicit Context(OrderedSemigroup const& S)
          : S(S),
            candidates(decomposition_candidates(S)),
            reg(element_class(S, RegularityKind::Regular)),
            lreg(element_class(S, RegularityKind::LeftRegular)),
            rreg(element_class(S, RegularityKind::RightRegular)),
            intra(element_class(S, RegularityKind::IntraRegular)),
            gr(element_class(S, RegularityKind::CompletelyRegular)),
            idempotents(element_class(S, RegularityKind::OrderedIdempotent)),
            green_l(green_partition(S, GreenKind::L)),
            green_j(green_partition(S, GreenKind::J)) {}

      OrderedSemigroup const& S;
      std::vector<Congruence> candidates;
      ElementSet              reg, lreg, rreg, intra, gr, idempotents;
      Partition               green_l, green_j;

      ElementSet all() const {
        return S.elements();
      }

      Factor at(element_type a) const {
        return Factor::element(a);
      }

      Factor any() const {
        return Factor::all(S);
      }

      bool pi_regular() {
        if (!_pi_regular) {
          _pi_regular = pi_property(S, RegularityKind::Regular);
        }
        return *_pi_regular;
      }

     private:
      std::optional<bool> _pi_regular;
    };

    inline std::string describe(Decomposition const& d) {
      return "rho=" + to_string(d.congruence.partition)
             + " K=" + to_string(d.kernels);
    }

    inline Condition decomposition_condition(Context&            ctx,
                                             std::string         label,
                                             ClassType const&    type,
                                             Variants const&     v,
                                             KernelFilter const& extra = {}) {
      auto d = decomposition_check(
          ctx.S, ctx.candidates, type, v.class_types, extra);
      if (d) {
        return {std::move(label), true, describe(*d)};
      }
      return {std::move(label), false, "no decomposition of type "
                                           + to_string(type)};
    }

    //! Nil extension of an ideal of S satisfying every inner type.
    inline Condition nil_extension_condition(Context&                      ctx,
                                             std::vector<ClassType> const& inner,
                                             Variants const&               v) {
      auto K = find_nil_extension_kernel(ctx.S, inner, v.class_types);
      if (K) {
        return {"structure", true, "K=" + to_string(*K)};
      }
      return {"structure", false, "no suitable ideal"};
    }

    //! Every L-class of S containing a `marked` element of the class equals
    //! the kernel chosen for that class.
    inline KernelFilter l_classes_are_kernels(Context& ctx, ElementSet marked) {
      return [&ctx, marked](ElementSet cls, ElementSet kernel) {
        for (auto a : cls & marked) {
          if (ctx.green_l.class_containing(a) != kernel) {
            return false;
          }
        }
        return true;
      };
    }

    // For all a, b some n <= bound has a^n in (a^2n S b].
    inline Condition power_absorbs_right_factor(Context& ctx) {
      auto const& S = ctx.S;
      for (element_type a = 0; a < S.size(); ++a) {
        auto const span = power_orbit(S, a).span();
        auto const pw   = powers(S, a, 2 * span);
        for (element_type b = 0; b < S.size(); ++b) {
          bool found = false;
          for (std::size_t n = 1; n <= span && !found; ++n) {
            found = closure_product(S, {ctx.at(pw[2 * n]), ctx.any(), ctx.at(b)})
                        .contains(pw[n]);
          }
          if (!found) {
            return {"power", false, pair_witness(a, b)};
          }
        }
      }
      return {"power", true, ""};
    }

    // For all a in S and b in `hypothesis_set`: premise(a, b) implies
    // conclusion(a, b).
    template <typename Premise, typename Conclusion>
    Condition implication(Context const& ctx,
                          std::string    label,
                          ElementSet     hypothesis_set,
                          Premise&&      premise,
                          Conclusion&&   conclusion) {
      for (element_type a = 0; a < ctx.S.size(); ++a) {
        for (auto b : hypothesis_set) {
          if (premise(a, b) && !conclusion(a, b)) {
            return {std::move(label), false, pair_witness(a, b)};
          }
        }
      }
      return {std::move(label), true, ""};
    }

    inline Condition conjunction(std::string                   label,
                                 std::vector<Condition> const& parts) {
      for (auto const& p : parts) {
        if (!p.value) {
          return {std::move(label), false, p.label + ": " + p.witness};
        }
      }
      return {std::move(label), true, ""};
    }

    inline Condition pi_condition(std::string             label,
                                  OrderedSemigroup const& S,
                                  RegularityKind          kind) {
      bool value = pi_property(S, kind);
      return {std::move(label), value, value ? "" : "some element has no power in "
                                                       + std::string(to_string(kind))};
    }

    //! The powers (ab)^n and (ba)^n repeat jointly after this many steps.
    inline std::size_t joint_span(OrderedSemigroup const& S,
                                  element_type            x,
                                  element_type            y) {
      auto const ox = power_orbit(S, x);
      auto const oy = power_orbit(S, y);
      return std::max(ox.index, oy.index) + std::lcm(ox.period, oy.period);
    }

  }  // namespace detail

  //! Nil extension of a left simple, right regular ordered semigroup,
  //! against: (power) for all a, b some a^n in (a^2n S b]; and
  //! (implication) for a in S, b in RReg(S), a <= ba implies a in (a^2 S].
  inline ConditionReport
  evaluate_nil_extension_left_simple_right_regular(OrderedSemigroup const& S,
                                                   Variants const& v = {}) {
    detail::Context ctx(S);
    auto            structure = detail::nil_extension_condition(
        ctx, {{ClassType::Kind::LeftSimple}, {ClassType::Kind::RightRegular}}, v);
    auto power = detail::power_absorbs_right_factor(ctx);
    auto impl  = detail::implication(
        ctx,
        "implication",
        ctx.rreg,
        [&](element_type a, element_type b) {
          return S.leq(a, S.product(b, a));
        },
        [&](element_type a, element_type) {
          return ctx.rreg.contains(a);
        });
    return {TheoremId::NilExtensionLeftSimpleRightRegular,
            {structure, detail::conjunction("conditions", {power, impl})},
            {power, impl}};
  }

  //! Nil extension of a simple, regular ordered semigroup, against
  //! (i) for all a, b some a^n in (a^n S b S a^n]; and for a in S, b in
  //! Reg(S): (ii) a <= ba, (iii) a <= ab imply a in (aSbSa], (iv) a <= b
  //! implies a in Reg(S).
  inline ConditionReport
  evaluate_nil_extension_simple_regular(OrderedSemigroup const& S,
                                        Variants const&         v = {}) {
    detail::Context ctx(S);
    auto            structure = detail::nil_extension_condition(
        ctx, {{ClassType::Kind::Simple}, {ClassType::Kind::Regular}}, v);

    Condition i{"(i)", true, ""};
    for (element_type a = 0; a < S.size() && i.value; ++a) {
      auto const span = power_orbit(S, a).span();
      auto const pw   = powers(S, a, span);
      for (element_type b = 0; b < S.size(); ++b) {
        bool found = false;
        for (std::size_t n = 1; n <= span && !found; ++n) {
          found = closure_product(S,
                                  {ctx.at(pw[n]),
                                   ctx.any(),
                                   ctx.at(b),
                                   ctx.any(),
                                   ctx.at(pw[n])})
                      .contains(pw[n]);
        }
        if (!found) {
          i = {"(i)", false, detail::pair_witness(a, b)};
          break;
        }
      }
    }
    auto in_aSbSa = [&](element_type a, element_type b) {
      return closure_product(
                 S, {ctx.at(a), ctx.any(), ctx.at(b), ctx.any(), ctx.at(a)})
          .contains(a);
    };
    auto ii = detail::implication(
        ctx,
        "(ii)",
        ctx.reg,
        [&](element_type a, element_type b) {
          return S.leq(a, S.product(b, a));
        },
        in_aSbSa);
    auto iii = detail::implication(
        ctx,
        "(iii)",
        ctx.reg,
        [&](element_type a, element_type b) {
          return S.leq(a, S.product(a, b));
        },
        in_aSbSa);
    auto iv = detail::implication(
        ctx,
        "(iv)",
        ctx.reg,
        [&](element_type a, element_type b) { return S.leq(a, b); },
        [&](element_type a, element_type) { return ctx.reg.contains(a); });
    return {TheoremId::NilExtensionSimpleRegular,
            {structure, detail::conjunction("conditions", {i, ii, iii, iv})},
            {i, ii, iii, iv}};
  }

  //! Nil extension of a completely regular ordered semigroup, against:
  //! completely pi-regular, and for a in S, b in Reg(S), the hypotheses
  //! a <= ba and a <= ab imply a in (a^2 S b S a^2]. Both readings of the
  //! hypotheses are reported; `v.hypotheses` selects the compared one.
  inline ConditionReport
  evaluate_nil_extension_completely_regular(OrderedSemigroup const& S,
                                            Variants const&         v = {}) {
    detail::Context ctx(S);
    auto            structure = detail::nil_extension_condition(
        ctx, {{ClassType::Kind::CompletelyRegular}}, v);
    auto pi = detail::pi_condition(
        "completely-pi-regular", S, RegularityKind::CompletelyRegular);
    auto conclusion = [&](element_type a, element_type b) {
      auto const A2 = ctx.at(S.product(a, a));
      return closure_product(S, {A2, ctx.any(), ctx.at(b), ctx.any(), A2})
          .contains(a);
    };
    auto left = [&](element_type a, element_type b) {
      return S.leq(a, S.product(b, a));
    };
    auto right = [&](element_type a, element_type b) {
      return S.leq(a, S.product(a, b));
    };
    auto conjunctive = detail::implication(
        ctx,
        "implication-conjunctive",
        ctx.reg,
        [&](element_type a, element_type b) {
          return left(a, b) && right(a, b);
        },
        conclusion);
    auto separate = detail::conjunction(
        "implication-separate",
        {detail::implication(ctx, "a<=ba", ctx.reg, left, conclusion),
         detail::implication(ctx, "a<=ab", ctx.reg, right, conclusion)});
    auto const& chosen
        = v.hypotheses == HypothesisReading::Conjunctive ? conjunctive : separate;
    return {TheoremId::NilExtensionCompletelyRegular,
            {structure, detail::conjunction("conditions", {pi, chosen})},
            {pi, conjunctive, separate}};
  }

  //! Complete semilattice of nil extensions of simple regular ordered
  //! semigroups; conditions (i)-(viii).
  inline ConditionReport
  evaluate_semilattice_nil_extension_simple_regular(OrderedSemigroup const& S,
                                                    Variants const& v = {}) {
    using K = ClassType::Kind;
    detail::Context ctx(S);
    std::vector<Condition> c;

    c.push_back(detail::decomposition_condition(
        ctx, "(i)", ClassType::nil_extension_of({{K::Simple}, {K::Regular}}), v));

    {
      Condition ii{"(ii)", true, ""};
      for (element_type a = 0; a < S.size() && ii.value; ++a) {
        auto const A2 = ctx.at(S.product(a, a));
        for (element_type b = 0; b < S.size(); ++b) {
          element_type const ab   = S.product(a, b);
          auto const         span = power_orbit(S, ab).span();
          auto const         pw   = powers(S, ab, span);
          bool               found = false;
          for (std::size_t n = 1; n <= span && !found; ++n) {
            found = closure_product(
                        S, {ctx.at(pw[n]), ctx.any(), A2, ctx.any(), ctx.at(pw[n])})
                        .contains(pw[n]);
          }
          if (!found) {
            ii = {"(ii)", false, detail::pair_witness(a, b)};
            break;
          }
        }
      }
      c.push_back(ii);
    }

    auto pi_reg = detail::pi_condition("pi-regular", S, RegularityKind::Regular);

    {
      auto d = detail::decomposition_condition(
          ctx, "archimedean-decomposition", {K::Archimedean}, v);
      c.push_back(detail::conjunction("(iii)", {pi_reg, d}));
      if (c.back().value) {
        c.back().witness = d.witness;
      }
    }

    auto const U = v.divisors;
    {
      Condition iv{"a|e=>a^2|e", true, ""};
      for (element_type a = 0; a < S.size() && iv.value; ++a) {
        for (auto e : ctx.idempotents) {
          if (divides(S, a, e, U) && !divides(S, S.product(a, a), e, U)) {
            iv = {"a|e=>a^2|e", false,
                  "a=" + std::to_string(a) + " e=" + std::to_string(e)};
            break;
          }
        }
      }
      c.push_back(detail::conjunction("(iv)", {pi_reg, iv}));
    }
    {
      Condition v5{"a|e,b|e=>ab|e", true, ""};
      for (element_type a = 0; a < S.size() && v5.value; ++a) {
        for (element_type b = 0; b < S.size() && v5.value; ++b) {
          for (auto e : ctx.idempotents) {
            if (divides(S, a, e, U) && divides(S, b, e, U)
                && !divides(S, S.product(a, b), e, U)) {
              v5 = {"a|e,b|e=>ab|e", false,
                    detail::pair_witness(a, b) + " e=" + std::to_string(e)};
              break;
            }
          }
        }
      }
      c.push_back(detail::conjunction("(v)", {pi_reg, v5}));
    }
    {
      Condition vi{"j-classes-closed", true, ""};
      for (auto const& J : ctx.green_j.classes()) {
        if (J.intersects(ctx.idempotents) && !is_subsemigroup(S, J)) {
          vi = {"j-classes-closed", false, "J=" + to_string(J)};
          break;
        }
      }
      c.push_back(detail::conjunction("(vi)", {pi_reg, vi}));
    }
    {
      auto      intra_pi = detail::pi_condition(
          "intra-pi-regular", S, RegularityKind::IntraRegular);
      Condition vii{"j-classes-regular", true, ""};
      for (auto const& J : ctx.green_j.classes()) {
        if (!J.intersects(ctx.intra)) {
          continue;
        }
        bool ok = is_subsemigroup(S, J);
        if (ok) {
          ok = v.j_class_regularity == RegularityScope::Intrinsic
                   ? is_everywhere(induced_subsemigroup(S, J).structure,
                                   RegularityKind::Regular)
                   : J.is_subset_of(ctx.reg);
        }
        if (!ok) {
          vii = {"j-classes-regular", false, "J=" + to_string(J)};
          break;
        }
      }
      c.push_back(detail::conjunction("(vii)", {intra_pi, vii}));
    }
    {
      auto      d = detail::decomposition_condition(
          ctx, "simple-nil-decomposition", ClassType::nil_extension_of({{K::Simple}}), v);
      Condition eq{"Intra=Reg", ctx.intra == ctx.reg,
                   "Intra=" + to_string(ctx.intra) + " Reg=" + to_string(ctx.reg)};
      c.push_back(detail::conjunction("(viii)", {d, eq}));
      if (c.back().value) {
        c.back().witness = d.witness;
      }
    }
    return {TheoremId::SemilatticeNilExtensionSimpleRegular, c, {pi_reg}};
  }

  //! Complete semilattice of nil extensions of left group like ordered
  //! semigroups; conditions (i)-(x).
  inline ConditionReport
  evaluate_semilattice_nil_extension_left_group_like(OrderedSemigroup const& S,
                                                     Variants const& v = {}) {
    using K = ClassType::Kind;
    detail::Context        ctx(S);
    std::vector<Condition> c;
    auto const             nil_cr
        = ClassType::nil_extension_of({{K::CompletelyRegular}});

    c.push_back(detail::decomposition_condition(
        ctx, "(i)", ClassType::nil_extension_of({{K::LeftGroupLike}}), v));
    c.push_back(detail::decomposition_condition(
        ctx,
        "(ii)",
        ClassType::nil_extension_of({{K::LeftSimple}, {K::RightRegular}}),
        v));
    c.push_back(detail::decomposition_condition(
        ctx, "(iii)", nil_cr, v, detail::l_classes_are_kernels(ctx, ctx.gr)));
    {
      auto pi = detail::pi_condition(
          "completely-pi-regular", S, RegularityKind::CompletelyRegular);
      auto d = detail::decomposition_condition(
          ctx, "left-archimedean-decomposition", {K::LeftArchimedean}, v);
      c.push_back(detail::conjunction("(iv)", {pi, d}));
      if (c.back().value) {
        c.back().witness = d.witness;
      }
    }
    {
      Condition v5{"(v)", true, ""};
      for (element_type a = 0; a < S.size() && v5.value; ++a) {
        for (element_type b = 0; b < S.size(); ++b) {
          element_type const ab   = S.product(a, b);
          element_type const ba   = S.product(b, a);
          std::size_t const  span = detail::joint_span(S, ab, ba);
          auto const         pab  = powers(S, ab, span);
          auto const         pba  = powers(S, ba, span);
          bool               found = false;
          for (std::size_t n = 1; n <= span && !found; ++n) {
            found = closure_product(S,
                                    {ctx.at(pab[n]),
                                     ctx.at(a),
                                     ctx.any(),
                                     ctx.at(b),
                                     ctx.at(pba[n])})
                        .contains(pab[n]);
          }
          if (!found) {
            v5 = {"(v)", false, detail::pair_witness(a, b)};
            break;
          }
        }
      }
      c.push_back(v5);
    }
    {
      auto      pi_reg = detail::pi_condition("pi-regular", S, RegularityKind::Regular);
      Condition vi{"a|e=>a|_l e", true, ""};
      for (element_type a = 0; a < S.size() && vi.value; ++a) {
        for (auto e : ctx.idempotents) {
          if (divides(S, a, e) && !divides_sided(S, a, e, Side::Left)) {
            vi = {"a|e=>a|_l e", false,
                  "a=" + std::to_string(a) + " e=" + std::to_string(e)};
            break;
          }
        }
      }
      c.push_back(detail::conjunction("(vi)", {pi_reg, vi}));
    }
    c.push_back(detail::decomposition_condition(
        ctx, "(vii)", nil_cr, v, detail::l_classes_are_kernels(ctx, ctx.idempotents)));
    c.push_back(detail::decomposition_condition(
        ctx, "(viii)", nil_cr, v, detail::l_classes_are_kernels(ctx, ctx.reg)));
    {
      auto      d = detail::decomposition_condition(
          ctx, "left-simple-nil-decomposition",
          ClassType::nil_extension_of({{K::LeftSimple}}), v);
      Condition eq{"LReg=Reg", ctx.lreg == ctx.reg,
                   "LReg=" + to_string(ctx.lreg) + " Reg=" + to_string(ctx.reg)};
      c.push_back(detail::conjunction("(ix)", {d, eq}));
      if (c.back().value) {
        c.back().witness = d.witness;
      }
    }
    c.push_back(detail::decomposition_condition(
        ctx,
        "(x)",
        ClassType::nil_extension_of({{K::LeftClifford}}),
        v,
        detail::l_classes_are_kernels(ctx, ctx.reg)));
    return {TheoremId::SemilatticeNilExtensionLeftGroupLike, c, {}};
  }

  inline ConditionReport evaluate(TheoremId               id,
                                  OrderedSemigroup const& S,
                                  Variants const&         v = {}) {
    switch (id) {
      case TheoremId::NilExtensionLeftSimpleRightRegular:
        return evaluate_nil_extension_left_simple_right_regular(S, v);
      case TheoremId::NilExtensionSimpleRegular:
        return evaluate_nil_extension_simple_regular(S, v);
      case TheoremId::NilExtensionCompletelyRegular:
        return evaluate_nil_extension_completely_regular(S, v);
      case TheoremId::SemilatticeNilExtensionSimpleRegular:
        return evaluate_semilattice_nil_extension_simple_regular(S, v);
      case TheoremId::SemilatticeNilExtensionLeftGroupLike:
        return evaluate_semilattice_nil_extension_left_group_like(S, v);
    }
    throw std::invalid_argument("unknown theorem");
  }

}  // namespace osg

#endif  // OSG_THEOREMS_HPP_
