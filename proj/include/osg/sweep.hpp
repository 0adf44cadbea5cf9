//
// osg - finite ordered semigroups
//
// Running the theorem evaluators over a whole universe of ordered
// semigroups, in parallel, and collecting every structure on which the
// conditions of a theorem disagree.

#ifndef OSG_SWEEP_HPP_
#define OSG_SWEEP_HPP_

#include <algorithm>   // for min
#include <atomic>      // for atomic
#include <cstddef>     // for size_t
#include <functional>  // for function
#include <mutex>       // for mutex, lock_guard
#include <stdexcept>   // for invalid_argument
#include <string>      // for string
#include <thread>      // for thread
#include <utility>     // for pair
#include <vector>      // for vector

#include "ordered_semigroup.hpp"  // for OrderedSemigroup
#include "theorems.hpp"           // for evaluate, Variants

namespace osg {

  ////////////////////////////////////////////////////////////////////////
  // Variant flags
  ////////////////////////////////////////////////////////////////////////

  //! Applies one "key=value" flag (or one of the bare shorthands
  //! "separate", "conjunctive", "s1", "s") to `v`.
  //!
  //!   thm3.3          = conjunctive | separate
  //!   divisors        = s1 | s
  //!   thm4.1-vii      = intrinsic | ambient
  //!   left-clifford   = regular | plain
  //!   left-group-like = plain | regular
  //!
  //! Throws std::invalid_argument on anything else.
  inline void apply_variant(Variants& v, std::string const& flag) {
    auto const  eq    = flag.find('=');
    std::string key   = eq == std::string::npos ? "" : flag.substr(0, eq);
    std::string value = eq == std::string::npos ? flag : flag.substr(eq + 1);
    if (key.empty()) {
      if (value == "separate" || value == "conjunctive") {
        key = "thm3.3";
      } else if (value == "s1" || value == "s") {
        key = "divisors";
      }
    }
    auto bad = [&] {
      return std::invalid_argument("unknown variant '" + flag + "'");
    };
    if (key == "thm3.3") {
      if (value == "conjunctive") {
        v.hypotheses = HypothesisReading::Conjunctive;
      } else if (value == "separate") {
        v.hypotheses = HypothesisReading::Separate;
      } else {
        throw bad();
      }
    } else if (key == "divisors") {
      if (value == "s1") {
        v.divisors = DivisorUniverse::WithIdentity;
      } else if (value == "s") {
        v.divisors = DivisorUniverse::Strict;
      } else {
        throw bad();
      }
    } else if (key == "thm4.1-vii") {
      if (value == "intrinsic") {
        v.j_class_regularity = RegularityScope::Intrinsic;
      } else if (value == "ambient") {
        v.j_class_regularity = RegularityScope::Ambient;
      } else {
        throw bad();
      }
    } else if (key == "left-clifford") {
      if (value != "regular" && value != "plain") {
        throw bad();
      }
      v.class_types.left_clifford_regular = value == "regular";
    } else if (key == "left-group-like") {
      if (value != "regular" && value != "plain") {
        throw bad();
      }
      v.class_types.left_group_like_regular = value == "regular";
    } else {
      throw bad();
    }
  }

  //! Every flag of `v` as "key=value", in a fixed order.
  inline std::vector<std::string> variant_flags(Variants const& v) {
    return {
        std::string("thm3.3=")
            + (v.hypotheses == HypothesisReading::Conjunctive ? "conjunctive"
                                                               : "separate"),
        std::string("divisors=")
            + (v.divisors == DivisorUniverse::WithIdentity ? "s1" : "s"),
        std::string("thm4.1-vii=")
            + (v.j_class_regularity == RegularityScope::Intrinsic ? "intrinsic"
                                                                   : "ambient"),
        std::string("left-clifford=")
            + (v.class_types.left_clifford_regular ? "regular" : "plain"),
        std::string("left-group-like=")
            + (v.class_types.left_group_like_regular ? "regular" : "plain")};
  }

  //! The single-flag changes of `v` that affect theorem `id`, each with the
  //! flag that produces it.
  inline std::vector<std::pair<std::string, Variants>>
  variant_alternatives(TheoremId id, Variants const& v) {
    std::vector<std::pair<std::string, Variants>> out;
    auto flip = [&](std::string const& key,
                    std::string const& x,
                    std::string const& y) {
      Variants w = v;
      for (auto const& f : variant_flags(v)) {
        if (f == key + "=" + x) {
          apply_variant(w, key + "=" + y);
          out.emplace_back(key + "=" + y, w);
          return;
        }
      }
      apply_variant(w, key + "=" + x);
      out.emplace_back(key + "=" + x, w);
    };
    switch (id) {
      case TheoremId::NilExtensionCompletelyRegular:
        flip("thm3.3", "conjunctive", "separate");
        break;
      case TheoremId::SemilatticeNilExtensionSimpleRegular:
        flip("divisors", "s1", "s");
        flip("thm4.1-vii", "intrinsic", "ambient");
        break;
      case TheoremId::SemilatticeNilExtensionLeftGroupLike:
        flip("left-group-like", "plain", "regular");
        flip("left-clifford", "regular", "plain");
        break;
      default:
        break;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sweep
  ////////////////////////////////////////////////////////////////////////

  struct Discrepancy {
    //! Position of the structure in the swept list.
    std::size_t      index;
    OrderedSemigroup structure;
    ConditionReport  report;
    //! Variant flags under which the report becomes equivalent.
    std::vector<std::string> restored_by;

    bool explained() const noexcept {
      return !restored_by.empty();
    }
  };

  struct TheoremTally {
    TheoremId   theorem;
    std::size_t evaluated  = 0;
    std::size_t equivalent = 0;
    //! How many structures satisfy the first compared condition.
    std::size_t holds = 0;
  };

  struct SweepReport {
    std::size_t               structures = 0;
    Variants                  variants;
    std::vector<TheoremTally> tallies;
    //! Ordered by structure index, then by theorem.
    std::vector<Discrepancy> discrepancies;

    std::size_t unexplained() const {
      std::size_t count = 0;
      for (auto const& d : discrepancies) {
        count += d.explained() ? 0 : 1;
      }
      return count;
    }
  };

  struct SweepOptions {
    Variants    variants;
    std::size_t jobs = 1;
    //! Called with the number of finished structures, from worker threads
    //! but never concurrently.
    std::function<void(std::size_t done, std::size_t total)> progress;
  };

  namespace detail {
    struct SweepSlot {
      std::vector<ConditionReport> reports;
    };
  }  // namespace detail

  //! Evaluates every theorem of `ids` on every structure. The result does
  //! not depend on `options.jobs`.
  inline SweepReport equivalence_sweep(std::vector<OrderedSemigroup> const& all,
                                       std::vector<TheoremId> const&        ids,
                                       SweepOptions const& options = {}) {
    std::vector<detail::SweepSlot> slots(all.size());
    std::atomic<std::size_t>       next{0};
    std::size_t                    done = 0;
    std::mutex                     progress_mutex;

    auto work = [&] {
      for (std::size_t i = next++; i < all.size(); i = next++) {
        for (auto id : ids) {
          slots[i].reports.push_back(evaluate(id, all[i], options.variants));
        }
        if (options.progress) {
          std::lock_guard<std::mutex> lock(progress_mutex);
          options.progress(++done, all.size());
        }
      }
    };
    std::size_t const jobs = std::max<std::size_t>(
        1, std::min<std::size_t>(options.jobs, all.size()));
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::thread> workers;
      for (std::size_t j = 0; j < jobs; ++j) {
        workers.emplace_back(work);
      }
      for (auto& t : workers) {
        t.join();
      }
    }

    SweepReport report;
    report.structures = all.size();
    report.variants   = options.variants;
    for (auto id : ids) {
      report.tallies.push_back({id});
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t k = 0; k < ids.size(); ++k) {
        auto const& r = slots[i].reports[k];
        auto&       t = report.tallies[k];
        ++t.evaluated;
        t.holds += r.compared.front().value ? 1 : 0;
        if (r.equivalent()) {
          ++t.equivalent;
          continue;
        }
        Discrepancy d{i, all[i], r, {}};
        for (auto const& [flag, w] : variant_alternatives(ids[k], options.variants)) {
          if (evaluate(ids[k], all[i], w).equivalent()) {
            d.restored_by.push_back(flag);
          }
        }
        report.discrepancies.push_back(std::move(d));
      }
    }
    return report;
  }

}  // namespace osg

#endif  // OSG_SWEEP_HPP_
