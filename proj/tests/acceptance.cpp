// Acceptance run: one PASS/FAIL line per criterion, with the time limits
// pinned below. Criteria 6 and 7 are known to fail: order 3 contains
// ordered semigroups on which some of the theorem conditions disagree under
// every supported reading (see README.md). They are still evaluated in full
// and reported as FAIL; only an unexpected failure changes the exit status.

#include <chrono>      // for steady_clock
#include <cstdio>      // for printf
#include <filesystem>  // for path, directory_iterator
#include <functional>  // for function
#include <set>         // for set
#include <sstream>     // for ostringstream, istringstream
#include <string>      // for string
#include <vector>      // for vector

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

  using seconds = std::chrono::duration<double>;

  constexpr double limit_validation  = 1.0;
  constexpr double limit_lemmas      = 60.0;
  constexpr double limit_sweep3      = 600.0;
  constexpr double limit_sweep4      = 1800.0;
  constexpr double limit_unspecified = 600.0;

  std::set<int> const known_red = {6, 7};

  struct Verdict {
    bool        ok;
    std::string note;
  };

  // Violations collected by a criterion; only the first few are kept.
  struct Violations {
    std::size_t              count = 0;
    std::vector<std::string> first;

    void add(std::string what) {
      if (count++ < 3) {
        first.push_back(std::move(what));
      }
    }

    Verdict verdict() const {
      std::string note = std::to_string(count) + " violations";
      for (auto const& f : first) {
        note += "; " + f;
      }
      return {count == 0, note};
    }
  };

  std::vector<osg::OrderedSemigroup> universe3() {
    return fixtures::universe(3);
  }

  ////////////////////////////////////////////////////////////////////////
  // Criteria
  ////////////////////////////////////////////////////////////////////////

  Verdict validation_oracle() {
    std::size_t accepted = 0;
    Violations  v;
    for (auto const& mul : oracle::all_tables(2)) {
      for (auto const& leq : oracle::partial_orders(2)) {
        bool expected = oracle::associative(mul) && oracle::compatible(mul, leq);
        bool got      = true;
        try {
          osg::OrderedSemigroup::validate(mul, leq);
        } catch (osg::Error const&) {
          got = false;
        }
        accepted += got ? 1 : 0;
        if (got != expected) {
          v.add("mismatch");
        }
      }
    }
    auto r = v.verdict();
    r.note += "; " + std::to_string(accepted) + " of "
              + std::to_string(oracle::all_tables(2).size()
                               * oracle::partial_orders(2).size())
              + " accepted";
    return r;
  }

  Verdict simple_ideal_is_kernel() {
    Violations v;
    for (auto const& S : universe3()) {
      auto const K = osg::kernel(S);
      for (auto const& I : osg::all_ideals(S, osg::Sidedness::TwoSided)) {
        bool simple = osg::is_simple(osg::induced_subsemigroup(S, I).structure,
                                     osg::Sidedness::TwoSided);
        if (simple != (K && I == *K)) {
          v.add(osg::canonical_form(S) + " I=" + osg::to_string(I));
        }
      }
    }
    return v.verdict();
  }

  Verdict rees_quotients() {
    Violations v;
    for (auto const& S : universe3()) {
      for (auto const& I : osg::all_ideals(S, osg::Sidedness::TwoSided)) {
        auto const where = osg::canonical_form(S) + " I=" + osg::to_string(I);
        auto const q     = osg::rees_quotient(S, I);
        auto const& Q    = q.quotient;
        try {
          osg::OrderedSemigroup::validate(Q.table(), Q.order());
        } catch (osg::Error const&) {
          v.add(where + " invalid");
        }
        for (osg::element_type x = 0; x < Q.size(); ++x) {
          if (!Q.leq(q.zero, x)) {
            v.add(where + " zero not at bottom");
          }
        }
        for (osg::element_type a = 0; a < S.size(); ++a) {
          for (osg::element_type b = 0; b < S.size(); ++b) {
            if (q.project[S.product(a, b)]
                != Q.product(q.project[a], q.project[b])) {
              v.add(where + " project not a homomorphism");
            }
            // the order of S is carried over
            if (S.leq(a, b) && !Q.leq(q.project[a], q.project[b])) {
              v.add(where + " project not monotone");
            }
          }
        }
      }
    }
    return v.verdict();
  }

  Verdict nil_extension_criteria() {
    Violations v;
    for (auto const& S : universe3()) {
      for (auto const& I : osg::all_ideals(S, osg::Sidedness::TwoSided)) {
        if (osg::is_nil_extension(S, I) != osg::is_nil_extension_powers(S, I)) {
          v.add(osg::canonical_form(S) + " I=" + osg::to_string(I));
        }
      }
    }
    return v.verdict();
  }

  Verdict regular_element_properties() {
    Violations v;
    for (auto const& S : universe3()) {
      auto r = osg::check_regular_element_properties(S);
      if (!r.passed) {
        v.add(osg::canonical_form(S) + " " + r.violation);
      }
    }
    return v.verdict();
  }

  // The flags that may explain a discrepancy of each theorem.
  std::set<std::string> accepted_flags(std::string const& theorem) {
    if (theorem == "3.3") {
      return {"thm3.3=separate", "thm3.3=conjunctive"};
    }
    if (theorem == "4.1") {
      return {"thm4.1-vii=ambient", "thm4.1-vii=intrinsic"};
    }
    if (theorem == "4.2") {
      return {"left-group-like=regular", "left-group-like=plain",
              "left-clifford=plain", "left-clifford=regular"};
    }
    return {};
  }

  // Runs the sweep through the command line and applies the discrepancy
  // policy: exit 0, or exit 1 with every discrepancy written to a file and
  // restored by a flag of an ambiguity of its own theorem.
  Verdict sweep(std::vector<std::string> args, std::string const& dir_name) {
    auto dir = std::filesystem::temp_directory_path() / dir_name;
    std::filesystem::remove_all(dir);
    args.insert(args.end(), {"--out", dir.string(), "--quiet"});
    std::ostringstream out, err;
    int const          code = osg::cli::run(args, out, err);

    std::istringstream in(out.str());
    std::string        line, discrepancies = "?", unexplained = "?";
    std::size_t        accepted = 0, rejected = 0, missing_files = 0;
    while (std::getline(in, line)) {
      if (line.rfind("discrepancies: ", 0) == 0) {
        discrepancies = line.substr(15);
      } else if (line.rfind("unexplained: ", 0) == 0) {
        unexplained = line.substr(13);
      } else if (line.rfind("discrepancy ", 0) == 0) {
        auto field = [&](std::string const& key) {
          auto p = line.find(" " + key + "=");
          if (p == std::string::npos) {
            return std::string();
          }
          p += key.size() + 2;
          return line.substr(p, line.find(' ', p) - p);
        };
        auto const flags   = accepted_flags(field("theorem"));
        auto const restore = field("restored-by");
        bool       ok      = false;
        std::istringstream list(restore);
        for (std::string f; std::getline(list, f, ',');) {
          ok = ok || flags.count(f) != 0;
        }
        (ok ? accepted : rejected) += 1;
        auto const file = field("file");
        if (file.empty() || !std::filesystem::exists(dir / file)) {
          ++missing_files;
        }
      }
    }
    bool const ok = code == 0
                    || (code == 1 && rejected == 0 && missing_files == 0
                        && accepted > 0);
    return {ok,
            "exit " + std::to_string(code) + "; " + discrepancies
                + " discrepancies, " + std::to_string(accepted)
                + " restored by an accepted flag, " + unexplained
                + " unexplained, " + std::to_string(missing_files)
                + " without a file"};
  }

  Verdict enumerator_oracle() {
    Violations v;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto found    = osg::enumerate_mul_tables(n);
      auto expected = oracle::associative_tables(n);
      std::set<osg::table_type> a(found.begin(), found.end());
      std::set<osg::table_type> b(expected.begin(), expected.end());
      if (a != b || a.size() != found.size()) {
        v.add("order " + std::to_string(n) + " tables differ");
      }
    }
    auto const n2 = osg::enumerate_mul_tables(2).size();
    if (n2 != 8) {
      v.add(std::to_string(n2) + " tables at order 2");
    }
    auto const z2 = osg::enumerate_compatible_orders(fixtures::load("Z2").table()).size();
    if (z2 != 1) {
      v.add(std::to_string(z2) + " orders compatible with Z2");
    }
    return v.verdict();
  }

  Verdict structural_identities() {
    using K = osg::ClassType::Kind;
    using R = osg::RegularityKind;
    Violations v;
    for (auto const& S : universe3()) {
      auto const where = osg::canonical_form(S);
      if (osg::holds({K::LeftGroupLike}, S)
          != osg::is_simple(S, osg::Sidedness::Left)) {
        v.add(where + " left group like vs left simple");
      }
      auto const gr = osg::element_class(S, R::CompletelyRegular);
      if (!gr.is_subset_of(osg::element_class(S, R::Regular)
                           & osg::element_class(S, R::LeftRegular)
                           & osg::element_class(S, R::RightRegular))) {
        v.add(where + " Gr not inside Reg, LReg, RReg");
      }
      auto const J = osg::green_partition(S, osg::GreenKind::J);
      for (osg::element_type a = 0; a < S.size(); ++a) {
        for (osg::element_type b = 0; b < S.size(); ++b) {
          bool mutual = osg::divides(S, a, b) && osg::divides(S, b, a);
          if (mutual != J.related(a, b)) {
            v.add(where + " divisibility vs J at " + std::to_string(a) + ","
                  + std::to_string(b));
          }
        }
      }
    }
    return v.verdict();
  }

  Verdict golden_reports() {
    Violations v;
    for (auto const& name : fixtures::names()) {
      std::ostringstream out, err;
      int code = osg::cli::run({"analyze", fixtures::path(name)}, out, err);
      auto golden
          = osg::read_file(std::string(OSG_GOLDEN_DIR) + "/" + name + ".analyze.txt");
      if (code != 0 || out.str() != golden) {
        v.add(name);
      }
    }
    return v.verdict();
  }

}  // namespace

int main() {
  struct Criterion {
    int                      id;
    char const*              name;
    double                   limit;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> const criteria = {
      {1, "validation oracle at order 2", limit_validation, validation_oracle},
      {2, "simple ideals are the kernel", limit_lemmas, simple_ideal_is_kernel},
      {3, "Rees quotients", limit_lemmas, rees_quotients},
      {4, "nil extension criteria agree", limit_lemmas, nil_extension_criteria},
      {5, "regular element properties", limit_lemmas, regular_element_properties},
      {6, "theorem sweep to order 3", limit_sweep3,
       [] {
         return sweep({"sweep", "--max-order", "3", "--theorems", "all", "--jobs", "4"},
                      "osg-acceptance-sweep3");
       }},
      {7, "order 4 sweep of 4.1", limit_sweep4,
       [] {
         return sweep({"sweep", "--max-order", "4", "--dedup", "--theorems", "4.1",
                       "--jobs", "4"},
                      "osg-acceptance-sweep4");
       }},
      {8, "enumerator oracle", limit_unspecified, enumerator_oracle},
      {9, "structural identities", limit_unspecified, structural_identities},
      {10, "golden analyze reports", limit_unspecified, golden_reports},
  };

  int unexpected = 0;
  for (auto const& c : criteria) {
    auto const start   = std::chrono::steady_clock::now();
    Verdict    verdict = c.run();
    double     elapsed = seconds(std::chrono::steady_clock::now() - start).count();
    bool const in_time = elapsed < c.limit;
    bool const pass    = verdict.ok && in_time;
    std::printf("criterion %d %s: %s (%.3f s, limit %.0f s; %s)%s\n",
                c.id,
                c.name,
                pass ? "PASS" : "FAIL",
                elapsed,
                c.limit,
                verdict.note.c_str(),
                !pass && known_red.count(c.id) ? " [known red]" : "");
    if (!pass && !known_red.count(c.id)) {
      ++unexpected;
    }
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
