//
// osg - finite ordered semigroups
//
// The command line front end. `run` is separate from main so the tests can
// drive it with captured streams.
//
// Exit codes: 0 ok, 1 discrepancy, 2 invalid structure, 3 parse error,
// 4 usage error.

#ifndef OSG_TOOLS_CLI_HPP_
#define OSG_TOOLS_CLI_HPP_

#include <filesystem>  // for path, create_directories
#include <fstream>     // for ofstream
#include <ostream>     // for ostream
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include "CLI11.hpp"
#include "osg/osg.hpp"

namespace osg::cli {

  enum ExitCode : int {
    ok          = 0,
    discrepancy = 1,
    invalid     = 2,
    parse_error = 3,
    usage       = 4
  };

  namespace detail {

    inline void write_text(std::filesystem::path const& p,
                           std::string const&           text) {
      std::ofstream out(p, std::ios::binary);
      out << text;
      if (!out) {
        throw std::runtime_error("cannot write " + p.string());
      }
    }

    inline void describe_error(std::ostream& err, Error const& e) {
      err << "invalid: " << e.what() << '\n';
      if (!e.witness().empty()) {
        err << "witness:";
        for (auto w : e.witness()) {
          err << ' ' << w;
        }
        if (!e.detail().empty()) {
          err << ' ' << e.detail();
        }
        err << '\n';
      }
    }

    // Loads a structure file, reporting failures as exit codes.
    inline int load(std::string const& path,
                    std::ostream&      err,
                    std::optional<OrderedSemigroup>& S) {
      std::string text;
      try {
        text = read_file(path);
      } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return usage;
      }
      try {
        S = read_structure(text);
      } catch (ParseError const& e) {
        err << path << ":" << e.line() << ": parse error: " << e.what() << '\n';
        return parse_error;
      } catch (Error const& e) {
        describe_error(err, e);
        return invalid;
      }
      return ok;
    }

    inline std::vector<TheoremId> parse_theorems(std::string const& list) {
      if (list == "all") {
        return all_theorems();
      }
      std::vector<TheoremId> out;
      std::istringstream     in(list);
      std::string            item;
      while (std::getline(in, item, ',')) {
        auto id = parse_theorem_label(item);
        if (!id) {
          throw std::invalid_argument("unknown theorem '" + item + "'");
        }
        out.push_back(*id);
      }
      if (out.empty()) {
        throw std::invalid_argument("no theorems given");
      }
      return out;
    }

    inline Variants parse_variants(std::vector<std::string> const& flags) {
      Variants v;
      for (auto const& f : flags) {
        apply_variant(v, f);
      }
      return v;
    }

    inline std::vector<OrderedSemigroup> universe(std::size_t max_order,
                                                  bool        dedup) {
      std::vector<OrderedSemigroup> all;
      for (std::size_t n = 1; n <= max_order; ++n) {
        for (auto& S : enumerate_ordered_semigroups(n, dedup)) {
          all.push_back(std::move(S));
        }
      }
      return all;
    }

  }  // namespace detail

  inline int run(std::vector<std::string> args,
                 std::ostream&            out,
                 std::ostream&            err) {
    CLI::App app{"Finite ordered semigroups: analysis and theorem checks",
                 "osg"};
    app.require_subcommand(1);

    std::string path;
    auto*       validate = app.add_subcommand("validate", "Validate a structure file");
    validate->add_option("path", path, "Structure file")->required();

    auto* analyze = app.add_subcommand("analyze", "Report ideals, classes, Green's relations");
    analyze->add_option("path", path, "Structure file")->required();

    std::string              theorem;
    std::vector<std::string> variant_flags_in;
    auto* check = app.add_subcommand("check", "Evaluate the conditions of one theorem");
    check->add_option("path", path, "Structure file")->required();
    check->add_option("theorem", theorem, "3.1, 3.2, 3.3, 4.1 or 4.2")->required();
    check->add_option("--variant", variant_flags_in, "Alternative reading, key=value");

    std::size_t max_order_in = 3;
    std::string theorems     = "all";
    bool        dedup        = false;
    std::size_t jobs         = 1;
    std::string out_dir;
    bool        quiet = false;
    auto* sweep = app.add_subcommand("sweep", "Check theorems on every ordered semigroup up to an order");
    sweep->add_option("--max-order", max_order_in, "Largest order (at most 4)")
        ->check(CLI::Range(std::size_t(1), max_enumeration_order));
    sweep->add_option("--theorems", theorems, "Comma separated ids or 'all'");
    sweep->add_flag("--dedup", dedup, "One structure per isomorphism class");
    sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", out_dir, "Directory for the report and discrepancies");
    sweep->add_option("--variant", variant_flags_in, "Alternative reading, key=value");
    sweep->add_flag("--quiet", quiet, "No progress output");

    std::size_t order = 2;
    auto* enumerate = app.add_subcommand("enumerate", "Write every ordered semigroup of one order");
    enumerate->add_option("--order", order, "Order (at most 4)")
        ->check(CLI::Range(std::size_t(1), max_enumeration_order));
    enumerate->add_flag("--dedup", dedup, "One structure per isomorphism class");
    enumerate->add_option("--out", out_dir, "Directory for the files (default: print counts only)");

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << '\n' << app.help();
      return usage;
    }

    try {
      if (validate->parsed()) {
        std::optional<OrderedSemigroup> S;
        int code = detail::load(path, err, S);
        if (code == ok) {
          out << "valid: order " << S->size() << '\n';
        }
        return code;
      }
      if (analyze->parsed()) {
        std::optional<OrderedSemigroup> S;
        if (int code = detail::load(path, err, S); code != ok) {
          return code;
        }
        out << analyze_report(*S);
        return ok;
      }
      if (check->parsed()) {
        auto id = parse_theorem_label(theorem);
        if (!id) {
          err << "usage error: unknown theorem '" << theorem << "'\n";
          return usage;
        }
        Variants v = detail::parse_variants(variant_flags_in);
        std::optional<OrderedSemigroup> S;
        if (int code = detail::load(path, err, S); code != ok) {
          return code;
        }
        auto const report = evaluate(*id, *S, v);
        out << check_report(*S, report, v);
        return report.equivalent() ? ok : discrepancy;
      }
      if (sweep->parsed()) {
        auto const ids = detail::parse_theorems(theorems);
        SweepOptions options;
        options.variants = detail::parse_variants(variant_flags_in);
        options.jobs     = jobs;
        auto const all   = detail::universe(max_order_in, dedup);
        if (!quiet) {
          err << "sweeping " << all.size() << " structures\n";
          options.progress = [&err, step = std::max<std::size_t>(1, all.size() / 10)](
                                 std::size_t done, std::size_t total) {
            if (done % step == 0 || done == total) {
              err << "  " << done << "/" << total << '\n';
            }
          };
        }
        auto const report = equivalence_sweep(all, ids, options);
        std::vector<std::string> files;
        if (!out_dir.empty()) {
          std::filesystem::create_directories(out_dir);
          for (std::size_t i = 0; i < report.discrepancies.size(); ++i) {
            auto const& d    = report.discrepancies[i];
            std::string name = "discrepancy-" + std::to_string(i + 1) + "-thm"
                               + theorem_label(d.report.theorem) + ".osg";
            detail::write_text(std::filesystem::path(out_dir) / name,
                               serialize(d.structure,
                                         std::string("theorem ")
                                             + theorem_label(d.report.theorem)
                                             + " conditions disagree"));
            files.push_back(name);
          }
        }
        auto const text = sweep_report(report, files);
        if (!out_dir.empty()) {
          detail::write_text(std::filesystem::path(out_dir) / "sweep-report.txt", text);
        }
        out << text;
        return report.discrepancies.empty() ? ok : discrepancy;
      }
      if (enumerate->parsed()) {
        auto const all = enumerate_ordered_semigroups(order, dedup);
        if (!out_dir.empty()) {
          std::filesystem::create_directories(out_dir);
          for (std::size_t i = 0; i < all.size(); ++i) {
            detail::write_text(std::filesystem::path(out_dir)
                                   / ("order" + std::to_string(order) + "-"
                                      + std::to_string(i + 1) + ".osg"),
                               serialize(all[i]));
          }
        }
        out << "order " << order << ": " << all.size() << " ordered semigroups"
            << (dedup ? " up to isomorphism" : "") << '\n';
        return ok;
      }
    } catch (std::invalid_argument const& e) {
      err << "usage error: " << e.what() << '\n';
      return usage;
    }
    return usage;
  }

}  // namespace osg::cli

#endif  // OSG_TOOLS_CLI_HPP_
