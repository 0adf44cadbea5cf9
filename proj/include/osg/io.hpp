//
// osg - finite ordered semigroups
//
// The plain-text structure format and the key/value reports.
//
// A structure file looks like
//
//   # the 2-chain under min
//   order 2
//   mul
//   0 0
//   0 1
//   leq
//   0 1
//
// `leq` lists pairs a b meaning a <= b; reflexive pairs may be omitted and
// the relation is closed transitively before validation. The `leq` block
// may be left out for the discrete order.

#ifndef OSG_IO_HPP_
#define OSG_IO_HPP_

#include <fstream>   // for ifstream
#include <sstream>   // for istringstream, ostringstream
#include <string>    // for string, getline
#include <vector>    // for vector

#include "congruences.hpp"        // for finest_complete_semilattice_congruence
#include "element_classes.hpp"    // for element_class
#include "enumerate.hpp"          // for canonical_form
#include "error.hpp"              // for ParseError
#include "green.hpp"              // for green_partition
#include "ideals.hpp"             // for all_ideals, kernel
#include "ordered_semigroup.hpp"  // for OrderedSemigroup
#include "quotients.hpp"          // for is_nil
#include "sweep.hpp"              // for SweepReport
#include "theorems.hpp"           // for ConditionReport

namespace osg {

  //! A parsed but not yet validated structure; `leq` is already closed
  //! reflexively and transitively.
  struct StructureFile {
    table_type    mul;
    relation_type leq;
  };

  namespace detail {
    inline std::string strip(std::string const& line) {
      auto        s     = line.substr(0, line.find('#'));
      auto const  first = s.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        return "";
      }
      auto const last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    }

    inline std::vector<std::size_t>
    parse_indices(std::string const& s, std::size_t n, std::size_t line) {
      std::istringstream       in(s);
      std::vector<std::size_t> out;
      std::string              tok;
      while (in >> tok) {
        if (tok.find_first_not_of("0123456789") != std::string::npos
            || tok.size() > 3) {
          throw ParseError(line, "expected an element index, found '" + tok + "'");
        }
        std::size_t const v = std::stoul(tok);
        if (v >= n) {
          throw ParseError(line, "element " + tok + " out of range 0.."
                                     + std::to_string(n - 1));
        }
        out.push_back(v);
      }
      return out;
    }
  }  // namespace detail

  //! Throws ParseError naming the 1-based line of the first problem.
  inline StructureFile parse_structure(std::string const& text) {
    std::istringstream in(text);
    std::string        raw;
    std::size_t        line_no = 0;
    std::size_t        n       = 0;
    enum class Block { Header, Mul, Leq } block = Block::Header;
    StructureFile file;

    while (std::getline(in, raw)) {
      ++line_no;
      auto const line = detail::strip(raw);
      if (line.empty()) {
        continue;
      }
      if (n == 0) {
        std::istringstream head(line);
        std::string        word, count, rest;
        head >> word >> count;
        if (word != "order" || count.empty() || (head >> rest)
            || count.find_first_not_of("0123456789") != std::string::npos
            || count.size() > 2) {
          throw ParseError(line_no, "expected 'order <n>'");
        }
        n = std::stoul(count);
        if (n == 0 || n > max_order) {
          throw ParseError(line_no, "order must lie in 1.."
                                        + std::to_string(max_order));
        }
        file.leq = discrete_order(n);
        continue;
      }
      if (line == "mul") {
        if (block != Block::Header) {
          throw ParseError(line_no, "unexpected 'mul'");
        }
        block = Block::Mul;
        continue;
      }
      if (line == "leq") {
        if (block != Block::Mul || file.mul.size() != n) {
          throw ParseError(line_no, "'leq' must follow a complete mul block");
        }
        block = Block::Leq;
        continue;
      }
      switch (block) {
        case Block::Header:
          throw ParseError(line_no, "expected 'mul'");
        case Block::Mul: {
          if (file.mul.size() == n) {
            throw ParseError(line_no, "more than " + std::to_string(n)
                                          + " mul rows");
          }
          auto row = detail::parse_indices(line, n, line_no);
          if (row.size() != n) {
            throw ParseError(line_no, "mul row must have "
                                          + std::to_string(n) + " entries");
          }
          file.mul.push_back(std::move(row));
          break;
        }
        case Block::Leq: {
          auto pair = detail::parse_indices(line, n, line_no);
          if (pair.size() != 2) {
            throw ParseError(line_no, "leq lines hold exactly two indices");
          }
          file.leq[pair[0]][pair[1]] = true;
          break;
        }
      }
    }
    if (n == 0) {
      throw ParseError(line_no + 1, "missing 'order <n>'");
    }
    if (file.mul.size() != n) {
      throw ParseError(line_no + 1, "expected " + std::to_string(n)
                                        + " mul rows, found "
                                        + std::to_string(file.mul.size()));
    }
    file.leq = reflexive_transitive_closure(std::move(file.leq));
    return file;
  }

  //! Parses and validates. Throws ParseError or Error.
  inline OrderedSemigroup read_structure(std::string const& text) {
    auto const file = parse_structure(text);
    return OrderedSemigroup::validate(file.mul, file.leq);
  }

  //! Throws std::runtime_error when the file cannot be read.
  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  //! The normal form of a structure file: every strict pair of the order,
  //! lexicographically, with an optional leading comment.
  inline std::string serialize(OrderedSemigroup const& S,
                               std::string const&      comment = "") {
    std::ostringstream out;
    if (!comment.empty()) {
      out << "# " << comment << '\n';
    }
    out << "order " << S.size() << "\nmul\n";
    for (element_type a = 0; a < S.size(); ++a) {
      for (element_type b = 0; b < S.size(); ++b) {
        out << (b == 0 ? "" : " ") << S.product(a, b);
      }
      out << '\n';
    }
    out << "leq\n";
    for (element_type a = 0; a < S.size(); ++a) {
      for (element_type b = 0; b < S.size(); ++b) {
        if (a != b && S.leq(a, b)) {
          out << a << ' ' << b << '\n';
        }
      }
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  //! One "key: value" line per result, always in the same order.
  inline std::string analyze_report(OrderedSemigroup const& S) {
    std::ostringstream out;
    auto               line = [&](std::string const& key, std::string const& value) {
      out << key << ": " << value << '\n';
    };
    auto const zero = zero_element(S);
    auto const K    = kernel(S);

    line("structure", canonical_form(S));
    line("order", std::to_string(S.size()));
    line("zero", zero ? std::to_string(*zero) : "none");
    line("nil", is_nil(S) ? "true" : "false");
    line("kernel", K ? to_string(*K) : "none");
    line("ideals.left", to_string(all_ideals(S, Sidedness::Left)));
    line("ideals.right", to_string(all_ideals(S, Sidedness::Right)));
    line("ideals.two-sided", to_string(all_ideals(S, Sidedness::TwoSided)));
    for (auto kind : {RegularityKind::OrderedIdempotent,
                      RegularityKind::Regular,
                      RegularityKind::LeftRegular,
                      RegularityKind::RightRegular,
                      RegularityKind::IntraRegular,
                      RegularityKind::CompletelyRegular,
                      RegularityKind::Nilpotent}) {
      std::string value = "none";
      if (kind != RegularityKind::Nilpotent || zero) {
        value = to_string(element_class(S, kind));
      }
      line(std::string("class.") + to_string(kind), value);
    }
    line("green.L", to_string(green_partition(S, GreenKind::L)));
    line("green.R", to_string(green_partition(S, GreenKind::R)));
    line("green.J", to_string(green_partition(S, GreenKind::J)));
    line("green.H", to_string(green_partition(S, GreenKind::H)));
    line("congruence.finest-complete-semilattice",
         to_string(finest_complete_semilattice_congruence(S).partition));
    return out.str();
  }

  namespace detail {
    inline std::string join(std::vector<std::string> const& parts,
                            char const*                     sep) {
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i == 0 ? "" : sep) + parts[i];
      }
      return out;
    }

    inline void write_condition(std::ostream&      out,
                                char const*        prefix,
                                Condition const&   c) {
      out << prefix << ' ' << c.label << ": " << (c.value ? "true" : "false");
      if (!c.witness.empty()) {
        out << "  " << c.witness;
      }
      out << '\n';
    }
  }  // namespace detail

  inline std::string check_report(OrderedSemigroup const& S,
                                  ConditionReport const&  r,
                                  Variants const&         v) {
    std::ostringstream out;
    out << "theorem: " << theorem_label(r.theorem) << '\n';
    out << "structure: " << canonical_form(S) << '\n';
    out << "variants: " << detail::join(variant_flags(v), " ") << '\n';
    for (auto const& c : r.compared) {
      detail::write_condition(out, "condition", c);
    }
    for (auto const& c : r.details) {
      detail::write_condition(out, "detail", c);
    }
    out << "equivalent: " << (r.equivalent() ? "true" : "false") << '\n';
    return out.str();
  }

  //! `files[i]` is the path the i-th discrepancy was written to, if any.
  inline std::string sweep_report(SweepReport const&              r,
                                  std::vector<std::string> const& files = {}) {
    std::ostringstream out;
    out << "structures: " << r.structures << '\n';
    out << "variants: " << detail::join(variant_flags(r.variants), " ") << '\n';
    for (auto const& t : r.tallies) {
      out << "theorem " << theorem_label(t.theorem)
          << ": evaluated=" << t.evaluated << " equivalent=" << t.equivalent
          << " holding=" << t.holds << '\n';
    }
    out << "discrepancies: " << r.discrepancies.size() << '\n';
    out << "unexplained: " << r.unexplained() << '\n';
    for (std::size_t i = 0; i < r.discrepancies.size(); ++i) {
      auto const& d = r.discrepancies[i];
      out << "discrepancy " << i + 1 << ": theorem=" << theorem_label(d.report.theorem)
          << " index=" << d.index << " structure=" << canonical_form(d.structure)
          << " restored-by="
          << (d.restored_by.empty() ? "none" : detail::join(d.restored_by, ","));
      if (i < files.size()) {
        out << " file=" << files[i];
      }
      out << '\n';
      for (auto const& c : d.report.compared) {
        detail::write_condition(out, "  condition", c);
      }
      for (auto const& c : d.report.details) {
        detail::write_condition(out, "  detail", c);
      }
    }
    return out.str();
  }

}  // namespace osg

#endif  // OSG_IO_HPP_
