// Copyright 2026 The odisc Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "odisc/bundle.hpp"
#include "odisc/error.hpp"
#include "odisc/invform.hpp"
#include "odisc/quadform.hpp"

namespace odisc::cli {

namespace {

using json = nlohmann::ordered_json;

std::string constituents(const std::vector<Constituent>& cs) {
  std::string s;
  for (const auto& c : cs) {
    if (!s.empty()) s += " + ";
    if (c.multiplicity > 1) s += std::to_string(c.multiplicity) + "*";
    s += c.brauer.id;
  }
  return s;
}

std::string joined(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::string header(const std::string& chi, const std::string& ideal, const Reduction& r) {
  std::string h = chi + " mod " + ideal;
  if (r.row != chi) h += " (row " + r.row + ")";
  return h + ": " + constituents(r.constituents);
}

Reduction need_reduction(const GroupBundle& b, const std::string& chi, const std::string& ideal) {
  auto r = reduce(b, chi, ideal);
  require(r.has_value(), "no decomposition row for " + chi + " at " + ideal);
  return *r;
}

int cmd_classify_form(const std::string& path, bool count, std::ostream& out) {
  const QuadraticForm q = load_form(path);
  if (q.is_degenerate()) throw Error(ErrorKind::DegenerateForm, path + ": degenerate form");
  out << "field: " << q.field().name() << "\n";
  out << "dim: " << q.dim() << "\n";
  if (q.dim() % 2 == 0 || q.field().characteristic() != 2)
    out << "disc: " << discriminant(q).to_string() << "\n";
  out << "type: " << (q.dim() % 2 == 0 ? to_string(classify(q)) : "none (odd dimension)") << "\n";
  if (count) out << "isotropic: " << count_isotropic(q) << "\n";
  return kOk;
}

int cmd_stability(const std::string& path, const std::string& chi, const std::string& ideal,
                  std::ostream& out) {
  const GroupBundle b = load_bundle(path);
  const Reduction r = need_reduction(b, chi, ideal);
  out << header(chi, ideal, r) << "\n";
  if (r.stability.stable)
    out << "stable\n";
  else
    out << "unstable: constituents " << joined(r.stability.witnesses) << "\n";
  return kOk;
}

int cmd_mod_disc(const std::string& path, const std::string& chi, const std::string& ideal,
                 std::ostream& out) {
  const GroupBundle b = load_bundle(path);
  const Reduction r = need_reduction(b, chi, ideal);
  out << header(chi, ideal, r) << "\n";
  require(r.stability.stable, "no modular discriminant: unstable, constituents " +
                                  joined(r.stability.witnesses));
  require(r.unknown.empty(),
          "no orthogonal discriminant given for constituent " + joined(r.unknown));
  out << "field degree: " << r.field_degree << "\n";
  for (const auto& line : describe(r.summands, r.field_degree)) out << "  " << line << "\n";
  out << "disc: " << to_string(*r.type) << "\n";
  return kOk;
}

struct Solved {
  const OrdinaryCharacter* chi;
  SolveReport report;
  std::vector<ConstraintFact> facts;
  std::vector<std::uint64_t> matching;
};

std::vector<std::string> survivor_strings(const SolveReport& r) {
  std::vector<std::string> s;
  for (auto bits : r.set.survivors) s.push_back(r.set.candidate(bits).to_string());
  return s;
}

std::string fact_string(const ConstraintFact& f) {
  std::string s = f.ideal.label() + ": " + (f.stable ? "stable" : "unstable");
  if (f.type) s += std::string(", ") + to_string(*f.type);
  if (f.cyclic) s += ", defect " + std::to_string(f.cyclic->defect) +
                     (f.cyclic->exceptional ? ", exceptional vertex" : "");
  if (!f.source.empty()) s += " [" + f.source + "]";
  return s;
}

std::string published_note(const GroupBundle& b, const Solved& s) {
  auto it = b.expected.find(s.chi->id);
  if (it == b.expected.end()) return "";
  const bool same = s.report.set.survivors.size() == 1 && s.matching.size() == 1;
  return it->second + (same ? " (same class)" : " (not matched)");
}

void print_long(const GroupBundle& b, const std::vector<Solved>& all, std::ostream& out) {
  for (const auto& s : all) {
    const auto& r = s.report;
    out << "== " << s.chi->id << " (degree " << s.chi->degree << ", " << s.chi->field_label
        << ") ==\n";
    out << "facts:\n";
    for (const auto& f : s.facts) out << "  " << fact_string(f) << "\n";
    out << "candidates: " << r.set.initial_size() << " -> " << r.set.survivors.size() << "\n";
    out << "gf2: " << r.gf2.equations << " equations, rank " << r.gf2.rank << ", "
        << (r.gf2.consistent ? "consistent" : "inconsistent at " + r.gf2.conflict) << ", "
        << (r.paths_agree ? "paths agree" : "PATHS DISAGREE") << "\n";
    out << "eliminated:\n";
    for (const auto& e : r.set.log)
      out << "  " << e.candidate << " at " << e.ideal << ": " << e.rule << " (" << e.citation
          << ")\n";
    out << "survivors: " << joined(survivor_strings(r)) << "\n";
    if (auto note = published_note(b, s); !note.empty()) out << "published: " << note << "\n";
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  }
}

void print_table(const GroupBundle& b, const std::vector<Solved>& all, std::ostream& out) {
  std::vector<std::array<std::string, 4>> rows{{"char", "degree", "field", "disc"}};
  for (const auto& s : all) {
    const auto surv = survivor_strings(s.report);
    std::string disc = surv.empty()       ? "none"
                       : surv.size() == 1 ? surv[0]
                                          : "undetermined {" + joined(surv) + "}";
    if (surv.size() == 1 && s.matching.size() == 1 && b.expected.at(s.chi->id) != surv[0])
      disc += " = " + b.expected.at(s.chi->id);
    rows.push_back({s.chi->id, std::to_string(s.chi->degree), s.chi->field_label, disc});
  }
  std::array<std::size_t, 3> w{};
  for (const auto& r : rows)
    for (std::size_t i = 0; i < 3; ++i) w[i] = std::max(w[i], r[i].size());
  out << b.name << "\n";
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < 3; ++i) line += r[i] + std::string(w[i] - r[i].size() + 2, ' ');
    out << line << r[3] << "\n";
  }
}

void print_json(const GroupBundle& b, const std::vector<Solved>& all, std::ostream& out) {
  json doc;
  doc["group"] = b.name;
  doc["characters"] = json::array();
  for (const auto& s : all) {
    const auto& r = s.report;
    json c;
    c["id"] = s.chi->id;
    c["degree"] = s.chi->degree;
    c["field"] = s.chi->field_label;
    c["candidates_initial"] = r.set.initial_size();
    c["survivors"] = survivor_strings(r);
    c["determined"] = r.determined;
    c["paths_agree"] = r.paths_agree;
    c["gf2"] = {{"equations", r.gf2.equations}, {"rank", r.gf2.rank},
                {"consistent", r.gf2.consistent}};
    if (auto it = b.expected.find(s.chi->id); it != b.expected.end()) {
      c["published"] = it->second;
      c["matches_published"] = r.set.survivors.size() == 1 && s.matching.size() == 1;
    }
    c["warnings"] = r.warnings;
    json log = json::array();
    for (const auto& e : r.set.log)
      log.push_back({{"candidate", e.candidate},
                     {"ideal", e.ideal},
                     {"rule", e.rule},
                     {"citation", e.citation}});
    c["log"] = std::move(log);
    doc["characters"].push_back(std::move(c));
  }
  out << doc.dump(2) << "\n";
}

int cmd_solve(const std::string& path, const std::string& only, const std::string& format,
              std::ostream& out) {
  const GroupBundle b = load_bundle(path);
  std::vector<Solved> all;
  for (const auto& chi : b.characters) {
    if (!only.empty() && chi.id != only) continue;
    const bool orthogonal = chi.indicator == Indicator::Plus && chi.degree % 2 == 0;
    if (only.empty() && !orthogonal) continue;
    Solved s{&chi, solve_character(b, chi.id), derive_facts(b, chi.id), {}};
    s.matching = matching_expected(b, chi.id, s.report.set);
    all.push_back(std::move(s));
  }
  require(!all.empty(), only.empty() ? "no orthogonally stable characters"
                                     : "unknown character \"" + only + "\"");
  if (format == "table")
    print_table(b, all, out);
  else if (format == "json")
    print_json(b, all, out);
  else
    print_long(b, all, out);
  for (const auto& s : all)
    if (s.report.set.survivors.empty()) return kEmpty;
  return kOk;
}

int cmd_invariant_forms(const std::string& path, std::uint64_t seed, std::ostream& out) {
  const MatrixRep rep = load_rep(path);
  const FormCensus c = classify_invariant_forms(rep, seed);
  out << "field: " << rep.field.name() << "\n";
  out << "dim: " << rep.dim << "\n";
  out << "generators: " << rep.generators.size() << "\n";
  out << "invariant space dimension: " << c.space_dim << "\n";
  out << (c.sampled ? "sampled: " : "examined: ") << c.examined << "\n";
  if (rep.dim % 2 == 0) {
    out << "O+: " << c.plus << "\n";
    out << "O-: " << c.minus << "\n";
  } else {
    out << "disc square: " << c.disc_square << "\n";
    out << "disc nonsquare: " << c.disc_nonsquare << "\n";
  }
  out << "degenerate: " << c.degenerate << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal discriminants of characters of finite groups", "odisc"};
  app.require_subcommand(1);

  std::string path, chi, ideal, format = "long";
  bool no_count = false;
  std::uint64_t seed = 1;

  auto* cf = app.add_subcommand("classify-form", "Discriminant and O+/O- type of a form");
  cf->add_option("form", path, "form JSON file")->required();
  cf->add_flag("--no-count", no_count, "skip the isotropic vector count");

  auto* st = app.add_subcommand("stability", "Orthogonal stability of a reduction");
  auto* md = app.add_subcommand("mod-disc", "Discriminant of a stable reduction");
  for (auto* sub : {st, md}) {
    sub->add_option("bundle", path, "group bundle JSON file")->required();
    sub->add_option("--char", chi, "ordinary character id")->required();
    sub->add_option("--ideal", ideal, "prime ideal label")->required();
  }

  auto* sv = app.add_subcommand("solve", "Ordinary discriminants from modular data");
  sv->add_option("bundle", path, "group bundle JSON file")->required();
  sv->add_option("--char", chi, "only this character");
  sv->add_option("--format", format, "long, table or json")
      ->check(CLI::IsMember({"long", "table", "json"}));

  auto* inv = app.add_subcommand("invariant-forms", "Census of invariant quadratic forms");
  inv->add_option("rep", path, "matrix representation JSON file")->required();
  inv->add_option("--seed", seed, "sampling seed for large spaces");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (cf->parsed()) return cmd_classify_form(path, !no_count, out);
    if (st->parsed()) return cmd_stability(path, chi, ideal, out);
    if (md->parsed()) return cmd_mod_disc(path, chi, ideal, out);
    if (sv->parsed()) return cmd_solve(path, chi, format, out);
    if (inv->parsed()) return cmd_invariant_forms(path, seed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::BudgetExceeded: return kBudget;
      case ErrorKind::Inconsistent: return kEmpty;
      default: return kBadInput;
    }
  }
  return kBadInput;
}

}  // namespace odisc::cli
