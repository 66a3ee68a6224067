#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rhodesign/alternating.hpp"
#include "rhodesign/constructions.hpp"
#include "rhodesign/decomposition.hpp"
#include "rhodesign/error.hpp"
#include "rhodesign/json_io.hpp"
#include "rhodesign/labeling.hpp"
#include "rhodesign/oracle.hpp"

namespace rhodesign::cli {

enum exit_code : int { ok = 0, semantic_failure = 1, bad_arguments = 2 };

namespace detail {

struct Options {
  std::string in;
  std::string out;
  bool quiet = false;

  std::string family;
  std::vector<int> m;
  std::vector<int> n;
  std::optional<Label> p;
  std::optional<Label> r;

  std::string kind;
  std::optional<Label> t;
  Label k = 0;
  int x = 1;
  bool full = false;
  bool count_only = false;
  bool up_to_translation = false;
  std::optional<std::size_t> limit;
  std::size_t max_vertices = 12;
  Label max_t = 40;

  std::string pattern;
  std::vector<Label> a;
  std::string form;
};

// Graph, labeling and sides read from a document: either a construction
// result, a {"graph", "labeling", "bipartition"?} object, or a bare graph.
struct Subject {
  Graph graph;
  std::optional<Labeling> labeling;
  std::optional<Bipartition> sides;

  const Labeling& require_labeling() const {
    require(labeling.has_value(), errc::invalid_parameter, "input has no labeling");
    return *labeling;
  }
  Bipartition bip() const { return sides ? *sides : bipartition(graph); }
};

inline json read_document(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(path);
    require(file.good(), errc::invalid_parameter, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  json doc = json::parse(text, nullptr, false);
  require(!doc.is_discarded(), errc::invalid_parameter, "input is not valid JSON");
  require(doc.is_object(), errc::invalid_parameter, "input must be a JSON object");
  return doc;
}

inline Subject read_subject(const json& doc) {
  if (!doc.contains("graph")) return Subject{graph_from_json(doc), std::nullopt, std::nullopt};
  Subject s{graph_from_json(doc.at("graph")), std::nullopt, std::nullopt};
  if (doc.contains("labeling")) {
    s.labeling = labeling_from_json(doc.at("labeling"));
    require_complete(s.graph, *s.labeling);
  }
  if (doc.contains("bipartition")) s.sides = bipartition_from_json(s.graph, doc.at("bipartition"));
  return s;
}

inline json subject_json(const Subject& s, const Labeling& f) {
  json out = {{"graph", to_json(s.graph)}, {"labeling", to_json(f)}};
  if (s.sides) out["bipartition"] = to_json(*s.sides);
  return out;
}

inline std::optional<CheckKind> kind_or_default(const std::string& name, CheckKind fallback) {
  if (name.empty()) return fallback;
  return parse_check_kind(name);
}

struct Outcome {
  json body;
  int code = exit_code::ok;
};

inline Outcome construct(const Options& o) {
  require(!o.m.empty(), errc::invalid_parameter, "--m is required");
  auto single_m = [&] {
    require(o.m.size() == 1, errc::invalid_parameter, "--m takes one value for this family");
    return o.m.front();
  };
  ConstructionResult res;
  if (o.family == "cycle") {
    require(o.n.empty(), errc::invalid_parameter, "--n does not apply to a bare cycle");
    const int m = single_m();
    const Label p = o.p.value_or(0);
    res = label_even_cycle(m, p, o.r.value_or(2 * p + 2 * m + 1));
  } else if (o.family == "cmn") {
    require(o.n.size() == 1, errc::invalid_parameter, "--n takes one value for cmn");
    require(!o.p && !o.r, errc::invalid_parameter, "--p/--r apply to the cycle family only");
    res = label_cycle_one_pendant(single_m(), o.n.front());
  } else if (o.family == "cmn2") {
    require(o.n.size() == 2, errc::invalid_parameter, "--n takes two values for cmn2");
    require(!o.p && !o.r, errc::invalid_parameter, "--p/--r apply to the cycle family only");
    res = label_cycle_two_pendants(single_m(), o.n[0], o.n[1]);
  } else if (o.family == "chain") {
    require(o.n.size() == o.m.size(), errc::invalid_parameter, "--m and --n need equal lengths");
    require(!o.p && !o.r, errc::invalid_parameter, "--p/--r apply to the cycle family only");
    std::vector<CycleSpec> specs;
    for (std::size_t i = 0; i < o.m.size(); ++i) specs.push_back(CycleSpec{o.m[i], o.n[i]});
    res = label_chain(specs);
  } else {
    fail(errc::invalid_parameter, "unknown family '" + o.family + "'");
  }
  return {to_json(res)};
}

inline Outcome verify(const Options& o, const json& doc) {
  const Subject s = read_subject(doc);
  const Labeling& f = s.require_labeling();
  auto kind = kind_or_default(o.kind, CheckKind::rho);
  require(kind.has_value(), errc::invalid_parameter, "unknown kind '" + o.kind + "'");
  const Label t = o.t.value_or(f.bound());
  VerificationReport report = check(*kind, s.graph, f, s.bip(), t);
  return {to_json(report), report.pass ? exit_code::ok : exit_code::semantic_failure};
}

inline Outcome shift_verb(const Options& o, const json& doc) {
  const Subject s = read_subject(doc);
  const Labeling& f = s.require_labeling();
  const Label t = o.t.value_or(f.bound());
  return {subject_json(s, shift(f, o.k, t))};
}

inline Outcome windows(const Options& o, const json& doc) {
  const Subject s = read_subject(doc);
  const Labeling& f = s.require_labeling();
  return {to_json(uniform_shift_windows(s.graph, f, s.bip(), o.t.value_or(f.bound())))};
}

// A document with "blocks" (and "v") is checked as a finished decomposition;
// otherwise the labeling is turned into base blocks and developed.
inline Outcome decompose(const Options& o, const json& doc) {
  const Subject s = read_subject(doc);
  const bool keep = o.full && !o.quiet;
  DecompositionCertificate cert;
  if (doc.contains("blocks")) {
    require(doc.contains("v"), errc::invalid_parameter, "blocks need \"v\"");
    cert = verify_decomposition(blocks_from_json(doc.at("blocks")), doc.at("v").get<Label>(),
                                s.graph);
  } else {
    const BaseBlockSet bb = base_blocks(s.graph, s.require_labeling(), s.bip(), o.x);
    cert = develop(bb, keep);
  }
  return {to_json(cert, keep), cert.pass ? exit_code::ok : exit_code::semantic_failure};
}

inline Outcome oracle(const Options& o, const json& doc) {
  const Subject s = read_subject(doc);
  auto kind = kind_or_default(o.kind, CheckKind::rho_bar);
  require(kind.has_value(), errc::invalid_parameter, "unknown kind '" + o.kind + "'");
  require(o.t.has_value(), errc::invalid_parameter, "--t is required");
  SearchSpec spec{s.graph, *o.t, *kind, s.sides, o.limit, o.up_to_translation, o.max_vertices,
                  o.max_t};
  if (o.count_only) return {json{{"count", count_labelings(spec)}}};
  json labelings = json::array();
  const std::vector<Labeling> found = enumerate_labelings(spec);
  for (const Labeling& f : found) labelings.push_back(f.values());
  return {json{{"count", found.size()}, {"t", *o.t}, {"kind", std::string(to_string(*kind))},
               {"labelings", labelings}}};
}

inline Outcome alternating(const Options& o, const json* doc) {
  SignedDifferenceSequence seq;
  if (doc) {
    seq = sequence_from_json(*doc);
  } else {
    auto pattern = parse_sign_pattern(o.pattern);
    require(pattern.has_value(), errc::invalid_parameter, "--pattern must be pos-first or neg-first");
    require(o.r.has_value(), errc::invalid_parameter, "--r is required");
    seq = SignedDifferenceSequence{*pattern, o.a, *o.r, o.k};
  }
  LabelForm form = canonical_form(seq.pattern);
  if (o.form == "raw") form = LabelForm::raw;
  else if (o.form == "wrapped") form = LabelForm::wrapped;
  else require(o.form.empty(), errc::invalid_parameter, "--form must be raw or wrapped");

  const AlternatingPath path = alternating_path(seq, form);
  const Labeling labels(emit_path_labels(seq, form), seq.base - 1);
  json body = {{"sequence", to_json(seq)},
               {"positions", to_json(positions(seq))},
               {"form", form == LabelForm::raw ? "raw" : "wrapped"},
               {"labels", labels.values()},
               {"graph", to_json(path.graph)},
               {"labeling", to_json(labels)},
               {"bipartition", to_json(path.sides)}};
  if (check_rho_bar(path.graph, path.labeling, seq.base - 1).pass) {
    body["windows"] = to_json(alternating_shift_windows(seq));
  }
  return {body};
}

inline int exit_for(errc code) {
  switch (code) {
    case errc::invalid_parameter:
    case errc::incomplete_labeling: return exit_code::bad_arguments;
    default: return exit_code::semantic_failure;
  }
}

}  // namespace detail

/// Runs one command. The artifact goes to `out` (or --out), diagnostics to
/// `err`; errors are reported as {"error", "message"} JSON.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  detail::Options o;
  CLI::App app{"Uniformly ordered rho-labelings and cyclic decompositions", "rhodesign"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto io = [&](CLI::App* sub, bool reads_input) {
    if (reads_input) sub->add_option("--in", o.in, "Input JSON file (default: stdin)");
    sub->add_option("--out", o.out, "Write the result here instead of stdout");
    sub->add_flag("--quiet", o.quiet, "Omit the developed block list");
  };

  auto* construct = app.add_subcommand("construct", "Build a labeling for a graph family");
  io(construct, false);
  construct->add_option("--family", o.family, "cycle | cmn | cmn2 | chain")
      ->required()
      ->check(CLI::IsMember({"cycle", "cmn", "cmn2", "chain"}));
  construct->add_option("--m", o.m, "Cycle length(s), comma separated")->required()->delimiter(',');
  construct->add_option("--n", o.n, "Path length(s), comma separated")->delimiter(',');
  construct->add_option("--p", o.p, "Difference offset (cycle family)");
  construct->add_option("--r", o.r, "Modulus (cycle family)");

  auto* verify = app.add_subcommand("verify", "Check a labeling");
  io(verify, true);
  verify->add_option("--kind", o.kind, "rho-bar | rho | rho-plus | uniformly-ordered");
  verify->add_option("--t", o.t, "Label bound (default: the labeling's t)");

  auto* shift = app.add_subcommand("shift", "Apply a k-shift to a labeling");
  io(shift, true);
  shift->add_option("--k", o.k, "Shift amount")->required();
  shift->add_option("--t", o.t, "Label bound (default: the labeling's t)");

  auto* windows = app.add_subcommand("windows", "Shift windows of a rho-bar labeling");
  io(windows, true);
  windows->add_option("--t", o.t, "Label bound (default: the labeling's t)");

  auto* decompose = app.add_subcommand("decompose", "Cyclic decomposition from a rho+-labeling");
  io(decompose, true);
  decompose->add_option("--x", o.x, "Number of base blocks")->check(CLI::PositiveNumber);
  decompose->add_flag("--full", o.full, "Include every developed block");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive labeling search");
  io(oracle, true);
  oracle->add_option("--kind", o.kind, "rho-bar | rho | rho-plus | uniformly-ordered");
  oracle->add_option("--t", o.t, "Label bound")->required();
  oracle->add_flag("--count-only", o.count_only, "Report only the number of labelings");
  oracle->add_option("--limit", o.limit, "Stop after this many");
  oracle->add_flag("--up-to-translation", o.up_to_translation, "Pin vertex 0 to label 0");
  oracle->add_option("--max-vertices", o.max_vertices, "Vertex cap");
  oracle->add_option("--max-t", o.max_t, "Label bound cap");

  auto* alternating = app.add_subcommand("alternating", "Path labels from a difference sequence");
  io(alternating, true);
  alternating->add_option("--pattern", o.pattern, "pos-first | neg-first");
  alternating->add_option("--a", o.a, "Magnitudes, comma separated")->delimiter(',');
  alternating->add_option("--r", o.r, "Base");
  alternating->add_option("--k", o.k, "Shift");
  alternating->add_option("--form", o.form, "raw | wrapped (default: the type's own form)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return exit_code::bad_arguments;
  }

  detail::Outcome result;
  try {
    if (construct->parsed()) {
      result = detail::construct(o);
    } else if (alternating->parsed() && o.in.empty()) {
      result = detail::alternating(o, nullptr);
    } else {
      const json doc = detail::read_document(o.in, in);
      if (verify->parsed()) result = detail::verify(o, doc);
      else if (shift->parsed()) result = detail::shift_verb(o, doc);
      else if (windows->parsed()) result = detail::windows(o, doc);
      else if (decompose->parsed()) result = detail::decompose(o, doc);
      else if (oracle->parsed()) result = detail::oracle(o, doc);
      else result = detail::alternating(o, &doc);
    }
  } catch (const error& e) {
    json body = {{"error", std::string(to_string(e.code()))}, {"message", e.message()}};
    if (e.code() == errc::unsupported_parameters) {
      body["hint"] = "outside the constructive range; try the oracle verb";
    }
    err << dump(body);
    return detail::exit_for(e.code());
  } catch (const json::exception& e) {
    err << dump({{"error", "invalid-parameter"}, {"message", e.what()}});
    return exit_code::bad_arguments;
  }

  const std::string text = dump(result.body);
  if (o.out.empty() || o.out == "-") {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << dump({{"error", "invalid-parameter"}, {"message", "cannot write " + o.out}});
      return exit_code::bad_arguments;
    }
    file << text;
  }
  return result.code;
}

}  // namespace rhodesign::cli
