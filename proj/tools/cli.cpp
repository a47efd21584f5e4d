#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "latknot/distortion.hpp"
#include "latknot/explorer.hpp"
#include "latknot/io.hpp"
#include "latknot/oracle.hpp"
#include "latknot/reduction.hpp"
#include "latknot/torus.hpp"

namespace latknot::cli {

namespace {

// Bad input that is the caller's fault rather than a failed check.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  KnotInput input;
  LatticeKnot knot;
};

KnotInput read_input(const std::string& path) {
  const std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_text_file(path);
  return parse_knot_input(text);
}

Loaded load(const std::string& path) {
  KnotInput input = read_input(path);
  LatticeKnot knot = build_knot(input);
  return {std::move(input), std::move(knot)};
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::string describe(const LatticeKnot& knot) {
  return "simple, closed, " + std::to_string(knot.stick_count()) + " sticks, length " +
         std::to_string(knot.edge_length());
}

std::string flag(bool match) { return match ? "MATCH" : "MISMATCH"; }

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  int p = 0;
  std::string output;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  if (a.p < 2) throw UsageError("--p must be at least 2");
  emit(a.output, tabulation_to_json(generate_torus_tabulation(a.p)), out);
  return kExitOk;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::string input;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  const Loaded l = load(a.input);
  out << describe(l.knot) << '\n';
  if (!l.input.tabulation) return kExitOk;
  const auto p = detect_torus_parameter(*l.input.tabulation);
  if (!p) return kExitOk;

  const StructureReport report = verify_torus_structure(*p);
  out << "torus conformation T(" << *p << ',' << *p + 1 << ")\n";
  for (const auto& c : report.checks) {
    out << (c.passed ? "  PASS " : "  FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return report.all_passed() ? kExitOk : kExitFailure;
}

// -------------------------------------------------------------- distortion

struct DistortionArgs {
  std::string input;
  bool pairs = false;
  bool oracle = false;
  unsigned threads = 1;
};

int cmd_distortion(const DistortionArgs& a, std::ostream& out, std::ostream& err) {
  const Loaded l = load(a.input);
  const DistortionReport report = vertex_distortion(l.knot, ScanOptions{a.threads});
  out << report.value.to_fraction_string() << '\n';
  if (a.pairs) {
    for (const auto& [i, j] : report.realizing_pairs) {
      out << "pair " << i << ' ' << j << ' ' << to_string(l.knot.vertex(i)) << ' ' << to_string(l.knot.vertex(j))
          << " arc " << knot_distance(l.knot, i, j) << " l1 " << l1_distance(l.knot.vertex(i), l.knot.vertex(j))
          << '\n';
    }
  }
  if (a.oracle) {
    const DistortionReport check = oracle_vertex_distortion(l.knot);
    if (check.value != report.value || check.realizing_pairs != report.realizing_pairs) {
      err << "oracle disagrees: " << check.value.to_fraction_string() << " with "
          << check.realizing_pairs.size() << " realizing pairs\n";
      return kExitFailure;
    }
    out << "oracle agrees\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------ reduce

struct ReduceArgs {
  std::string input;
  std::optional<std::size_t> stick;
  std::string direction = "with";
  Coord amount = 1;
  bool check_irreducible = false;
  std::string output;
  std::string format = "csv";
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  const Loaded l = load(a.input);
  if (a.check_irreducible) {
    const IrreducibilityReport report = is_irreducible(l.knot);
    if (report.irreducible) {
      out << "irreducible\n";
    } else {
      out << "reducible\n";
      for (const auto& w : report.witnesses) {
        out << "  stick " << w.stick << ' ' << to_string(w.direction) << " up to " << w.max_amount << '\n';
      }
    }
    return kExitOk;
  }
  if (!a.stick) throw UsageError("reduce needs --stick or --check-irreducible");
  ReductionDirection dir;
  try {
    dir = parse_reduction_direction(a.direction);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const ReductionOutcome outcome = apply_reduction(l.knot, {*a.stick, dir, a.amount});
  if (!outcome.ok()) {
    err << to_string(outcome.failure) << ": " << outcome.message << '\n';
    if (outcome.collision_point) err << "collision at " << to_string(*outcome.collision_point) << '\n';
    return outcome.failure == ReductionFailure::invalid_move ? kExitUsage : kExitFailure;
  }
  emit(a.output, a.format == "json" ? knot_to_json(*outcome.knot) : knot_to_csv(*outcome.knot), out);
  return kExitOk;
}

// ------------------------------------------------------------------ export

struct ExportArgs {
  std::string input;
  std::string format = "obj";
  std::string output;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  const Loaded l = load(a.input);
  std::string text;
  if (a.format == "obj") {
    text = knot_to_obj(l.knot);
  } else if (a.format == "csv") {
    text = knot_to_csv(l.knot);
  } else {
    text = knot_to_json(l.knot);
  }
  emit(a.output, text, out);
  return kExitOk;
}

// ------------------------------------------------------------------ survey

struct SurveyArgs {
  int min_p = 2;
  int max_p = 12;
  int cap = 24;
  bool even_formulas = false;
  unsigned threads = 1;
};

int cmd_survey(const SurveyArgs& a, std::ostream& out) {
  if (a.max_p > a.cap) {
    throw UsageError("--max-p " + std::to_string(a.max_p) + " exceeds the cap " + std::to_string(a.cap));
  }
  if (a.min_p < 2 || a.min_p > a.max_p) throw UsageError("need 2 <= --min-p <= --max-p");
  out << "p,edge_length,stick_count,delta_v,even_lower_bound,even_lower_bound_flag,odd_value,odd_value_flag,"
         "inner_pair,inner_pair_flag\n";
  for (int p = a.min_p; p <= a.max_p; ++p) {
    if (a.even_formulas && p % 2 != 0) continue;
    const LatticeKnot knot = build_knot(generate_torus_tabulation(p));
    const Rational value = vertex_distortion(knot, ScanOptions{a.threads}).value;
    const TorusFormulas f = torus_distortion_formulas(p);
    out << p << ',' << knot.edge_length() << ',' << knot.stick_count() << ',' << value << ',' << f.even_lower_bound
        << ',' << flag(f.even_lower_bound == value) << ',' << f.odd_value << ',' << flag(f.odd_value == value) << ','
        << f.inner_pair << ',' << flag(f.inner_pair == value) << '\n';
  }
  return kExitOk;
}

// --------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int max_length = 8;
  int cap = kDefaultEnumerationCap;
  bool distortion_one = false;
  std::string out_dir;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  try {
    if (!a.distortion_one) {
      out << "length,classes\n";
      for (const auto& [length, count] : conformation_counts(a.max_length, a.cap)) {
        out << length << ',' << count << '\n';
      }
      return kExitOk;
    }
    const auto found = classify_distortion_one(a.max_length, a.cap);
    if (!a.out_dir.empty()) std::filesystem::create_directories(a.out_dir);
    out << "length,index,sticks,structure,file\n";
    bool all_ok = true;
    std::size_t index = 0;
    std::size_t prev_length = 0;
    for (const auto& c : found) {
      const std::size_t length = c.knot.edge_length();
      index = length == prev_length ? index + 1 : 1;
      prev_length = length;
      std::ostringstream name;
      name << "delta_one_len" << std::setw(2) << std::setfill('0') << length << '_' << index << ".csv";
      if (!a.out_dir.empty()) write_text_file(std::filesystem::path(a.out_dir) / name.str(), knot_to_csv(c.knot));
      out << length << ',' << index << ',' << c.knot.stick_count() << ',' << (c.structure.ok() ? "ok" : "violated")
          << ',' << name.str() << '\n';
      all_ok = all_ok && c.structure.ok();
    }
    return all_ok ? kExitOk : kExitFailure;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex distortion of cubic-lattice knots", "latknot"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write the T(p,p+1) tabulation as JSON");
  generate->add_option("--p,-p", gen.p, "Torus parameter p >= 2")->required();
  generate->add_option("-o,--output", gen.output, "Output file (default stdout)");

  ValidateArgs val;
  auto* validate = app.add_subcommand("validate", "Check that a tabulation JSON or vertex CSV is a lattice knot");
  validate->add_option("input", val.input, "Knot file, or - for stdin")->required();

  DistortionArgs dist;
  auto* distortion = app.add_subcommand("distortion", "Exact vertex distortion");
  distortion->add_option("input", dist.input, "Knot file, or - for stdin")->required();
  distortion->add_flag("--pairs", dist.pairs, "List every realizing vertex pair");
  distortion->add_flag("--oracle", dist.oracle, "Cross-check against the breadth-first-search oracle");
  distortion->add_option("--threads", dist.threads, "Scan threads (0 = all cores)");

  ReduceArgs red;
  auto* reduce = app.add_subcommand("reduce", "Apply a stick reduction or test irreducibility");
  reduce->add_option("input", red.input, "Knot file, or - for stdin")->required();
  reduce->add_option("--stick", red.stick, "Index of the stick to shorten");
  reduce->add_option("--direction", red.direction, "with | against the orientation")
      ->check(CLI::IsMember({"with", "against"}));
  reduce->add_option("--amount", red.amount, "Units to remove")->check(CLI::PositiveNumber);
  reduce->add_flag("--check-irreducible", red.check_irreducible, "Report whether any reduction applies");
  reduce->add_option("-o,--output", red.output, "Output file (default stdout)");
  reduce->add_option("--format", red.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "Write a knot as OBJ, CSV or canonical JSON");
  export_cmd->add_option("input", exp.input, "Knot file, or - for stdin")->required();
  export_cmd->add_option("--format", exp.format, "obj | csv | json")->check(CLI::IsMember({"obj", "csv", "json"}));
  export_cmd->add_option("-o,--output", exp.output, "Output file (default stdout)");

  SurveyArgs sur;
  auto* survey = app.add_subcommand("survey", "Distortion of T(p,p+1) against the closed-form candidates, as CSV");
  survey->add_option("--max-p", sur.max_p, "Largest p");
  survey->add_option("--min-p", sur.min_p, "Smallest p");
  survey->add_option("--cap", sur.cap, "Upper limit accepted for --max-p");
  survey->add_flag("--even-formulas", sur.even_formulas, "Only even p");
  survey->add_option("--threads", sur.threads, "Scan threads (0 = all cores)");

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Count lattice polygons up to symmetry");
  enumerate->add_option("--max-length", en.max_length, "Largest edge length (even)");
  enumerate->add_option("--cap", en.cap, "Upper limit accepted for --max-length");
  enumerate->add_flag("--distortion-one", en.distortion_one, "List the conformations of distortion one");
  enumerate->add_option("--out-dir", en.out_dir, "Write one vertex CSV per distortion-one conformation");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*validate) return cmd_validate(val, out);
    if (*distortion) return cmd_distortion(dist, out, err);
    if (*reduce) return cmd_reduce(red, out, err);
    if (*export_cmd) return cmd_export(exp, out);
    if (*survey) return cmd_survey(sur, out);
    if (*enumerate) return cmd_enumerate(en, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const KnotError& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace latknot::cli
