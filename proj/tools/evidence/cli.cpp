#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "gds/decision.hpp"
#include "gds/evidence_io.hpp"
#include "gds/fusion.hpp"
#include "gds/sweep.hpp"

namespace gds::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fmt_complex4(const Complex& z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f%+.4fi", z.re(), z.im());
  return buf;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

const EvidenceBody& body_by_name(const EvidenceFile& file, const std::string& name) {
  for (const auto& body : file.bodies) {
    if (body.name == name) {
      return body;
    }
  }
  throw ParseError("unknown body '" + name + "'");
}

/// Bodies in the order requested, or all bodies in file order.
std::vector<const Cbba*> select_bodies(const EvidenceFile& file,
                                       const std::string& names_csv) {
  std::vector<const Cbba*> out;
  if (names_csv.empty()) {
    for (const auto& body : file.bodies) {
      out.push_back(&body.cbba);
    }
    return out;
  }
  for (const auto& name : split_csv(names_csv)) {
    out.push_back(&body_by_name(file, name).cbba);
  }
  return out;
}

Proposition parse_prop(const Frame& frame, const std::string& labels_csv) {
  if (labels_csv.empty()) {
    return frame.empty_set();
  }
  return frame.subset_of(split_csv(labels_csv));
}

std::string frame_display(const Frame& frame) {
  std::string out = "{";
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += frame.labels()[i];
  }
  return out + "}";
}

void warn_magnitudes(const Cbba& fused, std::ostream& err) {
  if (!fused.magnitude_warning()) {
    return;
  }
  for (const auto& [bits, z] : fused.mass_map()) {
    if (modulus(z) > 1.0 + kMagnitudeTol) {
      err << "warning: fused mass M(" << fused.frame().subset(bits).label()
          << ") has magnitude " << fmt4(modulus(z)) << " > 1\n";
    }
  }
}

ojson complex_json(const Complex& z) {
  return {{"re", z.re()}, {"im", z.im()}};
}

int cmd_validate(const EvidenceFile& file, std::ostream& out) {
  out << "frame: " << frame_display(file.frame) << "\n";
  for (const auto& body : file.bodies) {
    out << body.name << ": valid (" << focal_elements(body.cbba).size()
        << " focal elements)\n";
  }
  return 0;
}

int cmd_fuse(const EvidenceFile& file, const std::string& bodies_csv,
             double singularity_tol, bool as_json, std::ostream& out,
             std::ostream& err) {
  const auto selected = select_bodies(file, bodies_csv);
  std::vector<Cbba> ms;
  ms.reserve(selected.size());
  for (const Cbba* m : selected) {
    ms.push_back(*m);
  }
  const Cbba fused = combine_all(ms, singularity_tol);
  warn_magnitudes(fused, err);
  if (as_json) {
    ojson masses = ojson::object();
    for (const auto& [bits, z] : fused.mass_map()) {
      masses[file.frame.subset(bits).label()] = complex_json(z);
    }
    ojson root = {{"frame", file.frame.labels()},
                  {"masses", std::move(masses)},
                  {"magnitude_warning", fused.magnitude_warning()}};
    out << root.dump(2) << "\n";
    return 0;
  }
  for (const auto& [bits, z] : fused.mass_map()) {
    out << "M(" << file.frame.subset(bits).label() << ") = " << fmt_complex4(z)
        << "\n";
  }
  return 0;
}

int cmd_support(const EvidenceFile& file, const std::string& body_name,
                const std::string& prop_csv, bool plausibility_mode,
                bool as_json, std::ostream& out) {
  const EvidenceBody& body = body_by_name(file, body_name);
  const Proposition prop = parse_prop(file.frame, prop_csv);
  const double value = plausibility_mode ? complex_plausibility(body.cbba, prop)
                                         : complex_belief(body.cbba, prop);
  if (as_json) {
    ojson root = {{"proposition", prop.label()}, {"value", value}};
    out << root.dump(2) << "\n";
    return 0;
  }
  out << (plausibility_mode ? "Pl_c" : "Bel_c") << "({" << prop.label()
      << "}) = " << fmt4(value) << "\n";
  return 0;
}

int cmd_conflict(const EvidenceFile& file, const std::string& bodies_csv,
                 bool as_json, std::ostream& out) {
  const auto selected = select_bodies(file, bodies_csv);
  if (selected.size() != 2) {
    throw ParseError("conflict: needs exactly two bodies (got " +
                     std::to_string(selected.size()) + ")");
  }
  const ConflictReport report = conflict(*selected[0], *selected[1]);
  if (as_json) {
    ojson root = {{"k", complex_json(report.k)},
                  {"k_magnitude", report.k_magnitude},
                  {"singular", report.singular}};
    out << root.dump(2) << "\n";
    return 0;
  }
  out << "K = " << fmt_complex4(report.k) << "\n";
  out << "|K| = " << fmt4(report.k_magnitude) << "\n";
  return 0;
}

int cmd_decide(const EvidenceFile& file, double singularity_tol, bool as_json,
               std::ostream& out, std::ostream& err) {
  std::vector<Cbba> ms;
  ms.reserve(file.bodies.size());
  for (const auto& body : file.bodies) {
    ms.push_back(body.cbba);
  }
  const Cbba fused = combine_all(ms, singularity_tol);
  warn_magnitudes(fused, err);
  const DecisionResult result = decide(fused);
  if (as_json) {
    ojson scores = ojson::object();
    for (const auto& [prop, score] : result.scores) {
      scores[prop.label()] = score;
    }
    ojson root = {{"winner", result.winner.label()},
                  {"score", complex_belief(fused, result.winner)},
                  {"tie", result.tie},
                  {"scores", std::move(scores)}};
    out << root.dump(2) << "\n";
    return 0;
  }
  out << "winner = {" << result.winner.label() << "}\n";
  out << "score = " << fmt4(complex_belief(fused, result.winner)) << "\n";
  out << "tie = " << (result.tie ? "yes" : "no") << "\n";
  out << "scores:\n";
  for (const auto& [prop, score] : result.scores) {
    out << "  {" << prop.label() << "} = " << fmt4(score) << "\n";
  }
  return 0;
}

int cmd_sweep(std::size_t xsteps, std::size_t ysteps, const std::string& out_path,
              const std::string& m2_path, const std::string& m2_body, double tol,
              std::ostream& out) {
  SweepSpec spec;
  spec.x_steps = xsteps;
  spec.y_steps = ysteps;
  if (!m2_path.empty()) {
    const EvidenceFile file = parse_evidence_file(m2_path, tol);
    spec.reference = m2_body.empty() ? file.bodies.front().cbba
                                     : body_by_name(file, m2_body).cbba;
  }
  const std::vector<SweepCell> cells = sweep(spec);
  std::ofstream csv(out_path);
  if (!csv) {
    throw Error("sweep: cannot open '" + out_path + "' for writing");
  }
  write_sweep_csv(csv, cells);
  const auto feasible =
      std::count_if(cells.begin(), cells.end(),
                    [](const SweepCell& c) { return c.feasible; });
  out << "sweep: " << cells.size() << " cells (" << feasible
      << " feasible) written to " << out_path << "\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex-valued evidence fusion toolkit"};
  app.require_subcommand(1);

  std::string file_path;
  std::string bodies_csv;
  std::string body_name;
  std::string prop_csv;
  std::string out_path;
  std::string m2_path;
  std::string m2_body;
  double tol = 1e-3;
  double singularity_tol = kSingularityTol;
  bool as_json = false;
  std::size_t xsteps = 201;
  std::size_t ysteps = 401;

  const auto add_file_arg = [&](CLI::App* sub) {
    sub->add_option("file", file_path, "evidence JSON file")->required();
    sub->add_option("--tol", tol,
                    "normalization tolerance for file validation");
  };

  CLI::App* validate = app.add_subcommand("validate", "validate evidence bodies");
  add_file_arg(validate);

  CLI::App* fuse = app.add_subcommand("fuse", "combine evidence bodies");
  add_file_arg(fuse);
  fuse->add_option("--bodies", bodies_csv, "comma-separated body names (default: all)");
  fuse->add_option("--singularity-tol", singularity_tol,
                   "reject fusion when |1-K| falls below this");
  fuse->add_flag("--json", as_json, "full-precision JSON output");

  CLI::App* bel = app.add_subcommand("bel", "complex belief of a proposition");
  add_file_arg(bel);
  bel->add_option("--body", body_name, "body name")->required();
  bel->add_option("--prop", prop_csv, "comma-separated element labels")->required();
  bel->add_flag("--json", as_json, "full-precision JSON output");

  CLI::App* pl = app.add_subcommand("pl", "complex plausibility of a proposition");
  add_file_arg(pl);
  pl->add_option("--body", body_name, "body name")->required();
  pl->add_option("--prop", prop_csv, "comma-separated element labels")->required();
  pl->add_flag("--json", as_json, "full-precision JSON output");

  CLI::App* conflict_cmd = app.add_subcommand("conflict", "conflict coefficient");
  add_file_arg(conflict_cmd);
  conflict_cmd->add_option("--bodies", bodies_csv,
                           "comma-separated pair of body names");
  conflict_cmd->add_flag("--json", as_json, "full-precision JSON output");

  CLI::App* decide_cmd =
      app.add_subcommand("decide", "fuse all bodies, pick max-belief singleton");
  add_file_arg(decide_cmd);
  decide_cmd->add_option("--singularity-tol", singularity_tol,
                         "reject fusion when |1-K| falls below this");
  decide_cmd->add_flag("--json", as_json, "full-precision JSON output");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "conflict surface over the (x, y) family");
  sweep_cmd->add_option("--xsteps", xsteps, "grid nodes across [0, 1]");
  sweep_cmd->add_option("--ysteps", ysteps, "grid nodes across [-1, 1]");
  sweep_cmd->add_option("--out", out_path, "output CSV path")->required();
  sweep_cmd->add_option("--m2", m2_path, "evidence file with the reference body");
  sweep_cmd->add_option("--body", m2_body, "reference body name (default: first)");
  sweep_cmd->add_option("--tol", tol, "normalization tolerance for --m2");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));

    if (sweep_cmd->parsed()) {
      return cmd_sweep(xsteps, ysteps, out_path, m2_path, m2_body, tol, out);
    }

    const EvidenceFile file = parse_evidence_file(file_path, tol);
    if (validate->parsed()) {
      return cmd_validate(file, out);
    }
    if (fuse->parsed()) {
      return cmd_fuse(file, bodies_csv, singularity_tol, as_json, out, err);
    }
    if (bel->parsed()) {
      return cmd_support(file, body_name, prop_csv, false, as_json, out);
    }
    if (pl->parsed()) {
      return cmd_support(file, body_name, prop_csv, true, as_json, out);
    }
    if (conflict_cmd->parsed()) {
      return cmd_conflict(file, bodies_csv, as_json, out);
    }
    if (decide_cmd->parsed()) {
      return cmd_decide(file, singularity_tol, as_json, out, err);
    }
    err << "error: no subcommand\n";
    return 1;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  } catch (const ConflictSingularity& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const TotalConflict& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gds::cli
