// Copyright 2026 The chanpur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chanpur/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "chanpur/cli/commands.hpp"
#include "chanpur/cli/manifest.hpp"
#include "chanpur/error.hpp"

#ifndef CHANPUR_VERSION
#define CHANPUR_VERSION "unknown"
#endif

namespace chanpur::cli {

namespace {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) {
    return kExitParse;
  }
  if (dynamic_cast<const ConvergenceError*>(&e)) {
    return kExitConvergence;
  }
  if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const DimensionError*>(&e) ||
      dynamic_cast<const UndefinedCombinationError*>(&e) ||
      dynamic_cast<const UnderdeterminedError*>(&e)) {
    return kExitValidation;
  }
  return kExitFailure;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path);
  }
  out << text;
  if (!out) {
    throw Error("failed writing " + path);
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_sweep_options(CLI::App* sub, SweepSpec& spec, std::string& shots) {
  sub->add_option("--family", spec.family, "depolarizing, bit_flip or phase_flip")
      ->capture_default_str();
  sub->add_option("--start", spec.start, "First grid value of p")->capture_default_str();
  sub->add_option("--stop", spec.stop, "Last grid value of p")->capture_default_str();
  sub->add_option("--steps", spec.steps, "Number of grid points, ends included")
      ->capture_default_str();
  sub->add_option("--points", spec.points, "Explicit comma-separated grid")->delimiter(',');
  sub->add_option("--visibility", spec.visibility, "Interference visibility in [0, 1]")
      ->capture_default_str();
  sub->add_option("--shots", shots, "Shots per tomography setting, or \"exact\"")
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-Fredkin channel purification simulator and analysis toolkit", "chanpur"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", CHANPUR_VERSION);

  GlobalOptions g;
  std::string out_path;
  std::string format;
  double tol = 0.0;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--out", out_path, "Artifact path; a manifest is written beside it");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  auto* tol_opt = app.add_option("--tol", tol, "Tolerance for reported checks");

  std::string spec_path;
  auto* channel = app.add_subcommand("channel", "Print chi, PTM, Kraus rank and CPTP diagnostic");
  channel->add_option("spec", spec_path, "Channel specification (JSON)")->required();

  PurifyArgs purify_args;
  auto* purify = app.add_subcommand("purify", "Run the purification circuit and closed forms");
  purify->add_option("spec1", purify_args.spec1, "Channel on the ancilla register")->required();
  purify->add_option("spec2", purify_args.spec2, "Channel on the main register")->required();
  purify->add_option("--visibility", purify_args.visibility, "Interference visibility in [0, 1]")
      ->capture_default_str();
  purify->add_option("--input", purify_args.input, "Input state: mixed, zero or plus")
      ->capture_default_str();

  SweepSpec sweep_spec;
  std::string sweep_shots = "exact";
  auto* sweep = app.add_subcommand("sweep", "Average fidelity versus channel parameter");
  add_sweep_options(sweep, sweep_spec, sweep_shots);

  SweepSpec dist_spec;
  std::string dist_shots = "exact";
  auto* distribute = app.add_subcommand("distribute", "Bell-state fidelity and PPT versus channel parameter");
  add_sweep_options(distribute, dist_spec, dist_shots);

  TomoArgs tomo_args;
  std::string tomo_spec;
  std::string tomo_records;
  std::string tomo_records_out;
  std::string tomo_shots = "100000";
  auto* tomo = app.add_subcommand("tomo", "Simulate process tomography and reconstruct by MLE");
  tomo->add_option("spec", tomo_spec, "Channel specification (JSON)");
  tomo->add_option("--records", tomo_records, "Read count records (JSON lines) instead of simulating");
  tomo->add_option("--records-out", tomo_records_out, "Write the count records (JSON lines)");
  tomo->add_option("--shots", tomo_shots, "Shots per setting, or \"exact\"")->capture_default_str();

  std::string phases_path;
  auto* optics = app.add_subcommand("optics", "Solve beam-splitter phase compensation");
  optics->add_option("phases", phases_path, "Beam-splitter phases (JSON)")->required();

  std::string manifest_in;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", manifest_in, "Manifest written by an earlier run")->required();

  // CLI11 consumes arguments from the back; drop the program name.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) {
    reversed.pop_back();
  }
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << CHANPUR_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!out_path.empty()) {
    g.out = out_path;
  }
  if (!format.empty()) {
    g.format = format == "csv" ? Format::Csv : Format::Json;
  }
  if (tol_opt->count() > 0) {
    g.tol = tol;
  }

  try {
    if (replay->parsed()) {
      const RunManifest m = manifest_from_json(parse_json_text(read_text(manifest_in)));
      std::vector<std::string> inner{args.empty() ? std::string("chanpur") : args.front()};
      inner.insert(inner.end(), m.argv.begin(), m.argv.end());
      if (g.out) {
        // Redirect the artifact so it can be compared with the original.
        bool replaced = false;
        for (std::size_t k = 1; k + 1 < inner.size(); ++k) {
          if (inner[k] == "--out") {
            inner[k + 1] = *g.out;
            replaced = true;
          }
        }
        if (!replaced) {
          inner.push_back("--out");
          inner.push_back(*g.out);
        }
      }
      return run_cli(inner, out, err);
    }

    CommandOutput result;
    std::string command;
    if (channel->parsed()) {
      command = "channel";
      result = cmd_channel(spec_path, g);
    } else if (purify->parsed()) {
      command = "purify";
      result = cmd_purify(purify_args, g);
    } else if (sweep->parsed()) {
      command = "sweep";
      sweep_spec.shots = parse_shots(sweep_shots);
      sweep_spec.seed = g.seed;
      result = cmd_sweep(sweep_spec, g);
    } else if (distribute->parsed()) {
      command = "distribute";
      dist_spec.shots = parse_shots(dist_shots);
      dist_spec.seed = g.seed;
      result = cmd_distribute(dist_spec, g);
    } else if (tomo->parsed()) {
      command = "tomo";
      if (g.format == Format::Csv) {
        err << "error: tomo writes JSON only\n";
        return kExitUsage;
      }
      if (!tomo_spec.empty()) {
        tomo_args.spec = tomo_spec;
      }
      if (!tomo_records.empty()) {
        tomo_args.records = tomo_records;
      }
      if (!tomo_records_out.empty()) {
        tomo_args.records_out = tomo_records_out;
      }
      tomo_args.shots = parse_shots(tomo_shots);
      result = cmd_tomo(tomo_args, g);
    } else if (optics->parsed()) {
      command = "optics";
      if (g.format == Format::Csv) {
        err << "error: optics writes JSON only\n";
        return kExitUsage;
      }
      result = cmd_optics(phases_path, g);
    }

    RunManifest manifest;
    manifest.command = command;
    manifest.argv.assign(args.begin() + (args.empty() ? 0 : 1), args.end());
    manifest.config = result.config;
    manifest.seed = g.seed;
    manifest.version = CHANPUR_VERSION;
    manifest.timestamp = utc_timestamp();
    if (g.out) {
      write_text(*g.out, result.artifact);
      manifest.artifacts.push_back(*g.out);
      manifest.artifacts.insert(manifest.artifacts.end(), result.extra_artifacts.begin(),
                                result.extra_artifacts.end());
      const std::string mpath = manifest_path_for(*g.out);
      manifest.artifacts.push_back(mpath);
      write_text(mpath, dump_json(to_json(manifest)) + "\n");
      for (const std::string& line : result.summary) {
        out << line << '\n';
      }
    } else {
      out << result.artifact;
      manifest.artifacts = result.extra_artifacts;
      for (const std::string& line : result.summary) {
        err << line << '\n';
      }
      err << dump_json(to_json(manifest)) << '\n';
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace chanpur::cli
