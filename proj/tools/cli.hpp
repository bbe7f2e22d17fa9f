// Copyright 2026 The hellycert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HELLYCERT_TOOLS_CLI_HPP
#define HELLYCERT_TOOLS_CLI_HPP

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hellycert/hellycert.hpp"

namespace hellycert::cli {

enum ExitCode : int { accept = 0, reject = 1, usage = 2 };

struct FamilyFlags {
  std::optional<long> alpha_max;
  std::optional<long> beta_min;
  std::optional<long> beta_max;
};

inline void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--family-alpha-max", f.alpha_max, "Largest |alpha_i| of split normals")->check(CLI::PositiveNumber);
  cmd->add_option("--family-beta-min", f.beta_min, "Smallest split offset");
  cmd->add_option("--family-beta-max", f.beta_max, "Largest split offset");
}

// Offsets spanning every value alpha.x takes over the polytope, for |alpha_i| <= alpha_max.
inline std::pair<long, long> default_beta_range(const Polyhedron& p, long alpha_max) {
  auto verts = vertices(p);
  Rational reach = 0;
  for (const auto& v : verts) {
    Rational s = 0;
    for (const auto& x : v) s += abs(x);
    reach = std::max(reach, s * Rational(alpha_max));
  }
  long r = Rational(reach.ceil()).num().get_si();
  return {-r - 1, r};
}

inline std::vector<GSplit> cover_family(const Region& region, const FamilyFlags& f) {
  long a = f.alpha_max.value_or(1);
  auto [lo, hi] = default_beta_range(region.outer, a);
  long bmin = f.beta_min.value_or(lo), bmax = f.beta_max.value_or(hi);
  if (bmin > bmax) throw Error("family beta range is empty");
  return split_family(region.outer.dim, a, Rational(bmin), Rational(bmax));
}

inline MoveFamily measure_family(const InstanceBundle& b, const FamilyFlags& f) {
  if (!f.alpha_max && !f.beta_min && !f.beta_max) return standard_family(b);
  long a = f.alpha_max.value_or(1);
  auto [lo, hi] = default_beta_range(b.system, a);
  long bmin = f.beta_min.value_or(lo), bmax = f.beta_max.value_or(hi);
  if (bmin > bmax) throw Error("family beta range is empty");
  MoveFamily fam;
  fam.disjunctions = split_disjunction_family(b.system.dim, a, bmin, bmax);
  add_target_splits(fam.disjunctions, report_targets(b));
  fam.cuts = b.system.rows;
  return fam;
}

inline InstanceBundle generate(const std::string& name, std::size_t n) {
  try {
    if (name == "box") return gen_box(n);
    if (name == "simplex") return gen_simplex_validity(n);
    if (name == "lifted-square") return gen_lifted(unit_square(), n);
    if (name == "lifted-octagon") return gen_lifted(octagon(), n);
    if (name == "critical") return gen_critical_bundle(n);
  } catch (const Error& e) {
    throw CLI::ValidationError("n", e.what());
  }
  throw CLI::ValidationError("example", "unknown example '" + name + "'");
}

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branch-and-cut certificate checker and instance toolkit", "hellycert"};
  app.require_subcommand(1);

  std::string check_file;
  auto* check = app.add_subcommand("check", "Verify a certificate file");
  check->add_option("file", check_file, "Certificate JSON")->required();

  std::string gen_name, gen_out;
  std::size_t gen_n = 0;
  auto* gen = app.add_subcommand("gen", "Generate an example bundle");
  gen->add_option("example", gen_name, "box | simplex | lifted-square | lifted-octagon | critical")->required();
  gen->add_option("n", gen_n, "Dimension")->required();
  gen->add_option("--out", gen_out, "Output directory")->required();

  std::string measure_dir, measure_out;
  FamilyFlags measure_flags;
  std::size_t depth_cap = 64, size_cap = 15;
  auto* measure = app.add_subcommand("measure", "Family-relative minimal certificate sizes of a bundle");
  measure->add_option("bundle", measure_dir, "Bundle directory")->required();
  add_family_flags(measure, measure_flags);
  measure->add_option("--depth-cap", depth_cap, "Largest tree depth searched")->check(CLI::PositiveNumber);
  measure->add_option("--size-cap", size_cap, "Largest tree size searched")->check(CLI::PositiveNumber);
  measure->add_option("--out", measure_out, "Directory for report.json and witness trees");

  std::optional<std::size_t> bound_t, bound_h, bound_n1, bound_n2;
  auto* bound = app.add_subcommand("bound", "Evaluate t/(h'-1) or the mixed Helly number 2^n1 (n2+1)");
  bound->set_help_flag("--help", "Print this help message and exit");
  auto* t_opt = bound->add_option("--t", bound_t, "Critical family size");
  auto* h_opt = bound->add_option("--h", bound_h, "Helly number of the relaxation");
  auto* n1_opt = bound->add_option("--n1", bound_n1, "Integer dimensions");
  auto* n2_opt = bound->add_option("--n2", bound_n2, "Continuous dimensions");
  t_opt->needs(h_opt);
  h_opt->needs(t_opt);
  n1_opt->needs(n2_opt);
  n2_opt->needs(n1_opt);
  t_opt->excludes(n1_opt)->excludes(n2_opt);
  h_opt->excludes(n1_opt)->excludes(n2_opt);

  std::string cover_file, cover_mode = "open";
  FamilyFlags cover_flags;
  std::optional<std::size_t> cover_max;
  auto* cover = app.add_subcommand("cover", "Split cover number of a region");
  cover->add_option("region", cover_file, "Region JSON")->required();
  add_family_flags(cover, cover_flags);
  cover->add_option("--mode", cover_mode, "open | closed")->check(CLI::IsMember({"open", "closed"}));
  cover->add_option("--max-size", cover_max, "Largest subfamily tried");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return accept;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return accept;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return usage;
  }

  try {
    if (*check) {
      BCTree t = read_certificate(check_file);
      Verdict v = check_goal(t);
      out << "goal=" << goal_name(t.goal) << "\n";
      if (!v) {
        out << "verdict=rejected\nreason=" << v.reason << "\nwork=" << v.work << "\n";
        return reject;
      }
      out << "verdict=accepted\nsize=" << tree_size(t) << "\ncomplexity=" << tree_complexity(t)
          << "\nwork=" << v.work << "\n";
      return accept;
    }
    if (*gen) {
      InstanceBundle b = generate(gen_name, gen_n);
      write_bundle(gen_out, b);
      Verdict v = verify_bundle(b);
      for (const auto& c : b.claimed_sizes) out << c.goal << " size=" << c.size << "\n";
      if (!v) {
        out << "verification failed: " << v.reason << "\n";
        return reject;
      }
      out << "wrote " << b.certificates.size() << " certificates to " << gen_out << "\n";
      return accept;
    }
    if (*measure) {
      InstanceBundle b = read_bundle(measure_dir);
      MoveFamily fam = measure_family(b, measure_flags);
      fam.depth_cap = depth_cap;
      fam.size_cap = size_cap;
      ComplexityReport r = complexity_report(b, fam, facet_witnesses(b.hull_target));
      json doc = report_json(r);
      if (!measure_out.empty()) {
        std::filesystem::path dir(measure_out);
        std::filesystem::create_directories(dir);
        write_file(dir / "report.json", dump(doc));
        if (r.hull_tree) write_certificate(dir / "hull.json", *r.hull_tree);
        if (r.membership_tree) write_certificate(dir / "membership.json", *r.membership_tree);
        for (std::size_t i = 0; i < r.validity.size(); ++i) {
          if (r.validity[i].tree)
            write_certificate(dir / ("validity-" + std::to_string(i) + ".json"), *r.validity[i].tree);
          if (r.reverse[i].tree)
            write_certificate(dir / ("reverse-" + std::to_string(i) + ".json"), *r.reverse[i].tree);
        }
      }
      out << dump(doc);
      if (r.cap_exceeded) {
        out << "cap-exceeded\n";
        return reject;
      }
      return accept;
    }
    if (*bound) {
      if (bound_t) {
        out << helly_bound(*bound_t, *bound_h).str() << "\n";
      } else if (bound_n1) {
        if (*bound_n1 + *bound_n2 < 1) throw CLI::ValidationError("bound", "n1 + n2 must be at least 1");
        out << helly_number_mixed(*bound_n1, *bound_n2).get_str() << "\n";
      } else {
        throw CLI::ValidationError("bound", "give --t and --h, or --n1 and --n2");
      }
      return accept;
    }
    if (*cover) {
      Region region = parse_document<Region>(read_file(cover_file));
      auto family = cover_family(region, cover_flags);
      CoverMode mode = cover_mode == "closed" ? CoverMode::closed_splits : CoverMode::open_splits;
      CoverResult all = covers(region, family, mode);
      if (!all.covered) {
        out << "not covered by the family\nwitness=" << to_string(*all.witness) << "\n";
        return reject;
      }
      auto sol = min_split_cover(region, family, mode, cover_max);
      if (!sol) {
        out << "no cover within --max-size\n";
        return reject;
      }
      json chosen = json::array();
      for (auto i : sol->chosen) chosen.push_back(family[i]);
      out << "cover_number=" << sol->size << "\nhull_lower_bound=" << hull_lb_from_cover(sol->size)
          << "\nsplits=" << chosen.dump() << "\n";
      return accept;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return reject;
  }
  return usage;
}

}  // namespace hellycert::cli

#endif  // HELLYCERT_TOOLS_CLI_HPP
