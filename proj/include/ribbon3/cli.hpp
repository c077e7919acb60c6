#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ribbon3/characters.hpp"
#include "ribbon3/classify.hpp"
#include "ribbon3/errors.hpp"
#include "ribbon3/fusion.hpp"
#include "ribbon3/json_io.hpp"
#include "ribbon3/premodular.hpp"

namespace ribbon3::cli {

enum class Format { Json, Table };

struct CliConfig {
  std::string subcommand;
  std::string params_text;
  long bound = 0;
  long max_twist_order = 60;
  double tol = 1e-9;
  long precision_bits = exactnum::kDefaultPrecisionBits;
  Format format = Format::Json;
  std::string out_path;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool witness_all = false;
  long coeff_bound = 0;
  long s_max = 0, t_max = 0;
  int classes = 0;
};

// "k,l,m,n" or "z3".
inline fusion::FusionRing parse_ring(const std::string& text) {
  if (text == "z3" || text == "Z3" || text == "Z/3") return fusion::make_z3_ring();
  std::vector<long> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long x = 0;
    try {
      x = std::stol(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed --params '" + text + "': expected k,l,m,n or z3");
    }
    if (used != item.size()) throw UsageError("malformed --params '" + text + "': expected k,l,m,n or z3");
    v.push_back(x);
  }
  if (v.size() != 4) throw UsageError("malformed --params '" + text + "': expected four integers");
  return fusion::make_rank3_ring({v[0], v[1], v[2], v[3]});
}

namespace detail {

inline std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

inline std::string render_value(const exactnum::RealAlgebraic& v) {
  return v.is_rational() ? exactnum::to_string(v.rational_value()) : v.decimal(12);
}

inline Json ring_json(const fusion::FusionRing& ring) {
  const auto sys = characters::solve_characters(ring);
  const auto g = characters::galois_type(sys);
  Json chars = Json::array();
  for (const auto& c : sys.chars) chars.push_back(to_json(c));
  Json dims = Json::array();
  for (const auto& d : fusion::fp_dimensions(sys)) dims.push_back(to_json(d));
  Json j{{"name", ring.name()}};
  if (ring.params()) {
    j["params"] = ring.params()->as_array();
    j["canonical"] = fusion::canonicalize(*ring.params()).as_array();
  }
  j["alias"] = classify::aliases(ring);
  j["ring"] = to_json(ring);
  j["axioms"] = to_json(fusion::check_based_axioms(ring.tensor(), ring.dual()));
  j["characters"] = chars;
  j["galois"] = characters::to_string(g.tag);
  j["galois_orbits"] = g.orbits;
  if (g.discriminant) j["x_discriminant"] = to_json(*g.discriminant);
  j["dims"] = dims;
  j["global_fp_dim"] = to_json(fusion::global_fp_dim(sys));
  return j;
}

inline std::string ring_table(const fusion::FusionRing& ring) {
  const auto sys = characters::solve_characters(ring);
  std::ostringstream os;
  os << "ring        " << ring.name();
  for (const auto& a : classify::aliases(ring)) os << "  (alias " << a << ")";
  os << "\naxioms      " << (fusion::check_based_axioms(ring.tensor(), ring.dual()).all_pass() ? "pass" : "fail") << "\n";
  os << "galois      " << characters::to_string(characters::galois_type(sys).tag) << "\n";
  os << "dims       ";
  for (const auto& d : fusion::fp_dimensions(sys)) os << " " << render_value(d);
  os << "\nglobal dim  " << render_value(fusion::global_fp_dim(sys)) << "\n";
  for (std::size_t i = 0; i < sys.chars.size(); ++i) os << "character " << i << " " << sys.chars[i].to_string() << "\n";
  return os.str();
}

inline std::string search_table(const fusion::FusionRing& ring, const std::vector<premodular::PremodularDatum>& w) {
  std::ostringstream os;
  os << "# " << ring.name() << ": " << w.size() << " witness(es)\n";
  os << pad("dims", 6) << pad("theta_X", 10) << pad("theta_Y", 10) << "class   (twists in turns)\n";
  for (const auto& d : w) {
    os << pad(std::to_string(d.dims_index), 6) << pad(d.twists().theta[1].to_string(), 10)
       << pad(d.twists().theta[2].to_string(), 10) << premodular::to_string(d.structure_class) << "\n";
  }
  return os.str();
}

}  // namespace detail

// Executes one command line. Returns 0 on success, 1 on a computation
// error, 2 on a usage error; errors are written to err as JSON.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto report_error = [&](const std::string& kind, const std::string& detail, int code) {
    err << Json{{"error", Json{{"kind", kind}, {"detail", detail}}}}.dump() << "\n";
    return code;
  };

  CliConfig cfg;
  CLI::App app{"Rank-3 fusion rings: construction, ribbon data search and classification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--tol", cfg.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("--precision", cfg.precision_bits, "Ball precision in bits")->check(CLI::Range(53L, exactnum::kMaxPrecisionBits));
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--witness-all", cfg.witness_all, "Search ribbon data on every ring");
  app.add_option("--max-twist-order", cfg.max_twist_order, "Largest root-of-unity order for twists")
      ->check(CLI::Range(1L, 1000L));

  auto* ring = app.add_subcommand("ring", "Construct a ring, check axioms, solve characters");
  ring->add_option("--params", cfg.params_text, "k,l,m,n or z3")->required();
  auto* enumerate = app.add_subcommand("enumerate", "Canonical (*)-solutions up to a bound");
  enumerate->add_option("--bound", cfg.bound)->required()->check(CLI::Range(0L, 2000L));
  auto* search = app.add_subcommand("search", "Search ribbon data witnesses");
  search->add_option("--params", cfg.params_text, "k,l,m,n or z3")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Run the case analysis on all rings up to a bound");
  classify_cmd->add_option("--bound", cfg.bound)->required()->check(CLI::Range(1L, 200L));
  classify_cmd->add_option("--out", cfg.out_path, "Write the report to a file");
  auto* audit = app.add_subcommand("audit", "Audits of intermediate claims");
  audit->require_subcommand(1);
  auto* star = audit->add_subcommand("star-assoc", "(*) against associativity");
  star->add_option("--bound", cfg.bound)->required()->check(CLI::Range(0L, 40L));
  auto* rings = audit->add_subcommand("rank3-rings", "Exhaustive rank-3 based rings");
  rings->add_option("--coeff-bound", cfg.coeff_bound)->required()->check(CLI::Range(0L, 3L));
  auto* grid = audit->add_subcommand("case3b-grid", "Exact sweep of the Case 3b identity");
  grid->add_option("--smax", cfg.s_max)->required()->check(CLI::Range(0L, 100000L));
  grid->add_option("--tmax", cfg.t_max)->required()->check(CLI::Range(0L, 100000L));
  auto* landau_cmd = audit->add_subcommand("landau", "Landau bound from unit fractions");
  landau_cmd->add_option("--classes", cfg.classes)->required()->check(CLI::Range(1, 5));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error("UsageError", e.what(), 2);
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "table" ? Format::Table : Format::Json;
  const bool json = cfg.format == Format::Json;

  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) return report_error("UsageError", "cannot write to " + cfg.out_path, 2);
  }
  std::ostream& sink = cfg.out_path.empty() ? out : file;

  try {
    std::optional<fusion::FusionRing> target;
    if (ring->parsed() || search->parsed()) {
      try {
        target = parse_ring(cfg.params_text);
      } catch (const UsageError& e) {
        return report_error(e.kind(), e.what(), 2);
      }
    }

    if (ring->parsed()) {
      if (json) {
        sink << detail::ring_json(*target).dump(2) << "\n";
      } else {
        sink << detail::ring_table(*target);
      }
    } else if (enumerate->parsed()) {
      const auto sols = classify::enumerate_star_solutions(cfg.bound);
      if (json) {
        Json list = Json::array();
        for (const auto& p : sols) {
          const auto r = fusion::make_rank3_ring(p);
          list.push_back(Json{{"name", p.name()}, {"params", p.as_array()}, {"alias", classify::aliases(r)}});
        }
        sink << Json{{"bound", cfg.bound}, {"count", sols.size()}, {"rings", list}}.dump(2) << "\n";
      } else {
        for (const auto& p : sols) sink << p.name() << "\n";
        sink << sols.size() << " ring(s)\n";
      }
    } else if (search->parsed()) {
      const auto w = premodular::search_ribbon_data(*target, cfg.max_twist_order, cfg.tol, cfg.precision_bits, cfg.threads);
      if (json) {
        Json list = Json::array();
        for (const auto& d : w) list.push_back(premodular::to_json(d));
        sink << Json{{"ring", target->name()},
                     {"max_twist_order", cfg.max_twist_order},
                     {"tol", approx_string(cfg.tol)},
                     {"precision_bits", cfg.precision_bits},
                     {"witness_count", w.size()},
                     {"witnesses", list}}
                    .dump(2)
             << "\n";
      } else {
        sink << detail::search_table(*target, w);
      }
    } else if (classify_cmd->parsed()) {
      classify::ClassifyConfig cc;
      cc.bound = cfg.bound;
      cc.max_twist_order = cfg.max_twist_order;
      cc.tol = cfg.tol;
      cc.precision_bits = cfg.precision_bits;
      cc.witness_all = cfg.witness_all;
      cc.threads = cfg.threads;
      const auto report = classify::classify_all(cc);
      if (json) {
        sink << classify::to_json(report).dump(2) << "\n";
      } else {
        sink << classify::render_table(report);
      }
    } else if (star->parsed()) {
      const auto a = classify::audit_star_associativity(cfg.bound);
      Json mism = Json::array();
      for (const auto& p : a.mismatches) mism.push_back(p.as_array());
      if (json) {
        sink << Json{{"bound", a.bound}, {"checked", a.checked}, {"star_solutions", a.star_solutions},
                     {"mismatches", mism}, {"equivalent", a.mismatches.empty()}}
                    .dump(2)
             << "\n";
      } else {
        sink << "checked " << a.checked << ", (*) solutions " << a.star_solutions << ", mismatches "
             << a.mismatches.size() << "\n";
      }
    } else if (rings->parsed()) {
      const auto a = classify::audit_rank3_rings(cfg.coeff_bound, cfg.threads);
      Json list = Json::array();
      for (const auto& r : a.rings) list.push_back(Json{{"name", r.name()}, {"ring", to_json(r)}});
      if (json) {
        sink << Json{{"coeff_bound", a.coeff_bound}, {"count", a.rings.size()}, {"z3_count", a.z3_count},
                     {"unrecognized", a.unrecognized}, {"matches_families", a.matches_families}, {"rings", list}}
                    .dump(2)
             << "\n";
      } else {
        for (const auto& r : a.rings) sink << r.name() << "\n";
        sink << a.rings.size() << " ring(s), matches families: " << (a.matches_families ? "yes" : "no") << "\n";
      }
    } else if (grid->parsed()) {
      sink << (classify::audit_case3b_grid(cfg.s_max, cfg.t_max) ? "true" : "false") << "\n";
    } else if (landau_cmd->parsed()) {
      const auto l = classify::landau(cfg.classes);
      Json sols = Json::array();
      for (const auto& s : l.solutions) {
        Json t = Json::array();
        for (const auto& c : s) t.push_back(to_json(c));
        sols.push_back(t);
      }
      if (json) {
        sink << Json{{"classes", cfg.classes}, {"bound", to_json(l.bound)}, {"solutions", sols}}.dump(2) << "\n";
      } else {
        sink << "bound " << l.bound.get_str() << " from " << l.solutions.size() << " solution(s)\n";
      }
    }
  } catch (const Error& e) {
    return report_error(e.kind(), e.what(), 1);
  } catch (const std::exception& e) {
    return report_error("InternalError", e.what(), 1);
  }
  return 0;
}

}  // namespace ribbon3::cli
