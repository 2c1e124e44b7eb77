// lucas_count: command-line front end. Every subcommand prints one JSON
// report on stdout; integers travel as decimal strings.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <boost/uuid/detail/sha1.hpp>
#include <nlohmann/json.hpp>

#include "lucas/asm_grid.hpp"
#include "lucas/error.hpp"
#include "lucas/fixtures.hpp"
#include "lucas/karoubi.hpp"
#include "lucas/lucas.hpp"
#include "lucas/matchings.hpp"
#include "lucas/state_sum.hpp"
#include "lucas/tilings.hpp"

using nlohmann::json;
using namespace lucas;

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kSemantic = 3, kResource = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  bool deep = false;
  bool timing = false;
};

std::string sha1_hex(const std::string& bytes) {
  boost::uuids::detail::sha1 h;
  h.process_bytes(bytes.data(), bytes.size());
  boost::uuids::detail::sha1::digest_type d;
  h.get_digest(d);
  char buf[41];
  for (int i = 0; i < 5; ++i) std::snprintf(buf + 8 * i, 9, "%08x", d[i]);
  return buf;
}

// Report under construction; inputs are recorded as they are read.
struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();

  json load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    inputs[path] = sha1_hex(text);
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
  }
};

std::string str(const BigInt& v) { return to_decimal(v); }

// Graph input is either the abstract graph schema or a planar map.
Graph load_graph(Report& r, const std::string& path) {
  const json doc = r.load(path);
  if (doc.is_object() && doc.contains("vertices")) return parse_map(doc).graph();
  return parse_graph(doc);
}

json histogram(const std::vector<std::uint64_t>& h) {
  json out = json::array();
  for (auto x : h) out.push_back(std::to_string(x));
  return out;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedDocument:
    case ErrorCode::InvalidMap:
      return kInput;
    case ErrorCode::TooLarge:
    case ErrorCode::LimitExceeded:
      return kResource;
    default:
      return kSemantic;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts for Lucas-colorings, perfect matchings, ASMs, lozenge tilings and Karoubi summands"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--jobs", g.jobs, "worker threads")->envname("LUCAS_COUNT_JOBS")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_flag("--deep", g.deep, "lift desk-scale size guards");
  app.add_flag("--timing", g.timing, "add elapsed_ms to the report (breaks byte-identical output)");

  Report report;
  std::function<bool()> run;  // returns the PASS/FAIL verdict

  // luc
  auto* luc = app.add_subcommand("luc", "Lucas-colorings of a planar map");
  std::string luc_file;
  bool luc_stats = false, luc_list = false;
  std::size_t luc_limit = 0;
  luc->add_option("map", luc_file)->required();
  luc->add_flag("--stats", luc_stats, "count, m(G) and the Sp histogram (default)");
  luc->add_flag("--list", luc_list, "also list the colorings");
  luc->add_option("--limit", luc_limit, "refuse to list more than N colorings");
  luc->callback([&] {
    run = [&] {
      const PlanarMap m = parse_map(report.load(luc_file));
      LucasOptions opt;
      opt.jobs = g.jobs;
      const auto s = lucas_statistic(m, opt);
      report.results["count"] = str(s.count);
      report.results["m"] = str(s.m);
      report.results["sp_histogram"] = histogram(s.sp_histogram);
      if (luc_list) {
        std::optional<std::size_t> limit;
        if (luc_limit > 0) limit = luc_limit;
        json list = json::array();
        for (const auto& c : lucas_colorings(m, limit)) {
          json item = serialize_coloring(m, c);
          item["sp"] = special_count(m, c);
          list.push_back(item);
        }
        report.results["colorings"] = list;
      }
      return true;
    };
  });

  // blowup
  auto* blow = app.add_subcommand("blowup", "replace every vertex of degree d >= 2 by a d-gon");
  std::string blow_file;
  bool blow_dot = false;
  blow->add_option("map", blow_file)->required();
  blow->add_flag("--dot", blow_dot, "include a Graphviz rendering");
  blow->callback([&] {
    run = [&] {
      const PlanarMap m = parse_map(report.load(blow_file));
      const auto b = blow_up(m);
      const auto t = verify_theorem5(m);
      report.results["map"] = serialize_map(b.result);
      report.results["vertex_origin"] = b.vertex_origin;
      report.results["m_of_source"] = str(t.m_of_g);
      report.results["matchings"] = str(t.M_of_G);
      report.results["equal"] = t.equal;
      if (blow_dot) report.results["dot"] = to_dot(b.result);
      return t.equal;
    };
  });

  // match
  auto* match = app.add_subcommand("match", "perfect matchings of a graph or map");
  std::string match_file, match_method = "auto";
  bool match_list = false;
  std::size_t match_limit = 0;
  match->add_option("graph", match_file)->required();
  match->add_option("--method", match_method)->check(CLI::IsMember({"auto", "bitmask", "frontier"}));
  match->add_flag("--list", match_list, "list matchings as edge indices");
  match->add_option("--limit", match_limit);
  match->callback([&] {
    run = [&] {
      const Graph gr = load_graph(report, match_file);
      BigInt count = match_method == "bitmask"    ? count_matchings_bitmask(gr)
                     : match_method == "frontier" ? count_matchings_frontier(gr)
                                                  : count_perfect_matchings(gr);
      report.results["vertices"] = gr.n;
      report.results["edges"] = gr.edges.size();
      report.results["matchings"] = str(count);
      if (match_list) {
        std::optional<std::size_t> limit;
        if (match_limit > 0) limit = match_limit;
        report.results["list"] = enumerate_perfect_matchings(gr, limit);
      }
      return true;
    };
  });

  // statesum
  auto* ss = app.add_subcommand("statesum", "state-sum decomposition over distinguished vertices");
  std::string ss_file;
  std::vector<int> ss_dist;
  ss->add_option("graph", ss_file)->required();
  ss->add_option("--distinguished", ss_dist)->delimiter(',')->required();
  ss->callback([&] {
    run = [&] {
      const Graph gr = load_graph(report, ss_file);
      report.results["distinguished"] = ss_dist;
      report.results["state_sum"] = serialize_state_sum(state_sum(gr, ss_dist));
      return true;
    };
  });

  // asm
  auto* asm_cmd = app.add_subcommand("asm", "alternating sign matrices and grid colorings");
  asm_cmd->require_subcommand(1);
  auto* asm_enum = asm_cmd->add_subcommand("enum", "all n x n ASMs");
  int asm_n = 0;
  asm_enum->add_option("--n", asm_n)->required();
  asm_enum->callback([&] {
    run = [&] {
      const auto all = enumerate_asms(asm_n);
      json list = json::array();
      for (const auto& a : all) list.push_back(a.rows());
      report.results["n"] = asm_n;
      report.results["count"] = std::to_string(all.size());
      report.results["asms"] = list;
      if (asm_n > 5) return true;  // restricted search stops at 5
      const auto restricted = enumerate_restricted(asm_n);
      report.results["restricted_count"] = std::to_string(restricted.size());
      return restricted.size() == all.size();
    };
  });
  auto* asm_to = asm_cmd->add_subcommand("to-coloring", "ASM -> restricted coloring of G_n");
  std::string asm_file;
  asm_to->add_option("asm", asm_file)->required();
  asm_to->callback([&] {
    run = [&] {
      const AsmMatrix a = parse_asm(report.load(asm_file));
      const GridGraph grid = grid_graph(a.size());
      const auto c = asm_to_coloring(grid, a);
      json labels = json::object();
      for (const auto& [label, v] : grid.labels) labels[label] = std::string(1, to_char(c[grid.label_edge(label)]));
      report.results["n"] = a.size();
      report.results["coloring"] = serialize_coloring(grid.map, c);
      report.results["boundary"] = labels;
      const bool back = coloring_to_asm(grid, c) == a;
      report.results["round_trip"] = back;
      return back;
    };
  });
  auto* asm_from = asm_cmd->add_subcommand("from-coloring", "restricted coloring of G_n -> ASM");
  std::string col_file;
  int col_n = 0;
  asm_from->add_option("coloring", col_file)->required();
  asm_from->add_option("--n", col_n)->required();
  asm_from->callback([&] {
    run = [&] {
      const GridGraph grid = grid_graph(col_n);
      const auto c = parse_coloring(grid.map, report.load(col_file));
      const AsmMatrix a = coloring_to_asm(grid, c);
      report.results["asm"] = serialize_asm(a);
      const bool back = asm_to_coloring(grid, a) == c;
      report.results["round_trip"] = back;
      return back;
    };
  });

  // aztec
  auto* aztec = app.add_subcommand("aztec", "Aztec diamond matchings against 2-enumerated ASMs");
  int aztec_n = 0;
  aztec->add_option("--n", aztec_n)->required();
  aztec->callback([&] {
    run = [&] {
      const auto r = verify_theorem1(aztec_n, g.deep);
      report.results["n"] = aztec_n;
      report.results["matchings"] = str(r.matchings);
      report.results["plus_weighted"] = str(r.plus_weighted);
      report.results["minus_weighted"] = str(r.minus_weighted);
      report.results["equal"] = r.equal;
      return r.equal;
    };
  });

  // region
  auto* region = app.add_subcommand("region", "lozenge regions and their weak duals");
  region->require_subcommand(1);
  std::string svg_file;
  auto emit_region = [&](const TriangularRegion& r) {
    report.results["region"] = serialize_region(r);
    report.results["dual"] = serialize_graph(r.dual);
    report.results["cells"] = r.cells.size();
    report.results["matchings"] = str(count_perfect_matchings(r.dual));
    if (!svg_file.empty()) {
      std::ofstream out(svg_file);
      if (!out) throw InputError("cannot write " + svg_file);
      out << region_svg(r);
      report.results["svg"] = svg_file;
    }
  };
  auto* hex = region->add_subcommand("hex", "semiregular hexagon H(a,b,c)");
  int ha = 0, hb = 0, hc = 0;
  hex->add_option("--a", ha)->required();
  hex->add_option("--b", hb)->required();
  hex->add_option("--c", hc)->required();
  hex->add_option("--svg", svg_file);
  hex->callback([&] {
    run = [&] {
      emit_region(hexagon_region(ha, hb, hc));
      const BigInt mm = macmahon(ha, hb, hc);
      report.results["macmahon"] = str(mm);
      return report.results["matchings"] == str(mm);
    };
  });
  auto* ta = region->add_subcommand("ta", "the region T_a");
  int ta_a = 0;
  ta->add_option("--a", ta_a)->required();
  ta->add_option("--svg", svg_file);
  ta->callback([&] {
    run = [&] {
      const auto t = ta_region(ta_a);
      emit_region(t.region);
      report.results["hexagon_of_cell"] = t.hexagon_of_cell;
      if (ta_a <= 7) report.results["table"] = str(table_value(ta_a));
      return report.results["matchings"] == str(table_value(ta_a));
    };
  });

  // karoubi
  auto* kar = app.add_subcommand("karoubi", "Karoubi cube summands of a 4-regular projection");
  std::string kar_file;
  std::string kar_word;
  kar->add_option("projection", kar_file)->required();
  kar->add_option("--resolve", kar_word, "also trace one resolution, e.g. 0110");
  kar->callback([&] {
    run = [&] {
      const Projection p = parse_projection(report.load(kar_file));
      const auto r = verify_theorem2(p);
      report.results["crossings"] = p.map.num_vertices();
      report.results["link_components"] = link_components(p);
      report.results["report"] = serialize_report(r);
      if (!kar_word.empty()) {
        std::vector<int> u;
        for (char ch : kar_word) {
          if (ch != '0' && ch != '1') throw Error(ErrorCode::MalformedDocument, "resolution words use 0/1");
          u.push_back(ch - '0');
        }
        const auto res = resolve(p, u);
        report.results["resolution"] = {{"word", kar_word}, {"circles", res.circles},
                                        {"circle_of_dart", res.circle_of_dart}};
      }
      return r.equal;
    };
  });

  // verify
  auto* ver = app.add_subcommand(
      "verify", "check one identity at one size: 1 aztec/ASM, 2 karoubi/Luc, 3 grid/ASM, 4 T_a, 5 blow-up");
  int identity = 0, v_n = 0, v_a = 0, v_samples = 0;
  std::string v_proj, v_map;
  ver->add_option("identity", identity)->required()->check(CLI::Range(1, 5));
  ver->add_option("--n", v_n, "grid / diamond order (1, 3)");
  ver->add_option("--a", v_a, "triangle side (4)");
  ver->add_option("--proj", v_proj, "projection file (2)");
  ver->add_option("--map", v_map, "map file (5)");
  ver->add_option("--random", v_samples, "random instances drawn with --seed (2, 5)");
  ver->callback([&] {
    run = [&] {
      json checks = json::array();
      bool ok = true;
      auto check = [&](const std::string& name, bool pass, json detail) {
        detail["check"] = name;
        detail["status"] = verdict(pass);
        checks.push_back(detail);
        ok = ok && pass;
      };
      std::mt19937_64 rng(g.seed);
      switch (identity) {
        case 1: {
          if (v_n < 1) throw Error(ErrorCode::TooSmall, "verify 1 needs --n");
          const auto r = verify_theorem1(v_n, g.deep);
          check("aztec_vs_asm", r.equal,
                {{"n", v_n}, {"matchings", str(r.matchings)}, {"plus_weighted", str(r.plus_weighted)},
                 {"minus_weighted", str(r.minus_weighted)}});
          break;
        }
        case 2: {
          auto one = [&](const std::string& name, const Projection& p) {
            const auto r = verify_theorem2(p);
            json d = serialize_report(r);
            d["projection"] = name;
            check("summands_vs_luc", r.equal, d);
          };
          if (!v_proj.empty()) one(v_proj, parse_projection(report.load(v_proj)));
          for (int i = 0; i < v_samples; ++i) {
            one("random#" + std::to_string(i),
                fixtures::medial(fixtures::random_min_degree2_map(rng, 2 + static_cast<int>(rng() % 3), 2)));
          }
          if (v_proj.empty() && v_samples == 0) throw Error(ErrorCode::TooSmall, "verify 2 needs --proj or --random");
          break;
        }
        case 3: {
          if (v_n < 1) throw Error(ErrorCode::TooSmall, "verify 3 needs --n");
          const auto asms = enumerate_asms(v_n);
          const auto colorings = enumerate_restricted(v_n);
          check("counts", asms.size() == colorings.size(),
                {{"asms", std::to_string(asms.size())}, {"restricted", std::to_string(colorings.size())}});
          const GridGraph grid = grid_graph(v_n);
          bool there = true, back = true;
          for (const auto& a : asms) there = there && coloring_to_asm(grid, asm_to_coloring(grid, a)) == a;
          for (const auto& c : colorings) back = back && asm_to_coloring(grid, coloring_to_asm(grid, c)) == c;
          check("asm_round_trip", there, json::object());
          check("coloring_round_trip", back, json::object());
          break;
        }
        case 4: {
          if (v_a < 1) throw Error(ErrorCode::TooSmall, "verify 4 needs --a");
          const auto r = verify_theorem4(v_a, g.deep, g.jobs);
          json d = {{"a", v_a}, {"table", str(r.table)}, {"m_t", str(*r.m_t)}};
          if (r.region_matchings) d["region_matchings"] = str(*r.region_matchings);
          check("three_way", r.all_equal, d);
          break;
        }
        case 5: {
          auto one = [&](const std::string& name, const PlanarMap& m) {
            const auto r = verify_theorem5(m);
            check("blowup_vs_m", r.equal,
                  {{"map", name}, {"m", str(r.m_of_g)}, {"matchings", str(r.M_of_G)}});
          };
          if (!v_map.empty()) one(v_map, parse_map(report.load(v_map)));
          for (int i = 0; i < v_samples; ++i) {
            one("random#" + std::to_string(i),
                random_planar_map(rng, 2 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 6)));
          }
          if (v_map.empty() && v_samples == 0) throw Error(ErrorCode::TooSmall, "verify 5 needs --map or --random");
          break;
        }
      }
      report.results["identity"] = identity;
      report.results["checks"] = checks;
      report.results["status"] = verdict(ok);
      return ok;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  // Name the command by the chosen subcommand path.
  for (const CLI::App* cur = &app; !cur->get_subcommands().empty();) {
    cur = cur->get_subcommands().front();
    report.command += (report.command.empty() ? "" : " ") + cur->get_name();
  }

  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    pass = run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const int code = exit_code(e.code());
    if (code == kResource && !g.deep) std::cerr << "hint: --deep lifts the desk-scale guards\n";
    return code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }

  json out = {{"command", report.command}, {"inputs", report.inputs}, {"results", report.results}};
  if (g.timing) {
    out["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << out.dump(2) << '\n';
  return pass ? kOk : kFail;
}
