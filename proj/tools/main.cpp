#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plancol/errors.hpp"
#include "plancol/generators.hpp"
#include "plancol/graph.hpp"
#include "plancol/io.hpp"
#include "plancol/lowerbound.hpp"
#include "plancol/pipeline.hpp"
#include "plancol/structure.hpp"

namespace {

using namespace plancol;

std::uint64_t resolve_seed(std::uint64_t cli_seed) {
  const char* env = std::getenv("COLOR_SEED");
  if (!env) return cli_seed;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (env[0] == '\0' || env[pos] != '\0') {
    throw InputError("COLOR_SEED must be a non-negative integer, got '" + std::string(env) + "'");
  }
  return v;
}

// Near-square factorization for lattice families: the largest divisor of n
// that is <= sqrt(n) becomes the row count.
std::pair<std::int64_t, std::int64_t> lattice_shape(std::int64_t n) {
  if (n < 1) throw InputError("lattice families need n >= 1");
  std::int64_t rows = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (rows > 1 && n % rows != 0) --rows;
  return {rows, n / rows};
}

Graph make_family(const std::string& family, std::int64_t n, std::uint64_t seed) {
  if (family == "grid") {
    auto [r, c] = lattice_shape(n);
    return grid_graph(r, c);
  }
  if (family == "hex") {
    auto [r, c] = lattice_shape(n);
    return hex_grid_graph(r, c);
  }
  if (family == "triangulation") return triangulation_graph(n, seed);
  if (family == "subdivided") return subdivided_triangulation_graph(n, seed);
  if (family == "fan") return outerplanar_fan_graph(n);
  if (family == "outerplanar") return maximal_outerplanar_graph(n, seed);
  if (family == "path") return path_graph(n);
  if (family == "cycle") return cycle_graph(n);
  if (family == "complete") return complete_graph(n);
  if (family == "gadget4") return build_gadget({GadgetFamily::planar4, n}).graph;
  if (family == "gadget3") return build_gadget({GadgetFamily::outerplanar3, n}).graph;
  throw InputError("unknown family '" + family +
                   "'; known: grid hex triangulation subdivided fan outerplanar path cycle "
                   "complete gadget4 gadget3");
}

Preset parse_preset(const std::string& s) {
  if (s == "4col") return Preset::four_col;
  if (s == "6col") return Preset::six_col;
  throw InputError("preset must be 4col or 6col, got '" + s + "'");
}

void require_preset_fit(const Graph& g, Preset preset) {
  if (preset != Preset::four_col) return;
  auto triangles = enumerate_triangles(g);
  if (!triangles.empty()) {
    const auto& t = triangles.front();
    throw InputError("the 4col preset needs a triangle free input; found triangle {" +
                     std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
                     std::to_string(t[2]) + "}");
  }
}

std::string format_ratio(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

int count_colors(const ColorAssignment& c) {
  std::set<int> used;
  for (const auto& [v, col] : c.colors) used.insert(col);
  return static_cast<int>(used.size());
}

// Rounds from several engine passes on one conceptual timeline: each pass is
// shifted past the span of the previous one.
RoundTrace merge_traces(const std::vector<const RoundTrace*>& parts) {
  RoundTrace merged;
  std::int64_t offset = 0;
  for (const RoundTrace* part : parts) {
    for (RoundStat stat : part->per_round) {
      stat.round += offset;
      merged.per_round.push_back(stat);
    }
    offset += part->logical_span;
  }
  merged.logical_span = offset;
  merged.all_halted = true;
  return merged;
}

// --- subcommands -----------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::int64_t n = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  Graph g = make_family(a.family, a.n, resolve_seed(a.seed));
  write_graph_json(g, a.out);
  std::cout << "wrote " << a.out << ": " << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges\n";
  return 0;
}

struct PartitionArgs {
  std::string in;
  std::string preset;
  std::string audit;
};

int cmd_partition(const PartitionArgs& a) {
  Graph g = read_graph_json(a.in);
  Preset preset = parse_preset(a.preset);
  require_preset_fit(g, preset);
  PartitionParams params = preset_params(preset, g.vertex_count());
  PartitionResult result = run_partition(g, params);
  audit_keys(g, result, params);

  auto shrink = shrink_profile(result, g.vertex_count());
  double worst = 0.0;
  std::string csv = "iteration,active,remaining,ratio\n";
  for (std::size_t i = 0; i < shrink.size(); ++i) {
    auto [active, remaining] = shrink[i];
    double ratio = active > 0 ? static_cast<double>(remaining) / static_cast<double>(active) : 0.0;
    worst = std::max(worst, ratio);
    csv += std::to_string(i + 1) + "," + std::to_string(active) + "," +
           std::to_string(remaining) + "," + format_ratio(ratio) + "\n";
  }
  if (!a.audit.empty()) write_text_file(a.audit, csv);

  std::cout << "partitioned " << g.vertex_count() << " vertices into " << result.max_level
            << " levels over " << result.trace.rounds_used() << " busy rounds; worst shrink "
            << format_ratio(worst) << "\n";
  return 0;
}

struct ColorArgs {
  std::string in;
  std::string preset;
  std::string out;
  std::string trace;
};

int cmd_color(const ColorArgs& a) {
  Graph g = read_graph_json(a.in);
  Preset preset = parse_preset(a.preset);
  require_preset_fit(g, preset);
  PipelineResult result = run_pipeline(g, preset);
  write_colors_json(result.coloring, a.out);
  if (!a.trace.empty()) {
    RoundTrace merged = merge_traces(
        {&result.partition.trace, &result.phi.trace, &result.final_pass.trace});
    write_trace_csv(merged, a.trace);
  }
  std::cout << "colored " << g.vertex_count() << " vertices with " << count_colors(result.coloring)
            << " colors (palette " << result.coloring.palette_size << ") in "
            << result.busy_rounds << " busy rounds\n";
  return 0;
}

struct ChargeArgs {
  std::string in;
  std::string ledger;
};

std::string rational_string(const Charge& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

int cmd_analyze_charge(const ChargeArgs& a) {
  Graph g = read_graph_json(a.in);
  ChargeResult result = charge_procedure(g);
  const ChargeLedger& ledger = result.ledger;

  nlohmann::ordered_json doc;
  doc["input"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  doc["removed"] = nlohmann::ordered_json::array();
  for (auto [u, v] : ledger.removed) doc["removed"].push_back({u, v});
  doc["events"] = nlohmann::ordered_json::array();
  for (const auto& e : ledger.events) {
    const char* kind = e.kind == ChargeKind::five_cycle  ? "five_cycle"
                       : e.kind == ChargeKind::four_clique ? "four_clique"
                                                           : "triangle";
    nlohmann::ordered_json removed = nlohmann::ordered_json::array();
    for (auto [u, v] : e.removed) removed.push_back({u, v});
    doc["events"].push_back({{"kind", kind}, {"members", e.members}, {"removed", removed}});
  }
  std::vector<std::pair<VertexId, Charge>> charges(ledger.charges.begin(), ledger.charges.end());
  std::sort(charges.begin(), charges.end());
  doc["charges"] = nlohmann::ordered_json::array();
  for (const auto& [v, q] : charges) doc["charges"].push_back({v, rational_string(q)});
  doc["totals"] = {{"removed", static_cast<std::int64_t>(ledger.removed.size())},
                   {"total_charge", rational_string(ledger.total_charge())},
                   {"max_charge", rational_string(ledger.max_charge())},
                   {"reduced_vertices", result.reduced.vertex_count()},
                   {"reduced_edges", result.reduced.edge_count()}};
  write_text_file(a.ledger, doc.dump(2) + "\n");

  std::cout << "removed " << ledger.removed.size() << " edges over " << ledger.events.size()
            << " events; max charge " << rational_string(ledger.max_charge()) << "; reduced to "
            << result.reduced.edge_count() << " edges\n";
  return 0;
}

struct LowerboundArgs {
  std::string family;
  std::int64_t k = 0;
  std::string check;
  std::optional<std::int64_t> t;
};

int cmd_lowerbound(const LowerboundArgs& a) {
  GadgetFamily family;
  if (a.family == "planar4") {
    family = GadgetFamily::planar4;
  } else if (a.family == "outerplanar3") {
    family = GadgetFamily::outerplanar3;
  } else {
    throw InputError("family must be planar4 or outerplanar3, got '" + a.family + "'");
  }
  GadgetSpec spec{family, a.k};

  if (a.check.empty()) {
    GadgetBuild gb = build_gadget(spec);
    std::cout << a.family << " k=" << a.k << ": " << gb.graph.vertex_count() << " vertices, "
              << gb.graph.edge_count() << " edges\n";
    return 0;
  }
  if (a.check == "forcing") {
    bool ok = forcing_check(spec);
    std::cout << "forcing " << (ok ? "holds" : "fails") << " for " << a.family << " k=" << a.k
              << "\n";
    if (!ok) throw VerificationError("endpoint colors are not forced");
    return 0;
  }
  if (a.check == "distance") {
    bool ok = distance_check(spec);
    std::cout << "base-to-top distance " << (ok ? "equals" : "differs from") << " 2k for "
              << a.family << " k=" << a.k << "\n";
    if (!ok) throw VerificationError("base-to-top distance is not 2k");
    return 0;
  }
  if (a.check == "swap") {
    if (family != GadgetFamily::planar4) {
      throw InputError("the swap experiment runs on the planar4 family");
    }
    if (!a.t) throw InputError("--check swap needs --t");
    std::int64_t t = *a.t;
    struct NamedAlg {
      const char* name;
      LocalColoringAlg alg;
    };
    std::vector<NamedAlg> algs = {
        {"ball_rank", [t](const Graph& g) { return ball_rank_coloring(g, t, 4); }},
        {"greedy_ball", [t](const Graph& g) { return greedy_ball_coloring(g, t, 4); }},
    };
    bool all_violate = true;
    for (const auto& [name, alg] : algs) {
      SwapVerdict v = swap_labeling_experiment(a.k, t, alg);
      std::cout << name << ": balls_disjoint=" << (v.balls_disjoint ? "true" : "false")
                << " base_proper=" << (v.base_proper ? "true" : "false")
                << " base_forced=" << (v.base_forced ? "true" : "false")
                << " swapped_proper=" << (v.swapped_proper ? "true" : "false")
                << " swapped_forced=" << (v.swapped_forced ? "true" : "false")
                << " violation=" << (v.violation() ? "true" : "false") << "\n";
      all_violate = all_violate && v.violation();
    }
    if (!all_violate) {
      throw VerificationError("some horizon-limited program satisfied both properness and forcing");
    }
    return 0;
  }
  throw InputError("check must be forcing, distance, or swap, got '" + a.check + "'");
}

struct BenchArgs {
  std::string preset;
  std::vector<std::string> families;
  std::vector<std::int64_t> sizes;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  Preset preset = parse_preset(a.preset);
  for (std::size_t i = 1; i < a.sizes.size(); ++i) {
    if (a.sizes[i - 1] >= a.sizes[i]) throw InputError("bench sizes must be strictly ascending");
  }
  std::uint64_t seed = resolve_seed(a.seed);

  std::string csv = "family,n,rounds,colors,proper,worst_shrink\n";
  for (const auto& family : a.families) {
    for (std::int64_t n : a.sizes) {
      Graph g = make_family(family, n, seed);
      require_preset_fit(g, preset);
      PipelineResult result = run_pipeline(g, preset);
      bool proper = is_proper(g, result.coloring, true).proper;
      csv += family + "," + std::to_string(g.vertex_count()) + "," +
             std::to_string(result.busy_rounds) + "," + std::to_string(count_colors(result.coloring)) +
             "," + (proper ? "true" : "false") + "," + format_ratio(result.worst_shrink) + "\n";
      if (!proper) {
        std::cout << csv;
        throw VerificationError("improper output on " + family + " n=" + std::to_string(n));
      }
    }
  }
  if (!a.out.empty()) write_text_file(a.out, csv);
  std::cout << csv;
  return 0;
}

struct VerifyArgs {
  std::string graph;
  std::string colors;
  std::optional<int> palette;
};

int cmd_verify(const VerifyArgs& a) {
  Graph g = read_graph_json(a.graph);
  ColorAssignment c = read_colors_json(a.colors);
  if (a.palette) c.palette_size = *a.palette;
  ProperReport report = is_proper(g, c, true);
  if (!report.proper) throw VerificationError(report.describe());
  std::cout << "proper coloring: " << g.vertex_count() << " vertices within palette "
            << c.palette_size << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distributed planar graph coloring toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* sc_gen = app.add_subcommand("generate", "write a generated graph as JSON");
  sc_gen->add_option("--family", gen.family, "graph family")->required();
  sc_gen->add_option("--n", gen.n, "target vertex count (level count for gadget families)")
      ->required();
  sc_gen->add_option("--seed", gen.seed, "random seed (COLOR_SEED env overrides)");
  sc_gen->add_option("--out", gen.out, "output path")->required();

  PartitionArgs part;
  auto* sc_part = app.add_subcommand("partition", "layer a graph and audit the shrink rate");
  sc_part->add_option("--in", part.in, "input graph JSON")->required();
  sc_part->add_option("--preset", part.preset, "4col or 6col")->required();
  sc_part->add_option("--audit", part.audit, "per-iteration shrink CSV path");

  ColorArgs col;
  auto* sc_col = app.add_subcommand("color", "run the full coloring pipeline");
  sc_col->add_option("--in", col.in, "input graph JSON")->required();
  sc_col->add_option("--preset", col.preset, "4col or 6col")->required();
  sc_col->add_option("--out", col.out, "output coloring JSON")->required();
  sc_col->add_option("--trace", col.trace, "busy-round trace CSV path");

  ChargeArgs charge;
  auto* sc_analyze = app.add_subcommand("analyze", "offline structure analyses");
  auto* sc_charge = sc_analyze->add_subcommand("charge", "run the edge-charge procedure");
  sc_charge->add_option("--in", charge.in, "input graph JSON")->required();
  sc_charge->add_option("--ledger", charge.ledger, "output ledger JSON")->required();
  sc_analyze->require_subcommand(1);

  LowerboundArgs lb;
  auto* sc_lb = app.add_subcommand("lowerbound", "gadget families and oracle checks");
  sc_lb->add_option("--family", lb.family, "planar4 or outerplanar3")->required();
  sc_lb->add_option("--k", lb.k, "recursion depth")->required();
  sc_lb->add_option("--check", lb.check, "forcing, distance, or swap");
  std::int64_t lb_t = 0;
  auto* lb_t_opt = sc_lb->add_option("--t", lb_t, "round horizon for the swap experiment");

  BenchArgs bench;
  auto* sc_bench = app.add_subcommand("bench", "round/color measurements over a size ladder");
  sc_bench->add_option("--preset", bench.preset, "4col or 6col")->required();
  sc_bench->add_option("--families", bench.families, "comma separated families")
      ->required()
      ->delimiter(',');
  sc_bench->add_option("--sizes", bench.sizes, "comma separated ascending sizes")->delimiter(',');
  sc_bench->add_option("--seed", bench.seed, "random seed (COLOR_SEED env overrides)");
  sc_bench->add_option("--out", bench.out, "also write the CSV here");

  VerifyArgs verify;
  auto* sc_verify = app.add_subcommand("verify", "check a coloring file against a graph");
  sc_verify->add_option("--graph", verify.graph, "graph JSON")->required();
  sc_verify->add_option("--colors", verify.colors, "coloring JSON")->required();
  int verify_palette = 0;
  auto* vp_opt = sc_verify->add_option("--palette", verify_palette, "override the palette bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sc_gen) return cmd_generate(gen);
    if (*sc_part) return cmd_partition(part);
    if (*sc_col) return cmd_color(col);
    if (*sc_charge) return cmd_analyze_charge(charge);
    if (*sc_lb) {
      if (lb_t_opt->count() > 0) lb.t = lb_t;
      return cmd_lowerbound(lb);
    }
    if (*sc_bench) return cmd_bench(bench);
    if (*sc_verify) {
      if (vp_opt->count() > 0) verify.palette = verify_palette;
      return cmd_verify(verify);
    }
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
