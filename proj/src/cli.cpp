#include "frz/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "frz/fence.hpp"
#include "frz/io.hpp"
#include "frz/render.hpp"
#include "frz/surface.hpp"
#include "frz/tubes.hpp"

namespace frz {

namespace {

std::vector<std::pair<int, int>> parse_diagonals(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw UsageError("diagonal \"" + item + "\" must look like 1-3");
    try {
      out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw UsageError("diagonal \"" + item + "\" must look like 1-3");
    }
  }
  return out;
}

int run_fence(const FenceCmd& cmd, std::ostream& out) {
  const FenceWord w = FenceWord::parse(cmd.word);
  out << "word: " << w.str() << "\n";
  out << "vertices: " << w.vertex_count() << "\n";
  out << "ideal count: " << ideal_count(w).str() << "\n";
  out << "nabla: " << nabla(w).str() << "\n";
  out << "delta: " << delta(w).str() << "\n";
  return 0;
}

int run_band(const BandCmd& cmd, std::ostream& out) {
  const FenceWord w = FenceWord::parse(cmd.word);
  const BandCount b = band_count(CyclicWord{w});
  out << "word: " << w.str() << " (closed up by one Down arrow)\n";
  out << "count: " << b.count.str() << "\n";
  out << "degenerate: " << (b.degenerate ? "yes" : "no") << "\n";
  return 0;
}

int run_frieze(const FriezeCmd& cmd, std::ostream& out, std::ostream& err) {
  const Quiddity q = Quiddity::parse(cmd.quiddity);
  const Frieze f = generate(q, cmd.rows);
  out << render_frieze(f, cmd.show_zeros);
  const FriezeStatus st = f.status();
  switch (st.state) {
    case FriezeState::InfiniteSoFar:
      out << "status: infinite so far (" << f.max_row() << " rows)\n";
      return 0;
    case FriezeState::Closed:
      out << "status: closed at row " << st.row << "\n";
      return 0;
    default:
      out << "status: invalid at row " << st.row << ", index " << st.index << "\n";
      err << "quiddity " << q.str() << " does not generate a frieze\n";
      return 1;
  }
}

int run_growth(const GrowthCmd& cmd, std::ostream& out, std::ostream& err) {
  const Quiddity q = Quiddity::parse(cmd.quiddity);
  Int s;
  try {
    s = growth(q);
  } catch (const FriezeError& e) {
    err << "growth undefined for " << q.str() << ": " << e.what() << "\n";
    return 1;
  }
  out << "quiddity: " << q.str() << "\n";
  out << "growth: " << s.str() << "\n";
  if (cmd.k) {
    for (int k = 0; k <= *cmd.k; ++k)
      out << "s_" << k << ": " << chebyshev_growth(s, k).str() << "\n";
  }
  return 0;
}

int run_polygon(const PolygonCmd& cmd, std::ostream& out) {
  const Quiddity q = polygon_quiddity(cmd.n, parse_diagonals(cmd.diagonals));
  out << "n: " << cmd.n << "\n";
  std::string flat;
  for (const Int& a : q.entries()) {
    if (!flat.empty()) flat += ",";
    flat += a.str();
  }
  out << "quiddity: " << flat << "\n";
  return 0;
}

int run_analyze(const DiskAnalyzeCmd& cmd, std::ostream& out, std::ostream& err) {
  DiskTriangulation t;
  try {
    t = load_triangulation(cmd.input);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  const ValidationReport v = validate(t);
  for (const std::string& note : v.notes) err << "note: " << note << "\n";
  if (!v.ok()) {
    for (const std::string& violation : v.violations) err << "invalid: " << violation << "\n";
    return 2;
  }
  const TubeReport rep = tube_report(t);
  if (rep.failed()) {
    err << "analysis failed at stage " << rep.error_stage << ": " << rep.error_detail << "\n";
    return 2;
  }
  out << (cmd.format == "machine" ? report_to_machine(rep) : report_to_text(rep));
  return rep.all_equal ? 0 : 1;
}

int run_gen(const DiskGenCmd& cmd, std::ostream& out, std::ostream& err) {
  DiskTriangulation t;
  try {
    t = random_triangulation(cmd.seed, GenParams{cmd.b, cmd.p, cmd.q});
  } catch (const SurfaceError& e) {
    err << e.what() << "\n";
    return 2;
  }
  const std::string text = triangulation_to_json(t);
  if (cmd.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cmd.out);
    if (!file) {
      err << "cannot write " << cmd.out << "\n";
      return 2;
    }
    file << text;
    out << "wrote b=" << cmd.b << " p=" << cmd.p << " q=" << cmd.q << " seed=" << cmd.seed
        << " to " << cmd.out << "\n";
  }
  return 0;
}

int run_verify(const DiskVerifyCmd& cmd, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(cmd.seed);
  auto below = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  int failures = 0;
  for (int i = 0; i < cmd.random; ++i) {
    const int b = cmd.b ? *cmd.b : 2 + below(7);
    const int p = 1 + below(std::min(cmd.pmax, b + 1));
    const int q = 1 + below(std::min(cmd.qmax, b + 2 - p));
    const std::uint64_t instance_seed = rng();
    TubeReport rep;
    try {
      rep = tube_report(random_triangulation(instance_seed, GenParams{b, p, q}));
    } catch (const std::exception& e) {
      err << "instance " << i + 1 << ": generator failed: " << e.what() << "\n";
      ++failures;
      continue;
    }
    const bool ok = !rep.failed() && rep.all_equal;
    out << "instance " << i + 1 << ": b=" << b << " p=" << rep.p << " q=" << rep.q
        << " case=" << (rep.failed() ? "?" : case_str(rep.tag)) << " a=" << rep.a.str()
        << " growth=" << rep.growth_formula.str() << " " << (ok ? "ok" : "MISMATCH") << "\n";
    if (!ok) ++failures;
  }
  out << "verified " << (cmd.random - failures) << "/" << cmd.random
      << " instances: " << (failures == 0 ? "all growth coefficients match" : "mismatches found")
      << "\n";
  return failures == 0 ? 0 : 1;
}

void build_app(CLI::App& app, Command& cmd) {
  app.require_subcommand(1);

  auto* fence = app.add_subcommand("fence", "rank matrices and ideal count of a fence word");
  auto fence_cmd = std::make_shared<FenceCmd>();
  fence->add_option("--word", fence_cmd->word, "word over U and D (empty for one vertex)")
      ->required();
  fence->callback([&cmd, fence_cmd] { cmd = *fence_cmd; });

  auto* band = app.add_subcommand("band", "trace count of a cyclic fence word");
  auto band_cmd = std::make_shared<BandCmd>();
  band->add_option("--word", band_cmd->word, "word over U and D")->required();
  band->callback([&cmd, band_cmd] { cmd = *band_cmd; });

  auto* frieze = app.add_subcommand("frieze", "generate frieze rows from a quiddity sequence");
  auto frieze_cmd = std::make_shared<FriezeCmd>();
  frieze->add_option("--quiddity", frieze_cmd->quiddity, "comma-separated positive integers")
      ->required();
  frieze->add_option("--rows", frieze_cmd->rows, "rows to generate")
      ->check(CLI::Range(1, 64));
  frieze->add_flag("--show-zeros", frieze_cmd->show_zeros, "print the top row of 0s");
  frieze->callback([&cmd, frieze_cmd] { cmd = *frieze_cmd; });

  auto* growth = app.add_subcommand("growth", "growth coefficient of a quiddity sequence");
  auto growth_cmd = std::make_shared<GrowthCmd>();
  auto growth_k = std::make_shared<int>(0);
  growth->add_option("--quiddity", growth_cmd->quiddity, "comma-separated positive integers")
      ->required();
  auto* kopt = growth->add_option("--k", *growth_k, "also print s_0..s_k")->check(CLI::Range(0, 64));
  growth->callback([&cmd, growth_cmd, growth_k, kopt] {
    GrowthCmd g = *growth_cmd;
    if (kopt->count() > 0) g.k = *growth_k;
    cmd = g;
  });

  auto* polygon = app.add_subcommand("polygon", "quiddity of a triangulated convex polygon");
  auto polygon_cmd = std::make_shared<PolygonCmd>();
  polygon->add_option("--n", polygon_cmd->n, "number of polygon vertices")->required();
  polygon->add_option("--diagonals", polygon_cmd->diagonals, "pairs like 1-3,1-4");
  polygon->callback([&cmd, polygon_cmd] { cmd = *polygon_cmd; });

  auto* disk = app.add_subcommand("disk", "twice-punctured disk triangulations");
  disk->require_subcommand(1);

  auto* analyze = disk->add_subcommand("analyze", "tube report of a triangulation file");
  auto analyze_cmd = std::make_shared<DiskAnalyzeCmd>();
  analyze->add_option("--input", analyze_cmd->input, "triangulation JSON file")->required();
  analyze->add_option("--format", analyze_cmd->format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  analyze->callback([&cmd, analyze_cmd] { cmd = *analyze_cmd; });

  auto* gen = disk->add_subcommand("gen", "generate a triangulation");
  auto gen_cmd = std::make_shared<DiskGenCmd>();
  gen->add_option("--seed", gen_cmd->seed, "random seed")->required();
  gen->add_option("--b", gen_cmd->b, "boundary marked points")->required();
  gen->add_option("--p", gen_cmd->p, "arc ends at puncture P")->required();
  gen->add_option("--q", gen_cmd->q, "arc ends at puncture Q")->required();
  gen->add_option("--out", gen_cmd->out, "output file (default: stdout)");
  gen->callback([&cmd, gen_cmd] { cmd = *gen_cmd; });

  auto* verify = disk->add_subcommand("verify", "check the growth identity on random instances");
  auto verify_cmd = std::make_shared<DiskVerifyCmd>();
  auto verify_b = std::make_shared<int>(0);
  verify->add_option("--random", verify_cmd->random, "number of instances")
      ->required()
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--seed", verify_cmd->seed, "random seed")->required();
  auto* bopt =
      verify->add_option("--b", *verify_b, "fix the boundary point count")->check(CLI::Range(2, 64));
  verify->add_option("--pmax", verify_cmd->pmax, "largest p to draw")->check(CLI::Range(1, 64));
  verify->add_option("--qmax", verify_cmd->qmax, "largest q to draw")->check(CLI::Range(1, 64));
  verify->callback([&cmd, verify_cmd, verify_b, bopt] {
    DiskVerifyCmd v = *verify_cmd;
    if (bopt->count() > 0) v.b = *verify_b;
    cmd = v;
  });
}

}  // namespace

Command parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"exact friezes, growth coefficients, and twice-punctured disk tubes"};
  Command cmd;
  build_app(app, cmd);
  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    return std::visit(
        [&](const auto& c) -> int {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, FenceCmd>) return run_fence(c, out);
          else if constexpr (std::is_same_v<T, BandCmd>) return run_band(c, out);
          else if constexpr (std::is_same_v<T, FriezeCmd>) return run_frieze(c, out, err);
          else if constexpr (std::is_same_v<T, GrowthCmd>) return run_growth(c, out, err);
          else if constexpr (std::is_same_v<T, PolygonCmd>) return run_polygon(c, out);
          else if constexpr (std::is_same_v<T, DiskAnalyzeCmd>) return run_analyze(c, out, err);
          else if constexpr (std::is_same_v<T, DiskGenCmd>) return run_gen(c, out, err);
          else return run_verify(c, out, err);
        },
        cmd);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SurfaceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return 1;
  }
}

int cli_main(int argc, char** argv) {
  CLI::App app{"exact friezes, growth coefficients, and twice-punctured disk tubes"};
  app.name("friezes");
  Command cmd;
  build_app(app, cmd);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "run 'friezes --help' for usage\n";
    return 2;
  }
  try {
    return run(cmd, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

}  // namespace frz
