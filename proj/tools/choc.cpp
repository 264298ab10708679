// choc: command-line front end for the chocolate-game workbench.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 capacity bound exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"

#include "choc/automaton.hpp"
#include "choc/core_positions.hpp"
#include "choc/enumeration.hpp"
#include "choc/errors.hpp"
#include "choc/formats.hpp"
#include "choc/game_engine.hpp"
#include "choc/nim_pass.hpp"
#include "choc/recursion.hpp"
#include "choc/service.hpp"
#include "choc/sierpinski.hpp"
#include "choc/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw choc::DomainError("bad list item '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::string render_bar(const choc::GameState& s) {
  std::string out;
  for (choc::Index j = s.h; j >= 1; --j) {
    out += j < 10 ? " " : "";
    out += std::to_string(j) + " ";
    for (choc::Index i = 1; i <= s.w; ++i) {
      out += (i == s.poison.i && j == s.poison.j) ? 'X' : '#';
      if (i < s.w) out += ' ';
    }
    out += '\n';
  }
  return out;
}

int play(choc::Side m, const std::optional<std::string>& poison_arg, const std::string& first) {
  using choc::Player;
  if (m < 1 || m > choc::kMaxSide) throw choc::DomainError("board side must be in 1.." + std::to_string(choc::kMaxSide));
  choc::Cell poison;
  if (poison_arg) {
    const auto ij = parse_list(*poison_arg);
    if (ij.size() != 2) throw choc::DomainError("--poison expects i,j");
    poison = {ij[0], ij[1]};
  } else {
    std::mt19937 rng{std::random_device{}()};
    std::uniform_int_distribution<choc::Index> pick(1, m);
    poison = {pick(rng), pick(rng)};
  }
  const Player human = Player::a;
  choc::GameState s = choc::make_state(m, m, poison, first == "engine" ? Player::b : human);

  while (!s.terminal()) {
    std::cout << render_bar(s);
    if (s.mover == human) {
      std::cout << "your move (";
      if (s.w > 1) std::cout << "v 1.." << s.w - 1 << (s.h > 1 ? ", " : "");
      if (s.h > 1) std::cout << "h 1.." << s.h - 1;
      std::cout << "): " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cout << "\nbye\n";
        return 0;
      }
      std::istringstream in(line);
      std::string axis_text;
      long cut = 0;
      const auto axis = (in >> axis_text >> cut) ? choc::parse_axis(axis_text) : std::nullopt;
      if (!axis || cut < 1) {
        std::cout << "expected e.g. 'v 2' or 'h 1'\n";
        continue;
      }
      try {
        s = choc::apply_move(s, {*axis, static_cast<choc::Index>(cut)});
      } catch (const choc::IllegalMoveError& e) {
        std::cout << "illegal move: " << e.what() << "\n";
      }
    } else {
      const choc::Move mv = choc::best_move(s);
      std::cout << "engine plays " << choc::to_string(mv) << "\n";
      s = choc::apply_move(s, mv);
    }
  }
  std::cout << render_bar(s);
  std::cout << (s.mover == human ? "you are left with the poison: engine wins\n"
                                 : "the engine is left with the poison: you win\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chocolate game P-position workbench"};
  app.require_subcommand(1);

  // pattern
  auto* pattern_cmd = app.add_subcommand("pattern", "Write the P-position pattern of the m x m board");
  choc::Side pattern_m = 0;
  std::string pattern_method = "xor";
  std::string pattern_format = "pbm";
  std::string pattern_out;
  std::string pattern_trace;
  pattern_cmd->add_option("m", pattern_m, "Board side")->required();
  pattern_cmd->add_option("--method", pattern_method)->check(CLI::IsMember({"xor", "recursive", "ca"}));
  pattern_cmd->add_option("--format", pattern_format)->check(CLI::IsMember({"pbm", "svg"}));
  pattern_cmd->add_option("-o", pattern_out, "Output file (default stdout)");
  pattern_cmd->add_option("--trace", pattern_trace,
                          "With --method ca, also write one PBM frame per step into this directory");

  // gvalue
  auto* gvalue_cmd = app.add_subcommand("gvalue", "Print g(m), the number of P-positions");
  std::uint64_t gvalue_m = 0;
  gvalue_cmd->add_option("m", gvalue_m)->required();

  // gsum
  auto* gsum_cmd = app.add_subcommand("gsum", "Print a dyadic sum of g and its closed form");
  std::optional<unsigned> gsum_odd;
  std::optional<unsigned> gsum_all;
  auto* odd_opt = gsum_cmd->add_option("--odd", gsum_odd, "Sum of g(2m-1), m <= 2^(n-1)");
  auto* all_opt = gsum_cmd->add_option("--all", gsum_all, "Sum of g(m), m <= 2^n");
  odd_opt->excludes(all_opt);
  gsum_cmd->require_option(1);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
  std::string verify_suite = "all";
  std::optional<unsigned> verify_max;
  std::vector<std::string> suite_choices = choc::suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", verify_suite)->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--max", verify_max, "Suite bound (with 'all': caps every suite's default)");

  // sierpinski
  auto* sier_cmd = app.add_subcommand("sierpinski", "Export a horizontal section of the order-n octahedron");
  unsigned sier_n = 0;
  std::int64_t sier_m = 0;
  bool sier_half = false;
  std::string sier_format = "csv";
  std::string sier_out;
  sier_cmd->add_option("n", sier_n)->required();
  sier_cmd->add_option("m", sier_m)->required();
  sier_cmd->add_flag("--half", sier_half, "Slice at level m + 1/2");
  sier_cmd->add_option("--format", sier_format)->check(CLI::IsMember({"csv", "svg"}));
  sier_cmd->add_option("-o", sier_out);

  // nimpass
  auto* pass_cmd = app.add_subcommand("nimpass", "Nim-with-a-pass overlay or game graph");
  std::optional<choc::Side> pass_m;
  std::string pass_format = "grid";
  std::string pass_out;
  std::optional<std::string> pass_graph;
  pass_cmd->add_option("m", pass_m);
  pass_cmd->add_option("--format", pass_format)->check(CLI::IsMember({"grid", "svg"}));
  pass_cmd->add_option("-o", pass_out);
  pass_cmd->add_option("--graph", pass_graph, "Export the game graph from piles p1,p2,p3,p4 as DOT");

  // play
  auto* play_cmd = app.add_subcommand("play", "Play against the engine in the terminal");
  choc::Side play_m = 0;
  std::optional<std::string> play_poison;
  std::string play_first = "human";
  play_cmd->add_option("m", play_m)->required();
  play_cmd->add_option("--poison", play_poison, "Poison cell i,j (default random)");
  play_cmd->add_option("--first", play_first)->check(CLI::IsMember({"human", "engine"}));

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "Start the HTTP service");
  int serve_port = 8080;
  long serve_ttl = 1800;
  std::string serve_host = "0.0.0.0";
  serve_cmd->add_option("--port", serve_port);
  serve_cmd->add_option("--session-ttl", serve_ttl, "Session lifetime in seconds")
      ->check(CLI::PositiveNumber);
  serve_cmd->add_option("--host", serve_host);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*pattern_cmd) {
      choc::Pattern p;
      if (pattern_method == "recursive") {
        p = choc::pattern_recursive(pattern_m);
      } else if (pattern_method == "ca") {
        p = choc::ca_pattern(pattern_m);
        if (!pattern_trace.empty()) {
          std::filesystem::create_directories(pattern_trace);
          const auto frames = choc::ca_trace_pbm(pattern_m);
          for (std::size_t k = 0; k < frames.size(); ++k) {
            emit(frames[k], (std::filesystem::path(pattern_trace) /
                             ("step_" + std::to_string(k + 1) + ".pbm")).string());
          }
        }
      } else {
        p = choc::pattern(pattern_m);
      }
      emit(pattern_format == "svg" ? choc::to_svg(p) : choc::to_pbm(p), pattern_out);
    } else if (*gvalue_cmd) {
      std::cout << choc::g(gvalue_m) << "\n";
    } else if (*gsum_cmd) {
      const bool odd = gsum_odd.has_value();
      const unsigned n = odd ? *gsum_odd : *gsum_all;
      const choc::Count sum = odd ? choc::sum_odd(n) : choc::sum_all(n);
      const choc::Count closed = odd ? choc::sum_odd_closed_form(n) : choc::sum_all_closed_form(n);
      std::cout << sum << (sum == closed ? " == " : " != ") << closed << "\n";
      return sum == closed ? 0 : kExitVerifyFailed;
    } else if (*verify_cmd) {
      std::vector<std::string> suites;
      if (verify_suite == "all") {
        suites = choc::suite_names();
      } else {
        suites.push_back(verify_suite);
      }
      bool ok = true;
      for (const auto& name : suites) {
        unsigned bound = choc::default_bound(name);
        if (verify_max) bound = verify_suite == "all" ? std::min(bound, *verify_max) : *verify_max;
        const choc::SuiteReport report = choc::run_suite(name, bound);
        for (const auto& f : report.failures) std::cerr << name << ": FAILED " << f << "\n";
        std::cout << report.summary() << "\n";
        ok = ok && report.passed();
      }
      return ok ? 0 : kExitVerifyFailed;
    } else if (*sier_cmd) {
      const choc::Section sec =
          sier_half ? choc::half_section(sier_n, sier_m) : choc::integer_section(sier_n, sier_m);
      emit(sier_format == "svg" ? choc::to_svg(sec) : choc::to_csv(sec), sier_out);
    } else if (*pass_cmd) {
      if (pass_graph) {
        const auto piles = parse_list(*pass_graph);
        if (piles.size() != 4) throw choc::DomainError("--graph expects four piles");
        emit(choc::to_dot(choc::pass_graph({piles[0], piles[1], piles[2], piles[3]})), pass_out);
      } else {
        if (!pass_m) throw choc::DomainError("nimpass needs m or --graph");
        const choc::OverlayPattern o = choc::overlay(*pass_m);
        emit(pass_format == "svg" ? choc::to_svg(o) : choc::to_grid(o), pass_out);
      }
    } else if (*play_cmd) {
      return play(play_m, play_poison, play_first);
    } else if (*serve_cmd) {
      httplib::Server server;
      choc::ServiceOptions options;
      options.session_ttl = std::chrono::seconds(serve_ttl);
      choc::GameService service(options);
      service.mount(server);
      std::cout << "listening on " << serve_host << ":" << serve_port << std::endl;
      if (!server.listen(serve_host, serve_port)) {
        std::cerr << "cannot listen on " << serve_host << ":" << serve_port << "\n";
        return kExitUsage;
      }
    }
  } catch (const choc::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const choc::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
