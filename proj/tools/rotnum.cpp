// rotnum: command-line front end. Every payload is deterministic; fractions
// are always written as "num/den".

#include "rotnum/errors.hpp"
#include "rotnum/farey.hpp"
#include "rotnum/game.hpp"
#include "rotnum/isobar.hpp"
#include "rotnum/limits.hpp"
#include "rotnum/parallel.hpp"
#include "rotnum/rotation.hpp"
#include "rotnum/serialize.hpp"
#include "rotnum/stairstep.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>

using namespace rotnum;

namespace {

constexpr long long kMaxDenCap = 16;
constexpr int kResolutionCap = 2048;
constexpr int kUnsafeNecklaceSize = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string word, r, s, t, u, level, value, format = "json", out;
  long long max_den = 5;
  long long kmax = 6;
  long long mmax = 12;
  int depth = 1;
  long long nmax = 200;
  int resolution = 256;
  unsigned threads = 0;
  bool unsafe = false;
  bool first = false;
};

Word positive_word(const std::string& text) {
  Word w = parse_word(text);
  if (w.empty() || !w.is_positive())
    throw UsageError("word '" + text + "' is not positive; use `rotnum rigid` for R(w, r-, s-)");
  return w;
}

Fraction fraction(const std::string& text, const char* name) {
  if (text.empty()) throw UsageError(std::string("missing --") + name);
  return Fraction::parse(text);
}

void require_format(const Args& a, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (a.format == f) return;
  throw UsageError("format '" + a.format + "' is not available for this command");
}

void check_max_den(const Args& a) {
  if (a.max_den < 1) throw UsageError("--max-den must be positive");
  if (a.max_den > kMaxDenCap && !a.unsafe)
    throw CapExceeded("--max-den " + std::to_string(a.max_den) + " exceeds the cap " +
                      std::to_string(kMaxDenCap) + " (pass --unsafe-caps to override)");
}

EvalOptions eval_options(const Args& a) {
  EvalOptions e;
  e.max_necklace_size = a.unsafe ? kUnsafeNecklaceSize : static_cast<int>(2 * kMaxDenCap);
  return e;
}

GridOptions grid_options(const Args& a) {
  GridOptions g;
  g.threads = resolve_threads(a.threads);
  g.eval = eval_options(a);
  return g;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string cmd_eval(const Args& a) {
  require_format(a, {"json"});
  Word w = positive_word(a.word);
  Fraction r = fraction(a.r, "r"), s = fraction(a.s, "s");
  return dump(evaluation_json(w, r, s, evaluate_max(w, r, s, eval_options(a))));
}

std::string cmd_staircase(const Args& a) {
  require_format(a, {"json"});
  return dump(staircase_json(staircase(positive_word(a.word), fraction(a.r, "r"))));
}

std::string cmd_threshold(const Args& a) {
  require_format(a, {"json"});
  Word w = positive_word(a.word);
  Fraction r = fraction(a.r, "r"), v = fraction(a.value, "value");
  Json j;
  j["word"] = w.str();
  j["r"] = r.str_full();
  j["value"] = v.str_full();
  j["threshold"] = stairstep_threshold(w, r, v).str_full();
  return dump(j);
}

std::string cmd_limit(const Args& a) {
  require_format(a, {"json"});
  Word w = positive_word(a.word);
  Fraction r = fraction(a.r, "r"), s = fraction(a.s, "s");
  Json j;
  j["word"] = w.str();
  j["r"] = r.str_full();
  j["s"] = s.str_full();
  j["side"] = a.first ? "first" : "second";
  j["limit"] = limit_json(a.first ? R_left_limit_first(w, r, s) : R_left_limit_second(w, r, s));
  return dump(j);
}

std::string cmd_isobar(const Args& a) {
  require_format(a, {"json"});
  check_max_den(a);
  return dump(frontier_json(isobar_frontier(positive_word(a.word), fraction(a.level, "level"), a.max_den,
                                            grid_options(a))));
}

std::string cmd_grid(const Args& a) {
  require_format(a, {"json", "csv", "pgm"});
  check_max_den(a);
  ZigguratGrid grid = ziggurat_grid(positive_word(a.word), a.max_den, grid_options(a));
  if (a.format == "csv") return grid_csv(grid);
  if (a.format == "pgm") return grid_pgm(grid);
  Json j;
  j["word"] = grid.word.str();
  j["D"] = grid.D;
  Json cells = Json::array();
  for (std::size_t i = 0; i < grid.axis.size(); ++i)
    for (std::size_t k = 0; k < grid.axis.size(); ++k) {
      Json c;
      c["r"] = grid.axis[i].str_full();
      c["s"] = grid.axis[k].str_full();
      c["value"] = grid.at(i, k).str_full();
      cells.push_back(std::move(c));
    }
  j["cells"] = std::move(cells);
  return dump(j);
}

std::string cmd_rigid(const Args& a) {
  require_format(a, {"json"});
  Word w = parse_word(a.word);
  Fraction r = fraction(a.r, "r"), s = fraction(a.s, "s");
  RigidOptions ro;
  ro.k_max = a.kmax;
  ro.eval = eval_options(a);
  Json j;
  j["word"] = w.str();
  j["r"] = r.str_full();
  j["s"] = s.str_full();
  j["limit"] = limit_json(R_rigid(w, r, s, ro));
  auto special = rigid_special_values(w, r, s);
  j["special_value"] = special ? Json(special->str_full()) : Json(nullptr);
  return dump(j);
}

std::string cmd_game(const Args& a) {
  require_format(a, {"json", "pgm"});
  if (a.format == "pgm") {
    if (a.resolution < 1) throw UsageError("--resolution must be positive");
    if (a.resolution > kResolutionCap && !a.unsafe)
      throw CapExceeded("--resolution " + std::to_string(a.resolution) + " exceeds the cap " +
                        std::to_string(kResolutionCap) + " (pass --unsafe-caps to override)");
    return raster_pgm(render_U(a.resolution, a.mmax, a.depth, resolve_threads(a.threads)));
  }
  GamePoint p(fraction(a.t, "t"), fraction(a.u, "u"));
  Json j = verdict_json(in_U(p, a.mmax, a.depth));
  j["simulation"] = game_win_json(simulate_game(p, a.nmax));
  return dump(j);
}

std::string cmd_scan(const Args& a) {
  require_format(a, {"json", "csv"});
  check_max_den(a);
  SlipperyScan scan = slippery_scan(positive_word(a.word), a.max_den, grid_options(a));
  return a.format == "csv" ? scan_csv(scan) : dump(scan_json(scan));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal rotation numbers R(w, r, s) in exact arithmetic"};
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* c) {
    c->add_option("--format", a.format, "json, csv or pgm (command dependent)");
    c->add_option("--out", a.out, "write the payload to this file");
    c->add_option("--threads", a.threads, "worker threads (default: ROTNUM_THREADS or all cores)");
    c->add_flag("--unsafe-caps", a.unsafe, "lift the max-den, resolution and necklace caps");
  };
  auto word_rs = [&](CLI::App* c, bool with_s) {
    c->add_option("--word", a.word, "word in a, b, A = a^-1, B = b^-1");
    c->add_option("--r", a.r, "rotation number of a, p/q");
    if (with_s) c->add_option("--s", a.s, "rotation number of b, p/q");
  };

  std::map<CLI::App*, std::string (*)(const Args&)> handlers;

  auto* eval = app.add_subcommand("eval", "R(w, r, s) with a witness necklace");
  eval->add_option("word_pos", a.word, "word");
  eval->add_option("r_pos", a.r, "r");
  eval->add_option("s_pos", a.s, "s");
  word_rs(eval, true);
  common(eval);
  handlers[eval] = cmd_eval;

  auto* stair = app.add_subcommand("staircase", "the step function t -> R(w, r, t) on [0, 1)");
  word_rs(stair, false);
  common(stair);
  handlers[stair] = cmd_staircase;

  auto* thr = app.add_subcommand("threshold", "least t with R(w, r, t) >= value");
  word_rs(thr, false);
  thr->add_option("--value", a.value, "target value")->required();
  common(thr);
  handlers[thr] = cmd_threshold;

  auto* lim = app.add_subcommand("limit", "R(w, r, s-) (or R(w, r-, s) with --first)");
  word_rs(lim, true);
  lim->add_flag("--first", a.first, "take the limit in the first argument");
  common(lim);
  handlers[lim] = cmd_limit;

  auto* iso = app.add_subcommand("isobar", "frontier of {R >= level} at resolution --max-den");
  iso->add_option("--word", a.word, "positive word");
  iso->add_option("--level", a.level, "level p/q")->required();
  iso->add_option("--max-den", a.max_den, "grid denominator bound");
  common(iso);
  handlers[iso] = cmd_isobar;

  auto* grid = app.add_subcommand("grid", "R on the Farey grid [0, 1]^2");
  grid->add_option("--word", a.word, "positive word");
  grid->add_option("--max-den", a.max_den, "grid denominator bound");
  common(grid);
  handlers[grid] = cmd_grid;

  auto* rigid = app.add_subcommand("rigid", "R(w, r-, s-) for any word");
  word_rs(rigid, true);
  rigid->add_option("--kmax", a.kmax, "last approximant index");
  common(rigid);
  handlers[rigid] = cmd_rigid;

  auto* game = app.add_subcommand("game", "interval game for rotations t (psi) and u (enemy)");
  game->add_option("--t", a.t, "rotation of psi");
  game->add_option("--u", a.u, "rotation of the enemy");
  game->add_option("--mmax", a.mmax, "largest scaling factor");
  game->add_option("--depth", a.depth, "scaling recursion depth");
  game->add_option("--nmax", a.nmax, "simulator iterate bound");
  game->add_option("--resolution", a.resolution, "raster size for --format pgm");
  common(game);
  handlers[game] = cmd_game;

  auto* scan = app.add_subcommand("scan", "|R - h_a r - h_b s| against m/q on [0, 1)^2");
  scan->add_option("--word", a.word, "positive word");
  scan->add_option("--max-den", a.max_den, "grid denominator bound");
  common(scan);
  handlers[scan] = cmd_scan;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    if (chosen != game && a.word.empty()) throw UsageError("missing --word");
    const std::string payload = handlers.at(chosen)(a);
    if (a.out.empty()) {
      std::cout << payload << std::flush;
    } else {
      std::ofstream file(a.out, std::ios::binary);
      if (!file) throw UsageError("cannot open " + a.out);
      file << payload;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const RegimeError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
