// meetpoint command-line front end: solve, simulate, bench, render.
// Talks to the library only through the C API.

#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "meetpoint/meetpoint.h"

namespace {

struct InstanceDeleter { void operator()(mp_instance* p) const { mp_instance_free(p); } };
struct SolutionDeleter { void operator()(mp_solution* p) const { mp_solution_free(p); } };
struct TraceDeleter { void operator()(mp_trace* p) const { mp_trace_free(p); } };
struct StringDeleter { void operator()(char* p) const { mp_string_free(p); } };

using Instance = std::unique_ptr<mp_instance, InstanceDeleter>;
using Solution = std::unique_ptr<mp_solution, SolutionDeleter>;
using Trace = std::unique_ptr<mp_trace, TraceDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

// Carries a library status out to main(), which turns it into exit code 1.
struct Failure : std::runtime_error {
  mp_status status;
  Failure(mp_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(mp_status status, const std::string& context) {
  if (status != MP_OK) {
    throw Failure(status, context + ": " + mp_status_name(status) + ": " +
                              mp_last_error_message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(MP_ERR_IO, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure(MP_ERR_IO, "cannot write " + path);
}

std::string format_number(double x) {
  if (std::isinf(x)) return "inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

bool use_color() {
  return std::getenv("MEETPOINT_NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
}

struct CommonOptions {
  std::string map_path;
  std::string graph_path;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string scores;    // "4,3;5,4": users separated by ';', channels by ','
  std::string channels;  // grid maps only, e.g. "distance,time"
  std::size_t parallelism = 1;
  std::string out;

  mp_options options() const {
    mp_options o;
    mp_options_init(&o);
    if (alpha && beta) {
      o.alpha = *alpha;
      o.beta = *beta;
    } else if (alpha) {
      o.alpha = *alpha;
      o.beta = 1.0 - *alpha;
    } else if (beta) {
      o.beta = *beta;
      o.alpha = 1.0 - *beta;
    }
    o.parallelism = parallelism;
    return o;
  }
};

void add_weight_flags(CLI::App* cmd, CommonOptions& c) {
  cmd->add_option("--alpha", c.alpha, "Weight of the total-travel term (default 0.5)")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--beta", c.beta, "Weight of the equal-travel term (default 1 - alpha)")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--scores", c.scores,
                  "Priority scores 0..5, users split by ';' and channels by ','");
  cmd->add_option("--channels", c.channels,
                  "Channels for grid maps, comma separated (first must be distance)");
  cmd->add_option("--parallelism", c.parallelism, "Worker threads for per-user searches")
      ->check(CLI::PositiveNumber);
}

Instance load_grid(const std::string& path, const std::string& channels) {
  const std::string text = read_file(path);
  std::vector<std::string> names = channels.empty() ? std::vector<std::string>{}
                                                     : split(channels, ',');
  std::vector<const char*> ptrs;
  for (const auto& n : names) ptrs.push_back(n.c_str());
  mp_instance* raw = nullptr;
  check(mp_instance_from_grid_text(text.c_str(), ptrs.empty() ? nullptr : ptrs.data(),
                                   ptrs.size(), &raw),
        path);
  return Instance(raw);
}

Instance apply_scores(Instance inst, const std::string& scores) {
  if (scores.empty()) return inst;
  const std::size_t channels = mp_instance_channel_count(inst.get());
  std::vector<int> flat;
  const auto users = split(scores, ';');
  for (const auto& u : users) {
    const auto parts = split(u, ',');
    if (parts.size() != channels) {
      throw Failure(MP_ERR_INVALID_ARGUMENT,
                    "--scores: each user needs " + std::to_string(channels) + " score(s)");
    }
    for (const auto& p : parts) {
      int v = 0;
      const auto r = std::from_chars(p.data(), p.data() + p.size(), v);
      if (r.ec != std::errc() || r.ptr != p.data() + p.size()) {
        throw Failure(MP_ERR_INVALID_ARGUMENT, "--scores: bad score \"" + p + "\"");
      }
      flat.push_back(v);
    }
  }
  mp_instance* raw = nullptr;
  check(mp_instance_with_scores(inst.get(), flat.data(), users.size(), channels, &raw),
        "--scores");
  return Instance(raw);
}

Instance load_instance(const CommonOptions& c) {
  Instance inst;
  if (!c.map_path.empty()) {
    inst = load_grid(c.map_path, c.channels);
  } else {
    const std::string text = read_file(c.graph_path);
    mp_instance* raw = nullptr;
    check(mp_instance_from_graph_text(text.c_str(), &raw), c.graph_path);
    inst.reset(raw);
  }
  return apply_scores(std::move(inst), c.scores);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

// ---- solve ---------------------------------------------------------------

int cmd_solve(const CommonOptions& c) {
  Instance inst = load_instance(c);
  const std::size_t k = mp_instance_user_count(inst.get());
  if (k == 0) throw Failure(MP_ERR_NO_USERS, "instance has no users");
  const mp_options opts = c.options();
  mp_solution* raw = nullptr;
  check(mp_solve(inst.get(), &opts, &raw), "solve");
  Solution sol(raw);

  const std::size_t n = mp_solution_vertex_count(sol.get());
  std::vector<double> buf(n);
  std::ostringstream out;
  auto row_text = [&] {
    std::string s;
    for (std::size_t v = 0; v < n; ++v) {
      if (v) s += ' ';
      s += format_number(buf[v]);
    }
    return s;
  };

  out << "vertices " << n << "\nusers " << k << "\nalpha " << format_number(opts.alpha)
      << "\nbeta " << format_number(opts.beta) << "\nchannel "
      << mp_solution_channel(sol.get()) << "\nmatrix\n";
  for (std::size_t u = 0; u < k; ++u) {
    check(mp_solution_row(sol.get(), u, buf.data(), n), "row");
    out << "  " << mp_instance_user(inst.get(), u) << ": " << row_text() << '\n';
  }
  check(mp_solution_scores(sol.get(), MP_SCORE_TOTAL, buf.data(), n), "scores");
  out << "d_total " << row_text() << '\n';
  check(mp_solution_scores(sol.get(), MP_SCORE_SIMILARITY, buf.data(), n), "scores");
  out << "d_sim " << row_text() << '\n';
  check(mp_solution_scores(sol.get(), MP_SCORE_COMBINED, buf.data(), n), "scores");
  out << "combined " << row_text() << '\n';
  const uint32_t dest = mp_solution_destination(sol.get());
  out << "destination " << dest << '\n';
  if (mp_instance_is_grid(inst.get())) {
    std::size_t row = 0, col = 0;
    check(mp_instance_cell_of(inst.get(), dest, &row, &col), "cell");
    out << "destination_cell " << row << ' ' << col << '\n';
  }
  emit(c.out, out.str());
  return 0;
}

// ---- simulate ------------------------------------------------------------

int cmd_simulate(const CommonOptions& c, std::size_t max_ticks) {
  Instance inst = load_instance(c);
  const mp_options opts = c.options();
  mp_trace* raw = nullptr;
  const mp_status status = mp_simulate(inst.get(), &opts, max_ticks, &raw);
  if (status != MP_OK && status != MP_ERR_MAX_TICKS_EXCEEDED) check(status, "simulate");
  const std::string message = mp_last_error_message();
  Trace trace(raw);

  char* text = nullptr;
  check(mp_trace_serialize(trace.get(), &text), "serialize");
  CString serialized(text);
  if (!c.out.empty()) write_file(c.out, serialized.get());

  const std::size_t records = mp_trace_record_count(trace.get());
  const std::size_t users = mp_trace_user_count(trace.get());
  std::cout << "outcome " << (mp_trace_converged(trace.get()) ? "converged" : "max_ticks_exceeded")
            << "\nticks " << records - 1 << "\ninitial "
            << mp_trace_initial_destination(trace.get()) << "\nfinal "
            << mp_trace_final_destination(trace.get()) << "\nsteps ";
  for (std::size_t u = 0; u < users; ++u) {
    std::cout << (u ? "," : "") << mp_trace_steps(trace.get(), u);
  }
  std::cout << '\n';
  if (c.out.empty()) std::cout << serialized.get();
  if (mp_instance_is_grid(inst.get())) {
    char* frame = nullptr;
    check(mp_trace_render_frame(trace.get(), inst.get(), records - 1, use_color() ? 1 : 0,
                                &frame),
          "render");
    CString owned(frame);
    std::cout << owned.get();
  }
  if (status == MP_ERR_MAX_TICKS_EXCEEDED) {
    throw Failure(status, std::string("simulate: MaxTicksExceeded: ") + message);
  }
  return 0;
}

// ---- bench ---------------------------------------------------------------

struct BenchMap {
  std::string label;
  Instance base;  // users replaced per row
};

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

std::vector<std::size_t> parse_user_counts(const std::string& spec) {
  std::vector<std::size_t> out;
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const std::size_t lo = std::stoul(spec.substr(0, dots));
    const std::size_t hi = std::stoul(spec.substr(dots + 2));
    for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
  } else {
    for (const auto& p : split(spec, ',')) out.push_back(std::stoul(p));
  }
  if (out.empty() || out.front() == 0) {
    throw Failure(MP_ERR_INVALID_ARGUMENT, "--users must list positive user counts");
  }
  return out;
}

// "WxH" names a generated map with a W x H free interior inside a wall
// border: open when it is 22x10, otherwise sparse random walls.
BenchMap make_bench_map(const std::string& spec, std::uint64_t seed,
                        const std::string& channels) {
  const auto x = spec.find('x');
  bool sized = x != std::string::npos && x > 0;
  for (std::size_t i = 0; sized && i < spec.size(); ++i) {
    sized = i == x || std::isdigit(static_cast<unsigned char>(spec[i]));
  }
  if (!sized) return {spec, load_grid(spec, channels)};
  const std::size_t w = std::stoul(spec.substr(0, x));
  const std::size_t h = std::stoul(spec.substr(x + 1));
  const double density = (w == 22 && h == 10) ? 0.0 : 0.1;
  mp_instance* raw = nullptr;
  check(mp_instance_generate_grid(w + 2, h + 2, density, 0, seed, &raw), spec);
  return {spec, Instance(raw)};
}

std::vector<uint32_t> pick_users(const mp_instance* inst, std::size_t k, std::uint64_t seed) {
  const std::size_t n = mp_instance_vertex_count(inst);
  if (k > n) throw Failure(MP_ERR_INVALID_ARGUMENT, "more users than vertices");
  // splitmix64: portable, seeded, no distribution objects.
  std::uint64_t state = seed;
  auto next = [&] {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::vector<uint32_t> users;
  while (users.size() < k) {
    const auto v = static_cast<uint32_t>(next() % n);
    if (std::find(users.begin(), users.end(), v) == users.end()) users.push_back(v);
  }
  return users;
}

int cmd_bench(const CommonOptions& c, const std::vector<std::string>& maps,
              const std::string& user_spec, std::size_t reps, double floyd_timeout,
              std::uint64_t seed) {
  const auto counts = parse_user_counts(user_spec);
  const mp_options opts = c.options();
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::duration d) { return std::chrono::duration<double>(d).count(); };

  std::ostringstream csv;
  csv << "map,users,md_seconds,floyd_seconds,parallelism\n";
  for (const auto& spec : maps) {
    BenchMap bm = make_bench_map(spec, seed, c.channels);
    bool floyd_censored = false;
    for (std::size_t k : counts) {
      const auto users = pick_users(bm.base.get(), k, seed ^ (k * 0x100000001b3ULL));
      mp_instance* raw = nullptr;
      check(mp_instance_with_users(bm.base.get(), users.data(), users.size(), &raw), "users");
      Instance inst(raw);

      std::vector<double> md;
      for (std::size_t r = 0; r < reps; ++r) {
        mp_solution* sol = nullptr;
        const auto t0 = clock::now();
        check(mp_solve(inst.get(), &opts, &sol), "solve");
        md.push_back(seconds(clock::now() - t0));
        mp_solution_free(sol);
      }

      std::string floyd_cell = "skipped";
      if (floyd_timeout > 0 && floyd_censored) {
        floyd_cell = "censored";
      } else if (floyd_timeout > 0) {
        std::vector<double> fl;
        for (std::size_t r = 0; r < reps; ++r) {
          uint32_t dest = 0;
          const auto t0 = clock::now();
          const mp_status s = mp_brute_force_destination(inst.get(), &opts, floyd_timeout, &dest);
          const double t = seconds(clock::now() - t0);
          if (s == MP_ERR_TIMEOUT) {
            floyd_censored = true;
            break;
          }
          check(s, "floyd");
          fl.push_back(t);
          if (t > 1.0) break;  // slow runs are not repeated
        }
        floyd_cell = floyd_censored ? "censored" : format_number(median(fl));
      }
      csv << bm.label << ',' << k << ',' << format_number(median(md)) << ',' << floyd_cell
          << ',' << std::max<std::size_t>(1, c.parallelism) << '\n';
      if (c.out.empty()) {
        std::cout << csv.str() << std::flush;
        csv.str("");
      }
    }
  }
  if (!c.out.empty()) write_file(c.out, csv.str());
  return 0;
}

// ---- render --------------------------------------------------------------

int cmd_render(const std::string& trace_path, const std::string& map_path,
               const std::string& out) {
  const std::string text = read_file(trace_path);
  mp_trace* raw = nullptr;
  check(mp_trace_parse(text.c_str(), &raw), trace_path);
  Trace trace(raw);
  Instance grid = load_grid(map_path, "");
  char* frames = nullptr;
  const bool color = out.empty() && use_color();
  check(mp_trace_render(trace.get(), grid.get(), color ? 1 : 0, &frames), "render");
  CString owned(frames);
  emit(out, owned.get());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meeting-point planner for groups of users on graphs and grid maps"};
  app.require_subcommand(1);

  CommonOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Pick the meeting vertex for one instance");
  auto* solve_map = solve->add_option("--map", solve_opts.map_path, "Grid map file");
  auto* solve_graph = solve->add_option("--graph", solve_opts.graph_path, "Graph file");
  solve_map->excludes(solve_graph);
  solve->add_option("--out", solve_opts.out, "Write the report here instead of stdout");
  add_weight_flags(solve, solve_opts);

  CommonOptions sim_opts;
  std::size_t max_ticks = 0;
  auto* simulate = app.add_subcommand("simulate", "Run the step-and-replan loop on a grid map");
  simulate->add_option("--map", sim_opts.map_path, "Grid map file")->required();
  simulate->add_option("--max-ticks", max_ticks, "Tick budget (default 10 x vertices)");
  simulate->add_option("--out", sim_opts.out, "Trace file");
  add_weight_flags(simulate, sim_opts);

  CommonOptions bench_opts;
  std::vector<std::string> bench_maps{"22x10", "88x27", "109x128"};
  std::string bench_users = "2..7";
  std::size_t reps = 5;
  double floyd_timeout = 300.0;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Time partial-matrix Dijkstra against Floyd-Warshall");
  bench->add_option("--map", bench_maps, "Map files or WxH sizes (repeatable)");
  bench->add_option("--users", bench_users, "User counts: lo..hi or a,b,c");
  bench->add_option("--reps", reps, "Repetitions per cell (median reported)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--floyd-timeout", floyd_timeout, "Seconds per Floyd run; 0 skips Floyd");
  bench->add_option("--seed", bench_seed, "Seed for generated maps and user placement");
  bench->add_option("--out", bench_opts.out, "CSV output path");
  add_weight_flags(bench, bench_opts);

  std::string trace_path, render_map, render_out;
  auto* render = app.add_subcommand("render", "Draw the frames of a simulation trace");
  render->add_option("trace", trace_path, "Trace file")->required();
  render->add_option("--map", render_map, "Grid map the trace was recorded on")->required();
  render->add_option("--out", render_out, "Write frames here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      if (solve_opts.map_path.empty() && solve_opts.graph_path.empty()) {
        throw Failure(MP_ERR_INVALID_ARGUMENT, "solve needs --map or --graph");
      }
      return cmd_solve(solve_opts);
    }
    if (simulate->parsed()) return cmd_simulate(sim_opts, max_ticks);
    if (bench->parsed()) {
      return cmd_bench(bench_opts, bench_maps, bench_users, reps, floyd_timeout, bench_seed);
    }
    if (render->parsed()) return cmd_render(trace_path, render_map, render_out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
