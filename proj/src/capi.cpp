#include "meetpoint/meetpoint.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "error.hpp"
#include "graph_file.hpp"
#include "grid_map.hpp"
#include "oracle.hpp"
#include "scoring.hpp"
#include "sim.hpp"
#include "trace_io.hpp"

namespace mp = meetpoint;

struct mp_instance {
  std::shared_ptr<const mp::Graph> graph;
  std::vector<mp::VertexId> users;
  std::optional<mp::PreferenceProfile> profile;
  std::optional<mp::GridMap> grid;
};

struct mp_solution {
  mp::Solution solution;
  mp::SearchStats stats;
};

struct mp_trace {
  mp::SimTrace trace;
  std::size_t vertex_count = 0;
};

static_assert(static_cast<int>(mp::ErrorCode::InvalidArgument) == MP_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(mp::ErrorCode::NoCandidate) == MP_ERR_NO_CANDIDATE);
static_assert(static_cast<int>(mp::ErrorCode::InconsistentTrace) == MP_ERR_INCONSISTENT_TRACE);

namespace {

thread_local std::string last_error;

mp_status set_error(mp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
mp_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const mp::Error& e) {
    return set_error(static_cast<mp_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MP_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(MP_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) mp::fail(mp::ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::vector<std::string> channel_list(const char* const* channels, std::size_t count) {
  if (!channels || count == 0) return {std::string(mp::kDistanceChannel)};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    require(channels[i] != nullptr, "channel name is null");
    out.emplace_back(channels[i]);
  }
  return out;
}

mp::ObjectiveWeights weights_of(const mp_options* options) {
  if (!options) return {};
  return {options->alpha, options->beta};
}

double export_value(mp::Distance d) {
  return d.reachable() ? d.value() : HUGE_VAL;
}

}  // namespace

extern "C" {

void mp_options_init(mp_options* options) {
  if (!options) return;
  options->alpha = 0.5;
  options->beta = 0.5;
  options->parallelism = 1;
}

const char* mp_status_name(mp_status status) {
  if (status == MP_OK) return "Ok";
  if (status == MP_ERR_INTERNAL) return "Internal";
  if (status > MP_OK && status < MP_ERR_INTERNAL) {
    return mp::to_string(static_cast<mp::ErrorCode>(status));
  }
  return "Unknown";
}

const char* mp_last_error_message(void) { return last_error.c_str(); }

void mp_string_free(char* s) { std::free(s); }

mp_status mp_instance_from_grid_text(const char* text, const char* const* channels,
                                     size_t channel_count, mp_instance** out) {
  return guarded([&] {
    require(text && out, "null argument");
    auto parsed = mp::parse_grid_map(text, mp::UserRequirement::Optional,
                                     channel_list(channels, channel_count));
    auto inst = std::make_unique<mp_instance>();
    inst->users = parsed.map.user_starts();
    inst->graph = std::make_shared<const mp::Graph>(std::move(parsed.graph));
    inst->grid = std::move(parsed.map);
    *out = inst.release();
    return MP_OK;
  });
}

mp_status mp_instance_from_graph_text(const char* text, mp_instance** out) {
  return guarded([&] {
    require(text && out, "null argument");
    auto parsed = mp::parse_graph_file(text);
    auto inst = std::make_unique<mp_instance>();
    inst->graph = std::make_shared<const mp::Graph>(std::move(parsed.graph));
    inst->users = std::move(parsed.users);
    inst->profile = std::move(parsed.profile);
    *out = inst.release();
    return MP_OK;
  });
}

mp_status mp_instance_from_edges(size_t vertex_count, const char* const* channels,
                                 size_t channel_count, const uint32_t* from,
                                 const uint32_t* to, const double* weights,
                                 size_t edge_count, int undirected,
                                 const uint32_t* users, size_t user_count,
                                 mp_instance** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(edge_count == 0 || (from && to && weights), "null edge arrays");
    require(user_count == 0 || users, "null user array");
    if (!channels || channel_count == 0) {
      mp::fail(mp::ErrorCode::EmptyChannelList, "graph needs at least one channel");
    }
    auto names = channel_list(channels, channel_count);
    std::vector<mp::Edge> edges(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
      edges[i].from = from[i];
      edges[i].to = to[i];
      edges[i].weights.assign(weights + i * channel_count,
                              weights + (i + 1) * channel_count);
    }
    auto graph = mp::Graph::build(vertex_count, std::move(edges), std::move(names),
                                  undirected ? mp::Directedness::Undirected
                                             : mp::Directedness::Directed);
    auto inst = std::make_unique<mp_instance>();
    inst->users.assign(users, users + user_count);
    for (auto u : inst->users) {
      if (!graph.contains(u)) mp::fail(mp::ErrorCode::InvalidSource, "user vertex out of range");
    }
    inst->graph = std::make_shared<const mp::Graph>(std::move(graph));
    *out = inst.release();
    return MP_OK;
  });
}

mp_status mp_instance_generate_grid(size_t width, size_t height, double wall_density,
                                    size_t user_count, uint64_t seed, mp_instance** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    auto map = mp::generate_grid_map(width, height, wall_density, user_count, seed);
    auto inst = std::make_unique<mp_instance>();
    inst->users = map.user_starts();
    inst->graph = std::make_shared<const mp::Graph>(map.to_graph());
    inst->grid = std::move(map);
    *out = inst.release();
    return MP_OK;
  });
}

mp_status mp_instance_with_users(const mp_instance* instance, const uint32_t* users,
                                 size_t user_count, mp_instance** out) {
  return guarded([&] {
    require(instance && out && (users || user_count == 0), "null argument");
    auto inst = std::make_unique<mp_instance>();
    inst->graph = instance->graph;
    inst->users.assign(users, users + user_count);
    for (auto u : inst->users) {
      if (!inst->graph->contains(u)) {
        mp::fail(mp::ErrorCode::InvalidSource, "user vertex out of range");
      }
    }
    if (instance->grid) inst->grid = instance->grid->with_users(inst->users);
    *out = inst.release();
    return MP_OK;
  });
}

mp_status mp_instance_with_scores(const mp_instance* instance, const int* scores,
                                  size_t user_count, size_t channel_count,
                                  mp_instance** out) {
  return guarded([&] {
    require(instance && scores && out, "null argument");
    if (user_count != instance->users.size()) {
      mp::fail(mp::ErrorCode::ShapeMismatch, "scores given for " + std::to_string(user_count) +
                                                 " users, instance has " +
                                                 std::to_string(instance->users.size()));
    }
    if (channel_count != instance->graph->channel_count()) {
      mp::fail(mp::ErrorCode::ShapeMismatch, "one score per channel is required");
    }
    std::vector<std::vector<int>> rows(user_count);
    for (std::size_t u = 0; u < user_count; ++u) {
      rows[u].assign(scores + u * channel_count, scores + (u + 1) * channel_count);
    }
    auto inst = std::make_unique<mp_instance>(*instance);
    inst->profile = mp::PreferenceProfile(std::move(rows));
    *out = inst.release();
    return MP_OK;
  });
}

void mp_instance_free(mp_instance* instance) { delete instance; }

size_t mp_instance_vertex_count(const mp_instance* i) { return i ? i->graph->vertex_count() : 0; }
size_t mp_instance_edge_count(const mp_instance* i) { return i ? i->graph->edge_count() : 0; }
size_t mp_instance_channel_count(const mp_instance* i) { return i ? i->graph->channel_count() : 0; }

const char* mp_instance_channel_name(const mp_instance* i, size_t channel) {
  if (!i || channel >= i->graph->channel_count()) return nullptr;
  return i->graph->channels()[channel].c_str();
}

size_t mp_instance_user_count(const mp_instance* i) { return i ? i->users.size() : 0; }

uint32_t mp_instance_user(const mp_instance* i, size_t index) {
  return (i && index < i->users.size()) ? i->users[index] : 0;
}

int mp_instance_has_scores(const mp_instance* i) { return i && i->profile ? 1 : 0; }
int mp_instance_is_grid(const mp_instance* i) { return i && i->grid ? 1 : 0; }

mp_status mp_instance_neighbors(const mp_instance* instance, uint32_t v, size_t channel,
                                uint32_t* targets, double* weights, size_t capacity,
                                size_t* count) {
  return guarded([&] {
    require(instance && count, "null argument");
    require(capacity == 0 || (targets && weights), "null output arrays");
    const auto arcs = instance->graph->neighbors(v, channel);
    *count = arcs.size();
    for (std::size_t i = 0; i < arcs.size() && i < capacity; ++i) {
      targets[i] = arcs[i].target;
      weights[i] = arcs[i].weight;
    }
    return MP_OK;
  });
}

mp_status mp_instance_render_map(const mp_instance* instance, char** out) {
  return guarded([&] {
    require(instance && out, "null argument");
    require(instance->grid.has_value(), "instance is not a grid map");
    *out = copy_string(instance->grid->render());
    return MP_OK;
  });
}

mp_status mp_instance_cell_of(const mp_instance* instance, uint32_t v, size_t* row,
                              size_t* col) {
  return guarded([&] {
    require(instance && row && col, "null argument");
    require(instance->grid.has_value(), "instance is not a grid map");
    if (v >= instance->grid->vertex_count()) {
      mp::fail(mp::ErrorCode::InvalidSource, "vertex out of range");
    }
    const auto p = instance->grid->position_of(v);
    *row = p.row;
    *col = p.col;
    return MP_OK;
  });
}

mp_status mp_solve(const mp_instance* instance, const mp_options* options,
                   mp_solution** out) {
  return guarded([&] {
    require(instance && out, "null argument");
    if (instance->users.empty()) mp::fail(mp::ErrorCode::NoUsers, "instance has no users");
    auto sol = std::make_unique<mp_solution>();
    mp::SolveOptions opts;
    opts.weights = weights_of(options);
    opts.profile = instance->profile;
    opts.parallelism = options ? options->parallelism : 1;
    opts.stats = &sol->stats;
    sol->solution = mp::solve(*instance->graph, instance->users, opts);
    *out = sol.release();
    return MP_OK;
  });
}

void mp_solution_free(mp_solution* solution) { delete solution; }

uint32_t mp_solution_destination(const mp_solution* s) { return s ? s->solution.destination : 0; }
size_t mp_solution_user_count(const mp_solution* s) { return s ? s->solution.matrix.user_count() : 0; }
size_t mp_solution_vertex_count(const mp_solution* s) { return s ? s->solution.matrix.vertex_count() : 0; }
size_t mp_solution_settled_count(const mp_solution* s) { return s ? s->stats.settled : 0; }
const char* mp_solution_channel(const mp_solution* s) {
  return s ? s->solution.matrix.channel().c_str() : nullptr;
}

mp_status mp_solution_row(const mp_solution* solution, size_t user, double* out, size_t len) {
  return guarded([&] {
    require(solution && out, "null argument");
    const auto& m = solution->solution.matrix;
    if (user >= m.user_count()) mp::fail(mp::ErrorCode::InvalidArgument, "user index out of range");
    if (len != m.vertex_count()) mp::fail(mp::ErrorCode::LengthMismatch, "buffer length != vertex count");
    for (std::size_t v = 0; v < len; ++v) out[v] = export_value(m.row(user).distances[v]);
    return MP_OK;
  });
}

mp_status mp_solution_scores(const mp_solution* solution, mp_score_kind kind, double* out,
                             size_t len) {
  return guarded([&] {
    require(solution && out, "null argument");
    const mp::ScoreVector* v = nullptr;
    switch (kind) {
      case MP_SCORE_TOTAL: v = &solution->solution.total; break;
      case MP_SCORE_SIMILARITY: v = &solution->solution.similarity; break;
      case MP_SCORE_COMBINED: v = &solution->solution.combined; break;
    }
    require(v != nullptr, "unknown score kind");
    if (len != v->values.size()) mp::fail(mp::ErrorCode::LengthMismatch, "buffer length != vertex count");
    for (std::size_t i = 0; i < len; ++i) out[i] = export_value(v->values[i]);
    return MP_OK;
  });
}

mp_status mp_brute_force_destination(const mp_instance* instance, const mp_options* options,
                                     double timeout_seconds, uint32_t* destination) {
  return guarded([&] {
    require(instance && destination, "null argument");
    if (instance->users.empty()) mp::fail(mp::ErrorCode::NoUsers, "instance has no users");
    mp::Deadline deadline;
    if (timeout_seconds > 0) {
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(timeout_seconds));
    }
    *destination = mp::brute_force_destination(*instance->graph, instance->users,
                                               instance->profile, weights_of(options),
                                               deadline);
    return MP_OK;
  });
}

mp_status mp_simulate(const mp_instance* instance, const mp_options* options,
                      size_t max_ticks, mp_trace** out) {
  return guarded([&] {
    require(instance && out, "null argument");
    if (instance->users.empty()) mp::fail(mp::ErrorCode::NoUsers, "instance has no users");
    mp::SimConfig config;
    config.weights = weights_of(options);
    config.profile = instance->profile;
    config.parallelism = options ? options->parallelism : 1;
    auto state = mp::make_state(instance->graph, instance->users, config);
    const std::size_t budget = max_ticks ? max_ticks : mp::default_max_ticks(*instance->graph);
    auto t = std::make_unique<mp_trace>();
    t->trace = mp::run(std::move(state), budget);
    t->vertex_count = instance->graph->vertex_count();
    const bool converged = t->trace.outcome == mp::SimOutcome::Converged;
    *out = t.release();
    if (!converged) {
      return set_error(MP_ERR_MAX_TICKS_EXCEEDED,
                       "users did not meet within " + std::to_string(budget) + " ticks");
    }
    return MP_OK;
  });
}

mp_status mp_trace_parse(const char* text, mp_trace** out) {
  return guarded([&] {
    require(text && out, "null argument");
    auto parsed = mp::parse_trace(text);
    auto t = std::make_unique<mp_trace>();
    t->trace = std::move(parsed.trace);
    t->vertex_count = parsed.vertex_count;
    *out = t.release();
    return MP_OK;
  });
}

void mp_trace_free(mp_trace* trace) { delete trace; }

uint32_t mp_trace_initial_destination(const mp_trace* t) { return t ? t->trace.initial_destination : 0; }
uint32_t mp_trace_final_destination(const mp_trace* t) { return t ? t->trace.final_destination : 0; }
int mp_trace_converged(const mp_trace* t) {
  return t && t->trace.outcome == mp::SimOutcome::Converged ? 1 : 0;
}
size_t mp_trace_user_count(const mp_trace* t) { return t ? t->trace.user_count() : 0; }
size_t mp_trace_record_count(const mp_trace* t) { return t ? t->trace.records.size() : 0; }
size_t mp_trace_steps(const mp_trace* t, size_t user) {
  return (t && user < t->trace.steps.size()) ? t->trace.steps[user] : 0;
}

mp_status mp_trace_record(const mp_trace* trace, size_t index, size_t* tick,
                          uint32_t* destination, uint32_t* positions, size_t len) {
  return guarded([&] {
    require(trace != nullptr, "null argument");
    if (index >= trace->trace.records.size()) {
      mp::fail(mp::ErrorCode::InvalidArgument, "record index out of range");
    }
    const auto& rec = trace->trace.records[index];
    if (tick) *tick = rec.tick;
    if (destination) *destination = rec.destination;
    if (positions) {
      if (len != rec.positions.size()) {
        mp::fail(mp::ErrorCode::LengthMismatch, "buffer length != user count");
      }
      std::copy(rec.positions.begin(), rec.positions.end(), positions);
    }
    return MP_OK;
  });
}

mp_status mp_trace_serialize(const mp_trace* trace, char** out) {
  return guarded([&] {
    require(trace && out, "null argument");
    *out = copy_string(mp::serialize_trace(trace->trace, trace->vertex_count));
    return MP_OK;
  });
}

mp_status mp_trace_render(const mp_trace* trace, const mp_instance* grid, int color,
                          char** out) {
  return guarded([&] {
    require(trace && grid && out, "null argument");
    require(grid->grid.has_value(), "rendering needs a grid map instance");
    mp::ParsedTrace parsed{trace->trace, trace->vertex_count};
    mp::RenderOptions options;
    options.color = color != 0;
    *out = copy_string(mp::render_trace(*grid->grid, parsed, options));
    return MP_OK;
  });
}

mp_status mp_trace_render_frame(const mp_trace* trace, const mp_instance* grid,
                                size_t index, int color, char** out) {
  return guarded([&] {
    require(trace && grid && out, "null argument");
    require(grid->grid.has_value(), "rendering needs a grid map instance");
    if (index >= trace->trace.records.size()) {
      mp::fail(mp::ErrorCode::InvalidArgument, "record index out of range");
    }
    if (trace->vertex_count != grid->grid->vertex_count()) {
      mp::fail(mp::ErrorCode::InconsistentTrace, "trace and map differ in vertex count");
    }
    mp::RenderOptions options;
    options.color = color != 0;
    *out = copy_string(mp::render_frame(*grid->grid, trace->trace, index, options));
    return MP_OK;
  });
}

}  // extern "C"
