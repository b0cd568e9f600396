#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

// CONGEST message: a small tag plus at most two bounded integers. This is the
// testable stand-in for the O(log n)-bit message size contract; nothing wider
// ever crosses a channel.
struct Message {
  std::int32_t tag = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

struct Incoming {
  NodeId from = 0;
  Message msg;
};

struct Outgoing {
  NodeId to = 0;
  Message msg;
};

struct RoundReport {
  std::string phase;
  std::int64_t rounds = 0;
  std::int64_t budget = 0;
  std::int64_t messages = 0;
  int max_load = 0;  // max per-channel per-round load; the engine enforces <= 1
};

RoundReport compose_reports(std::span<const RoundReport> reports,
                            std::string name = "total");
std::string report_json(const RoundReport& r);

class EngineViolation : public std::runtime_error {
 public:
  enum class Kind { kBandwidth, kNonNeighbor, kSendAfterLastRound };

  EngineViolation(Kind kind, std::string_view phase, std::int64_t round, NodeId from, NodeId to);

  Kind kind;
  std::int64_t round;
  NodeId from;
  NodeId to;
};

// Runs one lockstep phase for exactly `budget` communication rounds.
//
// `step(v, state, round, inbox, out)` is called for every node each round;
// it may read only its own state and inbox and write only its own state and
// outbox, so the outcome is identical for any evaluation order within a
// round. Messages emitted in round r are delivered at the start of round
// r+1; after round `budget` the step function is invoked once more (round
// budget+1) to absorb the final deliveries, and emitting a message there
// aborts. Inboxes are sorted by sender id.
template <class State, class Step>
std::pair<std::vector<State>, RoundReport> run_phase(
    const WeightedDigraph& g, std::string_view phase, std::vector<State> states,
    std::int64_t budget, Step&& step, const std::vector<NodeId>* eval_order = nullptr) {
  const int n = g.n();
  RoundReport report;
  report.phase = std::string(phase);
  report.budget = budget;
  report.rounds = budget;
  if (budget == 0) return {std::move(states), report};

  std::vector<std::vector<Incoming>> cur(n + 1), next(n + 1);
  std::vector<Outgoing> out;
  std::vector<std::pair<std::int64_t, NodeId>> stamp(n + 1, {0, 0});
  std::vector<NodeId> default_order(n);
  for (int v = 1; v <= n; ++v) default_order[v - 1] = v;
  const std::vector<NodeId>& order = eval_order ? *eval_order : default_order;

  for (std::int64_t r = 1; r <= budget + 1; ++r) {
    const bool absorb = (r == budget + 1);
    for (NodeId v : order) {
      out.clear();
      step(v, states[v], r, std::span<const Incoming>(cur[v]), out);
      for (const Outgoing& o : out) {
        if (absorb)
          throw EngineViolation(EngineViolation::Kind::kSendAfterLastRound, phase, r, v, o.to);
        if (!g.adjacent(v, o.to))
          throw EngineViolation(EngineViolation::Kind::kNonNeighbor, phase, r, v, o.to);
        // A channel (v, to) is written only by v, so a repeat within v's own
        // outbox is exactly a per-channel per-round overload.
        if (stamp[o.to] == std::pair{r, v})
          throw EngineViolation(EngineViolation::Kind::kBandwidth, phase, r, v, o.to);
        stamp[o.to] = {r, v};
        next[o.to].push_back({v, o.msg});
        ++report.messages;
        report.max_load = 1;
      }
    }
    std::swap(cur, next);
    for (auto& inbox : next) inbox.clear();
    for (auto& inbox : cur)
      std::sort(inbox.begin(), inbox.end(),
                [](const Incoming& a, const Incoming& b) { return a.from < b.from; });
  }
  return {std::move(states), report};
}

}  // namespace congest
