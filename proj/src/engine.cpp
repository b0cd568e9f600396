#include "congest/engine.hpp"

#include <sstream>

namespace congest {

RoundReport compose_reports(std::span<const RoundReport> reports, std::string name) {
  RoundReport total;
  total.phase = std::move(name);
  for (const RoundReport& r : reports) {
    total.rounds += r.rounds;
    total.budget += r.budget;
    total.messages += r.messages;
    total.max_load = std::max(total.max_load, r.max_load);
  }
  return total;
}

std::string report_json(const RoundReport& r) {
  std::ostringstream out;
  out << "{\"phase\": \"" << r.phase << "\", \"rounds\": " << r.rounds
      << ", \"budget\": " << r.budget << ", \"messages\": " << r.messages
      << ", \"max_load\": " << r.max_load << "}";
  return out.str();
}

namespace {

std::string violation_text(EngineViolation::Kind kind, std::string_view phase, std::int64_t round,
                           NodeId from, NodeId to) {
  std::ostringstream out;
  switch (kind) {
    case EngineViolation::Kind::kBandwidth:
      out << "bandwidth violation";
      break;
    case EngineViolation::Kind::kNonNeighbor:
      out << "message to non-neighbor";
      break;
    case EngineViolation::Kind::kSendAfterLastRound:
      out << "send after last round";
      break;
  }
  out << " in phase '" << phase << "' round " << round << " on channel (" << from << ", " << to
      << ")";
  return out.str();
}

}  // namespace

EngineViolation::EngineViolation(Kind kind, std::string_view phase, std::int64_t round,
                                 NodeId from, NodeId to)
    : std::runtime_error(violation_text(kind, phase, round, from, to)),
      kind(kind),
      round(round),
      from(from),
      to(to) {}

}  // namespace congest
