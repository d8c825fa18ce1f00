#ifndef BEAMNET_SYNC_ENGINE_HPP
#define BEAMNET_SYNC_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "beamnet/graph.hpp"

namespace beamnet {

/// A message together with the id of the node that sent it.
template <typename M>
struct Envelope {
  NodeId sender;
  M payload;
};

/// Per-round hook: (round index, messages sent during that round).
using RoundTrace = std::function<void(int, std::size_t)>;

/// Verbose trace sink; receives one `round node event payload` line per
/// engine event (sends, quiescence, bound exhaustion).
using TraceLineSink = std::function<void(const std::string&)>;

struct RunStats {
  int rounds = 0;               // rounds actually executed
  bool quiescent = false;       // true when a round sent zero messages
  std::uint64_t messages = 0;   // total messages delivered overall
};

namespace detail {

template <typename M>
std::string trace_payload(const M& msg) {
  if constexpr (requires(std::ostream& os, const M& m) { os << m; }) {
    std::ostringstream out;
    out << msg;
    return out.str();
  } else {
    return "<message>";
  }
}

}  // namespace detail

/// Handed to the step callable; queues messages for delivery next round.
template <typename M>
class Outbox {
 public:
  Outbox(const Graph& g, std::vector<std::vector<Envelope<M>>>& next)
      : graph_(g), next_(next) {}

  void send(NodeId to, M msg) {
    if (to >= graph_.node_count())
      throw std::out_of_range("sync_engine: send target out of range");
    if (trace_)
      (*trace_)(std::to_string(round_) + ' ' + std::to_string(self_) +
                " send " + detail::trace_payload(msg) + " to " +
                std::to_string(to));
    next_[to].push_back({self_, std::move(msg)});
    ++sent_;
  }

  /// Sends a copy of msg to every radio neighbor of the current node.
  void broadcast(const M& msg) {
    for (NodeId v : graph_.neighbors(self_)) send(v, msg);
  }

 private:
  template <typename Msg, typename Step>
  friend RunStats run_rounds(const Graph&, Step&&, int, const RoundTrace&,
                             const TraceLineSink&);

  const Graph& graph_;
  std::vector<std::vector<Envelope<M>>>& next_;
  const TraceLineSink* trace_ = nullptr;
  NodeId self_ = 0;
  int round_ = 0;
  std::size_t sent_ = 0;
};

/// Runs a synchronous message-passing protocol until quiescence.
///
/// Every round, step(node, round, inbox, outbox) is invoked for every node
/// in ascending id order, including nodes with an empty inbox. Messages
/// queued during round r are delivered at round r + 1, each inbox sorted by
/// sender id, so results do not depend on intra-round evaluation order.
///
/// The run stops after the first round that sends no messages (quiescent)
/// or after max_rounds (non-quiescent, reported in RunStats, not an error).
/// max_rounds < 0 selects the default of 4 * node count. round_trace fires
/// at the end of every round; trace_lines receives per-event text.
template <typename M, typename Step>
RunStats run_rounds(const Graph& g, Step&& step, int max_rounds = -1,
                    const RoundTrace& round_trace = {},
                    const TraceLineSink& trace_lines = {}) {
  const std::size_t n = g.node_count();
  if (max_rounds < 0) max_rounds = static_cast<int>(4 * n);
  if (max_rounds < 1)
    throw std::invalid_argument("sync_engine: max_rounds must be >= 1");

  std::vector<std::vector<Envelope<M>>> inboxes(n), next(n);
  RunStats stats;
  for (int round = 0; round < max_rounds; ++round) {
    Outbox<M> out(g, next);
    out.trace_ = trace_lines ? &trace_lines : nullptr;
    out.round_ = round;
    for (NodeId v = 0; v < n; ++v) {
      out.self_ = v;
      step(v, round, std::as_const(inboxes[v]), out);
    }
    stats.rounds = round + 1;
    stats.messages += out.sent_;
    if (round_trace) round_trace(round, out.sent_);
    if (out.sent_ == 0) {
      stats.quiescent = true;
      if (trace_lines)
        trace_lines(std::to_string(round) + " - quiescent -");
      break;
    }
    for (NodeId v = 0; v < n; ++v) {
      inboxes[v] = std::move(next[v]);
      next[v].clear();
      std::stable_sort(inboxes[v].begin(), inboxes[v].end(),
                       [](const Envelope<M>& a, const Envelope<M>& b) {
                         return a.sender < b.sender;
                       });
    }
  }
  if (!stats.quiescent && trace_lines)
    trace_lines(std::to_string(stats.rounds) + " - bound_reached -");
  return stats;
}

}  // namespace beamnet

#endif  // BEAMNET_SYNC_ENGINE_HPP
