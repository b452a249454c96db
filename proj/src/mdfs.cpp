#include "detcap/mdfs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "detcap/errors.hpp"
#include "detcap/gf2.hpp"

namespace detcap {

namespace {

constexpr std::size_t kMaxDebugMessages = 8;

void note(DebugStats& d, std::string msg) {
  if (d.messages.size() < kMaxDebugMessages) d.messages.push_back(std::move(msg));
}

// T(rows, cols) straight from the edge lists.
Gf2Matrix restricted_adjacency(const IndexedNetwork& net,
                               const std::vector<TxId>& rows,
                               const std::vector<RxId>& cols) {
  Gf2Matrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (net.has_edge(rows[r], cols[c])) m.set(r, c);
    }
  }
  return m;
}

}  // namespace

void DebugStats::merge(const DebugStats& o) {
  rank_checks += o.rank_checks;
  rank_check_mismatches += o.rank_check_mismatches;
  span_cache_checks += o.span_cache_checks;
  span_cache_mismatches += o.span_cache_mismatches;
  independence_checks += o.independence_checks;
  independence_violations += o.independence_violations;
  layer_count_checks += o.layer_count_checks;
  layer_count_violations += o.layer_count_violations;
  restore_checks += o.restore_checks;
  restore_mismatches += o.restore_mismatches;
  for (const auto& m : o.messages) note(*this, m);
}

std::vector<std::string> exploration_bound_violations(
    const IterationCounters& c) {
  std::vector<std::string> out;
  const std::uint64_t k = static_cast<std::uint64_t>(c.iteration);
  if (c.k1 > c.vx) {
    out.push_back("k1 = " + std::to_string(c.k1) + " exceeds |Vx| = " +
                  std::to_string(c.vx));
  }
  if (c.k3 > c.vx) {
    out.push_back("k3 = " + std::to_string(c.k3) + " exceeds |Vx| = " +
                  std::to_string(c.vx));
  }
  if (c.k2 > 2 * k * c.vx) {
    out.push_back("k2 = " + std::to_string(c.k2) + " exceeds 2*k*|Vx| = " +
                  std::to_string(2 * k * c.vx));
  }
  return out;
}

SearchState SearchState::begin_iteration(const IndexedNetwork& net,
                                         const PathSet& prev,
                                         SolverOptions options) {
  if (prev.partial) {
    throw ContractViolation("previous path set must not hold a partial path");
  }
  SearchState s;
  s.net = &net;
  s.options = options;
  s.iteration = static_cast<int>(prev.paths.size()) + 1;
  s.used_edges.assign(std::max(net.layers() - 1, 0), {});
  s.tx_partner.assign(net.tx_count(), kNone);
  s.rx_partner.assign(net.rx_count(), kNone);
  s.committed_rx.assign(net.rx_count(), 0);
  s.super_explored.assign(net.super_count(), 0);
  s.tx_explored.assign(net.tx_count(), 0);
  s.rx_explored.assign(net.rx_count(), 0);
  s.tx_type.assign(net.tx_count(), TxType::kType1);
  s.span_cache.assign(net.tx_count(), std::nullopt);

  const std::size_t hops = s.used_edges.size();
  for (const Path& p : prev.paths) {
    if (p.size() != hops) {
      throw ContractViolation("previous path " + to_string(p) + " has " +
                              std::to_string(p.size()) + " edges, expected " +
                              std::to_string(hops));
    }
    IndexedPath ip;
    for (std::size_t i = 0; i < hops; ++i) {
      const TxId x = net.tx_id(p[i].from);
      const RxId y = net.rx_id(p[i].to);
      if (!net.has_edge(x, y) || net.layer_of(x) != static_cast<int>(i)) {
        throw ContractViolation("edge " + p[i].to_string() +
                                " is not a layer-" + std::to_string(i) +
                                " network edge");
      }
      const SuperId here = i == 0 ? net.source() : net.super_of(ip.back().rx);
      if (net.super_of(x) != here) {
        throw ContractViolation("previous path " + to_string(p) +
                                " is not connected");
      }
      if (s.used(x) || s.used(y)) {
        throw ContractViolation("previous paths share an endpoint at " +
                                p[i].to_string());
      }
      s.tx_partner[idx(x)] = static_cast<std::uint32_t>(y);
      s.rx_partner[idx(y)] = static_cast<std::uint32_t>(x);
      s.committed_rx[idx(y)] = 1;
      s.used_edges[i].push_back({x, y});
      ip.push_back({x, y});
    }
    s.pprime.push_back(std::move(ip));
  }
  for (auto& layer : s.used_edges) std::sort(layer.begin(), layer.end());
  s.pprime.emplace_back();  // partial path, starts empty at S

  s.counters.iteration = s.iteration;
  s.counters.vx = net.transmitting_node_count();
  return s;
}

PathSet SearchState::path_set() const {
  PathSet out;
  const std::size_t hops = used_edges.size();
  for (std::size_t slot = 0; slot < pprime.size(); ++slot) {
    Path p;
    for (const auto& e : pprime[slot]) p.push_back(net->edge(e.tx, e.rx));
    const bool is_partial_slot = slot + 1 == pprime.size();
    if (is_partial_slot && pprime[slot].size() != hops) {
      if (!p.empty()) out.partial = std::move(p);
    } else {
      out.paths.push_back(std::move(p));
    }
  }
  return out;
}

std::string SearchState::fingerprint() const {
  std::ostringstream os;
  for (const auto& p : pprime) {
    os << '[';
    for (const auto& e : p) os << idx(e.tx) << '>' << idx(e.rx) << ' ';
    os << ']';
  }
  os << '|';
  for (const auto& layer : used_edges) {
    for (const auto& e : layer) os << idx(e.tx) << '>' << idx(e.rx) << ' ';
    os << '/';
  }
  return os.str();
}

std::vector<TxId> span(const SearchState& state, TxId x) {
  const IndexedNetwork& net = *state.net;
  if (state.used(x)) {
    throw ContractViolation("span of a used transmitting node");
  }
  const auto& used = state.used_edges[net.layer_of(x)];
  if (used.empty()) return {};

  std::vector<TxId> rows;
  std::vector<RxId> cols;
  for (const auto& e : used) {
    rows.push_back(e.tx);
    cols.push_back(e.rx);
  }
  const Gf2Matrix basis = restricted_adjacency(net, rows, cols);
  BitVector target(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (net.has_edge(x, cols[c])) target.set(c);
  }
  const auto subset = solve_row_membership(basis, target);
  if (!subset) {
    throw std::logic_error("used edges of layer " +
                           std::to_string(net.layer_of(x)) +
                           " are not linearly independent");
  }
  std::vector<TxId> out;
  for (std::size_t r : *subset) out.push_back(rows[r]);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<TxId, AlternatingPath> find_ind_paths(const SearchState& state,
                                               TxId x,
                                               const std::vector<TxId>& span) {
  std::map<TxId, AlternatingPath> out;
  if (span.empty()) return out;
  const IndexedNetwork& net = *state.net;

  // Breadth-first search over the used nodes of the layer: forward along
  // network edges that are not used, backward along used edges.
  std::map<TxId, RxId> reached_via;  // used tx -> the used rx it was reached from
  std::map<RxId, TxId> parent;       // used rx -> tx it was reached from
  std::deque<TxId> queue{x};
  std::size_t remaining = span.size();
  while (!queue.empty() && remaining > 0) {
    const TxId u = queue.front();
    queue.pop_front();
    for (RxId y : net.out(u)) {
      if (!state.used(y) || parent.contains(y)) continue;
      if (state.used(u) && state.partner(u) == y) continue;
      parent.emplace(y, u);
      const TxId next = state.partner(y);
      if (next == x || reached_via.contains(next)) continue;
      reached_via.emplace(next, y);
      if (std::binary_search(span.begin(), span.end(), next)) --remaining;
      queue.push_back(next);
    }
  }

  for (TxId target : span) {
    if (!reached_via.contains(target)) {
      throw std::logic_error("no alternating path to a span member");
    }
    std::vector<UsedEdge> rev;
    TxId cur = target;
    while (cur != x) {
      const RxId y = reached_via.at(cur);
      const TxId prev = parent.at(y);
      rev.push_back({cur, y});   // used edge, removed by the move
      rev.push_back({prev, y});  // fresh edge, added by the move
      cur = prev;
    }
    std::reverse(rev.begin(), rev.end());
    out.emplace(target, AlternatingPath{std::move(rev)});
  }
  return out;
}

bool fast_type1_check(const SearchState& state, TxId x,
                      const std::vector<TxId>& span, RxId y) {
  const IndexedNetwork& net = *state.net;
  bool sum = net.has_edge(x, y);
  for (TxId s : span) sum ^= net.has_edge(s, y);
  return sum;
}

namespace {

// Depth-first search with an explicit frame stack. Every move is recorded in
// an undo journal; a frame whose child search fails rewinds the journal to
// the mark taken before the move.
class Search {
 public:
  explicit Search(SearchState& s) : s_(s), net_(*s.net) {}

  bool run(SuperId start);

 private:
  enum class Stage { kType2, kType3, kType1, kReceivers, kDone };
  enum class Step { kDescend, kExhausted, kFound };

  struct Frame {
    SuperId node{};
    Stage stage = Stage::kType2;
    std::uint32_t cursor = 0;

    bool exploring = false;  // a transmitting node x is being explored
    TxId x{};
    TxType x_type = TxType::kType1;
    std::vector<TxId> span;
    std::uint32_t edge_cursor = 0;
    bool in_targets = false;
    std::vector<std::pair<TxId, AlternatingPath>> targets;
    std::uint32_t target_cursor = 0;

    bool pending = false;  // a move is applied and a child frame ran
    std::size_t mark = 0;
    std::string before;  // fingerprint before the move, debug only
  };

  struct JournalEntry {
    enum class Kind { kAdd, kRemove, kPath } kind;
    int layer = 0;
    UsedEdge edge;
    std::size_t slot = 0;
    IndexedPath old_path;
  };

  Step advance(Frame& f, SuperId& next);
  bool next_tx(Frame& f, TxType wanted);
  void push_frame(SuperId node);

  void begin_move(Frame& f);
  void undo_move(Frame& f);
  void add_edge(int layer, UsedEdge e);  // journalled
  void remove_edge(int layer, UsedEdge e);
  void link_edge(int layer, UsedEdge e);
  void unlink_edge(int layer, UsedEdge e);
  void replace_path(std::size_t slot, IndexedPath p);
  std::size_t owner(int layer, UsedEdge e) const;

  void apply_type1(TxId x, RxId y);
  void apply_type2(const AlternatingPath& path);
  void apply_type3(int layer, TxId x, RxId y);

  bool independent_without(int layer, UsedEdge e) const;

  bool debug() const { return s_.options.debug_checks; }
  void check_independence();
  void check_layer_counts(SuperId node);
  void shadow_rank_check(TxId x, RxId y, bool fast);

  SearchState& s_;
  const IndexedNetwork& net_;
  std::vector<Frame> stack_;
  std::vector<JournalEntry> journal_;
};

bool Search::run(SuperId start) {
  const IndexedPath& partial = s_.pprime.back();
  const SuperId expected = partial.empty() ? net_.source()
                                           : net_.super_of(partial.back().rx);
  if (start != expected) {
    throw ContractViolation("search must start where the partial path ends");
  }
  push_frame(start);
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    if (f.pending) undo_move(f);
    SuperId next{};
    switch (advance(f, next)) {
      case Step::kFound:
        return true;
      case Step::kExhausted:
        stack_.pop_back();
        break;
      case Step::kDescend:
        push_frame(next);
        break;
    }
  }
  return false;
}

void Search::push_frame(SuperId node) {
  s_.super_explored[idx(node)] = 1;
  ++s_.counters.supernode_explorations;
  if (debug()) check_layer_counts(node);
  Frame f;
  f.node = node;
  stack_.push_back(std::move(f));
}

// Picks the next admissible transmitting node of the wanted type, scanning
// levels in order from the frame cursor.
bool Search::next_tx(Frame& f, TxType wanted) {
  const auto& sup = net_.super(f.node);
  while (f.cursor < sup.tx_count) {
    const auto x = static_cast<TxId>(sup.tx_begin + f.cursor);
    ++f.cursor;
    if (net_.out(x).empty() || s_.used(x) || s_.tx_explored[idx(x)] ||
        s_.tx_type[idx(x)] != wanted) {
      continue;
    }
    s_.tx_explored[idx(x)] = 1;
    ++s_.counters.explorations;
    if (wanted == TxType::kType1) ++s_.counters.k1;

    f.exploring = true;
    f.x = x;
    f.x_type = wanted;
    f.edge_cursor = 0;
    f.in_targets = false;
    f.targets.clear();
    f.target_cursor = 0;
    auto& cached = s_.span_cache[idx(x)];
    if (wanted == TxType::kType2 && cached) {
      f.span = *cached;
      if (debug()) {
        ++s_.debug.span_cache_checks;
        if (span(s_, x) != f.span) {
          ++s_.debug.span_cache_mismatches;
          note(s_.debug, "cached span differs from recomputed span at tx " +
                             net_.node(x).to_string());
        }
      }
    } else {
      f.span = span(s_, x);
    }
    return true;
  }
  return false;
}

Search::Step Search::advance(Frame& f, SuperId& next) {
  const int layer = net_.super(f.node).layer;
  while (true) {
    if (f.exploring) {
      if (!f.in_targets) {
        const auto out = net_.out(f.x);
        while (f.edge_cursor < out.size()) {
          const RxId y = out[f.edge_cursor++];
          if (s_.used(y)) continue;
          const SuperId target = net_.super_of(y);
          if (s_.super_explored[idx(target)]) continue;
          ++s_.counters.rank_checks;
          const bool ok = fast_type1_check(s_, f.x, f.span, y);
          if (debug()) shadow_rank_check(f.x, y, ok);
          if (!ok) continue;
          begin_move(f);
          apply_type1(f.x, y);
          ++s_.counters.type1_moves;
          if (target == net_.destination()) return Step::kFound;
          next = target;
          return Step::kDescend;
        }
        // Nodes reached by a type-2 move only extend along fresh edges.
        if (f.x_type == TxType::kType2) {
          f.exploring = false;
          continue;
        }
        f.in_targets = true;
        for (auto& [target, path] : find_ind_paths(s_, f.x, f.span)) {
          f.targets.emplace_back(target, std::move(path));
        }
      }
      while (f.target_cursor < f.targets.size()) {
        const auto& [target, path] = f.targets[f.target_cursor++];
        // span(x') after the move is span(x) + x - x'.
        std::vector<TxId> handed;
        for (TxId t : f.span) {
          if (t != target) handed.push_back(t);
        }
        handed.push_back(f.x);
        std::sort(handed.begin(), handed.end());
        s_.span_cache[idx(target)] = std::move(handed);
        s_.tx_explored[idx(target)] = 0;
        s_.tx_type[idx(target)] = TxType::kType2;
        ++s_.counters.k2;

        begin_move(f);
        apply_type2(path);
        ++s_.counters.type2_moves;
        next = net_.super_of(target);
        return Step::kDescend;
      }
      f.exploring = false;
      continue;
    }

    switch (f.stage) {
      case Stage::kType2:
        if (next_tx(f, TxType::kType2)) continue;
        f.stage = Stage::kType3;
        f.cursor = 0;
        continue;
      case Stage::kType3:
        if (next_tx(f, TxType::kType3)) continue;
        f.stage = Stage::kType1;
        f.cursor = 0;
        continue;
      case Stage::kType1:
        if (next_tx(f, TxType::kType1)) continue;
        f.stage = Stage::kReceivers;
        f.cursor = 0;
        continue;
      case Stage::kReceivers: {
        const auto& sup = net_.super(f.node);
        while (f.cursor < sup.rx_count) {
          const auto y = static_cast<RxId>(sup.rx_begin + f.cursor);
          ++f.cursor;
          if (!s_.committed_rx[idx(y)] || s_.rx_explored[idx(y)] ||
              !s_.used(y)) {
            continue;
          }
          const TxId x = s_.partner(y);
          // Freeing (x, y) must leave the other used edges of the cut
          // independent, otherwise no span exists there afterwards.
          if (!independent_without(layer - 1, {x, y})) continue;
          s_.rx_explored[idx(y)] = 1;
          s_.tx_explored[idx(x)] = 0;
          s_.tx_type[idx(x)] = TxType::kType3;
          ++s_.counters.k3;
          begin_move(f);
          apply_type3(layer - 1, x, y);
          ++s_.counters.type3_moves;
          next = net_.super_of(x);
          return Step::kDescend;
        }
        f.stage = Stage::kDone;
        continue;
      }
      case Stage::kDone:
        return Step::kExhausted;
    }
  }
}

void Search::begin_move(Frame& f) {
  f.pending = true;
  f.mark = journal_.size();
  if (debug()) f.before = s_.fingerprint();
}

void Search::undo_move(Frame& f) {
  while (journal_.size() > f.mark) {
    JournalEntry j = std::move(journal_.back());
    journal_.pop_back();
    switch (j.kind) {
      case JournalEntry::Kind::kAdd:
        unlink_edge(j.layer, j.edge);
        break;
      case JournalEntry::Kind::kRemove:
        link_edge(j.layer, j.edge);
        break;
      case JournalEntry::Kind::kPath:
        s_.pprime[j.slot] = std::move(j.old_path);
        break;
    }
  }
  f.pending = false;
  if (debug()) {
    ++s_.debug.restore_checks;
    if (s_.fingerprint() != f.before) {
      ++s_.debug.restore_mismatches;
      note(s_.debug, "undo did not restore the path set");
    }
    check_independence();
  }
}

void Search::link_edge(int layer, UsedEdge e) {
  auto& edges = s_.used_edges[layer];
  edges.insert(std::lower_bound(edges.begin(), edges.end(), e), e);
  s_.tx_partner[idx(e.tx)] = static_cast<std::uint32_t>(e.rx);
  s_.rx_partner[idx(e.rx)] = static_cast<std::uint32_t>(e.tx);
}

void Search::unlink_edge(int layer, UsedEdge e) {
  auto& edges = s_.used_edges[layer];
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) {
    throw std::logic_error("removing an edge that is not in use");
  }
  edges.erase(it);
  s_.tx_partner[idx(e.tx)] = SearchState::kNone;
  s_.rx_partner[idx(e.rx)] = SearchState::kNone;
}

void Search::add_edge(int layer, UsedEdge e) {
  link_edge(layer, e);
  journal_.push_back({JournalEntry::Kind::kAdd, layer, e, 0, {}});
}

void Search::remove_edge(int layer, UsedEdge e) {
  unlink_edge(layer, e);
  journal_.push_back({JournalEntry::Kind::kRemove, layer, e, 0, {}});
}

void Search::replace_path(std::size_t slot, IndexedPath p) {
  journal_.push_back(
      {JournalEntry::Kind::kPath, 0, {}, slot, std::move(s_.pprime[slot])});
  s_.pprime[slot] = std::move(p);
}

std::size_t Search::owner(int layer, UsedEdge e) const {
  for (std::size_t slot = 0; slot < s_.pprime.size(); ++slot) {
    const auto& p = s_.pprime[slot];
    if (static_cast<int>(p.size()) > layer && p[layer] == e) return slot;
  }
  throw std::logic_error("used edge without an owning path");
}

void Search::apply_type1(TxId x, RxId y) {
  const int layer = net_.layer_of(x);
  IndexedPath partial = s_.pprime.back();
  partial.push_back({x, y});
  replace_path(s_.pprime.size() - 1, std::move(partial));
  add_edge(layer, {x, y});
  if (debug()) check_independence();
}

// For the alternating path (x, y1), (x1, y1), ..., (xm, ym) with (xi, yi)
// owned by path Pi, the partial path P hands over as
//   P1' = P(S, N(x)) + (x, y1) + P1(N(y1), D)
//   Pi' = P{i-1}(S, N(x{i-1})) + (x{i-1}, yi) + Pi(N(yi), D)
//   P'  = Pm(S, N(xm)).
void Search::apply_type2(const AlternatingPath& path) {
  const int layer = net_.layer_of(path.edges.front().tx);
  const std::size_t partial_slot = s_.pprime.size() - 1;
  const std::size_t m = path.edges.size() / 2;

  std::vector<std::size_t> owners;
  for (std::size_t i = 0; i < m; ++i) {
    owners.push_back(owner(layer, path.edges[2 * i + 1]));
  }
  std::vector<IndexedPath> rewired(m);
  std::size_t prefix_slot = partial_slot;
  for (std::size_t i = 0; i < m; ++i) {
    const IndexedPath& prefix_src = s_.pprime[prefix_slot];
    const IndexedPath& suffix_src = s_.pprime[owners[i]];
    IndexedPath p(prefix_src.begin(), prefix_src.begin() + layer);
    p.push_back(path.edges[2 * i]);
    p.insert(p.end(), suffix_src.begin() + layer + 1, suffix_src.end());
    rewired[i] = std::move(p);
    prefix_slot = owners[i];
  }
  const IndexedPath& last = s_.pprime[owners.back()];
  IndexedPath partial(last.begin(), last.begin() + layer);

  for (std::size_t i = 0; i < m; ++i) {
    replace_path(owners[i], std::move(rewired[i]));
  }
  replace_path(partial_slot, std::move(partial));

  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    if (i % 2 == 1) remove_edge(layer, path.edges[i]);
  }
  for (std::size_t i = 0; i < path.edges.size(); i += 2) {
    add_edge(layer, path.edges[i]);
  }
  if (debug()) check_independence();
}

// Moving back along (x, y) from N = N(y): if Px owns the edge,
//   Px' = P(S, N) + Px(N, D),  P' = Px(S, N(x));
// when the partial path itself owns it, P' = P(S, N(x)).
void Search::apply_type3(int layer, TxId x, RxId y) {
  const std::size_t partial_slot = s_.pprime.size() - 1;
  const std::size_t slot = owner(layer, {x, y});
  const IndexedPath& partial = s_.pprime[partial_slot];
  if (slot == partial_slot) {
    replace_path(partial_slot, IndexedPath(partial.begin(),
                                           partial.begin() + layer));
  } else {
    const IndexedPath& px = s_.pprime[slot];
    IndexedPath joined(partial.begin(), partial.begin() + layer + 1);
    joined.insert(joined.end(), px.begin() + layer + 1, px.end());
    IndexedPath prefix(px.begin(), px.begin() + layer);
    replace_path(slot, std::move(joined));
    replace_path(partial_slot, std::move(prefix));
  }
  remove_edge(layer, {x, y});
  if (debug()) check_independence();
}

bool Search::independent_without(int layer, UsedEdge e) const {
  std::vector<TxId> rows;
  std::vector<RxId> cols;
  for (const auto& u : s_.used_edges[layer]) {
    if (u == e) continue;
    rows.push_back(u.tx);
    cols.push_back(u.rx);
  }
  return rank(restricted_adjacency(net_, rows, cols)) == rows.size();
}

void Search::check_independence() {
  for (std::size_t layer = 0; layer < s_.used_edges.size(); ++layer) {
    const auto& edges = s_.used_edges[layer];
    std::vector<TxId> rows;
    std::vector<RxId> cols;
    for (const auto& e : edges) {
      rows.push_back(e.tx);
      cols.push_back(e.rx);
    }
    ++s_.debug.independence_checks;
    if (rank(restricted_adjacency(net_, rows, cols)) != edges.size()) {
      ++s_.debug.independence_violations;
      note(s_.debug, "used edges of layer cut " + std::to_string(layer) +
                         " are dependent");
    }
  }
}

// While N in layer l is explored, the first l layer cuts carry k used edges
// and the remaining ones k-1, and the partial path ends at N.
void Search::check_layer_counts(SuperId node) {
  const int l = net_.super(node).layer;
  const auto k = static_cast<std::size_t>(s_.iteration);
  ++s_.debug.layer_count_checks;
  bool ok = s_.pprime.back().size() == static_cast<std::size_t>(l);
  for (std::size_t j = 0; j < s_.used_edges.size(); ++j) {
    const std::size_t expected = static_cast<int>(j) < l ? k : k - 1;
    ok = ok && s_.used_edges[j].size() == expected;
  }
  if (!ok) {
    ++s_.debug.layer_count_violations;
    note(s_.debug, "used-edge counts wrong while exploring " +
                       net_.super(node).id);
  }
}

void Search::shadow_rank_check(TxId x, RxId y, bool fast) {
  const auto& edges = s_.used_edges[net_.layer_of(x)];
  std::vector<TxId> rows{x};
  std::vector<RxId> cols{y};
  for (const auto& e : edges) {
    rows.push_back(e.tx);
    cols.push_back(e.rx);
  }
  const bool full = rank(restricted_adjacency(net_, rows, cols)) == rows.size();
  ++s_.debug.rank_checks;
  if (full != fast) {
    ++s_.debug.rank_check_mismatches;
    note(s_.debug, "fast rank check disagrees at " +
                       net_.edge(x, y).to_string());
  }
}

}  // namespace

bool mdfs(SearchState& state, SuperId start) {
  Search search(state);
  const bool found = search.run(start);
  state.counters.found = found;
  return found;
}

CapacityResult unicast_capacity(const LayeredNetwork& net,
                                const SolverOptions& options) {
  return unicast_capacity(IndexedNetwork(net), options);
}

CapacityResult unicast_capacity(const IndexedNetwork& net,
                                const SolverOptions& options) {
  CapacityResult result;
  while (true) {
    SearchState state =
        SearchState::begin_iteration(net, result.paths, options);
    const bool found = mdfs(state, net.source());
    result.iterations.push_back(state.counters);
    result.debug.merge(state.debug);
    if (!found) break;
    result.paths = state.path_set();
  }
  result.capacity = static_cast<int>(result.paths.size());
  return result;
}

}  // namespace detcap
