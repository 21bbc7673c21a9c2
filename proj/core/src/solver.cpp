#include "dfacons/solver.hpp"

#include <future>
#include <numeric>
#include <utility>
#include <vector>

namespace dfacons {

PrefixTree build_prefix_tree(const Sample& sample) {
  using Label = PrefixTree::Label;
  const int nsym = sample.alphabet.size;

  struct Raw {
    std::vector<int> child;
    Label label = Label::none;
  };
  std::vector<Raw> raw;
  raw.push_back({std::vector<int>(nsym, -1), Label::none});
  auto insert = [&](const Word& w, Label label) {
    int cur = 0;
    for (char c : w) {
      int s = sample.alphabet.index(c);
      if (raw[cur].child[s] < 0) {
        raw[cur].child[s] = static_cast<int>(raw.size());
        raw.push_back({std::vector<int>(nsym, -1), Label::none});
      }
      cur = raw[cur].child[s];
    }
    if (raw[cur].label != Label::none && raw[cur].label != label)
      throw InternalError("prefix tree label clash on a sample word");
    raw[cur].label = label;
  };
  for (const Word& w : sample.positives) insert(w, Label::accept);
  for (const Word& w : sample.negatives) insert(w, Label::reject);

  // renumber breadth-first so node ids are stable across insertion orders
  std::vector<int> order{0};
  std::vector<int> new_id(raw.size(), -1);
  new_id[0] = 0;
  for (std::size_t q = 0; q < order.size(); ++q) {
    for (int s = 0; s < nsym; ++s) {
      int child = raw[order[q]].child[s];
      if (child >= 0) {
        new_id[child] = static_cast<int>(order.size());
        order.push_back(child);
      }
    }
  }

  PrefixTree tree;
  tree.alphabet = sample.alphabet;
  tree.nodes.resize(raw.size());
  for (std::size_t q = 0; q < order.size(); ++q) {
    const Raw& src = raw[order[q]];
    PrefixTree::Node& dst = tree.nodes[q];
    dst.label = src.label;
    dst.child.assign(nsym, -1);
    for (int s = 0; s < nsym; ++s)
      if (src.child[s] >= 0) dst.child[s] = new_id[src.child[s]];
  }
  return tree;
}

namespace {

using Label = PrefixTree::Label;

// Backtracking search over colorings of the prefix tree. Nodes are taken in
// breadth-first order; assigning a node to a class immediately merges the
// underlying subtrees (union-find with an undo trail) so that determinism
// violations surface at the choice point instead of many levels later.
class Search {
 public:
  enum class Outcome { found, exhausted, stopped };
  static constexpr int kUnrestricted = -1;

  // pivot_node/pivot_color partition the search space for the parallel
  // driver: the branch only admits assignments where `pivot_node` ends up
  // with exactly `pivot_color`. kUnrestricted disables the filter.
  Search(const PrefixTree& tree, int k, const std::atomic<bool>* external_stop,
         const std::atomic<bool>* sibling_stop, int pivot_node, int pivot_color)
      : tree_(tree),
        k_(k),
        nsym_(tree.alphabet.size),
        external_stop_(external_stop),
        sibling_stop_(sibling_stop),
        pivot_node_(pivot_node),
        pivot_color_(pivot_color) {
    const int count = static_cast<int>(tree.nodes.size());
    parent_.resize(count);
    std::iota(parent_.begin(), parent_.end(), 0);
    label_.resize(count);
    child_.resize(count);
    for (int v = 0; v < count; ++v) {
      label_[v] = tree.nodes[v].label;
      child_[v] = tree.nodes[v].child;
    }
    color_.assign(count, -1);
  }

  Outcome run() {
    set_color(0, 0);
    color_roots_.push_back(0);
    if (search(1)) return Outcome::found;
    return stopped_ ? Outcome::stopped : Outcome::exhausted;
  }

  Dfa result(Alphabet alphabet) const {
    const int states = static_cast<int>(color_roots_.size());
    std::vector<std::vector<int>> trans(states, std::vector<int>(nsym_));
    std::set<int> accepting;
    for (int c = 0; c < states; ++c) {
      int root = color_roots_[c];
      if (label_[root] == Label::accept) accepting.insert(c);
      for (int s = 0; s < nsym_; ++s) {
        int child = child_[root][s];
        trans[c][s] = child < 0 ? c : color_[find(child)];
      }
    }
    return Dfa(states, alphabet, std::move(trans), 0, std::move(accepting));
  }

 private:
  struct TrailEntry {
    enum Kind : std::uint8_t { parent, label, child, color } kind;
    int a;
    int s;
    int old;
  };

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  void set_parent(int v, int p) {
    trail_.push_back({TrailEntry::parent, v, 0, parent_[v]});
    parent_[v] = p;
  }
  void set_label(int root, Label l) {
    trail_.push_back({TrailEntry::label, root, 0, static_cast<int>(label_[root])});
    label_[root] = l;
  }
  void set_child(int root, int s, int node) {
    trail_.push_back({TrailEntry::child, root, s, child_[root][s]});
    child_[root][s] = node;
  }
  void set_color(int root, int c) {
    trail_.push_back({TrailEntry::color, root, 0, color_[root]});
    color_[root] = c;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const TrailEntry& e = trail_.back();
      switch (e.kind) {
        case TrailEntry::parent: parent_[e.a] = e.old; break;
        case TrailEntry::label: label_[e.a] = static_cast<Label>(e.old); break;
        case TrailEntry::child: child_[e.a][e.s] = e.old; break;
        case TrailEntry::color: color_[e.a] = e.old; break;
      }
      trail_.pop_back();
    }
  }

  bool should_stop() const {
    return (external_stop_ &&
            external_stop_->load(std::memory_order_relaxed)) ||
           (sibling_stop_ && sibling_stop_->load(std::memory_order_relaxed));
  }

  // Union the classes of x and y and propagate over the children so the
  // merged class stays deterministic. Fails on an accept/reject clash or
  // when two distinct already-colored classes would have to collapse (that
  // assignment is explored by the branch coloring them equal up front).
  bool merge(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return true;
    if (color_[x] >= 0 && color_[y] >= 0) return false;
    if (color_[x] >= 0) std::swap(x, y);
    if (label_[x] != Label::none) {
      if (label_[y] == Label::none) set_label(y, label_[x]);
      else if (label_[y] != label_[x]) return false;
    }
    set_parent(x, y);
    for (int s = 0; s < nsym_; ++s) {
      int from_x = child_[x][s];
      if (from_x < 0) continue;
      int root = find(y);  // recursion may have re-rooted y's class
      int from_y = child_[root][s];
      if (from_y < 0) set_child(root, s, from_x);
      else if (!merge(from_x, from_y)) return false;
    }
    return true;
  }

  bool pivot_allows_existing(int c) const {
    return pivot_color_ == kUnrestricted || c == pivot_color_;
  }
  bool pivot_allows_new() const {
    return pivot_color_ == kUnrestricted ||
           static_cast<int>(color_roots_.size()) == pivot_color_;
  }
  bool pivot_matches() const {
    return pivot_color_ == kUnrestricted ||
           color_[find(pivot_node_)] == pivot_color_;
  }

  bool search(int idx) {
    if (should_stop()) {
      stopped_ = true;
      return false;
    }
    const int count = static_cast<int>(tree_.nodes.size());
    while (idx < count && color_[find(idx)] >= 0) {
      if (idx == pivot_node_ && !pivot_matches()) return false;
      ++idx;
    }
    if (idx >= count) return true;

    const bool is_pivot = idx == pivot_node_;
    const int open = static_cast<int>(color_roots_.size());
    for (int c = 0; c < open; ++c) {
      if (is_pivot && !pivot_allows_existing(c)) continue;
      const std::size_t mark = trail_.size();
      if (merge(idx, color_roots_[c]) && search(idx + 1)) return true;
      undo(mark);
      if (stopped_) return false;
    }
    if (open < k_ && (!is_pivot || pivot_allows_new())) {
      const std::size_t mark = trail_.size();
      const int root = find(idx);
      set_color(root, open);
      color_roots_.push_back(root);
      if (search(idx + 1)) return true;
      color_roots_.pop_back();
      undo(mark);
    }
    return false;
  }

  const PrefixTree& tree_;
  const int k_;
  const int nsym_;
  const std::atomic<bool>* external_stop_;
  const std::atomic<bool>* sibling_stop_;
  const int pivot_node_;
  const int pivot_color_;

  std::vector<int> parent_;            // union-find over tree nodes
  std::vector<Label> label_;           // per class root
  std::vector<std::vector<int>> child_;  // per class root, per symbol
  std::vector<int> color_;             // per class root; -1 while open
  std::vector<int> color_roots_;       // representative node of each color
  std::vector<TrailEntry> trail_;
  bool stopped_ = false;
};

SolveResult wrap(const Search& search, Search::Outcome outcome,
                 const Sample& sample, int k) {
  switch (outcome) {
    case Search::Outcome::found: {
      Dfa dfa = search.result(sample.alphabet);
      if (dfa.state_count > k || !is_consistent(dfa, sample))
        throw InternalError("search produced an invalid automaton");
      return {SolveStatus::found, std::move(dfa)};
    }
    case Search::Outcome::exhausted:
      return {SolveStatus::exhausted, std::nullopt};
    default:
      return {SolveStatus::stopped, std::nullopt};
  }
}

}  // namespace

SolveResult solve_consistent(const Sample& sample, int k,
                             const SolveOptions& options) {
  if (k < 1) throw PreconditionError("state bound k must be at least 1");
  const PrefixTree tree = build_prefix_tree(sample);

  if (!options.parallel || static_cast<int>(tree.nodes.size()) <= 2 || k == 1) {
    Search search(tree, k, options.stop, nullptr, -1, Search::kUnrestricted);
    return wrap(search, search.run(), sample, k);
  }

  // Partition the space on the final color of one pivot node; one task per
  // candidate color. First finisher with a witness stops the siblings.
  const int pivot = std::min(static_cast<int>(tree.nodes.size()) - 1, k);
  std::atomic<bool> sibling_stop{false};
  struct Branch {
    Search::Outcome outcome = Search::Outcome::exhausted;
    std::optional<Dfa> dfa;
  };
  std::vector<std::future<Branch>> branches;
  branches.reserve(k);
  for (int c = 0; c < k; ++c) {
    branches.push_back(std::async(std::launch::async, [&, c]() {
      Search search(tree, k, options.stop, &sibling_stop, pivot, c);
      Branch b;
      b.outcome = search.run();
      if (b.outcome == Search::Outcome::found) {
        b.dfa = search.result(sample.alphabet);
        sibling_stop.store(true, std::memory_order_relaxed);
      }
      return b;
    }));
  }

  std::optional<Dfa> witness;
  bool any_stopped = false;
  for (auto& future : branches) {
    Branch b = future.get();
    if (b.dfa && !witness) witness = std::move(b.dfa);
    if (b.outcome == Search::Outcome::stopped) any_stopped = true;
  }
  if (witness) {
    if (witness->state_count > k || !is_consistent(*witness, sample))
      throw InternalError("search produced an invalid automaton");
    return {SolveStatus::found, std::move(witness)};
  }
  if (any_stopped) return {SolveStatus::stopped, std::nullopt};
  return {SolveStatus::exhausted, std::nullopt};
}

std::optional<Dfa> find_consistent_dfa(const Sample& sample, int k) {
  SolveResult result = solve_consistent(sample, k);
  return std::move(result.dfa);
}

std::optional<int> min_states(const Sample& sample, int k_max) {
  if (k_max < 1) throw PreconditionError("state budget must be at least 1");
  for (int k = 1; k <= k_max; ++k)
    if (find_consistent_dfa(sample, k)) return k;
  return std::nullopt;
}

std::uint64_t oracle_search_space(int k, int alphabet_size) {
  std::uint64_t tables = 1;
  for (int i = 0; i < k * alphabet_size; ++i) tables *= static_cast<std::uint64_t>(k);
  return tables << k;
}

std::optional<Dfa> brute_force_oracle(const Sample& sample, int k) {
  if (k < 1) throw PreconditionError("state bound k must be at least 1");
  if (k > kOracleStateLimit || sample.alphabet.size != 2)
    throw CapacityError("oracle enumeration is limited to k <= " +
                        std::to_string(kOracleStateLimit) +
                        " over the binary alphabet");
  const int nsym = sample.alphabet.size;
  const int digits = k * nsym;
  std::vector<int> table(digits, 0);
  while (true) {
    std::vector<std::vector<int>> trans(k, std::vector<int>(nsym));
    for (int q = 0; q < k; ++q)
      for (int s = 0; s < nsym; ++s) trans[q][s] = table[q * nsym + s];
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << k); ++bits) {
      std::set<int> accepting;
      for (int q = 0; q < k; ++q)
        if ((bits >> q) & 1) accepting.insert(q);
      Dfa candidate(k, sample.alphabet, trans, 0, std::move(accepting));
      if (is_consistent(candidate, sample)) return candidate;
    }
    int i = digits - 1;  // odometer over transition tables, last digit fastest
    while (i >= 0 && table[i] == k - 1) table[i--] = 0;
    if (i < 0) break;
    ++table[i];
  }
  return std::nullopt;
}

}  // namespace dfacons
