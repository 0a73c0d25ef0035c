#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tolspace/canonical.hpp"
#include "tolspace/homology.hpp"
#include "tolspace/lru_cache.hpp"
#include "tolspace/space.hpp"

namespace tolspace {

enum class Verdict { Yes, No, Unknown };
const char* to_string(Verdict v);

struct SearchLimits {
  /// Contractibility nodes allowed per top-level query.
  std::size_t max_nodes = 50'000'000;
  /// Memo entries kept (LRU).
  std::size_t cache_capacity = 1'000'000;
  /// Graphs above this size are searched without canonical-form memoization.
  int memo_max_vertices = 64;
};

struct SphereKey {
  CanonicalForm form;
  int dim = 0;
  bool operator==(const SphereKey&) const = default;
};

struct SphereKeyHash {
  std::size_t operator()(const SphereKey& k) const noexcept {
    return CanonicalFormHash{}(k.form) * 31U + static_cast<std::size_t>(k.dim);
  }
};

/// Memo tables and node accounting shared by the contractibility search, the
/// equivalence checker and the sphere recognisers. Not thread-safe; use one
/// context per thread.
class SearchContext {
 public:
  explicit SearchContext(SearchLimits limits = {});

  const SearchLimits& limits() const noexcept { return limits_; }

  /// Counts one search node; throws BudgetExhausted past the active budget.
  void charge();
  std::size_t nodes() const noexcept { return nodes_; }

  LruCache<CanonicalForm, bool, CanonicalFormHash>& contractible_memo() { return contractible_; }
  LruCache<SphereKey, Verdict, SphereKeyHash>& sphere_memo() { return spheres_; }

  /// Opens a budget window of limits().max_nodes unless one is already open,
  /// so nested queries share their caller's budget.
  class Budget {
   public:
    explicit Budget(SearchContext& ctx);
    ~Budget();
    Budget(const Budget&) = delete;
    Budget& operator=(const Budget&) = delete;

   private:
    SearchContext& ctx_;
    bool owner_;
  };

 private:
  SearchLimits limits_;
  std::size_t nodes_ = 0;
  std::size_t deadline_ = 0;
  bool budget_open_ = false;
  LruCache<CanonicalForm, bool, CanonicalFormHash> contractible_;
  LruCache<SphereKey, Verdict, SphereKeyHash> spheres_;
};

// Index-level primitives. Vertex numbers refer to the given Graph.

/// Throws BudgetExhausted. When `schedule` is given and the answer is yes, it
/// receives a deletion order (indices of g) that leaves exactly one vertex.
bool graph_contractible(const Graph& g, SearchContext& ctx, std::vector<int>* schedule = nullptr);
bool graph_simple_vertex(const Graph& g, int v, SearchContext& ctx);
bool graph_simple_edge(const Graph& g, int u, int w, SearchContext& ctx);
/// Common neighbours of u and w, ascending.
std::vector<int> common_neighbors(const Graph& g, int u, int w);

enum class MoveKind { DeleteVertex, AttachVertex, DeleteEdge, AttachEdge };
const char* to_string(MoveKind k);

/// One simple contractible transformation. Vertex moves carry the neighbour
/// set of the subject so they can be inverted without the space at hand.
struct Move {
  MoveKind kind = MoveKind::DeleteVertex;
  std::string vertex;
  /// Sorted in label order. For DeleteVertex an empty list means "not
  /// recorded"; apply_move fills it in (an isolated vertex is never simple).
  std::vector<std::string> neighbors;
  Edge edge;

  static Move delete_vertex(std::string v, std::vector<std::string> nbrs = {});
  static Move attach_vertex(std::string v, std::vector<std::string> nbrs);
  static Move delete_edge(std::string u, std::string w);
  static Move attach_edge(std::string u, std::string w);

  /// Requires recorded neighbours for DeleteVertex.
  Move inverse() const;
  std::string str() const;
  bool operator==(const Move&) const = default;
};

/// Fills in the neighbour list of a DeleteVertex move from x.
Move recorded(const ToleranceSpace& x, Move m);

/// Why `m` is not a valid move in x, or nothing when it is valid.
std::optional<std::string> move_defect(const ToleranceSpace& x, const Move& m, SearchContext& ctx);

/// Applies a validated move; throws InvalidMove naming the failed check.
ToleranceSpace apply_move(const ToleranceSpace& x, const Move& m, SearchContext& ctx);
ToleranceSpace apply_move(const ToleranceSpace& x, const Move& m);

struct MoveTrace {
  ToleranceSpace start;
  std::vector<Move> moves;
  ToleranceSpace end;

  /// Number of vertices at the largest intermediate stage.
  std::size_t peak_size() const;
};

/// Replays every move with validation; returns the defect of the first
/// failing step (with its index) or of a mismatching end, nothing on success.
std::optional<std::string> trace_defect(const MoveTrace& t, SearchContext& ctx);
std::optional<std::string> trace_defect(const MoveTrace& t);

/// Reverse trace: inverted moves in reverse order, start and end swapped.
MoveTrace reversed(const MoveTrace& t);

bool is_simple_vertex(const ToleranceSpace& x, std::string_view v, SearchContext& ctx);
bool is_simple_vertex(const ToleranceSpace& x, std::string_view v);
/// Throws InvalidArgument when {u, w} is not an edge.
bool is_simple_edge(const ToleranceSpace& x, std::string_view u, std::string_view w, SearchContext& ctx);
bool is_simple_edge(const ToleranceSpace& x, std::string_view u, std::string_view w);

struct ContractibilityResult {
  Verdict verdict = Verdict::Unknown;
  /// Deletion trace ending in a single point, present iff verdict is Yes.
  std::optional<MoveTrace> witness;
  std::size_t nodes = 0;
};

/// Greedy-first depth-first search over simple-vertex deletions with
/// canonical-form memoization. Unknown only when the node budget runs out.
ContractibilityResult is_simple_contractible(const ToleranceSpace& x, SearchContext& ctx);
ContractibilityResult is_simple_contractible(const ToleranceSpace& x);

struct CoreReduction {
  ToleranceSpace core;
  MoveTrace trace;
};

/// Deletes the smallest simple vertex while one exists, otherwise the first
/// simple edge, until neither exists.
CoreReduction reduce_core(const ToleranceSpace& x, SearchContext& ctx);
CoreReduction reduce_core(const ToleranceSpace& x);
/// True iff x has no simple vertex and no simple edge.
bool is_move_free(const ToleranceSpace& x, SearchContext& ctx);

struct ScheduleStep {
  std::string vertex;
  bool simple = false;
};

struct ScheduleReport {
  bool ok = false;
  /// Steps checked; stops after the first failure.
  std::vector<ScheduleStep> steps;
  /// Space left after the checked prefix (the failing vertex is not removed).
  ToleranceSpace residue;
  /// Deletion trace of the successful prefix.
  MoveTrace trace;
};

/// Each listed vertex must be simple once all earlier ones are removed.
ScheduleReport verify_deletion_schedule(const ToleranceSpace& x, const std::vector<std::string>& order,
                                        SearchContext& ctx);
ScheduleReport verify_deletion_schedule(const ToleranceSpace& x, const std::vector<std::string>& order);

/// Equator and poles when g is a suspension of a cycle of length >= 4:
/// exactly two non-adjacent vertices adjacent to everything else, and the
/// rest forms a single cycle.
struct SuspendedCycle {
  int north = -1;
  int south = -1;
  /// Equator in cyclic order.
  std::vector<int> equator;
};
std::optional<SuspendedCycle> suspended_cycle(const Graph& g);

struct EquivalenceBudget {
  /// Extra vertices allowed above max(|X|, |Y|) during search.
  int extra_vertices = 2;
  std::size_t max_nodes = 100'000;
};

/// Deletion schedules tried before core reduction; invalid hints are ignored.
struct EquivalenceHints {
  std::vector<std::string> x_schedule;
  std::vector<std::string> y_schedule;
};

enum class EquivalenceKind { Equivalent, NotEquivalent, Unknown };
const char* to_string(EquivalenceKind k);

struct EquivalenceVerdict {
  EquivalenceKind kind = EquivalenceKind::Unknown;
  /// Equivalent: a replayable trace from X to a space isomorphic to Y.
  std::optional<MoveTrace> trace;
  /// Equivalent: label map from trace->end onto Y.
  std::map<std::string, std::string, LabelLess> relabel;
  /// NotEquivalent: the invariant that differs. Unknown: why the search gave up.
  std::string reason;
  /// How the verdict was reached ("invariants", "cores", "cycle stretch", ...).
  std::string method;
};

/// Sound three-valued check. Invariants first, then core reduction with
/// isomorphism, then stretching of cycle and suspended-cycle cores, then a
/// bounded bidirectional search.
EquivalenceVerdict check_equivalent(const ToleranceSpace& x, const ToleranceSpace& y, const EquivalenceBudget& budget,
                                    const EquivalenceHints& hints, SearchContext& ctx);
EquivalenceVerdict check_equivalent(const ToleranceSpace& x, const ToleranceSpace& y,
                                    const EquivalenceBudget& budget = {}, const EquivalenceHints& hints = {});

}  // namespace tolspace
