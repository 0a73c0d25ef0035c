#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tolspace/space.hpp"

namespace tolspace {

/// A binary operation on the vertices of a carrier space with a named
/// identity. The constructor checks totality and that every entry is a label
/// of the carrier; the group axioms are checked by is_digital_group.
class MultiplicationTable {
 public:
  using Row = std::map<std::string, std::string, LabelLess>;
  using Table = std::map<std::string, Row, LabelLess>;

  MultiplicationTable(ToleranceSpace carrier, std::string identity, Table table);

  const ToleranceSpace& carrier() const noexcept { return carrier_; }
  const std::string& identity() const noexcept { return identity_; }
  const Table& table() const noexcept { return table_; }
  const std::string& operator()(std::string_view a, std::string_view b) const;

 private:
  ToleranceSpace carrier_;
  std::string identity_;
  Table table_;
};

struct GroupCheck {
  bool ok = false;
  /// Which axiom failed ("identity", "associativity", "inverse",
  /// "continuity"), empty when ok.
  std::string failed;
  /// Elements exhibiting the failure. For continuity: a, b, c, d with a ≈ b,
  /// c ≈ d and a·c, b·d neither equal nor adjacent.
  std::vector<std::string> witness;
  std::string message;
};

/// Group axioms plus continuity of the multiplication as a map from the
/// strong product carrier x carrier to the carrier.
GroupCheck is_digital_group(const MultiplicationTable& t);

/// For a connected digital group, the carrier must be complete. Throws
/// InvalidArgument when the precondition fails.
bool verify_completeness_theorem(const MultiplicationTable& t);

/// star(identity) is a complete graph and closed under products and inverses.
bool star_of_identity_is_complete_subgroup(const MultiplicationTable& t);

/// Abstract group on 0..n-1 with identity 0; op[a][b] = a·b.
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> op;
  int order() const { return static_cast<int>(op.size()); }
};

/// Cyclic group Z/n.
FiniteGroup cyclic_group(int n);
/// One representative of each isomorphism class of groups of order 1..6:
/// Z1, Z2, Z3, Z4, Z2xZ2, Z5, Z6, S3.
std::vector<FiniteGroup> small_groups();

/// Carrier with vertex labels "0".."n-1" taken from g, multiplication from
/// `group` transported along `placement` (element k sits at vertex placement[k]).
MultiplicationTable place_group(const FiniteGroup& group, const Graph& g, const std::vector<int>& placement);

struct GroupSweepReport {
  std::size_t pairs = 0;       ///< (group, graph) pairs examined
  std::size_t placements = 0;  ///< bijections tried
  std::size_t continuous = 0;  ///< continuous group structures found
  bool all_complete = true;
  bool stars_complete_subgroups = true;
  /// "Z4 on K4" style descriptions of each continuous structure's carrier,
  /// one per (group, graph) pair that admits one.
  std::vector<std::string> found;
};

/// Every small group against every connected graph of the same order and
/// every placement of elements on vertices.
GroupSweepReport sweep_small_groups(int max_order = 6);

}  // namespace tolspace
