#pragma once

// Textual policy language, threshold access trees, top-down secret sharing
// over a tree, and minimal satisfying leaf selection for decryption.
//
// Grammar (keywords case-insensitive, "of" binds tightest, then "and", "or";
// "and"/"or" chains flatten into one n-ary gate):
//   policy := or
//   or     := and ("or" and)*
//   and    := term ("and" term)*
//   term   := attr | INT "of" "(" policy ("," policy)+ ")" | "(" policy ")"
//   attr   := [a-z][a-z0-9_]*   (normalized; mixed case accepted on input)

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "piratte/algebra.hpp"
#include "piratte/errors.hpp"

namespace piratte {

struct PolicyNode {
  int threshold = 1;                 // k; implicitly 1 for leaves
  std::vector<PolicyNode> children;  // empty iff leaf
  std::string attribute;             // leaf only, normalized

  bool is_leaf() const { return children.empty(); }
  bool operator==(const PolicyNode&) const = default;
};

struct AccessTree {
  PolicyNode root;

  int leaf_count() const;
  int internal_count() const;
  bool operator==(const AccessTree&) const = default;
};

// Throws ParseError (with byte position), ThresholdError, InvalidAttribute.
AccessTree parse_policy(std::string_view text);

// Canonical text; parse_policy(format_policy(t)) is structurally t.
std::string format_policy(const AccessTree& tree);

// Structural invariants: thresholds in range, >= 2 children per gate,
// normalized leaf names. Throws InvalidComponent. Used on every decode.
void validate_tree(const AccessTree& tree);

// Leaf id = 0-based preorder position among leaves; the join key between
// ciphertext components, conversion requests, and selections.
struct LeafInfo {
  int id;
  std::string attribute;
};
std::vector<LeafInfo> tree_leaves(const AccessTree& tree);

// leaf id -> q_y(0)
using LeafShareAssignment = std::map<int, Scalar>;

// Top-down sharing: the root polynomial has constant s and degree k-1; each
// child's constant is the parent polynomial at the child's 1-based index.
LeafShareAssignment share_over_tree(const ScalarField& field,
                                    const AccessTree& tree, const Scalar& s,
                                    Rng& rng);

// Reconstruction plan mirroring the tree: leaves carry their id, internal
// nodes the Lagrange coefficient of each chosen child over the chosen
// 1-based index set at 0.
struct SelectionNode {
  int leaf_id = -1;  // >= 0 iff leaf
  std::vector<std::pair<Scalar, SelectionNode>> children;
};

struct SatisfyingSelection {
  SelectionNode plan;
  std::vector<int> leaves;  // chosen leaf ids, ascending
};

// Minimal-leaf-count selection (bottom-up k-cheapest, ties to the lower
// child index). Empty optional = tree not satisfiable with attrs.
std::optional<SatisfyingSelection> select_satisfying_leaves(
    const ScalarField& field, const AccessTree& tree,
    const std::set<std::string>& attrs);

// Same, with an extra per-leaf usability filter (attribute-revocation mode
// routes around leaves the proxy refused to convert).
std::optional<SatisfyingSelection> select_satisfying_leaves(
    const ScalarField& field, const AccessTree& tree,
    const std::set<std::string>& attrs,
    const std::function<bool(int)>& leaf_usable);

// Folds per-leaf GT values up the plan: F_x = prod F_child^{lambda}.
// Every selected leaf must be present in leaf_values.
GTElement combine_leaf_values(const SatisfyingSelection& selection,
                              const std::map<int, GTElement>& leaf_values);

}  // namespace piratte
