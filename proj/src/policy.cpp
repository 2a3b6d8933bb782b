#include "piratte/policy.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "piratte/attribute.hpp"
#include "piratte/errors.hpp"

namespace piratte {

namespace {

int count_leaves(const PolicyNode& n) {
  if (n.is_leaf()) return 1;
  int total = 0;
  for (const PolicyNode& c : n.children) total += count_leaves(c);
  return total;
}

int count_internal(const PolicyNode& n) {
  if (n.is_leaf()) return 0;
  int total = 1;
  for (const PolicyNode& c : n.children) total += count_internal(c);
  return total;
}

// ---------------------------------------------------------------------------
// Tokenizer

enum class Tok { Word, Int, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;   // lowercased word, or digit string
  std::size_t pos;    // byte offset into the source
};

struct Lexer {
  std::string_view src;
  std::size_t at = 0;
  Token cur;

  explicit Lexer(std::string_view s) : src(s) { advance(); }

  void advance() {
    while (at < src.size() && std::isspace(static_cast<unsigned char>(src[at]))) ++at;
    cur.pos = at;
    if (at >= src.size()) {
      cur.kind = Tok::End;
      cur.text.clear();
      return;
    }
    char c = src[at];
    if (c == '(') { cur = {Tok::LParen, "(", at++}; return; }
    if (c == ')') { cur = {Tok::RParen, ")", at++}; return; }
    if (c == ',') { cur = {Tok::Comma, ",", at++}; return; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = at;
      while (at < src.size() && std::isdigit(static_cast<unsigned char>(src[at]))) ++at;
      if (at < src.size() &&
          (std::isalpha(static_cast<unsigned char>(src[at])) || src[at] == '_'))
        throw ParseError("malformed number", start);
      cur = {Tok::Int, std::string(src.substr(start, at - start)), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = at;
      while (at < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[at])) || src[at] == '_'))
        ++at;
      std::string word(src.substr(start, at - start));
      for (char& ch : word) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      cur = {Tok::Word, word, start};
      return;
    }
    throw ParseError("unexpected character", at);
  }

  bool is_keyword(const char* kw) const {
    return cur.kind == Tok::Word && cur.text == kw;
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(std::string_view s) : lex(s) {}

  PolicyNode parse() {
    if (lex.cur.kind == Tok::End) throw ParseError("empty policy", 0);
    PolicyNode n = parse_or();
    if (lex.cur.kind != Tok::End)
      throw ParseError("trailing input after policy", lex.cur.pos);
    return n;
  }

  PolicyNode parse_or() {
    PolicyNode first = parse_and();
    if (!lex.is_keyword("or")) return first;
    PolicyNode gate;
    gate.threshold = 1;
    gate.children.push_back(std::move(first));
    while (lex.is_keyword("or")) {
      lex.advance();
      gate.children.push_back(parse_and());
    }
    return gate;
  }

  PolicyNode parse_and() {
    PolicyNode first = parse_term();
    if (!lex.is_keyword("and")) return first;
    PolicyNode gate;
    gate.children.push_back(std::move(first));
    while (lex.is_keyword("and")) {
      lex.advance();
      gate.children.push_back(parse_term());
    }
    gate.threshold = static_cast<int>(gate.children.size());
    return gate;
  }

  PolicyNode parse_term() {
    const Token& t = lex.cur;
    if (t.kind == Tok::LParen) {
      lex.advance();
      PolicyNode inner = parse_or();
      expect(Tok::RParen, "expected ')'");
      return inner;
    }
    if (t.kind == Tok::Int) {
      std::size_t kpos = t.pos;
      unsigned long long k = 0;
      for (char c : t.text) {
        k = k * 10 + static_cast<unsigned long long>(c - '0');
        if (k > 1'000'000) throw ThresholdError("threshold out of range");
      }
      lex.advance();
      if (!lex.is_keyword("of")) throw ParseError("expected 'of' after threshold", lex.cur.pos);
      lex.advance();
      expect(Tok::LParen, "expected '(' after 'of'");
      PolicyNode gate;
      gate.children.push_back(parse_or());
      while (lex.cur.kind == Tok::Comma) {
        lex.advance();
        gate.children.push_back(parse_or());
      }
      expect(Tok::RParen, "expected ')' in threshold gate");
      if (gate.children.size() < 2)
        throw ParseError("threshold gate needs at least two branches", kpos);
      if (k < 1 || k > gate.children.size())
        throw ThresholdError("threshold out of range for gate arity");
      gate.threshold = static_cast<int>(k);
      return gate;
    }
    if (t.kind == Tok::Word) {
      if (t.text == "and" || t.text == "or" || t.text == "of")
        throw ParseError("keyword where attribute expected", t.pos);
      PolicyNode leaf;
      leaf.attribute = normalize_attribute(t.text);
      lex.advance();
      return leaf;
    }
    throw ParseError("expected attribute, threshold, or '('", t.pos);
  }

  void expect(Tok kind, const char* msg) {
    if (lex.cur.kind != kind) throw ParseError(msg, lex.cur.pos);
    lex.advance();
  }
};

void format_node(const PolicyNode& n, std::string& out) {
  if (n.is_leaf()) {
    out += n.attribute;
    return;
  }
  std::size_t num = n.children.size();
  if (n.threshold == 1 || n.threshold == static_cast<int>(num)) {
    const char* word = (n.threshold == 1) ? " or " : " and ";
    out += '(';
    for (std::size_t i = 0; i < num; ++i) {
      if (i) out += word;
      format_node(n.children[i], out);
    }
    out += ')';
    return;
  }
  out += std::to_string(n.threshold);
  out += " of (";
  for (std::size_t i = 0; i < num; ++i) {
    if (i) out += ", ";
    format_node(n.children[i], out);
  }
  out += ')';
}

void validate_node(const PolicyNode& n) {
  if (n.is_leaf()) {
    if (!is_normalized_attribute(n.attribute))
      throw InvalidComponent("leaf attribute not normalized");
    return;
  }
  if (!n.attribute.empty())
    throw InvalidComponent("internal node carries an attribute");
  if (n.children.size() < 2)
    throw InvalidComponent("gate with fewer than two children");
  if (n.threshold < 1 || n.threshold > static_cast<int>(n.children.size()))
    throw InvalidComponent("gate threshold out of range");
  for (const PolicyNode& c : n.children) validate_node(c);
}

void share_node(const ScalarField& field, const PolicyNode& n, const Scalar& secret,
                Rng& rng, int& next_leaf, LeafShareAssignment& out) {
  if (n.is_leaf()) {
    out.emplace(next_leaf++, secret);
    return;
  }
  if (n.threshold == 1) {
    // Degree-0 polynomial: every child inherits the secret unchanged.
    for (const PolicyNode& c : n.children)
      share_node(field, c, secret, rng, next_leaf, out);
    return;
  }
  Polynomial q = random_polynomial(field, n.threshold - 1, rng, secret);
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    Scalar idx = field.make(static_cast<long>(i + 1));
    share_node(field, n.children[i], eval_poly(field, q, idx), rng, next_leaf, out);
  }
}

constexpr int kUnsat = std::numeric_limits<int>::max();

struct DpResult {
  int cost = kUnsat;
  SelectionNode plan;
};

DpResult select_node(const ScalarField& field, const PolicyNode& n,
                     const std::set<std::string>& attrs,
                     const std::function<bool(int)>& usable, int& next_leaf) {
  DpResult r;
  if (n.is_leaf()) {
    int id = next_leaf++;
    if (attrs.count(n.attribute) && (!usable || usable(id))) {
      r.cost = 1;
      r.plan.leaf_id = id;
    }
    return r;
  }
  std::vector<DpResult> child_results;
  child_results.reserve(n.children.size());
  for (const PolicyNode& c : n.children)
    child_results.push_back(select_node(field, c, attrs, usable, next_leaf));

  std::vector<int> order;  // satisfiable child positions, cheapest first
  for (int i = 0; i < static_cast<int>(child_results.size()); ++i)
    if (child_results[i].cost != kUnsat) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return child_results[a].cost < child_results[b].cost;
  });
  if (static_cast<int>(order.size()) < n.threshold) return r;

  order.resize(n.threshold);
  std::sort(order.begin(), order.end());
  std::vector<Scalar> xs;
  xs.reserve(order.size());
  for (int i : order) xs.push_back(field.make(static_cast<long>(i + 1)));
  std::vector<Scalar> lambda = lagrange_at(field, xs, field.zero());

  r.cost = 0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    r.cost += child_results[order[j]].cost;
    r.plan.children.emplace_back(lambda[j], std::move(child_results[order[j]].plan));
  }
  return r;
}

void collect_leaves(const SelectionNode& n, std::vector<int>& out) {
  if (n.leaf_id >= 0) {
    out.push_back(n.leaf_id);
    return;
  }
  for (const auto& [coeff, child] : n.children) collect_leaves(child, out);
}

void leaves_node(const PolicyNode& n, int& next_leaf, std::vector<LeafInfo>& out) {
  if (n.is_leaf()) {
    out.push_back({next_leaf++, n.attribute});
    return;
  }
  for (const PolicyNode& c : n.children) leaves_node(c, next_leaf, out);
}

}  // namespace

int AccessTree::leaf_count() const { return count_leaves(root); }
int AccessTree::internal_count() const {
  return root.is_leaf() ? 0 : count_internal(root);
}

AccessTree parse_policy(std::string_view text) {
  Parser p(text);
  return AccessTree{p.parse()};
}

std::string format_policy(const AccessTree& tree) {
  std::string out;
  format_node(tree.root, out);
  return out;
}

void validate_tree(const AccessTree& tree) { validate_node(tree.root); }

std::vector<LeafInfo> tree_leaves(const AccessTree& tree) {
  std::vector<LeafInfo> out;
  int next = 0;
  leaves_node(tree.root, next, out);
  return out;
}

LeafShareAssignment share_over_tree(const ScalarField& field,
                                    const AccessTree& tree, const Scalar& s,
                                    Rng& rng) {
  LeafShareAssignment out;
  int next = 0;
  share_node(field, tree.root, s, rng, next, out);
  return out;
}

std::optional<SatisfyingSelection> select_satisfying_leaves(
    const ScalarField& field, const AccessTree& tree,
    const std::set<std::string>& attrs) {
  return select_satisfying_leaves(field, tree, attrs, nullptr);
}

std::optional<SatisfyingSelection> select_satisfying_leaves(
    const ScalarField& field, const AccessTree& tree,
    const std::set<std::string>& attrs,
    const std::function<bool(int)>& leaf_usable) {
  int next = 0;
  DpResult r = select_node(field, tree.root, attrs, leaf_usable, next);
  if (r.cost == kUnsat) return std::nullopt;
  SatisfyingSelection sel;
  sel.plan = std::move(r.plan);
  collect_leaves(sel.plan, sel.leaves);
  std::sort(sel.leaves.begin(), sel.leaves.end());
  return sel;
}

namespace {

GTElement fold_plan(const SelectionNode& n,
                    const std::map<int, GTElement>& leaf_values) {
  if (n.leaf_id >= 0) {
    auto it = leaf_values.find(n.leaf_id);
    if (it == leaf_values.end())
      throw std::logic_error("selection leaf missing from leaf_values");
    return it->second;
  }
  GTElement acc;
  bool first = true;
  for (const auto& [coeff, child] : n.children) {
    GTElement term = fold_plan(child, leaf_values).pow(coeff);
    acc = first ? term : acc.mul(term);
    first = false;
  }
  return acc;
}

}  // namespace

GTElement combine_leaf_values(const SatisfyingSelection& selection,
                              const std::map<int, GTElement>& leaf_values) {
  return fold_plan(selection.plan, leaf_values);
}

}  // namespace piratte
