#include "braidlogic/term.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace braidlogic {

struct Term::Node {
  TermKind kind;
  std::shared_ptr<const Node> a;  // left child / shift inner
  std::shared_ptr<const Node> b;  // right child

  Node(TermKind k, std::shared_ptr<const Node> left,
       std::shared_ptr<const Node> right)
      : kind(k), a(std::move(left)), b(std::move(right)) {}

  // Unwinds exclusively-owned chains iteratively so deep towers do not
  // overflow the stack on destruction.
  ~Node() {
    std::vector<std::shared_ptr<const Node>> pending;
    if (a) pending.push_back(std::move(a));
    if (b) pending.push_back(std::move(b));
    while (!pending.empty()) {
      std::shared_ptr<const Node> n = std::move(pending.back());
      pending.pop_back();
      if (n.use_count() == 1) {
        Node* m = const_cast<Node*>(n.get());
        if (m->a) pending.push_back(std::move(m->a));
        if (m->b) pending.push_back(std::move(m->b));
      }
    }
  }
};

namespace {

const std::shared_ptr<const Term::Node>& leaf_node(TermKind kind) {
  static const auto one = std::make_shared<const Term::Node>(
      TermKind::One, nullptr, nullptr);
  static const auto sigma = std::make_shared<const Term::Node>(
      TermKind::Sigma, nullptr, nullptr);
  static const auto sigma_bar = std::make_shared<const Term::Node>(
      TermKind::SigmaBar, nullptr, nullptr);
  switch (kind) {
    case TermKind::One: return one;
    case TermKind::Sigma: return sigma;
    default: return sigma_bar;
  }
}

}  // namespace

Term Term::one() { return Term(leaf_node(TermKind::One)); }
Term Term::sigma() { return Term(leaf_node(TermKind::Sigma)); }
Term Term::sigma_bar() { return Term(leaf_node(TermKind::SigmaBar)); }

Term Term::prod(Term left, Term right) {
  return Term(std::make_shared<const Node>(TermKind::Prod,
                                           std::move(left.node_),
                                           std::move(right.node_)));
}

Term Term::shift(Term inner) {
  return Term(std::make_shared<const Node>(TermKind::Shift,
                                           std::move(inner.node_), nullptr));
}

Term Term::shift_many(Term inner, std::size_t k) {
  Term t = std::move(inner);
  for (std::size_t i = 0; i < k; ++i) t = shift(std::move(t));
  return t;
}

TermKind Term::kind() const noexcept { return node_->kind; }

Term Term::left() const {
  if (node_->kind != TermKind::Prod) throw InternalError("left() on non-Prod");
  return Term(node_->a);
}

Term Term::right() const {
  if (node_->kind != TermKind::Prod) throw InternalError("right() on non-Prod");
  return Term(node_->b);
}

Term Term::inner() const {
  if (node_->kind != TermKind::Shift) throw InternalError("inner() on non-Shift");
  return Term(node_->a);
}

bool Term::operator==(const Term& other) const noexcept {
  std::vector<std::pair<const Node*, const Node*>> stack{
      {node_.get(), other.node_.get()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
      case TermKind::Prod:
        stack.emplace_back(x->a.get(), y->a.get());
        stack.emplace_back(x->b.get(), y->b.get());
        break;
      case TermKind::Shift:
        stack.emplace_back(x->a.get(), y->a.get());
        break;
      default:
        break;
    }
  }
  return true;
}

std::size_t Term::size() const noexcept {
  std::size_t n = 0;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* x = stack.back();
    stack.pop_back();
    ++n;
    if (x->a) stack.push_back(x->a.get());
    if (x->b) stack.push_back(x->b.get());
  }
  return n;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : text_(text), options_(options) {}

  Term run() {
    frames_.push_back(Frame{});  // top-level pseudo-frame
    for (;;) {
      parse_factor_prefixes();
      Term factor = parse_atom_or_open();
      if (!factor_done_) continue;  // a frame was opened; factor still pending
      attach(std::move(factor));
      if (!after_factor()) break;
    }
    Frame& top = frames_.back();
    if (!top.value) throw SyntaxError("empty input", skip_ws(0));
    return *top.value;
  }

 private:
  enum class FrameKind { Top, Paren, ShiftGroup };

  struct Frame {
    FrameKind kind = FrameKind::Top;
    std::size_t shifts = 0;      // ShiftGroup: number of T wrappers
    std::size_t open_offset = 0;
    std::optional<Term> value;   // left-associated product so far
  };

  std::size_t skip_ws(std::size_t p) const {
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) {
      ++p;
    }
    return p;
  }

  bool at_end() {
    pos_ = skip_ws(pos_);
    return pos_ >= text_.size();
  }

  char peek() {
    pos_ = skip_ws(pos_);
    return text_[pos_];
  }

  std::size_t parse_nat() {
    pos_ = skip_ws(pos_);
    std::size_t start = pos_;
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw SyntaxError("expected a number", pos_);
    }
    if (text_[pos_] == '0') {
      throw SyntaxError("expected a nonzero number", pos_);
    }
    std::size_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > options_.max_exponent) {
        throw OverflowError("numeric literal exceeds the configured maximum " +
                            std::to_string(options_.max_exponent) +
                            " (at byte " + std::to_string(start) + ")");
      }
      ++pos_;
    }
    return value;
  }

  // Consumes any number of `T[^k](` and `(` openers; each pushes a frame.
  void parse_factor_prefixes() {
    for (;;) {
      if (at_end()) throw SyntaxError("unexpected end of input", pos_);
      char c = peek();
      if (c == '(') {
        frames_.push_back(Frame{FrameKind::Paren, 0, pos_, std::nullopt});
        ++pos_;
      } else if (c == 'T') {
        std::size_t open = pos_;
        ++pos_;
        std::size_t k = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          k = parse_nat();
        }
        if (at_end() || peek() != '(') {
          throw SyntaxError("expected '(' after T", pos_);
        }
        ++pos_;
        frames_.push_back(Frame{FrameKind::ShiftGroup, k, open, std::nullopt});
      } else {
        return;
      }
    }
  }

  // Parses a leaf atom. Sets factor_done_ = true on success.
  Term parse_atom_or_open() {
    factor_done_ = true;
    if (at_end()) throw SyntaxError("unexpected end of input", pos_);
    char c = peek();
    if (c == '1') {
      ++pos_;
      return Term::one();
    }
    if (c == 's' || c == 'S') {
      bool bar = (c == 'S');
      ++pos_;
      std::size_t k = 0;
      if (!at_end() && peek() == '_') {
        ++pos_;
        k = parse_nat() - 1;  // s_i = T^{i-1}(s)
      }
      Term leaf = bar ? Term::sigma_bar() : Term::sigma();
      return Term::shift_many(std::move(leaf), k);
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  void attach(Term factor) {
    Frame& top = frames_.back();
    if (top.value) {
      top.value = Term::prod(std::move(*top.value), std::move(factor));
    } else {
      top.value = std::move(factor);
    }
  }

  // Handles what follows a completed factor. Returns false when the whole
  // input has been consumed.
  bool after_factor() {
    for (;;) {
      if (at_end()) {
        if (frames_.size() > 1) {
          throw SyntaxError("unclosed '('", frames_.back().open_offset);
        }
        return false;
      }
      char c = peek();
      if (c == '*') {
        ++pos_;
        return true;  // next factor expected
      }
      if (c == ')') {
        if (frames_.size() == 1) {
          throw SyntaxError("unmatched ')'", pos_);
        }
        ++pos_;
        Frame closed = std::move(frames_.back());
        frames_.pop_back();
        Term value = Term::shift_many(std::move(*closed.value), closed.shifts);
        attach(std::move(value));
        continue;
      }
      throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
  bool factor_done_ = false;
  std::vector<Frame> frames_;
};

}  // namespace

Term parse_term(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).run();
}

std::string render_term(const Term& t) {
  std::string out;
  // Work items are either a term to expand or a literal piece of text.
  struct Item {
    std::optional<Term> term;
    const char* text;
  };
  std::vector<Item> stack;
  stack.push_back({t, nullptr});
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    if (!item.term) {
      out += item.text;
      continue;
    }
    const Term& x = *item.term;
    switch (x.kind()) {
      case TermKind::One: out += '1'; break;
      case TermKind::Sigma: out += 's'; break;
      case TermKind::SigmaBar: out += 'S'; break;
      case TermKind::Shift:
        out += "T(";
        stack.push_back({std::nullopt, ")"});
        stack.push_back({x.inner(), nullptr});
        break;
      case TermKind::Prod:
        out += '(';
        stack.push_back({std::nullopt, ")"});
        stack.push_back({x.right(), nullptr});
        stack.push_back({std::nullopt, " * "});
        stack.push_back({x.left(), nullptr});
        break;
    }
  }
  return out;
}

Term term_inverse(const Term& t) {
  // Iterative post-order rewrite; children results are collected on a stack.
  struct WorkItem {
    Term term;
    bool expanded;
  };
  std::vector<WorkItem> work{{t, false}};
  std::vector<Term> results;
  while (!work.empty()) {
    WorkItem item = std::move(work.back());
    work.pop_back();
    const Term& x = item.term;
    if (!item.expanded) {
      switch (x.kind()) {
        case TermKind::One: results.push_back(Term::one()); break;
        case TermKind::Sigma: results.push_back(Term::sigma_bar()); break;
        case TermKind::SigmaBar: results.push_back(Term::sigma()); break;
        case TermKind::Shift:
          work.push_back({x, true});
          work.push_back({x.inner(), false});
          break;
        case TermKind::Prod:
          work.push_back({x, true});
          work.push_back({x.right(), false});
          work.push_back({x.left(), false});
          break;
      }
      continue;
    }
    if (x.kind() == TermKind::Shift) {
      Term inner = std::move(results.back());
      results.pop_back();
      results.push_back(Term::shift(std::move(inner)));
    } else {
      // Prod: children were pushed left-then-right, so results hold
      // [inv(left), inv(right)]; the inverse swaps them.
      Term right_inv = std::move(results.back());
      results.pop_back();
      Term left_inv = std::move(results.back());
      results.pop_back();
      results.push_back(Term::prod(std::move(right_inv), std::move(left_inv)));
    }
  }
  return results.back();
}

}  // namespace braidlogic
