#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "braidlogic/errors.hpp"

namespace braidlogic {

enum class TermKind { One, Sigma, SigmaBar, Prod, Shift };

/// Closed term over the signature (., T, 1, sigma, sigma-bar).
///
/// Terms are immutable values; copies share structure. Deeply nested towers
/// (T^k for large k) are handled without recursion anywhere, including
/// destruction.
class Term {
 public:
  Term() : Term(one()) {}

  static Term one();
  static Term sigma();
  static Term sigma_bar();
  static Term prod(Term left, Term right);
  static Term shift(Term inner);
  /// k nested Shift applications.
  static Term shift_many(Term inner, std::size_t k);

  TermKind kind() const noexcept;
  Term left() const;   // Prod only
  Term right() const;  // Prod only
  Term inner() const;  // Shift only

  bool operator==(const Term& other) const noexcept;
  bool operator!=(const Term& other) const noexcept { return !(*this == other); }

  /// Node count.
  std::size_t size() const noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct ParseOptions {
  /// Largest accepted `nat` literal (T^k exponents and s_i subscripts).
  std::size_t max_exponent = 1'000'000;
};

/// Parse the concrete syntax: `1`, `s`, `S`, `*`, `T(..)`, with sugar
/// `T^k(..)` and `s_i` / `S_i`. Throws SyntaxError/OverflowError.
Term parse_term(std::string_view text, const ParseOptions& options = {});

/// Canonical rendering: fully parenthesized products, `T(...)` with no sugar.
std::string render_term(const Term& t);

/// Syntactic inverse: swaps sigma and sigma-bar, reverses products.
Term term_inverse(const Term& t);

}  // namespace braidlogic
