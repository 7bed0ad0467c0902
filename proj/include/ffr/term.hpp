// Terms of the signature (. , ^+, m, 1) over a generator alphabet, with a
// recursive-descent parser, a minimal-parentheses printer, the complexity
// measure and the value in the free monoid X*.
//
// Grammar:
//   term    := factor { "*" factor }
//   factor  := atom { "^+" }
//   atom    := ident | "1" | "m" "(" term ")" | "(" term ")"
//   ident   := [a-z][a-z0-9_]* excluding "m"

#ifndef FFR_TERM_HPP_
#define FFR_TERM_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ffr/word.hpp"

namespace ffr {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class TermKind { gen, lambda, prod, plus, max };

class Term;
using TermPtr = std::shared_ptr<Term const>;

class Term {
 public:
  static TermPtr gen(Generator g);
  static TermPtr gen(std::string const& name) { return gen(Generator(name)); }
  static TermPtr lambda();
  static TermPtr prod(TermPtr left, TermPtr right);
  static TermPtr plus(TermPtr arg);
  static TermPtr max(TermPtr arg);

  TermKind kind() const { return kind_; }
  Generator generator() const;     // kind == gen
  TermPtr const& left() const;     // kind == prod
  TermPtr const& right() const;    // kind == prod
  TermPtr const& arg() const;      // kind == plus or max

 private:
  Term(TermKind kind, Generator g, TermPtr left, TermPtr right)
      : kind_(kind), gen_(g), left_(std::move(left)), right_(std::move(right)) {}

  TermKind kind_;
  Generator gen_;
  TermPtr left_;
  TermPtr right_;
};

bool equal(TermPtr const& a, TermPtr const& b);

TermPtr parse(std::string const& text);
std::string render(TermPtr const& t);

// c(x) = c(1) = 1, c(u.v) = c(u)+c(v)+1, c(u^+) = c(m(u)) = c(u)+1.
std::size_t complexity(TermPtr const& t);

// Image under the canonical morphism to X*: generators map to themselves,
// 1 to the empty word, products concatenate, u^+ to the empty word and
// m(u) to the value of u.
Word sigma_value(TermPtr const& t);

// All terms over the alphabet with complexity <= max_complexity, ordered by
// complexity then lexicographically on the rendered form.  Throws
// std::invalid_argument when max_complexity exceeds the cap or the alphabet
// is empty.
std::vector<TermPtr> enumerate_terms(std::vector<Generator> const& alphabet,
                                     std::size_t max_complexity);

inline constexpr std::size_t kEnumerationCap = 9;

}  // namespace ffr

#endif  // FFR_TERM_HPP_
