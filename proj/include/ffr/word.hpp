// Generators and words of the free monoid X*.
//
// Words are interned in a global prefix tree, so a Word is a small value
// (one node id) with O(1) equality and hashing.  Letters, prefix tests and
// residuals are recovered by walking parent links.

#ifndef FFR_WORD_HPP_
#define FFR_WORD_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffr {

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator is a nonempty lowercase identifier matching [a-z][a-z0-9_]*,
// excluding the reserved tokens "1" and "m".
class Generator {
 public:
  explicit Generator(std::string const& name);

  std::string const& name() const;
  std::int32_t id() const { return id_; }

  friend bool operator==(Generator a, Generator b) { return a.id_ == b.id_; }
  friend bool operator!=(Generator a, Generator b) { return a.id_ != b.id_; }
  // Lexicographic on names.
  friend bool operator<(Generator a, Generator b);

  static bool valid_name(std::string const& name);

 private:
  friend class Word;
  explicit Generator(std::int32_t id) : id_(id) {}
  std::int32_t id_;
};

class Word {
 public:
  // The empty word.
  Word() : node_(0) {}

  static Word of(Generator g) { return Word().append(g); }
  static Word of(std::vector<Generator> const& letters);

  bool empty() const { return node_ == 0; }
  std::size_t length() const;
  std::vector<Generator> letters() const;
  Generator last() const;  // throws on the empty word

  Word append(Generator g) const;
  Word concat(Word rhs) const;

  bool is_prefix_of(Word v) const;
  // The word w with *this . w == v, if *this is a prefix of v.
  std::optional<Word> residual_in(Word v) const;

  // Letters joined without separators; "" for the empty word.
  std::string str() const;

  friend bool operator==(Word a, Word b) { return a.node_ == b.node_; }
  friend bool operator!=(Word a, Word b) { return a.node_ != b.node_; }
  // Shortlex order, for deterministic serialization.
  friend bool operator<(Word a, Word b);

  std::int32_t node() const { return node_; }

 private:
  explicit Word(std::int32_t node) : node_(node) {}
  std::int32_t node_;
};

// residual(u, v) = w with v == u.w; throws WordError if u is not a prefix.
Word residual(Word u, Word v);

}  // namespace ffr

template <>
struct std::hash<ffr::Word> {
  std::size_t operator()(ffr::Word w) const noexcept {
    return std::hash<std::int32_t>{}(w.node());
  }
};

template <>
struct std::hash<ffr::Generator> {
  std::size_t operator()(ffr::Generator g) const noexcept {
    return std::hash<std::int32_t>{}(g.id());
  }
};

#endif  // FFR_WORD_HPP_
