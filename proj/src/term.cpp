#include "ffr/term.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ffr {

namespace {
Generator placeholder() { return Generator("x"); }
}  // namespace

TermPtr Term::gen(Generator g) {
  return TermPtr(new Term(TermKind::gen, g, nullptr, nullptr));
}

TermPtr Term::lambda() {
  return TermPtr(new Term(TermKind::lambda, placeholder(), nullptr, nullptr));
}

TermPtr Term::prod(TermPtr left, TermPtr right) {
  return TermPtr(new Term(TermKind::prod, placeholder(), std::move(left),
                          std::move(right)));
}

TermPtr Term::plus(TermPtr arg) {
  return TermPtr(new Term(TermKind::plus, placeholder(), std::move(arg), nullptr));
}

TermPtr Term::max(TermPtr arg) {
  return TermPtr(new Term(TermKind::max, placeholder(), std::move(arg), nullptr));
}

Generator Term::generator() const { return gen_; }
TermPtr const& Term::left() const { return left_; }
TermPtr const& Term::right() const { return right_; }
TermPtr const& Term::arg() const { return left_; }

bool equal(TermPtr const& a, TermPtr const& b) {
  if (a.get() == b.get()) {
    return true;
  }
  if (a->kind() != b->kind()) {
    return false;
  }
  switch (a->kind()) {
    case TermKind::gen:
      return a->generator() == b->generator();
    case TermKind::lambda:
      return true;
    case TermKind::prod:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
    case TermKind::plus:
    case TermKind::max:
      return equal(a->arg(), b->arg());
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string const& text) : text_(text) {}

  TermPtr run() {
    TermPtr t = term();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return t;
  }

 private:
  TermPtr term() {
    TermPtr t = factor();
    while (true) {
      skip_space();
      if (!eat('*')) {
        return t;
      }
      t = Term::prod(t, factor());
    }
  }

  TermPtr factor() {
    TermPtr t = atom();
    while (true) {
      skip_space();
      if (pos_ + 1 < text_.size() && text_[pos_] == '^' &&
          text_[pos_ + 1] == '+') {
        pos_ += 2;
        t = Term::plus(t);
      } else if (text_.compare(pos_, 1, "^") == 0) {
        throw ParseError("expected '^+'", pos_);
      } else {
        return t;
      }
    }
  }

  TermPtr atom() {
    skip_space();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of input", pos_);
    }
    char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return Term::lambda();
    }
    if (c == '(') {
      ++pos_;
      TermPtr t = term();
      expect(')');
      return t;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      std::string name = ident();
      if (name == "m") {
        expect('(');
        TermPtr t = term();
        expect(')');
        return Term::max(t);
      }
      if (!Generator::valid_name(name)) {
        throw ParseError("invalid generator '" + name + "'", start);
      }
      return Term::gen(Generator(name));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_space();
    if (!eat(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  std::string const& text_;
  std::size_t pos_ = 0;
};

std::string render_term(TermPtr const& t);

std::string render_atom(TermPtr const& t) {
  switch (t->kind()) {
    case TermKind::gen:
      return t->generator().name();
    case TermKind::lambda:
      return "1";
    case TermKind::max:
      return "m(" + render_term(t->arg()) + ")";
    default:
      return "(" + render_term(t) + ")";
  }
}

std::string render_factor(TermPtr const& t) {
  if (t->kind() == TermKind::plus) {
    return render_factor(t->arg()) + "^+";
  }
  return render_atom(t);
}

std::string render_term(TermPtr const& t) {
  if (t->kind() == TermKind::prod) {
    return render_term(t->left()) + "*" + render_factor(t->right());
  }
  return render_factor(t);
}

}  // namespace

TermPtr parse(std::string const& text) { return Parser(text).run(); }

std::string render(TermPtr const& t) { return render_term(t); }

std::size_t complexity(TermPtr const& t) {
  switch (t->kind()) {
    case TermKind::gen:
    case TermKind::lambda:
      return 1;
    case TermKind::prod:
      return complexity(t->left()) + complexity(t->right()) + 1;
    case TermKind::plus:
    case TermKind::max:
      return complexity(t->arg()) + 1;
  }
  return 0;
}

Word sigma_value(TermPtr const& t) {
  switch (t->kind()) {
    case TermKind::gen:
      return Word::of(t->generator());
    case TermKind::lambda:
    case TermKind::plus:
      return Word();
    case TermKind::prod:
      return sigma_value(t->left()).concat(sigma_value(t->right()));
    case TermKind::max:
      return sigma_value(t->arg());
  }
  return Word();
}

std::vector<TermPtr> enumerate_terms(std::vector<Generator> const& alphabet,
                                     std::size_t max_complexity) {
  if (alphabet.empty()) {
    throw std::invalid_argument("enumerate_terms: empty alphabet");
  }
  if (max_complexity == 0 || max_complexity > kEnumerationCap) {
    throw std::invalid_argument("enumerate_terms: max_complexity exceeds cap");
  }

  // layers[c] holds all terms of complexity exactly c, sorted by rendering.
  std::vector<std::vector<TermPtr>> layers(max_complexity + 1);
  {
    std::map<std::string, TermPtr> base;
    for (Generator g : alphabet) {
      TermPtr t = Term::gen(g);
      base.emplace(render(t), t);
    }
    base.emplace("1", Term::lambda());
    for (auto& [key, t] : base) {
      layers[1].push_back(t);
    }
  }
  for (std::size_t c = 2; c <= max_complexity; ++c) {
    std::map<std::string, TermPtr> layer;
    for (TermPtr const& t : layers[c - 1]) {
      TermPtr p = Term::plus(t);
      TermPtr m = Term::max(t);
      layer.emplace(render(p), p);
      layer.emplace(render(m), m);
    }
    for (std::size_t i = 1; i + 1 < c; ++i) {
      for (TermPtr const& l : layers[i]) {
        for (TermPtr const& r : layers[c - 1 - i]) {
          TermPtr p = Term::prod(l, r);
          layer.emplace(render(p), p);
        }
      }
    }
    for (auto& [key, t] : layer) {
      layers[c].push_back(t);
    }
  }

  std::vector<TermPtr> out;
  for (auto const& layer : layers) {
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace ffr
