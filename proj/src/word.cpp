#include "ffr/word.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace ffr {

namespace {

// Global interner for generator names and for words (as a prefix tree).
// Node 0 is the empty word.
class Pool {
 public:
  static Pool& instance() {
    static Pool pool;
    return pool;
  }

  std::int32_t intern_generator(std::string const& name) {
    {
      std::shared_lock lock(mutex_);
      auto it = gen_ids_.find(name);
      if (it != gen_ids_.end()) {
        return it->second;
      }
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] =
        gen_ids_.emplace(name, static_cast<std::int32_t>(gen_names_.size()));
    if (inserted) {
      gen_names_.push_back(name);
    }
    return it->second;
  }

  std::string const& generator_name(std::int32_t id) const {
    std::shared_lock lock(mutex_);
    return gen_names_[static_cast<std::size_t>(id)];
  }

  std::int32_t child(std::int32_t node, std::int32_t gen) {
    std::uint64_t key = (static_cast<std::uint64_t>(node) << 32) |
                        static_cast<std::uint32_t>(gen);
    {
      std::shared_lock lock(mutex_);
      auto it = children_.find(key);
      if (it != children_.end()) {
        return it->second;
      }
    }
    std::unique_lock lock(mutex_);
    auto it = children_.find(key);
    if (it != children_.end()) {
      return it->second;
    }
    std::int32_t id = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({node, gen, nodes_[static_cast<std::size_t>(node)].depth + 1});
    children_.emplace(key, id);
    return id;
  }

  struct Node {
    std::int32_t parent;
    std::int32_t gen;
    std::int32_t depth;
  };

  Node node(std::int32_t id) const {
    std::shared_lock lock(mutex_);
    return nodes_[static_cast<std::size_t>(id)];
  }

  std::int32_t depth(std::int32_t id) const {
    std::shared_lock lock(mutex_);
    return nodes_[static_cast<std::size_t>(id)].depth;
  }

 private:
  Pool() { nodes_.push_back({-1, -1, 0}); }

  mutable std::shared_mutex mutex_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, std::int32_t> children_;
  std::vector<std::string> gen_names_;
  std::unordered_map<std::string, std::int32_t> gen_ids_;
};

}  // namespace

bool Generator::valid_name(std::string const& name) {
  if (name.empty() || name == "m") {
    return false;
  }
  if (name.front() < 'a' || name.front() > 'z') {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Generator::Generator(std::string const& name) {
  if (!valid_name(name)) {
    throw WordError("invalid generator name: '" + name + "'");
  }
  id_ = Pool::instance().intern_generator(name);
}

std::string const& Generator::name() const {
  return Pool::instance().generator_name(id_);
}

bool operator<(Generator a, Generator b) {
  return a.id_ != b.id_ && a.name() < b.name();
}

Word Word::of(std::vector<Generator> const& letters) {
  Word w;
  for (Generator g : letters) {
    w = w.append(g);
  }
  return w;
}

std::size_t Word::length() const {
  return static_cast<std::size_t>(Pool::instance().depth(node_));
}

std::vector<Generator> Word::letters() const {
  auto& pool = Pool::instance();
  std::vector<Generator> out(length(), Generator(std::int32_t{0}));
  std::int32_t n = node_;
  for (std::size_t i = out.size(); i-- > 0;) {
    auto nd = pool.node(n);
    out[i] = Generator(nd.gen);
    n = nd.parent;
  }
  return out;
}

Generator Word::last() const {
  if (empty()) {
    throw WordError("empty word has no last letter");
  }
  return Generator(Pool::instance().node(node_).gen);
}

Word Word::append(Generator g) const {
  return Word(Pool::instance().child(node_, g.id()));
}

Word Word::concat(Word rhs) const {
  Word w = *this;
  for (Generator g : rhs.letters()) {
    w = w.append(g);
  }
  return w;
}

bool Word::is_prefix_of(Word v) const {
  auto& pool = Pool::instance();
  std::int32_t du = pool.depth(node_);
  std::int32_t dv = pool.depth(v.node_);
  if (du > dv) {
    return false;
  }
  std::int32_t n = v.node_;
  for (std::int32_t i = dv; i > du; --i) {
    n = pool.node(n).parent;
  }
  return n == node_;
}

std::optional<Word> Word::residual_in(Word v) const {
  auto& pool = Pool::instance();
  std::int32_t du = pool.depth(node_);
  std::int32_t dv = pool.depth(v.node_);
  if (du > dv) {
    return std::nullopt;
  }
  std::vector<std::int32_t> gens(static_cast<std::size_t>(dv - du));
  std::int32_t n = v.node_;
  for (std::size_t i = gens.size(); i-- > 0;) {
    auto nd = pool.node(n);
    gens[i] = nd.gen;
    n = nd.parent;
  }
  if (n != node_) {
    return std::nullopt;
  }
  Word w;
  for (std::int32_t g : gens) {
    w = w.append(Generator(g));
  }
  return w;
}

std::string Word::str() const {
  std::string out;
  for (Generator g : letters()) {
    out += g.name();
  }
  return out;
}

bool operator<(Word a, Word b) {
  if (a == b) {
    return false;
  }
  std::size_t la = a.length();
  std::size_t lb = b.length();
  if (la != lb) {
    return la < lb;
  }
  auto xs = a.letters();
  auto ys = b.letters();
  for (std::size_t i = 0; i < la; ++i) {
    if (xs[i] != ys[i]) {
      return xs[i] < ys[i];
    }
  }
  return false;
}

Word residual(Word u, Word v) {
  auto r = u.residual_in(v);
  if (!r) {
    throw WordError("'" + u.str() + "' is not a prefix of '" + v.str() + "'");
  }
  return *r;
}

}  // namespace ffr
