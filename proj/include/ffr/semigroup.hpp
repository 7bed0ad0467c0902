// Canonical elements of the three free objects and the operations on them:
// evaluation of terms, product, ^+, the sigma-class maximum, the natural
// partial order and the word-problem deciders.
//
// A canonical element is (variety, graph, point):
//   ffr    closed accessible graph under {T1,T2,T3}, point a vertex;
//   ffr_s  closed accessible graph under {T1,T2,T3,T4}, point a vertex;
//   ffr_p  plain-edge reduct (possibly empty, need not contain the origin),
//          point any word.

#ifndef FFR_SEMIGROUP_HPP_
#define FFR_SEMIGROUP_HPP_

#include <memory>

#include "ffr/closure.hpp"
#include "ffr/term.hpp"

namespace ffr {

// Terms in the signature (., ^+) over the alphabet X u barred-X* (for the
// plain and strong varieties) or (., ^+, lambda) over X u barred-X (for the
// perfect one).  Bar letters carry the underlying word.
enum class ExtKind { letter, identity, prod, plus };

class ExtTerm;
using ExtTermPtr = std::shared_ptr<ExtTerm const>;

class ExtTerm {
 public:
  static ExtTermPtr letter(EdgeLabel label);
  static ExtTermPtr identity();
  static ExtTermPtr prod(ExtTermPtr left, ExtTermPtr right);
  static ExtTermPtr plus(ExtTermPtr arg);

  ExtKind kind() const { return kind_; }
  EdgeLabel const& label() const { return label_; }
  ExtTermPtr const& left() const { return left_; }
  ExtTermPtr const& right() const { return right_; }
  ExtTermPtr const& arg() const { return left_; }

 private:
  ExtTerm(ExtKind kind, EdgeLabel label, ExtTermPtr left, ExtTermPtr right)
      : kind_(kind), label_(label), left_(std::move(left)), right_(std::move(right)) {}

  ExtKind kind_;
  EdgeLabel label_;
  ExtTermPtr left_;
  ExtTermPtr right_;
};

// Rewrites every m(v) subterm: to the bar letter of sigma_value(v) in the
// plain/strong case, and to the product of single-letter bars (or the
// identity) in the perfect case.  The constant 1 becomes the bar-lambda
// letter outside the perfect variety.
ExtTermPtr to_extended(TermPtr const& t, Variety variety);

// Value in the Gould expansion: letters via the generator graphs, products
// and ^+ via the expansion operations.  Throws on the identity term outside
// the perfect variety.
PointedGraph eval_raw(ExtTermPtr const& e, Variety variety);

struct Element {
  Variety variety;
  Graph graph;
  Word point;
};

bool operator==(Element const& a, Element const& b);
bool operator!=(Element const& a, Element const& b);

// Canonical form of a term's value.
Element eval(TermPtr const& t, Variety variety);

Element multiply(Element const& a, Element const& b);
Element plus(Element const& a);
// The maximum of a's sigma-class.
Element mx(Element const& a);
// The maximum projection (the left identity).
Element lambda_element(Variety variety);

// Point equality plus reverse graph inclusion.
bool natural_leq(Element const& a, Element const& b);
bool sigma_related(Element const& a, Element const& b);
bool is_projection(Element const& a);

// The word problem: eval(u) == eval(v).
bool decide(TermPtr const& u, TermPtr const& v, Variety variety);

// The reduced comparison for the strong variety: equal points, vertex sets,
// plain edges and bar-lambda loops of the canonical forms.  Agrees with
// decide(u, v, ffr_s).
bool decide_strong_fast(TermPtr const& u, TermPtr const& v);

}  // namespace ffr

#endif  // FFR_SEMIGROUP_HPP_
