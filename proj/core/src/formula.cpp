#include "lcdk/formula.hpp"

#include <cassert>
#include <ostream>

namespace lcdk {

struct Formula::Node {
  Kind kind;
  std::string name;  // Prop name
  std::optional<Term> term;
  std::shared_ptr<const ReadingMap> beta;
  std::shared_ptr<const EventModel> em;
  std::string event_id;
  std::shared_ptr<const Node> a, b;
};

Formula Formula::prop(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prop;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->a = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::disj(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->a = std::move(a.node_);
  n->b = std::move(b.node_);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  return neg(disj(neg(std::move(a)), neg(std::move(b))));
}

Formula Formula::implies(Formula a, Formula b) {
  return disj(neg(std::move(a)), std::move(b));
}

Formula Formula::iff(Formula a, Formula b) {
  Formula forward = implies(a, b);
  Formula backward = implies(std::move(b), std::move(a));
  return conj(std::move(forward), std::move(backward));
}

Formula Formula::diamond(Term t, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Diamond;
  n->term = std::move(t);
  n->a = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::box(Term t, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Box;
  n->term = std::move(t);
  n->a = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::bang(std::shared_ptr<const ReadingMap> beta, Formula f) {
  assert(beta);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bang;
  n->beta = std::move(beta);
  n->a = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::event(std::shared_ptr<const EventModel> em, std::string event_id, Formula f) {
  assert(em);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Event;
  n->em = std::move(em);
  n->event_id = std::move(event_id);
  n->a = std::move(f.node_);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::prop_name() const {
  assert(node_->kind == Kind::Prop);
  return node_->name;
}

Formula Formula::child() const {
  assert(node_->a);
  return Formula(node_->a);
}

Formula Formula::lhs() const {
  assert(node_->kind == Kind::Or);
  return Formula(node_->a);
}

Formula Formula::rhs() const {
  assert(node_->kind == Kind::Or);
  return Formula(node_->b);
}

const Term& Formula::term() const {
  assert(node_->term.has_value());
  return *node_->term;
}

const ReadingMap& Formula::reading() const {
  assert(node_->beta);
  return *node_->beta;
}

std::shared_ptr<const ReadingMap> Formula::reading_ptr() const { return node_->beta; }

const EventModel& Formula::event_model() const {
  assert(node_->em);
  return *node_->em;
}

std::shared_ptr<const EventModel> Formula::event_model_ptr() const { return node_->em; }

const std::string& Formula::event_id() const {
  assert(node_->kind == Kind::Event);
  return node_->event_id;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Prop:
      return node_->name == o.node_->name;
    case Kind::Neg:
      return child() == o.child();
    case Kind::Or:
      return lhs() == o.lhs() && rhs() == o.rhs();
    case Kind::Diamond:
    case Kind::Box:
      return term() == o.term() && child() == o.child();
    case Kind::Bang:
      return reading().name() == o.reading().name() && child() == o.child();
    case Kind::Event:
      return event_model().name == o.event_model().name && event_id() == o.event_id() &&
             child() == o.child();
  }
  return false;
}

std::size_t Formula::node_count() const {
  switch (kind()) {
    case Kind::Prop: return 1;
    case Kind::Or: return 1 + lhs().node_count() + rhs().node_count();
    default: return 1 + child().node_count();
  }
}

namespace {

// Or < prefix operators < atoms. Or folds to the left in the grammar.
enum { kPrecOr = 1, kPrecUnary = 2, kPrecAtom = 3 };

int formula_prec(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Or: return kPrecOr;
    case Formula::Kind::Prop: return kPrecAtom;
    default: return kPrecUnary;
  }
}

void render(const Formula& f, int min_prec, std::string& out) {
  bool wrap = formula_prec(f) < min_prec;
  if (wrap) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Prop:
      out += f.prop_name();
      break;
    case Formula::Kind::Neg:
      out += '~';
      render(f.child(), kPrecUnary, out);
      break;
    case Formula::Kind::Or:
      render(f.lhs(), kPrecOr, out);
      out += " | ";
      render(f.rhs(), kPrecOr + 1, out);
      break;
    case Formula::Kind::Diamond:
      out += '<';
      out += to_string(f.term());
      out += '>';
      render(f.child(), kPrecUnary, out);
      break;
    case Formula::Kind::Box:
      out += '[';
      out += to_string(f.term());
      out += ']';
      render(f.child(), kPrecUnary, out);
      break;
    case Formula::Kind::Bang:
      out += "[!";
      out += f.reading().name();
      out += ']';
      render(f.child(), kPrecUnary, out);
      break;
    case Formula::Kind::Event:
      out += '[';
      out += f.event_model().name;
      out += '.';
      out += f.event_id();
      out += ']';
      render(f.child(), kPrecUnary, out);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  render(f, kPrecOr, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

bool is_static(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop: return true;
    case Formula::Kind::Or: return is_static(f.lhs()) && is_static(f.rhs());
    case Formula::Kind::Bang:
    case Formula::Kind::Event: return false;
    default: return is_static(f.child());
  }
}

Formula conj_all(const std::vector<Formula>& fs) {
  assert(!fs.empty());
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conj(acc, fs[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  assert(!fs.empty());
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::disj(acc, fs[i]);
  return acc;
}

}  // namespace lcdk
