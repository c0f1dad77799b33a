#include "lcdk/semipublic.hpp"

#include <cassert>

#include "lcdk/errors.hpp"

namespace lcdk {

Model update_model(const Model& m, const ReadingMap& beta) {
  for (const auto& [atom, target] : beta.assignment()) {
    bool known = false;
    for (const auto& s : m.signature) known = known || s == atom;
    if (!known)
      throw SignatureError("reading map assigns atom '" + atom +
                           "' outside the model signature");
  }

  Model out = m;
  RelationCache cache;
  for (const auto& atom : m.signature) {
    Relation updated = relation_of(m, beta.read(atom), &cache);
    out.atomic.insert_or_assign(atom, std::move(updated));
  }
  assert(validate_model(out).ok());
  return out;
}

namespace {

// [!beta]psi for static psi, fully rewritten.
Formula push_bang(const ReadingMap& beta, const Formula& psi) {
  switch (psi.kind()) {
    case Formula::Kind::Prop:
      return psi;
    case Formula::Kind::Neg:
      return Formula::neg(push_bang(beta, psi.child()));
    case Formula::Kind::Or:
      return Formula::disj(push_bang(beta, psi.lhs()), push_bang(beta, psi.rhs()));
    case Formula::Kind::Diamond:
      return Formula::diamond(beta.extend(psi.term()), push_bang(beta, psi.child()));
    case Formula::Kind::Box:
      return Formula::box(beta.extend(psi.term()), push_bang(beta, psi.child()));
    case Formula::Kind::Bang:
    case Formula::Kind::Event:
      break;
  }
  throw Error("push_bang applied to a non-static formula");
}

}  // namespace

Formula reduce_bang(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return f;
    case Formula::Kind::Neg:
      return Formula::neg(reduce_bang(f.child()));
    case Formula::Kind::Or:
      return Formula::disj(reduce_bang(f.lhs()), reduce_bang(f.rhs()));
    case Formula::Kind::Diamond:
      return Formula::diamond(f.term(), reduce_bang(f.child()));
    case Formula::Kind::Box:
      return Formula::box(f.term(), reduce_bang(f.child()));
    case Formula::Kind::Bang:
      return push_bang(f.reading(), reduce_bang(f.child()));
    case Formula::Kind::Event:
      throw Error("reduce_bang cannot rewrite event operators; use reduce_event");
  }
  return f;
}

}  // namespace lcdk
