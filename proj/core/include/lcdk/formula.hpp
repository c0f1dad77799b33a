#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcdk/event_model.hpp"
#include "lcdk/reading.hpp"
#include "lcdk/term.hpp"

namespace lcdk {

// Modal formula AST. Conjunction, implication and biconditional are
// notation only and desugar on construction; Box is first-class and its
// evaluation matches the ~<t>~ desugaring (tested, not assumed).
// Dynamic operators keep a resolved reference to their reading map /
// event model, so rewriting needs no environment.
class Formula {
public:
  enum class Kind { Prop, Neg, Or, Diamond, Box, Bang, Event };

  static Formula prop(std::string name);
  static Formula neg(Formula f);
  static Formula disj(Formula a, Formula b);
  static Formula conj(Formula a, Formula b);      // ~(~a | ~b)
  static Formula implies(Formula a, Formula b);   // ~a | b
  static Formula iff(Formula a, Formula b);       // (a -> b) & (b -> a)
  static Formula diamond(Term t, Formula f);
  static Formula box(Term t, Formula f);
  static Formula bang(std::shared_ptr<const ReadingMap> beta, Formula f);
  static Formula event(std::shared_ptr<const EventModel> em, std::string event_id, Formula f);

  Kind kind() const noexcept;

  const std::string& prop_name() const;  // Prop
  Formula child() const;                 // Neg, Diamond, Box, Bang, Event
  Formula lhs() const;                   // Or
  Formula rhs() const;                   // Or
  const Term& term() const;              // Diamond, Box

  const ReadingMap& reading() const;                       // Bang
  std::shared_ptr<const ReadingMap> reading_ptr() const;   // Bang
  const EventModel& event_model() const;                   // Event
  std::shared_ptr<const EventModel> event_model_ptr() const;
  const std::string& event_id() const;                     // Event

  // Structural equality; dynamic operators compare by referenced name.
  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  std::size_t node_count() const;

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

// No dynamic operators anywhere in f.
bool is_static(const Formula& f);

// Left folds; fs must be nonempty.
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);

}  // namespace lcdk
