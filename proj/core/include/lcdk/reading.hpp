#pragma once

#include <map>
#include <string>
#include <vector>

#include "lcdk/term.hpp"

namespace lcdk {

// Assignment of a term to each atomic term: which knowledge base each
// agent reads during a semi-public reading event. Partial by design —
// atoms without an entry read themselves (identity).
class ReadingMap {
public:
  ReadingMap() = default;
  ReadingMap(std::string name, std::map<std::string, Term> assignment)
      : name_(std::move(name)), assignment_(std::move(assignment)) {}

  const std::string& name() const noexcept { return name_; }
  const std::map<std::string, Term>& assignment() const noexcept { return assignment_; }

  // Term read for `atom`; identity when unassigned.
  Term read(const std::string& atom) const {
    auto it = assignment_.find(atom);
    return it == assignment_.end() ? Term::atom(atom) : it->second;
  }

  // Homomorphic extension to arbitrary terms.
  Term extend(const Term& t) const { return map_atoms(t, assignment_); }

private:
  std::string name_;
  std::map<std::string, Term> assignment_;
};

// One warning per assigned atom x whose target is not below x. Such maps
// are legal (an agent may drop its own knowledge base); the warnings just
// surface them.
std::vector<std::string> lint_reading_map(const ReadingMap& m);

}  // namespace lcdk
