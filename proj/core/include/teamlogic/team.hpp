#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace teamlogic {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (formula grammar, team files).
class SyntaxError : public Error {
 public:
  using Error::Error;
};

/// Tuple length constraints of the dependency atoms violated, or an atom
/// argument is not purely propositional.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// A proposition is referenced outside the domain at hand, or two objects
/// with different domains were combined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A formula uses a connective or atom outside the permitted signature.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// A requested operation/mode combination is not provided.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds the fixed small-scale capacity limits.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Capacity limits
// ---------------------------------------------------------------------------

/// Teams are bitmasks over at most 2^5 = 32 assignments.
inline constexpr std::size_t kMaxTeamProps = 5;
/// Full denotations enumerate all 2^(2^4) = 65536 teams at most.
inline constexpr std::size_t kMaxDenotationProps = 4;
/// Split enumeration inside the single-team evaluator is limited to teams of
/// this many assignments (the same budget a 4-proposition full team needs).
inline constexpr std::size_t kMaxSplitTeamSize = 16;

// ---------------------------------------------------------------------------
// Domain
// ---------------------------------------------------------------------------

/// An ordered list of distinct proposition names.  The order is significant:
/// assignment index bit j holds the value of props()[j], and team file
/// bitstrings list values in domain order.
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<std::string> props);
  Domain(std::initializer_list<std::string> props);

  std::size_t size() const { return props_.size(); }
  bool empty() const { return props_.empty(); }
  const std::vector<std::string>& props() const { return props_; }
  const std::string& name(std::size_t j) const { return props_.at(j); }

  /// Index of a proposition, or -1 when absent.
  int index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name) >= 0; }
  /// True when every proposition of this domain occurs in `other`.
  bool subset_of(const Domain& other) const;

  /// Number of assignments, 2^size().  The empty domain has one assignment
  /// (the empty function), hence two teams.
  std::uint32_t assignment_count() const {
    return std::uint32_t{1} << props_.size();
  }
  /// Number of teams, 2^assignment_count().  Requires size() <= 5.
  std::uint64_t team_count() const {
    return std::uint64_t{1} << assignment_count();
  }

  /// Comma separated proposition list, e.g. "p,q".
  std::string to_string() const;

  bool operator==(const Domain& o) const { return props_ == o.props_; }
  bool operator!=(const Domain& o) const { return !(*this == o); }

  /// Union of two domains with the result sorted by name.
  static Domain sorted_union(const Domain& a, const Domain& b);

 private:
  std::vector<std::string> props_;
};

/// True when `name` matches [a-z][a-z0-9_]* and is not a reserved word of the
/// formula grammar.
bool valid_prop_name(const std::string& name);

// ---------------------------------------------------------------------------
// Assignments and teams
// ---------------------------------------------------------------------------

/// An assignment over a domain of n propositions is the integer 0..2^n-1
/// whose bit j is the value given to props()[j].
using Assignment = std::uint32_t;

/// The value of proposition index `j` under assignment `a`.
inline bool assignment_value(Assignment a, std::size_t j) {
  return (a >> j) & 1u;
}

/// A team is a set of assignments over a shared domain, stored as a bitmask:
/// bit a is set iff assignment a belongs to the team.
struct Team {
  Domain domain;
  std::uint32_t members = 0;

  Team() = default;
  Team(Domain d, std::uint32_t m);

  std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(members));
  }
  bool empty_team() const { return members == 0; }
  bool contains(Assignment a) const { return (members >> a) & 1u; }

  /// All assignments over the domain.
  static Team full(const Domain& d);
  /// The empty team over the domain.
  static Team empty(const Domain& d);
  /// Team consisting of the listed assignments.
  static Team of(const Domain& d, std::initializer_list<Assignment> as);

  /// Member assignments in increasing index order.
  std::vector<Assignment> assignments() const;

  bool operator==(const Team& o) const {
    return domain == o.domain && members == o.members;
  }
};

/// Restriction of a team to a subdomain: each member assignment is restricted
/// to the propositions of `sub` (which must all occur in t.domain).
Team project(const Team& t, const Domain& sub);

/// Expansion to a superdomain: all assignments over `sup` whose restriction to
/// t.domain belongs to t.  Requires t.domain ⊆ sup.
Team expand(const Team& t, const Domain& sup);

/// Bitstring for one assignment in domain order, e.g. "01" for p=0,q=1.
std::string assignment_to_string(const Domain& d, Assignment a);
/// Inverse of assignment_to_string.
Assignment assignment_from_string(const Domain& d, const std::string& bits);

}  // namespace teamlogic
