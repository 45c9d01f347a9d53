#include "teamlogic/team.hpp"

#include <algorithm>
#include <set>

namespace teamlogic {

namespace {

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> kWords = {
      "top", "bot", "dep", "perp", "perpc", "inc", "excl", "ups",
      "hook", "iff",
  };
  return kWords;
}

}  // namespace

bool valid_prop_name(const std::string& name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return reserved_words().count(name) == 0;
}

Domain::Domain(std::vector<std::string> props) : props_(std::move(props)) {
  if (props_.size() > kMaxTeamProps) {
    throw CapacityError("domain exceeds " + std::to_string(kMaxTeamProps) +
                        " propositions");
  }
  for (const auto& p : props_) {
    if (!valid_prop_name(p)) {
      throw DomainError("invalid proposition name '" + p + "'");
    }
  }
  for (std::size_t i = 0; i < props_.size(); ++i) {
    for (std::size_t j = i + 1; j < props_.size(); ++j) {
      if (props_[i] == props_[j]) {
        throw DomainError("duplicate proposition '" + props_[i] + "'");
      }
    }
  }
}

Domain::Domain(std::initializer_list<std::string> props)
    : Domain(std::vector<std::string>(props)) {}

int Domain::index_of(const std::string& name) const {
  for (std::size_t j = 0; j < props_.size(); ++j) {
    if (props_[j] == name) return static_cast<int>(j);
  }
  return -1;
}

bool Domain::subset_of(const Domain& other) const {
  for (const auto& p : props_) {
    if (!other.contains(p)) return false;
  }
  return true;
}

std::string Domain::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < props_.size(); ++j) {
    if (j) out += ',';
    out += props_[j];
  }
  return out;
}

Domain Domain::sorted_union(const Domain& a, const Domain& b) {
  std::vector<std::string> names = a.props();
  for (const auto& p : b.props()) {
    if (!a.contains(p)) names.push_back(p);
  }
  std::sort(names.begin(), names.end());
  return Domain(std::move(names));
}

Team::Team(Domain d, std::uint32_t m) : domain(std::move(d)), members(m) {
  const std::uint32_t count = domain.assignment_count();
  if (count < 32 && (m >> count) != 0) {
    throw DomainError("team members outside the domain's assignment space");
  }
}

Team Team::full(const Domain& d) {
  const std::uint32_t count = d.assignment_count();
  const std::uint32_t mask =
      count >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << count) - 1);
  return Team(d, mask);
}

Team Team::empty(const Domain& d) { return Team(d, 0); }

Team Team::of(const Domain& d, std::initializer_list<Assignment> as) {
  std::uint32_t m = 0;
  for (Assignment a : as) {
    if (a >= d.assignment_count()) {
      throw DomainError("assignment index out of range");
    }
    m |= (std::uint32_t{1} << a);
  }
  return Team(d, m);
}

std::vector<Assignment> Team::assignments() const {
  std::vector<Assignment> out;
  const std::uint32_t count = domain.assignment_count();
  for (Assignment a = 0; a < count; ++a) {
    if (contains(a)) out.push_back(a);
  }
  return out;
}

Team project(const Team& t, const Domain& sub) {
  std::vector<int> pos(sub.size());
  for (std::size_t j = 0; j < sub.size(); ++j) {
    pos[j] = t.domain.index_of(sub.name(j));
    if (pos[j] < 0) {
      throw DomainError("projection target '" + sub.name(j) +
                        "' not in team domain");
    }
  }
  std::uint32_t out = 0;
  for (Assignment a : t.assignments()) {
    Assignment b = 0;
    for (std::size_t j = 0; j < sub.size(); ++j) {
      if (assignment_value(a, static_cast<std::size_t>(pos[j]))) {
        b |= (std::uint32_t{1} << j);
      }
    }
    out |= (std::uint32_t{1} << b);
  }
  return Team(sub, out);
}

Team expand(const Team& t, const Domain& sup) {
  if (!t.domain.subset_of(sup)) {
    throw DomainError("expansion target must contain the team domain");
  }
  std::vector<int> pos(t.domain.size());
  for (std::size_t j = 0; j < t.domain.size(); ++j) {
    pos[j] = sup.index_of(t.domain.name(j));
  }
  std::uint32_t out = 0;
  const std::uint32_t count = sup.assignment_count();
  for (Assignment a = 0; a < count; ++a) {
    Assignment restricted = 0;
    for (std::size_t j = 0; j < t.domain.size(); ++j) {
      if (assignment_value(a, static_cast<std::size_t>(pos[j]))) {
        restricted |= (std::uint32_t{1} << j);
      }
    }
    if (t.contains(restricted)) out |= (std::uint32_t{1} << a);
  }
  return Team(sup, out);
}

std::string assignment_to_string(const Domain& d, Assignment a) {
  std::string out(d.size(), '0');
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (assignment_value(a, j)) out[j] = '1';
  }
  return out;
}

Assignment assignment_from_string(const Domain& d, const std::string& bits) {
  if (bits.size() != d.size()) {
    throw SyntaxError("assignment bitstring '" + bits + "' does not match domain " +
                      d.to_string());
  }
  Assignment a = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == '1') {
      a |= (std::uint32_t{1} << j);
    } else if (bits[j] != '0') {
      throw SyntaxError("assignment bitstring must consist of 0/1 characters");
    }
  }
  return a;
}

}  // namespace teamlogic
