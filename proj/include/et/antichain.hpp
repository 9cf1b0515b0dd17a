#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace et {

// Subsets of {1,...,n} as bitmasks: bit i-1 stands for element i. Members of
// the invariant-generating families are nonempty proper subsets.
using SubsetMask = uint32_t;

inline int popcount(SubsetMask m) { return __builtin_popcount(m); }

inline SubsetMask full_mask(int n) { return (SubsetMask{1} << n) - 1; }

inline bool is_proper_nonempty(SubsetMask m, int n) { return m != 0 && m != full_mask(n); }

// Intersecting and incomparable: the compatibility relation for family members.
inline bool compatible(SubsetMask a, SubsetMask b) {
  SubsetMask i = a & b;
  return i != 0 && i != a && i != b;
}

std::string mask_str(SubsetMask m, int n);

// A pairwise intersecting antichain of proper nonempty subsets; members kept
// sorted by (popcount, mask value).
struct Antichain {
  int n = 0;
  std::vector<SubsetMask> sets;

  static Antichain of(int n, std::vector<SubsetMask> sets);

  bool operator==(const Antichain& o) const { return n == o.n && sets == o.sets; }
};

// X_n = {J_1,...,J_n}, J_i = {1,...,n} \ {i}.
Antichain principal_antichain(int n);

// Independent validity/maximality checkers (also used by tests).
bool is_intersecting_antichain(const Antichain& a);
bool is_maximal(const Antichain& a);

// The canonically ordered family of all maximal intersecting antichains of
// nonempty proper subsets of {1,...,n}. Singletons occupy the first n slots,
// X_n the last.
class InvariantFamily {
 public:
  int n() const { return n_; }
  size_t size() const { return antichains_.size(); }
  const Antichain& operator[](size_t i) const { return antichains_[i]; }
  const std::vector<Antichain>& antichains() const { return antichains_; }
  size_t principal_index() const { return antichains_.size() - 1; }

  // Index of an antichain given by its member set, or -1.
  int64_t index_of(const Antichain& a) const;

  uint64_t family_hash() const;
  nlohmann::json to_json() const;

 private:
  friend InvariantFamily enumerate_family(int n, bool allow_large);
  int n_ = 0;
  std::vector<Antichain> antichains_;
};

// Enumerate and canonically order the family. n = 6 has 11,747 antichains and
// must be requested explicitly with allow_large.
InvariantFamily enumerate_family(int n, bool allow_large = false);

// Sort key: (member count asc, member-size multiset asc, lexicographic on
// sorted masks); X_n forced last. Exposed for tests.
std::vector<Antichain> canonical_order(std::vector<Antichain> antichains);

}  // namespace et
