#ifndef PDUAL_GROUP_HPP
#define PDUAL_GROUP_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace pdual {

/// Group elements are indices into the Cayley table; labels are display-only.
using GroupElement = std::size_t;

/// A finite group stored extensionally by its full, validated Cayley table.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<GroupElement>>;

  /// Validates associativity on all triples, the identity law and inverses.
  /// Throws Error{NotAssociative | NoIdentity | NoInverse | DimensionMismatch}.
  static FiniteGroup from_table(Table cayley, std::vector<std::string> labels = {});

  static FiniteGroup cyclic(std::size_t n);
  /// All permutations of {0..m-1} in lexicographic order under composition
  /// (s*t)(i) = s(t(i)); the identity permutation is element 0.
  static FiniteGroup symmetric(std::size_t m);
  /// Element (g, h) has index g * |H| + h.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  std::size_t order() const { return table_.size(); }
  GroupElement identity() const { return identity_; }
  GroupElement mul(GroupElement g, GroupElement h) const { return table_[g][h]; }
  GroupElement inverse(GroupElement g) const { return inverse_[g]; }
  const std::string& label(GroupElement g) const { return labels_[g]; }
  const Table& table() const { return table_; }
  bool is_abelian() const;

 private:
  FiniteGroup() = default;

  Table table_;
  std::vector<std::string> labels_;
  std::vector<GroupElement> inverse_;
  GroupElement identity_ = 0;
};

}  // namespace pdual

#endif  // PDUAL_GROUP_HPP
