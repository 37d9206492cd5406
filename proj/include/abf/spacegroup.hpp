#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abf/pointgroup.hpp"
#include "abf/rational.hpp"

namespace abf {

/// Element of the universal classifying group or one of its subgroups:
/// a point-group rotation together with a quarter-translation triple.
/// trans stores n with the actual shift (n1/4, n2/4, n3/4), reduced mod 4.
struct GroupElement {
  uint8_t rot = 0;
  std::array<uint8_t, 3> trans{0, 0, 0};

  static constexpr int kCount = 24 * 64;
  int packed() const { return (int(rot) << 6) | (trans[0] << 4) | (trans[1] << 2) | trans[2]; }
  static GroupElement unpack(int id) {
    GroupElement e;
    e.rot = uint8_t(id >> 6);
    e.trans = {uint8_t((id >> 4) & 3), uint8_t((id >> 2) & 3), uint8_t(id & 3)};
    return e;
  }
  bool operator==(const GroupElement&) const = default;
  bool operator<(const GroupElement& o) const { return packed() < o.packed(); }
  bool is_identity() const { return packed() == 0; }
  std::string to_string() const;  // e.g. "{2_8,1/4,0,3/4}"
};

/// Semidirect composition (g1,c1)(g2,c2) = (g1 g2, g1.c2 + c1 mod 1).
GroupElement sg_compose(const GroupElement& a, const GroupElement& b);
GroupElement sg_inverse(const GroupElement& a);
/// x -> rot.x + trans/4, optionally reduced into [0,1)^3.
std::array<double, 3> sg_act(const GroupElement& g, const std::array<double, 3>& x,
                             bool wrap = false);

/// Frobenius congruences for octahedral generator deformations (T with tau,
/// S with sigma). Full form: t1+t2+t3, s1+s3, 4(s1+t3) all integral;
/// gauge-fixed form: t2+t3, s3, 4 t3 integral.
bool check_frobenius(const std::array<Rational, 3>& tau, const std::array<Rational, 3>& sigma,
                     bool gauge_fixed = false);

/// A finite subgroup of O24 x (Z4)^3 with its conjugacy data.
/// Classes are canonical: sorted by (size, smallest member).
class FiniteGroup {
 public:
  FiniteGroup() = default;
  explicit FiniteGroup(std::vector<GroupElement> elems, std::string name = "");

  static FiniteGroup universal();  // the order-1536 classifying group
  static FiniteGroup from_generators(const std::vector<GroupElement>& gens,
                                     std::string name = "");

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const std::vector<GroupElement>& elements() const { return elems_; }
  const GroupElement& element(int i) const { return elems_[i]; }
  bool contains(const GroupElement& e) const { return index_[e.packed()] >= 0; }
  int index_of(const GroupElement& e) const;

  int mul(int i, int j) const;
  int inv(int i) const;

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int i) const { return class_of_[i]; }
  int class_of_elem(const GroupElement& e) const { return class_of_[index_of(e)]; }
  const std::vector<int>& class_sizes() const { return class_sizes_; }
  GroupElement class_rep(int c) const { return elems_[classes_[c][0]]; }

  /// Small generating set (greedy, deterministic).
  std::vector<GroupElement> generators() const;

  bool is_subgroup_of(const FiniteGroup& big) const;
  bool is_normal_in(const FiniteGroup& big) const;

 private:
  void init();
  std::string name_;
  std::vector<GroupElement> elems_;             // sorted by packed id
  std::array<int16_t, GroupElement::kCount> index_;  // packed -> position or -1
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> class_sizes_;
};

/// Catalog entry describing a named subgroup (generators extracted from the
/// reference listings, with the expected invariants used for validation).
struct SubgroupRecord {
  std::string name;
  std::vector<GroupElement> generators;
  int expected_order = 0;
  std::vector<int> expected_class_sizes;  // sorted multiset
  std::vector<std::string> flags;
};

const std::vector<std::string>& named_subgroup_names();
const SubgroupRecord& subgroup_record(const std::string& name);

/// Generate the named subgroup and validate order + class-size multiset
/// against the catalog record. Throws std::runtime_error naming the failed
/// check. For members of the normal chain the caller can additionally use
/// is_normal_in on the parent.
FiniteGroup named_subgroup(const std::string& name);

/// The normal chain used for irrep induction, ascending:
/// {G64, G128, G256, G768} (each normal in the next, indices 2,3,2,2 up to
/// the universal group).
const std::vector<std::string>& normal_chain_names();

}  // namespace abf
