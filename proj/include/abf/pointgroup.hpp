#pragma once

#include <array>
#include <string>
#include <vector>

#include "abf/cyclotomic.hpp"
#include "abf/matrix.hpp"

namespace abf {

using Mat3i = std::array<std::array<int, 3>, 3>;
using CycMatrix = Matrix<CycScalar>;

/// Irreducible representation carried by a point group, defined by its images
/// of the two generators and expanded to every element by word reconstruction.
struct BuiltinIrrep {
  std::string label;  // D1, D2, ...
  int dim = 0;
  CycMatrix gen_a, gen_b;
  std::vector<CycMatrix> matrices;   // one per element
  std::vector<CycScalar> character;  // one per conjugacy class
};

/// The proper octahedral group O24 or the dihedral group D6 as a concrete
/// matrix group, with element labels, conjugacy classes in the canonical
/// order (identity class first), the full multiplication table, and the
/// built-in irreps.
class PointGroup {
 public:
  enum class Kind { O24, D6 };

  static const PointGroup& octahedral();
  static const PointGroup& dihedral6();

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(labels_.size()); }
  int num_classes() const { return static_cast<int>(classes_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;
  const CycMatrix& matrix(int i) const { return mats_[i]; }
  /// Integer rotation matrix; valid for O24 only (D6 has irrational entries).
  const Mat3i& int_matrix(int i) const { return int_mats_[i]; }
  bool has_int_matrices() const { return !int_mats_.empty(); }

  int mul(int i, int j) const { return mul_[i][j]; }
  int inv(int i) const { return inv_[i]; }
  int identity() const { return 0; }
  int gen_a() const { return gen_a_; }  // T for O24, A for D6
  int gen_b() const { return gen_b_; }  // S for O24, B for D6

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int i) const { return class_of_[i]; }
  const std::vector<int>& class_sizes() const { return class_sizes_; }

  const std::vector<BuiltinIrrep>& irreps() const { return irreps_; }

  /// Apply element i to a real 3-vector.
  std::array<double, 3> act(int i, const std::array<double, 3>& x) const;

 private:
  PointGroup() = default;
  static PointGroup build_octahedral();
  static PointGroup build_dihedral6();
  void finish(int na_expected);

  Kind kind_{};
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<CycMatrix> mats_;
  std::vector<Mat3i> int_mats_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> class_sizes_;
  std::vector<BuiltinIrrep> irreps_;
  int gen_a_ = -1, gen_b_ = -1;
};

}  // namespace abf
