#include "abf/pointgroup.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace abf {

namespace {

// Element labels with their actions on (x,y,z). The label scheme follows the
// crystallographic convention; the list order fixes the canonical class order
// (identity, C3, C4^2, C2, C4).
struct ActionRow {
  const char* label;
  const char* action;
};

constexpr ActionRow kO24Actions[] = {
    {"1_1", "x,y,z"},
    {"2_1", "-y,-z,x"},   {"2_2", "-y,z,-x"},  {"2_3", "-z,-x,y"},
    {"2_4", "-z,x,-y"},   {"2_5", "z,-x,-y"},  {"2_6", "z,x,y"},
    {"2_7", "y,-z,-x"},   {"2_8", "y,z,x"},
    {"3_1", "-x,-y,z"},   {"3_2", "-x,y,-z"},  {"3_3", "x,-y,-z"},
    {"4_1", "-x,-z,-y"},  {"4_2", "-x,z,y"},   {"4_3", "-y,-x,-z"},
    {"4_4", "-z,-y,-x"},  {"4_5", "z,-y,x"},   {"4_6", "y,x,-z"},
    {"5_1", "-y,x,z"},    {"5_2", "-z,y,x"},   {"5_3", "z,y,-x"},
    {"5_4", "y,-x,z"},    {"5_5", "x,-z,y"},   {"5_6", "x,z,-y"},
};

Mat3i parse_action(const std::string& s) {
  Mat3i m{};
  int row = 0;
  size_t pos = 0;
  while (row < 3) {
    size_t next = s.find(',', pos);
    std::string part = s.substr(pos, next == std::string::npos ? next : next - pos);
    int sgn = 1;
    size_t i = 0;
    if (part[i] == '-') {
      sgn = -1;
      ++i;
    }
    int col = part[i] - 'x';
    m[row][col] = sgn;
    ++row;
    pos = (next == std::string::npos) ? s.size() : next + 1;
  }
  return m;
}

Mat3i mul3(const Mat3i& a, const Mat3i& b) {
  Mat3i out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

CycMatrix to_cyc(const Mat3i& m) {
  CycMatrix out(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = CycScalar(static_cast<long>(m[i][j]));
  return out;
}

CycMatrix cyc3(std::initializer_list<CycScalar> vals) {
  CycMatrix out(3, 3);
  int t = 0;
  for (const auto& v : vals) out(t / 3, t % 3) = v, ++t;
  return out;
}

CycMatrix cyc2(std::initializer_list<CycScalar> vals) {
  CycMatrix out(2, 2);
  int t = 0;
  for (const auto& v : vals) out(t / 2, t % 2) = v, ++t;
  return out;
}

CycMatrix cyc1(CycScalar v) {
  CycMatrix out(1, 1);
  out(0, 0) = v;
  return out;
}

BuiltinIrrep make_irrep(const std::string& label, CycMatrix a, CycMatrix b) {
  BuiltinIrrep r;
  r.label = label;
  r.dim = a.rows();
  r.gen_a = std::move(a);
  r.gen_b = std::move(b);
  return r;
}

}  // namespace

PointGroup PointGroup::build_octahedral() {
  PointGroup g;
  g.kind_ = Kind::O24;
  g.name_ = "O24";
  std::map<Mat3i, int> index;
  for (const auto& row : kO24Actions) {
    g.labels_.push_back(row.label);
    Mat3i m = parse_action(row.action);
    index[m] = static_cast<int>(g.int_mats_.size());
    g.int_mats_.push_back(m);
    g.mats_.push_back(to_cyc(m));
  }
  g.gen_a_ = g.index_of("2_8");  // T
  g.gen_b_ = g.index_of("4_6");  // S

  // close the group generated by T and S; it must reproduce the labeled set
  {
    std::vector<int> seen{0};
    std::vector<bool> have(24, false);
    have[0] = true;
    size_t head = 0;
    while (head < seen.size()) {
      Mat3i cur = g.int_mats_[seen[head++]];
      for (int gen : {g.gen_a_, g.gen_b_}) {
        Mat3i p = mul3(cur, g.int_mats_[gen]);
        auto it = index.find(p);
        if (it == index.end())
          throw std::logic_error("octahedral closure left the labeled set");
        if (!have[it->second]) {
          have[it->second] = true;
          seen.push_back(it->second);
        }
      }
    }
    if (seen.size() != 24) throw std::logic_error("octahedral closure != 24 elements");
  }

  g.mul_.assign(24, std::vector<int>(24));
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) g.mul_[i][j] = index.at(mul3(g.int_mats_[i], g.int_mats_[j]));

  g.classes_ = {{0}, {}, {}, {}, {}};
  for (int i = 1; i < 24; ++i) g.classes_[g.labels_[i][0] - '1'].push_back(i);

  const CycScalar o = CycScalar::one(), z = CycScalar::zero(), m1 = -CycScalar::one();
  const CycMatrix& T = g.mats_[g.gen_a_];
  const CycMatrix& S = g.mats_[g.gen_b_];
  g.irreps_.push_back(make_irrep("D1", cyc1(o), cyc1(o)));
  g.irreps_.push_back(make_irrep("D2", cyc1(o), cyc1(m1)));
  g.irreps_.push_back(make_irrep("D3", cyc2({z, o, m1, m1}), cyc2({z, o, o, z})));
  g.irreps_.push_back(make_irrep("D4", T, S));
  // the unoriented representation is the parity twist of the defining one
  g.irreps_.push_back(make_irrep("D5", T, cyc3({z, m1, z, m1, z, z, z, z, o})));
  g.finish(24);
  return g;
}

PointGroup PointGroup::build_dihedral6() {
  PointGroup g;
  g.kind_ = Kind::D6;
  g.name_ = "D6";
  const CycScalar o = CycScalar::one(), z = CycScalar::zero(), m1 = -o;
  const CycScalar h{Rational(1, 2)};
  const CycScalar s3h = CycScalar::sqrt3() * h;

  CycMatrix A = cyc3({h, s3h, z, -s3h, h, z, z, z, o});
  CycMatrix B = cyc3({m1, z, z, z, o, z, z, z, m1});
  CycMatrix A2 = A * A, A3 = A2 * A, A4 = A3 * A, A5 = A4 * A;

  // elements grouped by class: e | A | A^2 | A^3 | B | BA
  std::vector<std::pair<const char*, CycMatrix>> rows = {
      {"1_1", CycMatrix::identity(3)},
      {"2_1", A},       {"2_2", A5},
      {"3_1", A2},      {"3_2", A4},
      {"4_1", A3},
      {"5_1", B},       {"5_2", B * A2}, {"5_3", B * A4},
      {"6_1", B * A},   {"6_2", B * A3}, {"6_3", B * A5},
  };
  for (auto& [lab, m] : rows) {
    g.labels_.push_back(lab);
    g.mats_.push_back(m);
  }
  g.gen_a_ = g.index_of("2_1");
  g.gen_b_ = g.index_of("5_1");

  auto find = [&](const CycMatrix& m) {
    for (int t = 0; t < 12; ++t)
      if (g.mats_[t] == m) return t;
    throw std::logic_error("dihedral closure left the element set");
  };
  g.mul_.assign(12, std::vector<int>(12));
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) g.mul_[i][j] = find(g.mats_[i] * g.mats_[j]);

  g.classes_ = {{0}, {1, 2}, {3, 4}, {5}, {6, 7, 8}, {9, 10, 11}};

  const CycScalar z6 = CycScalar::zeta_pow(4);  // e^{i pi/3}
  const CycScalar z3 = CycScalar::omega3();     // e^{2 i pi/3}
  CycMatrix swp = cyc2({z, o, o, z});
  g.irreps_.push_back(make_irrep("D1", cyc1(o), cyc1(o)));
  g.irreps_.push_back(make_irrep("D2", cyc1(m1), cyc1(o)));
  g.irreps_.push_back(make_irrep("D3", cyc1(m1), cyc1(m1)));
  g.irreps_.push_back(make_irrep("D4", cyc1(o), cyc1(m1)));
  g.irreps_.push_back(make_irrep("D5", cyc2({z6, z, z, z6.conj()}), swp));
  g.irreps_.push_back(make_irrep("D6", cyc2({z3, z, z, z3.conj()}), swp));
  g.finish(12);
  return g;
}

void PointGroup::finish(int n) {
  assert(order() == n);
  inv_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mul_[i][j] == 0) inv_[i] = j;

  class_of_.assign(n, -1);
  for (size_t c = 0; c < classes_.size(); ++c) {
    class_sizes_.push_back(static_cast<int>(classes_[c].size()));
    for (int e : classes_[c]) class_of_[e] = static_cast<int>(c);
  }
  for (int x = 0; x < n; ++x)
    for (int gidx = 0; gidx < n; ++gidx) {
      int y = mul_[mul_[gidx][x]][inv_[gidx]];
      if (class_of_[y] != class_of_[x]) throw std::logic_error("bad class table");
    }

  // expand irreps over all elements by words in the generators
  for (auto& irr : irreps_) {
    irr.matrices.assign(n, CycMatrix());
    std::vector<bool> have(n, false);
    irr.matrices[0] = CycMatrix::identity(irr.dim);
    have[0] = true;
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int e : frontier) {
        for (auto [gen, gm] : {std::pair{gen_a_, &irr.gen_a}, std::pair{gen_b_, &irr.gen_b}}) {
          int e2 = mul_[e][gen];
          if (!have[e2]) {
            have[e2] = true;
            irr.matrices[e2] = irr.matrices[e] * *gm;
            next.push_back(e2);
          }
        }
      }
      frontier = std::move(next);
    }
    irr.character.clear();
    for (const auto& cl : classes_) irr.character.push_back(irr.matrices[cl[0]].trace());
  }
}

int PointGroup::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw std::out_of_range("unknown element label " + label);
}

std::array<double, 3> PointGroup::act(int i, const std::array<double, 3>& x) const {
  std::array<double, 3> out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r] += mats_[i](r, c).to_complex().real() * x[c];
  return out;
}

const PointGroup& PointGroup::octahedral() {
  static const PointGroup g = build_octahedral();
  return g;
}

const PointGroup& PointGroup::dihedral6() {
  static const PointGroup g = build_dihedral6();
  return g;
}

}  // namespace abf
