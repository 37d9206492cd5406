#include "abf/spacegroup.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "abf/fixtures.hpp"

namespace abf {

namespace {

struct ComposeTables {
  // rotation action on packed translation triples, and packed addition mod 4
  std::array<std::array<uint8_t, 64>, 24> rot_act;
  std::array<std::array<uint8_t, 64>, 64> add;
  std::array<int, 24> rot_inv;

  ComposeTables() {
    const auto& o24 = PointGroup::octahedral();
    for (int r = 0; r < 24; ++r) {
      const Mat3i& m = o24.int_matrix(r);
      for (int t = 0; t < 64; ++t) {
        int n[3] = {(t >> 4) & 3, (t >> 2) & 3, t & 3};
        int out[3];
        for (int i = 0; i < 3; ++i) {
          int v = m[i][0] * n[0] + m[i][1] * n[1] + m[i][2] * n[2];
          out[i] = ((v % 4) + 4) % 4;
        }
        rot_act[r][t] = uint8_t((out[0] << 4) | (out[1] << 2) | out[2]);
      }
      for (int j = 0; j < 24; ++j)
        if (o24.mul(r, j) == 0) rot_inv[r] = j;
    }
    for (int a = 0; a < 64; ++a)
      for (int b = 0; b < 64; ++b) {
        int n[3];
        for (int i = 0, sh = 4; i < 3; ++i, sh -= 2)
          n[i] = (((a >> sh) & 3) + ((b >> sh) & 3)) & 3;
        add[a][b] = uint8_t((n[0] << 4) | (n[1] << 2) | n[2]);
      }
  }
};

const ComposeTables& tables() {
  static const ComposeTables t;
  return t;
}

int trans_packed(const GroupElement& e) {
  return (e.trans[0] << 4) | (e.trans[1] << 2) | e.trans[2];
}

GroupElement make_elem(int rot, int tpacked) {
  GroupElement e;
  e.rot = uint8_t(rot);
  e.trans = {uint8_t((tpacked >> 4) & 3), uint8_t((tpacked >> 2) & 3), uint8_t(tpacked & 3)};
  return e;
}

}  // namespace

GroupElement sg_compose(const GroupElement& a, const GroupElement& b) {
  const auto& t = tables();
  int rot = PointGroup::octahedral().mul(a.rot, b.rot);
  int tr = t.add[t.rot_act[a.rot][trans_packed(b)]][trans_packed(a)];
  return make_elem(rot, tr);
}

GroupElement sg_inverse(const GroupElement& a) {
  const auto& t = tables();
  int ri = t.rot_inv[a.rot];
  // (r,c)^-1 = (r^-1, -r^-1 c)
  int moved = t.rot_act[ri][trans_packed(a)];
  int n0 = (-((moved >> 4) & 3)) & 3;
  int n1 = (-((moved >> 2) & 3)) & 3;
  int n2 = (-(moved & 3)) & 3;
  return make_elem(ri, (n0 << 4) | (n1 << 2) | n2);
}

std::array<double, 3> sg_act(const GroupElement& g, const std::array<double, 3>& x, bool wrap) {
  const auto& o24 = PointGroup::octahedral();
  const Mat3i& m = o24.int_matrix(g.rot);
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i] += m[i][j] * x[j];
    out[i] += g.trans[i] / 4.0;
    if (wrap) out[i] -= std::floor(out[i]);
  }
  return out;
}

std::string GroupElement::to_string() const {
  static const char* quarters[4] = {"0", "1/4", "1/2", "3/4"};
  std::ostringstream os;
  os << '{' << PointGroup::octahedral().labels()[rot];
  for (int i = 0; i < 3; ++i) os << ',' << quarters[trans[i]];
  os << '}';
  return os.str();
}

bool check_frobenius(const std::array<Rational, 3>& tau, const std::array<Rational, 3>& sigma,
                     bool gauge_fixed) {
  auto is_int = [](const Rational& r) { return denominator(r) == 1; };
  if (gauge_fixed)
    return is_int(tau[1] + tau[2]) && is_int(sigma[2]) && is_int(4 * tau[2]);
  return is_int(tau[0] + tau[1] + tau[2]) && is_int(sigma[0] + sigma[2]) &&
         is_int(4 * sigma[0] + 4 * tau[2]);
}

FiniteGroup::FiniteGroup(std::vector<GroupElement> elems, std::string name)
    : name_(std::move(name)), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  init();
}

void FiniteGroup::init() {
  index_.fill(-1);
  for (size_t i = 0; i < elems_.size(); ++i) index_[elems_[i].packed()] = int16_t(i);

  for (const auto& e : elems_) {
    if (!contains(sg_inverse(e))) throw std::runtime_error("element set not closed under inverse");
  }

  int n = order();
  class_of_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (class_of_[i] >= 0) continue;
    std::set<int> orbit;
    for (int gi = 0; gi < n; ++gi) {
      GroupElement y = sg_compose(sg_compose(elems_[gi], elems_[i]), sg_inverse(elems_[gi]));
      int idx = index_[y.packed()];
      if (idx < 0) throw std::runtime_error("element set not closed under conjugation");
      orbit.insert(idx);
    }
    std::vector<int> cl(orbit.begin(), orbit.end());
    for (int m : cl) class_of_[m] = static_cast<int>(classes_.size());
    classes_.push_back(std::move(cl));
  }
  std::sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });
  class_sizes_.clear();
  for (size_t c = 0; c < classes_.size(); ++c) {
    class_sizes_.push_back(static_cast<int>(classes_[c].size()));
    for (int m : classes_[c]) class_of_[m] = static_cast<int>(c);
  }
}

int FiniteGroup::index_of(const GroupElement& e) const {
  int idx = index_[e.packed()];
  if (idx < 0) throw std::out_of_range("element not in group: " + e.to_string());
  return idx;
}

int FiniteGroup::mul(int i, int j) const { return index_of(sg_compose(elems_[i], elems_[j])); }
int FiniteGroup::inv(int i) const { return index_of(sg_inverse(elems_[i])); }

FiniteGroup FiniteGroup::universal() {
  std::vector<GroupElement> all;
  all.reserve(GroupElement::kCount);
  for (int id = 0; id < GroupElement::kCount; ++id) all.push_back(GroupElement::unpack(id));
  return FiniteGroup(std::move(all), "G1536");
}

FiniteGroup FiniteGroup::from_generators(const std::vector<GroupElement>& gens, std::string name) {
  std::set<int> have{0};
  std::vector<GroupElement> all{GroupElement{}};
  for (const auto& g : gens)
    if (have.insert(g.packed()).second) all.push_back(g);
  std::vector<GroupElement> frontier = all;
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        GroupElement y = sg_compose(x, g);
        if (have.insert(y.packed()).second) {
          next.push_back(y);
          all.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return FiniteGroup(std::move(all), std::move(name));
}

std::vector<GroupElement> FiniteGroup::generators() const {
  std::vector<GroupElement> gens;
  std::set<int> have{0};
  std::vector<GroupElement> pool = elems_;
  std::stable_sort(pool.begin(), pool.end(), [](const GroupElement& a, const GroupElement& b) {
    return (a.rot != 0) > (b.rot != 0);
  });
  for (const auto& cand : pool) {
    if (have.count(cand.packed())) continue;
    gens.push_back(cand);
    FiniteGroup sub = from_generators(gens);
    have.clear();
    for (const auto& e : sub.elements()) have.insert(e.packed());
    if (sub.order() == order()) break;
  }
  return gens;
}

bool FiniteGroup::is_subgroup_of(const FiniteGroup& big) const {
  for (const auto& e : elems_)
    if (!big.contains(e)) return false;
  return true;
}

bool FiniteGroup::is_normal_in(const FiniteGroup& big) const {
  if (!is_subgroup_of(big)) return false;
  for (const auto& g : big.elements()) {
    GroupElement gi = sg_inverse(g);
    for (const auto& h : elems_)
      if (!contains(sg_compose(sg_compose(g, h), gi))) return false;
  }
  return true;
}

namespace {

struct Catalog {
  std::map<std::string, SubgroupRecord> records;
  std::vector<std::string> names;
  std::vector<std::string> chain;

  Catalog() {
    auto j = load_reference("subgroup_catalog.json");
    for (auto& [name, e] : j["subgroups"].items()) {
      SubgroupRecord rec;
      rec.name = name;
      rec.expected_order = e["order"].get<int>();
      for (const auto& g : e["generators"]) {
        GroupElement el;
        el.rot = uint8_t(g[0].get<int>());
        el.trans = {uint8_t(g[1].get<int>()), uint8_t(g[2].get<int>()), uint8_t(g[3].get<int>())};
        rec.generators.push_back(el);
      }
      rec.expected_class_sizes = e["class_sizes"].get<std::vector<int>>();
      if (e.contains("flags")) rec.flags = e["flags"].get<std::vector<std::string>>();
      records[name] = std::move(rec);
      names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    for (const auto& n : j["normal_chain"]) chain.push_back(n.get<std::string>());
    std::reverse(chain.begin(), chain.end());  // ascending G64 .. G768
  }
};

const Catalog& catalog() {
  static const Catalog c;
  return c;
}

}  // namespace

const std::vector<std::string>& named_subgroup_names() { return catalog().names; }

const SubgroupRecord& subgroup_record(const std::string& name) {
  auto it = catalog().records.find(name);
  if (it == catalog().records.end()) throw std::out_of_range("unknown subgroup " + name);
  return it->second;
}

FiniteGroup named_subgroup(const std::string& name) {
  const auto& rec = subgroup_record(name);
  FiniteGroup g = FiniteGroup::from_generators(rec.generators, name);
  if (g.order() != rec.expected_order)
    throw std::runtime_error(name + ": generated order " + std::to_string(g.order()) +
                             " != expected " + std::to_string(rec.expected_order));
  std::vector<int> sizes = g.class_sizes();
  std::sort(sizes.begin(), sizes.end());
  std::vector<int> want = rec.expected_class_sizes;
  std::sort(want.begin(), want.end());
  if (sizes != want) throw std::runtime_error(name + ": class-size multiset mismatch");
  return g;
}

const std::vector<std::string>& normal_chain_names() { return catalog().chain; }

}  // namespace abf
