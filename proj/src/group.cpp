#include "gradedexp/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gradedexp/error.hpp"

namespace gradedexp {

GroupPtr Group::from_table(std::size_t order, std::vector<Element> table,
                           std::string name, std::vector<std::string> labels) {
  if (order == 0) throw InvalidArgument("group order must be positive");
  if (order > kMaxGroupOrder)
    throw InvalidArgument("group order " + std::to_string(order) +
                          " exceeds the supported maximum of " +
                          std::to_string(kMaxGroupOrder));
  if (table.size() != order * order)
    throw InvalidArgument("Cayley table must have order^2 = " +
                          std::to_string(order * order) + " entries, got " +
                          std::to_string(table.size()));
  for (Element x : table)
    if (x >= order) throw InvalidArgument("Cayley table entry out of range");

  // Latin square.
  std::vector<char> seen(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      Element x = table[a * order + b];
      if (seen[x]) throw InvalidArgument("Cayley table is not a Latin square (row " +
                                         std::to_string(a) + ")");
      seen[x] = 1;
    }
  }
  for (std::size_t b = 0; b < order; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < order; ++a) {
      Element x = table[a * order + b];
      if (seen[x]) throw InvalidArgument("Cayley table is not a Latin square (column " +
                                         std::to_string(b) + ")");
      seen[x] = 1;
    }
  }
  for (std::size_t g = 0; g < order; ++g) {
    if (table[g] != g || table[g * order] != g)
      throw InvalidArgument("element 0 is not the identity");
  }
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      Element ab = table[a * order + b];
      for (std::size_t c = 0; c < order; ++c) {
        Element bc = table[b * order + c];
        if (table[ab * order + c] != table[a * order + bc])
          throw InvalidArgument("Cayley table is not associative at (" +
                                std::to_string(a) + ", " + std::to_string(b) + ", " +
                                std::to_string(c) + ")");
      }
    }

  auto group = std::shared_ptr<Group>(new Group());
  group->order_ = order;
  group->table_ = std::move(table);
  group->inv_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (group->table_[a * order + b] == kIdentity) group->inv_[a] = static_cast<Element>(b);
  group->name_ = std::move(name);
  if (!labels.empty() && labels.size() != order)
    throw InvalidArgument("label count does not match group order");
  group->labels_ = std::move(labels);
  return group;
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string Group::label(Element a) const {
  if (a < labels_.size()) return labels_[a];
  return std::to_string(a);
}

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return Group::from_table(n, std::move(t), "Z" + std::to_string(n));
}

GroupPtr dihedral_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("dihedral parameter must be positive");
  const std::size_t order = 2 * n;
  std::vector<Element> t(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t k1 = x % n, b1 = x / n;
    labels[x] = (k1 == 0 && b1 == 0) ? "e"
                                     : (k1 ? "r" + (k1 > 1 ? "^" + std::to_string(k1) : std::string()) : "") +
                                           (b1 ? "s" : "");
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k2 = y % n, b2 = y / n;
      // r^k1 s^b1 r^k2 s^b2 = r^(k1 + (-1)^b1 k2) s^(b1+b2)
      const std::size_t k = b1 ? (k1 + n - k2) % n : (k1 + k2) % n;
      const std::size_t b = (b1 + b2) % 2;
      t[x * order + y] = static_cast<Element>(b * n + k);
    }
  }
  return Group::from_table(order, std::move(t), "D" + std::to_string(n), std::move(labels));
}

namespace {

std::vector<std::vector<std::size_t>> permutations_of(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

}  // namespace

GroupPtr symmetric_group(std::size_t n) {
  if (n == 0 || n > 4) throw InvalidArgument("symmetric group catalog supports 1 <= n <= 4");
  const auto perms = permutations_of(n);
  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);
  const std::size_t order = perms.size();
  std::vector<Element> t(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + std::to_string(perms[a][i] + 1);
    labels[a] = s + "]";
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[b][perms[a][x]];
      t[a * order + b] = index.at(c);
    }
  }
  return Group::from_table(order, std::move(t), "S" + std::to_string(n), std::move(labels));
}

Element symmetric_element(const std::vector<std::size_t>& images) {
  const auto perms = permutations_of(images.size());
  auto it = std::find(perms.begin(), perms.end(), images);
  if (it == perms.end()) throw InvalidArgument("not a permutation");
  return static_cast<Element>(it - perms.begin());
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t na = a->order(), nb = b->order(), order = na * nb;
  std::vector<Element> t(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    labels[x] = "(" + a->label(static_cast<Element>(x / nb)) + "," +
                b->label(static_cast<Element>(x % nb)) + ")";
    for (std::size_t y = 0; y < order; ++y) {
      const Element p = a->mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const Element q = b->mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      t[x * order + y] = static_cast<Element>(p * nb + q);
    }
  }
  return Group::from_table(order, std::move(t), a->name() + "x" + b->name(), std::move(labels));
}

GroupPtr klein_four_group() {
  auto z2 = cyclic_group(2);
  auto v = direct_product(z2, z2);
  std::vector<Element> t(v->table().begin(), v->table().end());
  return Group::from_table(4, std::move(t), "V4", {"e", "b", "a", "ab"});
}

GroupPtr catalog_group(const std::string& name) {
  if (auto pos = name.find('x'); pos != std::string::npos)
    return direct_product(catalog_group(name.substr(0, pos)), catalog_group(name.substr(pos + 1)));
  if (name == "V4") return klein_four_group();
  if (name.size() < 2) throw InvalidArgument("unknown catalog group \"" + name + "\"");
  std::size_t n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') throw InvalidArgument("unknown catalog group \"" + name + "\"");
    n = n * 10 + static_cast<std::size_t>(name[i] - '0');
    if (n > kMaxGroupOrder) throw InvalidArgument("catalog group \"" + name + "\" is too large");
  }
  switch (name[0]) {
    case 'Z':
      return cyclic_group(n);
    case 'D':
      return dihedral_group(n);
    case 'S':
      return symmetric_group(n);
    default:
      throw InvalidArgument("unknown catalog group \"" + name + "\"");
  }
}

Subgroup::Subgroup(GroupPtr group, std::vector<Element> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  if (!group_) throw InvalidArgument("subgroup without a parent group");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  position_.assign(group_->order(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] >= group_->order())
      throw InvalidArgument("subgroup element " + std::to_string(elements_[i]) + " out of range");
    position_[elements_[i]] = static_cast<int>(i);
  }
  if (elements_.empty() || elements_.front() != kIdentity)
    throw InvalidArgument("subgroup does not contain the identity");
  for (Element a : elements_) {
    if (!contains(group_->inv(a))) throw InvalidArgument("subset is not closed under inverses");
    for (Element b : elements_)
      if (!contains(group_->mul(a, b))) throw InvalidArgument("subset is not closed under products");
  }
}

Subgroup Subgroup::trivial(const GroupPtr& group) { return Subgroup(group, {kIdentity}); }

Subgroup Subgroup::whole(const GroupPtr& group) {
  std::vector<Element> all(group->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(group, std::move(all));
}

std::size_t Subgroup::position(Element a) const {
  if (!contains(a))
    throw InvalidArgument("element " + std::to_string(a) + " is not in the subgroup");
  return static_cast<std::size_t>(position_[a]);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (group_ != other.group_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element a) { return other.contains(a); });
}

Subgroup subgroup_closure(const GroupPtr& group, std::span<const Element> generators) {
  std::vector<char> in(group->order(), 0);
  std::vector<Element> members{kIdentity};
  in[kIdentity] = 1;
  for (Element g : generators) {
    if (g >= group->order())
      throw InvalidArgument("generator " + std::to_string(g) + " out of range");
  }
  // Finite group: closing under right multiplication by generators suffices.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element g : generators) {
      Element x = group->mul(members[i], g);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  return Subgroup(group, std::move(members));
}

std::vector<std::vector<Element>> left_cosets(const Subgroup& k) {
  const Group& g = k.parent();
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<Element>> cosets;
  for (Element x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Element> c;
    for (Element y : k.elements()) c.push_back(g.mul(x, y));
    std::sort(c.begin(), c.end());
    for (Element y : c) done[y] = 1;
    cosets.push_back(std::move(c));
  }
  return cosets;
}

DoubleCosetPartition double_cosets(const Subgroup& h, const Subgroup& k) {
  if (h.group() != k.group()) throw InvalidArgument("subgroups of different groups");
  const Group& g = h.parent();
  DoubleCosetPartition p;
  p.class_of.assign(g.order(), SIZE_MAX);
  for (Element x = 0; x < g.order(); ++x) {
    if (p.class_of[x] != SIZE_MAX) continue;
    std::set<Element> cls;
    for (Element a : h.elements())
      for (Element b : k.elements()) cls.insert(g.mul(g.mul(a, x), b));
    const std::size_t id = p.classes.size();
    for (Element y : cls) p.class_of[y] = id;
    p.classes.emplace_back(cls.begin(), cls.end());
    p.representatives.push_back(x);
  }
  return p;
}

Subgroup conjugate_subgroup(Element x, const Subgroup& h) {
  const Group& g = h.parent();
  if (!g.contains(x)) throw InvalidArgument("conjugating element out of range");
  std::vector<Element> c;
  for (Element a : h.elements()) c.push_back(g.conj(x, a));
  return Subgroup(h.group(), std::move(c));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.group() != b.group()) throw InvalidArgument("subgroups of different groups");
  std::vector<Element> c;
  for (Element x : a.elements())
    if (b.contains(x)) c.push_back(x);
  return Subgroup(a.group(), std::move(c));
}

bool is_normal(const Subgroup& n) {
  const Group& g = n.parent();
  for (Element x = 0; x < g.order(); ++x)
    for (Element a : n.elements())
      if (!n.contains(g.conj(x, a))) return false;
  return true;
}

std::size_t subgroup_index(const Subgroup& k) { return k.parent().order() / k.size(); }

std::size_t double_coset_size(const Subgroup& h, Element x, const Subgroup& k) {
  const Group& g = h.parent();
  std::vector<char> in(g.order(), 0);
  std::size_t count = 0;
  for (Element a : h.elements())
    for (Element b : k.elements()) {
      Element y = g.mul(g.mul(a, x), b);
      if (!in[y]) {
        in[y] = 1;
        ++count;
      }
    }
  return count;
}

QuotientGroup quotient_group(const Subgroup& n) {
  if (!is_normal(n)) throw InvalidArgument("subgroup is not normal");
  const Group& g = n.parent();
  const auto cosets = left_cosets(n);
  QuotientGroup q;
  q.projection.assign(g.order(), 0);
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (Element x : cosets[i]) q.projection[x] = static_cast<Element>(i);
  const std::size_t m = cosets.size();
  std::vector<Element> t(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = g.label(cosets[i].front()) + "N";
    for (std::size_t j = 0; j < m; ++j)
      t[i * m + j] = q.projection[g.mul(cosets[i].front(), cosets[j].front())];
  }
  q.group = Group::from_table(m, std::move(t), g.name() + "/N", std::move(labels));
  return q;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& group) {
  // Every subgroup is a join of cyclic subgroups; close the set of cyclic
  // subgroups under pairwise joins.
  std::set<std::vector<Element>> found;
  std::vector<std::vector<Element>> queue;
  auto add = [&](const Subgroup& s) {
    std::vector<Element> e(s.elements().begin(), s.elements().end());
    if (found.insert(e).second) queue.push_back(std::move(e));
  };
  std::vector<Subgroup> cyclic;
  for (Element x = 0; x < group->order(); ++x) {
    const Element gen[1] = {x};
    cyclic.push_back(subgroup_closure(group, gen));
    add(cyclic.back());
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& c : cyclic) {
      std::vector<Element> gens = queue[i];
      gens.insert(gens.end(), c.elements().begin(), c.elements().end());
      add(subgroup_closure(group, gens));
    }
  }
  std::vector<Subgroup> result;
  for (const auto& e : found) result.emplace_back(group, e);
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
  });
  return result;
}

}  // namespace gradedexp
