#include "arrowlab/sets.hpp"

#include <algorithm>
#include <map>

namespace arrowlab {

namespace {

bool is_set_object(const ObjectId& obj) { return obj.payload.size() == 1 && obj.payload[0] >= 1; }

void maps_into(int m, int n, bool surjective, std::vector<int>& table, std::vector<int>& hits,
               std::vector<Payload>& out) {
  const int i = static_cast<int>(table.size());
  if (i == m) {
    if (surjective && std::count(hits.begin(), hits.end(), 0) > 0) return;
    out.push_back(table);
    return;
  }
  if (surjective) {
    const auto missing = std::count(hits.begin(), hits.end(), 0);
    if (missing > m - i) return;
  }
  for (int v = 0; v < n; ++v) {
    if (!surjective && hits[v]) continue;
    ++hits[v];
    table.push_back(v);
    maps_into(m, n, surjective, table, hits, out);
    table.pop_back();
    --hits[v];
  }
}

class SetCategory final : public FiniteCategory {
 public:
  explicit SetCategory(bool surjective) : surjective_(surjective) {}

  std::string tag() const override { return surjective_ ? "FSS" : "FSI"; }
  nlohmann::json descriptor() const override { return {{"category", tag()}}; }
  std::vector<ObjectId> objects_at(int grade) const override {
    if (grade < 1) return {};
    return {ObjectId{tag(), {grade}, grade}};
  }
  bool is_object(const ObjectId& obj) const override { return is_set_object(obj); }
  int grade_of(const Payload& p) const override { return p.at(0); }
  std::vector<ObjectId> substructures(const ObjectId& obj) const override {
    require_object(obj);
    std::vector<ObjectId> out;
    const int n = obj.payload[0];
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const int size = std::popcount(mask);
      out.push_back(ObjectId{tag(), {size}, size});
    }
    return out;
  }
  Morphism identity(const ObjectId& a) const override {
    require_object(a);
    Payload p(a.payload[0]);
    for (int i = 0; i < a.payload[0]; ++i) p[i] = i;
    return {a, a, p};
  }

 protected:
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    std::vector<Payload> tables;
    std::vector<int> table, hits(b.payload[0], 0);
    maps_into(a.payload[0], b.payload[0], surjective_, table, hits, tables);
    std::vector<Morphism> out;
    out.reserve(tables.size());
    for (auto& t : tables) out.push_back({a, b, std::move(t)});
    return out;
  }
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    Payload p(f.payload.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = g.payload.at(f.payload[i]);
    return {f.dom, g.cod, p};
  }

 private:
  bool surjective_;
};

}  // namespace

CategoryPtr fsi_category() {
  static const CategoryPtr cat = std::make_shared<SetCategory>(false);
  return cat;
}

CategoryPtr fss_category() {
  static const CategoryPtr cat = std::make_shared<SetCategory>(true);
  return cat;
}

ObjectId finite_set(int n) {
  if (n < 1) throw DomainError("finite sets start at 1 element");
  return ObjectId{"FSI", {n}, n};
}

Partition canonical_partition(const std::vector<int>& labels) {
  std::map<int, int> rename;
  Partition out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = rename.emplace(labels[i], static_cast<int>(rename.size()));
    out[i] = it->second;
  }
  return out;
}

bool is_canonical_partition(const Partition& p) {
  int top = -1;
  for (int x : p) {
    if (x < 0 || x > top + 1) return false;
    top = std::max(top, x);
  }
  return true;
}

int block_count(const Partition& p) {
  return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
}

std::vector<std::vector<int>> blocks_of(const Partition& p) {
  std::vector<std::vector<int>> out(block_count(p));
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]].push_back(static_cast<int>(i));
  return out;
}

std::vector<Partition> set_partitions(int n, int blocks) {
  std::vector<Partition> out;
  if (n < 1 || blocks < 1 || blocks > n) return out;
  Partition p(n, 0);
  auto rec = [&](auto&& self, int i, int top) -> void {
    if (n - i < blocks - 1 - top) return;
    if (i == n) {
      if (top == blocks - 1) out.push_back(p);
      return;
    }
    for (int v = 0; v <= std::min(top + 1, blocks - 1); ++v) {
      p[i] = v;
      self(self, i + 1, std::max(top, v));
    }
  };
  rec(rec, 1, 0);
  return out;
}

std::uint64_t stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  return s[n][k];
}

bool coarser(const Partition& coarse, const Partition& fine) {
  if (coarse.size() != fine.size()) throw DomainError("partitions of different sets");
  std::map<int, int> image;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    auto [it, fresh] = image.emplace(fine[i], coarse[i]);
    if (!fresh && it->second != coarse[i]) return false;
  }
  return true;
}

Partition partition_of_class(const SubobjectClass& cls) {
  return canonical_partition(cls.representative.payload);
}

Hypergraph dual_partition_hypergraph(int n, int b, int a) {
  auto items = set_partitions(n, a);
  std::map<Partition, int> index;
  for (std::size_t i = 0; i < items.size(); ++i) index[items[i]] = static_cast<int>(i);
  Hypergraph g;
  g.vertices = static_cast<int>(items.size());
  for (const auto& beta : set_partitions(n, b)) {
    std::vector<int> edge;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (coarser(items[i], beta)) edge.push_back(static_cast<int>(i));
    }
    g.edges.push_back(std::move(edge));
  }
  return g;
}

}  // namespace arrowlab
