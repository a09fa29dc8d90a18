#include "arrowlab/trees.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace arrowlab {

bool is_tree(const ParentArray& t) {
  if (t.empty() || t[0] != -1) return false;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] < 0 || t[i] >= static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<int> levels(const ParentArray& t) {
  std::vector<int> lv(t.size(), 0);
  for (std::size_t i = 1; i < t.size(); ++i) lv[i] = lv[t[i]] + 1;
  return lv;
}

std::vector<std::vector<int>> children(const ParentArray& t) {
  std::vector<std::vector<int>> out(t.size());
  for (std::size_t i = 1; i < t.size(); ++i) out[t[i]].push_back(static_cast<int>(i));
  return out;
}

namespace {

std::vector<int> branching(const ParentArray& t) {
  const auto lv = levels(t);
  const auto ch = children(t);
  std::vector<int> b(*std::max_element(lv.begin(), lv.end()) + 1, 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    b[lv[i]] = std::max(b[lv[i]], static_cast<int>(ch[i].size()));
  }
  return b;
}

}  // namespace

bool is_homogeneous(const ParentArray& t) {
  const auto lv = levels(t);
  const auto ch = children(t);
  const auto b = branching(t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (static_cast<int>(ch[i].size()) != b[lv[i]]) return false;
  }
  return true;
}

ParentArray canonical_tree(const ParentArray& t) {
  const auto ch = children(t);
  std::vector<std::string> code(t.size());
  for (int v = static_cast<int>(t.size()) - 1; v >= 0; --v) {
    std::vector<std::string> parts;
    for (int c : ch[v]) parts.push_back(code[c]);
    std::sort(parts.begin(), parts.end());
    code[v] = "(";
    for (const auto& p : parts) code[v] += p;
    code[v] += ")";
  }
  ParentArray out{-1};
  std::deque<std::pair<int, int>> queue{{0, 0}};
  while (!queue.empty()) {
    auto [v, label] = queue.front();
    queue.pop_front();
    auto kids = ch[v];
    std::stable_sort(kids.begin(), kids.end(),
                     [&](int a, int b) { return code[a] < code[b]; });
    for (int c : kids) {
      queue.push_back({c, static_cast<int>(out.size())});
      out.push_back(label);
    }
  }
  return out;
}

ParentArray homogeneous_closure(const ParentArray& t) {
  if (!is_tree(t)) throw DomainError("malformed parent array " + to_string(t));
  const auto b = branching(t);
  ParentArray out = t;
  std::vector<int> lv = levels(t);
  std::vector<int> count(t.size(), 0);
  for (std::size_t i = 1; i < t.size(); ++i) ++count[t[i]];
  // breadth-first over the growing tree, original nodes by level first
  std::vector<int> order(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return lv[x] < lv[y]; });
  std::deque<int> queue(order.begin(), order.end());
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int want = lv[v] < static_cast<int>(b.size()) ? b[lv[v]] : 0;
    while (count[v] < want) {
      const int node = static_cast<int>(out.size());
      out.push_back(v);
      lv.push_back(lv[v] + 1);
      count.push_back(0);
      ++count[v];
      queue.push_back(node);
    }
  }
  return out;
}

ParentArray six_node_tree() { return {-1, 0, 0, 1, 1, 2}; }

namespace {

void embeddings(const ParentArray& a, const ParentArray& b,
                const std::vector<std::vector<int>>& b_children, std::vector<int>& image,
                std::vector<bool>& used, std::vector<Payload>& out) {
  const std::size_t i = image.size();
  if (i == a.size()) {
    out.push_back(image);
    return;
  }
  for (int c : b_children[image[a[i]]]) {
    if (used[c]) continue;
    used[c] = true;
    image.push_back(c);
    embeddings(a, b, b_children, image, used, out);
    image.pop_back();
    used[c] = false;
  }
}

class Trees final : public FiniteCategory {
 public:
  explicit Trees(bool homogeneous) : homogeneous_(homogeneous) {}

  std::string tag() const override { return homogeneous_ ? "HTREE" : "TREE"; }
  nlohmann::json descriptor() const override { return {{"category", tag()}}; }
  std::vector<ObjectId> objects_at(int n) const override {
    std::vector<ObjectId> out;
    if (n < 1) return out;
    std::set<ParentArray> seen;
    ParentArray t(n, 0);
    t[0] = -1;
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        auto c = canonical_tree(t);
        if (!homogeneous_ || is_homogeneous(c)) seen.insert(c);
        return;
      }
      for (int p = 0; p < i; ++p) {
        t[i] = p;
        rec(i + 1);
      }
    };
    rec(1);
    for (const auto& c : seen) out.push_back({tag(), c, n});
    return out;
  }
  bool is_object(const ObjectId& obj) const override {
    return is_tree(obj.payload) && (!homogeneous_ || is_homogeneous(obj.payload));
  }
  int grade_of(const Payload& p) const override { return static_cast<int>(p.size()); }
  bool is_member(const ObjectId& obj) const override { return is_object(obj); }
  // downward closed node sets containing the root
  std::vector<ObjectId> substructures(const ObjectId& obj) const override {
    require_object(obj);
    const auto& t = obj.payload;
    const int n = static_cast<int>(t.size());
    std::vector<ObjectId> out;
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
      bool closed = true;
      for (int i = 1; i < n && closed; ++i) {
        if (mask >> i & 1) closed = mask >> t[i] & 1;
      }
      if (!closed) continue;
      std::vector<int> rename(n, -1);
      ParentArray sub;
      for (int i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        rename[i] = static_cast<int>(sub.size());
        sub.push_back(i == 0 ? -1 : rename[t[i]]);
      }
      out.push_back({tag(), sub, static_cast<int>(sub.size())});
    }
    return out;
  }
  Morphism identity(const ObjectId& a) const override {
    require_object(a);
    Payload p(a.payload.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
    return {a, a, p};
  }

 protected:
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    std::vector<Payload> tables;
    std::vector<int> image{0};
    std::vector<bool> used(b.payload.size(), false);
    used[0] = true;
    embeddings(a.payload, b.payload, children(b.payload), image, used, tables);
    std::vector<Morphism> out;
    for (auto& t : tables) out.push_back({a, b, std::move(t)});
    return out;
  }
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    Payload p(f.payload.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = g.payload.at(f.payload[i]);
    return {f.dom, g.cod, p};
  }

 private:
  bool homogeneous_;
};

}  // namespace

CategoryPtr tree_category(bool homogeneous_only) {
  static const CategoryPtr all = std::make_shared<Trees>(false);
  static const CategoryPtr homogeneous = std::make_shared<Trees>(true);
  return homogeneous_only ? homogeneous : all;
}

AdjunctionImpl tree_closure_adjunction() {
  auto trees = tree_category(false);
  auto htrees = tree_category(true);
  FunctorImpl f(
      "closure", trees, htrees,
      [htrees](const ObjectId& a) { return htrees->object(homogeneous_closure(a.payload)); },
      [htrees](const Morphism& h) {
        auto src = homogeneous_closure(h.dom.payload);
        auto dst = homogeneous_closure(h.cod.payload);
        const auto dst_children = children(dst);
        Payload image(src.size(), -1);
        std::vector<bool> used(dst.size(), false);
        for (std::size_t i = 0; i < h.payload.size(); ++i) {
          image[i] = h.payload[i];
          used[image[i]] = true;
        }
        for (std::size_t i = h.payload.size(); i < src.size(); ++i) {
          for (int c : dst_children[image[src[i]]]) {
            if (!used[c]) {
              image[i] = c;
              used[c] = true;
              break;
            }
          }
          if (image[i] < 0) throw DomainError("closure of " + to_string(h) + " has no room");
        }
        return Morphism{htrees->object(src), htrees->object(dst), image};
      });
  FunctorImpl g(
      "inclusion", htrees, trees, [trees](const ObjectId& a) { return trees->object(a.payload); },
      [trees](const Morphism& m) {
        return Morphism{trees->object(m.dom.payload), trees->object(m.cod.payload), m.payload};
      });
  auto gf = compose(g, f);
  auto fg = compose(f, g);
  NaturalTransformationImpl unit("inclusion into closure", identity_functor(trees), gf,
                                 [trees](const ObjectId& a) {
                                   auto closed = trees->object(homogeneous_closure(a.payload));
                                   Payload p(a.payload.size());
                                   for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
                                   return Morphism{a, closed, p};
                                 });
  NaturalTransformationImpl counit("identity", fg, identity_functor(htrees),
                                   [htrees](const ObjectId& d) { return htrees->identity(d); });
  return AdjunctionImpl("homogeneous closure -| inclusion", f, g, unit, counit);
}

}  // namespace arrowlab
