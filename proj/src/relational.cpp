#include "arrowlab/relational.hpp"

#include <stdexcept>

#include "arrowlab/errors.hpp"

namespace arrowlab {

namespace {

std::vector<std::vector<int>> tuples(int q, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> x(n, 0);
  while (true) {
    out.push_back(x);
    int i = n - 1;
    while (i >= 0 && x[i] == q - 1) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

std::vector<std::vector<int>> injections(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> h;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(h.size()) == m) {
      out.push_back(h);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      h.push_back(v);
      self(self);
      h.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

std::vector<int> mapped(const std::vector<int>& h, const std::vector<int>& x) {
  std::vector<int> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = h[x[i]];
  return y;
}

}  // namespace

int FunctionalStructure::apply(const Operation& op, const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != op.arity) throw DomainError("arity mismatch for " + op.name);
  std::size_t index = 0;
  for (int a : args) {
    if (a < 0 || a >= carrier) throw DomainError("argument outside the carrier");
    index = index * carrier + a;
  }
  return op.table.at(index);
}

RelationalStructure relationalize(const FunctionalStructure& s) {
  RelationalStructure r;
  r.carrier = s.carrier;
  for (const auto& op : s.operations) {
    Relation rel{"R_" + op.name, op.arity + 1, {}};
    for (auto x : tuples(s.carrier, op.arity)) {
      const int y = s.apply(op, x);
      x.push_back(y);
      rel.tuples.insert(std::move(x));
    }
    r.relations.push_back(std::move(rel));
  }
  return r;
}

bool check_star_sentences(const FunctionalStructure& s, const RelationalStructure& r,
                          std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  if (r.carrier != s.carrier || r.relations.size() != s.operations.size()) {
    return fail("signatures differ");
  }
  for (std::size_t j = 0; j < s.operations.size(); ++j) {
    const auto& op = s.operations[j];
    const auto& rel = r.relations[j];
    if (rel.arity != op.arity + 1) return fail(rel.name + " has the wrong arity");
    for (const auto& x : tuples(s.carrier, op.arity + 1)) {
      const std::vector<int> args(x.begin(), x.end() - 1);
      const bool lhs = rel.tuples.contains(x);
      const bool rhs = s.apply(op, args) == x.back();
      if (lhs != rhs) {
        std::string t;
        for (int v : x) t += (t.empty() ? "" : ",") + std::to_string(v);
        return fail("(*) fails for " + op.name + " at (" + t + ")");
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> embeddings(const FunctionalStructure& a,
                                         const FunctionalStructure& b) {
  if (a.operations.size() != b.operations.size()) throw DomainError("signatures differ");
  std::vector<std::vector<int>> out;
  for (const auto& h : injections(a.carrier, b.carrier)) {
    bool ok = true;
    for (std::size_t j = 0; j < a.operations.size() && ok; ++j) {
      for (const auto& x : tuples(a.carrier, a.operations[j].arity)) {
        if (h[a.apply(a.operations[j], x)] != b.apply(b.operations[j], mapped(h, x))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(h);
  }
  return out;
}

std::vector<std::vector<int>> embeddings(const RelationalStructure& a,
                                         const RelationalStructure& b) {
  if (a.relations.size() != b.relations.size()) throw DomainError("signatures differ");
  std::vector<std::vector<int>> out;
  for (const auto& h : injections(a.carrier, b.carrier)) {
    bool ok = true;
    for (std::size_t j = 0; j < a.relations.size() && ok; ++j) {
      for (const auto& x : tuples(a.carrier, a.relations[j].arity)) {
        if (a.relations[j].tuples.contains(x) != b.relations[j].tuples.contains(mapped(h, x))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(h);
  }
  return out;
}

}  // namespace arrowlab
