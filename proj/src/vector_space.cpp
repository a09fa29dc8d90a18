#include "arrowlab/vector_space.hpp"

#include <algorithm>
#include <set>

#include "arrowlab/derived.hpp"

namespace arrowlab {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw DomainError("no inverse mod " + std::to_string(p));
}

// Payload of a morphism F^m -> F^n: row-major n x m.
int rows_of(const Morphism& t) { return t.cod.payload.at(0); }
int cols_of(const Morphism& t) { return t.dom.payload.at(0); }

class LinearMaps final : public FiniteCategory {
 public:
  LinearMaps(int p, bool surjective) : p_(p), surjective_(surjective) {}

  std::string tag() const override {
    return std::string(surjective_ ? "VEC-SURJ(" : "VEC-INJ(") + std::to_string(p_) + ")";
  }
  nlohmann::json descriptor() const override {
    return {{"category", surjective_ ? "VEC-SURJ" : "VEC-INJ"}, {"p", p_}};
  }
  std::vector<ObjectId> objects_at(int n) const override {
    if (n < 1) return {};
    return {ObjectId{tag(), {n}, n}};
  }
  bool is_object(const ObjectId& obj) const override {
    return obj.payload.size() == 1 && obj.payload[0] >= 1 && obj.payload[0] <= 6;
  }
  int grade_of(const Payload& p) const override { return p.at(0); }
  Morphism identity(const ObjectId& a) const override {
    require_object(a);
    const int n = a.payload[0];
    Payload m(n * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    return {a, a, m};
  }

 protected:
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    const int m = a.payload[0];
    const int n = b.payload[0];
    const int want = surjective_ ? n : m;
    std::vector<Morphism> out;
    if (want > std::min(m, n)) return out;
    Payload entries(n * m, 0);
    while (true) {
      if (matrix_rank(entries, n, m, p_) == want) out.push_back({a, b, entries});
      int i = n * m - 1;
      while (i >= 0 && entries[i] == p_ - 1) entries[i--] = 0;
      if (i < 0) break;
      ++entries[i];
    }
    return out;
  }
  // (G F)[r][c] = sum_k G[r][k] F[k][c]
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    const int rows = rows_of(g);
    const int inner = cols_of(g);
    const int cols = cols_of(f);
    Payload out(rows * cols, 0);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        int sum = 0;
        for (int k = 0; k < inner; ++k) sum += g.payload[r * inner + k] * f.payload[k * cols + c];
        out[r * cols + c] = sum % p_;
      }
    }
    return {f.dom, g.cod, out};
  }

 private:
  int p_;
  bool surjective_;
};

}  // namespace

int matrix_rank(std::vector<int> a, int rows, int cols, int p) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r * cols + c] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int k = 0; k < cols; ++k) std::swap(a[pivot * cols + k], a[rank * cols + k]);
    const int inv = inverse_mod(a[rank * cols + c] % p, p);
    for (int k = 0; k < cols; ++k) a[rank * cols + k] = a[rank * cols + k] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const int factor = a[r * cols + c] % p;
      if (factor == 0) continue;
      for (int k = 0; k < cols; ++k) {
        a[r * cols + k] = ((a[r * cols + k] - factor * a[rank * cols + k]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

VectorSpaceCategories vector_space_categories(int p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return {std::make_shared<LinearMaps>(p, false), std::make_shared<LinearMaps>(p, true)};
}

Morphism adjoint(const Morphism& t, const FiniteCategory& target) {
  const int rows = rows_of(t);
  const int cols = cols_of(t);
  Payload out(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out[c * rows + r] = t.payload[r * cols + c];
  }
  return {target.object(t.cod.payload), target.object(t.dom.payload), out};
}

std::vector<int> apply_matrix(const Morphism& t, const std::vector<int>& x, int p) {
  const int rows = rows_of(t);
  const int cols = cols_of(t);
  std::vector<int> y(rows, 0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) y[r] += t.payload[r * cols + c] * x.at(c);
    y[r] %= p;
  }
  return y;
}

int inner_product(const std::vector<int>& x, const std::vector<int>& y, int p) {
  int sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y.at(i);
  return sum % p;
}

std::vector<int> vector_at(int v, int n, int p) {
  std::vector<int> x(n);
  for (int i = n - 1; i >= 0; --i) {
    x[i] = v % p;
    v /= p;
  }
  return x;
}

std::vector<Partition> quotient_partitions_lin(int n, int d, int p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n < 1 || d < 0 || d > n) throw DomainError("need 0 <= d <= dim V");
  int size = 1;
  for (int i = 0; i < n; ++i) size *= p;
  std::vector<std::vector<int>> vecs;
  for (int v = 0; v < size; ++v) vecs.push_back(vector_at(v, n, p));
  auto index_of = [&](const std::vector<int>& x) {
    int v = 0;
    for (int c : x) v = v * p + c;
    return v;
  };
  auto add = [&](int a, int b) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = (vecs[a][i] + vecs[b][i]) % p;
    return index_of(s);
  };
  // W + F v = {w + c v}
  auto span_with = [&](const std::vector<bool>& w, int v) {
    std::vector<bool> out(size, false);
    for (int x = 0; x < size; ++x) {
      if (!w[x]) continue;
      int y = x;
      for (int c = 0; c < p; ++c) {
        out[y] = true;
        y = add(y, v);
      }
    }
    return out;
  };

  std::vector<bool> zero(size, false);
  zero[0] = true;
  std::set<std::vector<bool>> level{zero};
  for (int dim = 0; dim < n - d; ++dim) {
    std::set<std::vector<bool>> next;
    for (const auto& w : level) {
      for (int v = 0; v < size; ++v) {
        if (!w[v]) next.insert(span_with(w, v));
      }
    }
    level = std::move(next);
  }

  std::vector<Partition> out;
  for (const auto& w : level) {
    std::vector<int> label(size, -1);
    for (int v = 0; v < size; ++v) {
      if (label[v] >= 0) continue;
      for (int x = 0; x < size; ++x) {
        if (w[x]) label[add(v, x)] = v;
      }
    }
    out.push_back(canonical_partition(label));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EquivalenceImpl vector_space_duality(int p) {
  auto cats = vector_space_categories(p);
  auto inj = cats.injective;
  auto dual = opposite(cats.surjective);
  auto surj = cats.surjective;
  FunctorImpl e(
      "adjoint", inj, dual, [surj](const ObjectId& a) { return surj->object(a.payload); },
      [surj](const Morphism& t) { return op(adjoint(t, *surj)); });
  FunctorImpl h(
      "adjoint^-1", dual, inj, [inj](const ObjectId& a) { return inj->object(a.payload); },
      [inj](const Morphism& t) { return adjoint(unop(t), *inj); });
  return EquivalenceImpl("linear duality", e, h,
                         identity_transformation("eta", identity_functor(inj), compose(h, e)),
                         identity_transformation("eps", identity_functor(dual), compose(e, h)));
}

}  // namespace arrowlab
