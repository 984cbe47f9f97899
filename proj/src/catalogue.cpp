#include "gonseq/catalogue.hpp"

#include <algorithm>

#include "gonseq/errors.hpp"

namespace gonseq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Entry = std::optional<CatalogueValue>;

Entry value(int v, const char* source) { return CatalogueValue{v, source}; }

long banana_star_edges(long a, long b) {
  long edges = 0;
  for (long i = 1; i < a; ++i) edges += b - a + i + 1;
  return edges;
}

Entry complete(int n, long g, int r) {
  if (r < g) {
    for (int k = 1; k <= n - 3; ++k) {
      const int h = k * (k + 3) / 2 - r;
      if (h >= 0 && h <= k) return value(k * n - h, "complete:kn-h");
    }
    return std::nullopt;
  }
  if (n >= 3 && r <= 3) {
    const int low[] = {n - 1, n, 2 * n - 2};
    return value(low[r - 1], "complete:low-r");
  }
  return std::nullopt;
}

Entry bipartite(int m, int n, long g, int r) {
  if (m > n) std::swap(m, n);
  if (m < 2) return std::nullopt;
  if (r < g) {
    if (auto d = bipartite_delta(m, n, r)) return value(*d, "bipartite:delta");
    return std::nullopt;
  }
  if (r <= 3) {
    const int low[] = {m, std::min(2 * m, m + n - 1), std::min(3 * m, m + n)};
    return value(low[r - 1], "bipartite:low-r");
  }
  return std::nullopt;
}

Entry banana_uniform(const family::BananaUniform& f, int r) {
  if (f.n < 2) return std::nullopt;
  if (r == 1) return value(std::min(f.n, f.e), "banana-uniform:gon1");
  if (r == 2) return value(std::min({2 * f.n, 2 * f.e, f.n + f.e - 1}), "banana-uniform:gon2");
  return std::nullopt;
}

Entry banana_star(const family::BananaStar& f, int r) {
  const int a = f.a;
  const int b = f.b;
  if (2 <= a && a <= b && b <= 2 * a - 1) {
    if (r == 1) return value(a, "banana-star:gon1=a");
    if (r == 2) return value(b + 1, "banana-star:gon2=b+1");
    if (r == 3) return value(a + b, "banana-star:gon3=a+b");
  }
  if (r == 3 && a >= 1 && b >= 2 * a) return value(3 * a, "banana-star:gon3=3a");
  return std::nullopt;
}

Entry banana_sym(const family::BananaSym& f, int r) {
  const int a = f.a;
  const int b = f.b;
  const int k = f.k;
  const bool shortened = f.left_shortened == 1;
  const bool thinned = f.left_thinned == 1;
  if (!(2 <= a && a <= b && b <= 2 * a - 1) || !banana_sym_left_in_range(f)) return std::nullopt;
  if (r == 1 && k >= 2 * a) return value(shortened ? 2 * a - 1 : 2 * a, "banana-sym:gon1");
  if (r == 2 && k >= 2 * b - a + 3) return value(thinned ? 2 * b + 1 : 2 * b + 2, "banana-sym:gon2");
  if (r == 3) {
    const int k_max = shortened ? 2 * a + b - 2 : 2 * a + b - 1;
    if (2 * b <= k && k <= k_max) return value(thinned ? k + b : k + b + 1, "banana-sym:gon3");
  }
  return std::nullopt;
}

Entry rook(const family::Rook& f, long g, int r) {
  const int n = std::min(f.n, f.m);
  const int m = std::max(f.n, f.m);
  if (n == 1) return complete(m, g, r);
  if (r == 1) return value((n - 1) * m, "rook:gon1");
  if (r == 2) return value(n * m - 1, "rook:gon2");
  if (r == 3) return value(n * m, "rook:gon3");
  return std::nullopt;
}

}  // namespace

bool banana_sym_left_in_range(const family::BananaSym& f) {
  const int la = f.a - f.left_shortened;
  const int lb = f.b - f.left_thinned;
  return 2 <= la && la <= lb && lb <= 2 * la - 1;
}

std::optional<int> bipartite_delta(int m, int n, int r) {
  std::optional<int> best;
  for (int a = 0; a <= m - 1; ++a)
    for (int b = 0; b <= n - 1; ++b) {
      const int h = (a + 1) * (b + 1) - 1 - r;
      if (h < 0) continue;
      const int v = a * n + b * m - h;
      if (!best || v < *best) best = v;
    }
  return best;
}

long family_genus(const FamilySpec& spec) {
  validate(spec);
  return std::visit(overloaded{
                        [](const family::Complete& f) { return long{f.n - 1} * (f.n - 2) / 2; },
                        [](const family::CompleteBipartite& f) { return long{f.m - 1} * (f.n - 1); },
                        [](const family::BananaUniform& f) { return long{f.n - 1} * (f.e - 1); },
                        [](const family::BananaStar& f) { return banana_star_edges(f.a, f.b) - f.a + 1; },
                        [](const family::BananaSym& f) {
                          const long la = f.a - f.left_shortened;
                          const long lb = f.b - f.left_thinned;
                          const long edges = banana_star_edges(la, lb) + banana_star_edges(f.a, f.b) + f.k;
                          return edges - (la + f.a) + 1;
                        },
                        [](const family::Rook& f) {
                          const long v = long{f.n} * f.m;
                          const long edges = v * (f.n - 1 + f.m - 1) / 2;
                          return edges - v + 1;
                        },
                        [](const family::Path&) { return 0L; },
                        [](const family::SingleVertex&) { return 0L; },
                    },
                    spec);
}

std::optional<CatalogueValue> expected_gonality(const FamilySpec& raw, int r) {
  if (r < 1) throw ValidationError("gonality index r must be at least 1");
  const FamilySpec spec = normalized(raw);
  const long g = family_genus(spec);
  Entry found = std::visit(overloaded{
                               [&](const family::Complete& f) { return complete(f.n, g, r); },
                               [&](const family::CompleteBipartite& f) { return bipartite(f.m, f.n, g, r); },
                               [&](const family::BananaUniform& f) { return banana_uniform(f, r); },
                               [&](const family::BananaStar& f) { return banana_star(f, r); },
                               [&](const family::BananaSym& f) { return banana_sym(f, r); },
                               [&](const family::Rook& f) { return rook(f, g, r); },
                               [](const family::Path&) { return Entry{}; },
                               [](const family::SingleVertex&) { return Entry{}; },
                           },
                           spec);
  if (found) return found;
  if (g == 0) return value(r, "tree:gon_r=r");
  // Riemann-Roch: every divisor of degree d > 2g - 2 has rank exactly d - g.
  if (r >= g) return CatalogueValue{static_cast<int>(r + g), "riemann-roch:r>=g"};
  return std::nullopt;
}

}  // namespace gonseq
