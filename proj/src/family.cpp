#include "gonseq/family.hpp"

#include <regex>
#include <sstream>

#include "gonseq/errors.hpp"

namespace gonseq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

// Appends B*_{a,b} as a chain of `a` vertices starting at `first`; when
// `reversed`, vertex index first + 0 holds v_a and first + a - 1 holds v_1.
void add_banana_star(MultiGraphBuilder& builder, int first, int a, int b, bool reversed, const std::string& prefix) {
  auto at = [&](int i) { return reversed ? first + (a - i) : first + (i - 1); };  // i is 1-based
  for (int i = 1; i <= a; ++i) builder.set_label(at(i), prefix + std::to_string(i));
  for (int i = 1; i < a; ++i) builder.add_edges(at(i), at(i + 1), b - a + i + 1);
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(overloaded{
                 [](const family::Complete& f) { require(f.n >= 1, "Complete requires n >= 1"); },
                 [](const family::CompleteBipartite& f) {
                   require(f.m >= 1 && f.n >= 1, "CompleteBipartite requires m >= 1 and n >= 1");
                 },
                 [](const family::BananaUniform& f) {
                   require(f.n >= 1, "BananaUniform requires n >= 1");
                   require(f.e >= 1, "BananaUniform requires e >= 1");
                 },
                 [](const family::BananaStar& f) {
                   require(f.a >= 1, "BananaStar requires a >= 1");
                   require(f.b >= f.a - 1, "BananaStar requires b >= a - 1 (every bundle has >= 1 edge)");
                 },
                 [](const family::BananaSym& f) {
                   require(f.left_shortened == 0 || f.left_shortened == 1, "BananaSym requires eps1 in {0,1}");
                   require(f.left_thinned == 0 || f.left_thinned == 1, "BananaSym requires eps2 in {0,1}");
                   require(2 <= f.a, "BananaSym requires 2 <= a");
                   require(f.a <= f.b, "BananaSym requires a <= b");
                   require(f.k >= 1, "BananaSym requires k >= 1");
                 },
                 [](const family::Rook& f) {
                   require(f.n >= 1 && f.m >= 1, "Rook requires n >= 1 and m >= 1");
                 },
                 [](const family::Path& f) { require(f.n >= 1, "Path requires n >= 1"); },
                 [](const family::SingleVertex&) {},
             },
             spec);
}

FamilySpec normalized(const FamilySpec& spec) {
  if (const auto* r = std::get_if<family::Rook>(&spec); r && r->n > r->m) return family::Rook{r->m, r->n};
  return spec;
}

MultiGraph make_family(const FamilySpec& raw) {
  validate(raw);
  const FamilySpec spec = normalized(raw);
  return std::visit(
      overloaded{
          [](const family::Complete& f) {
            MultiGraphBuilder b(f.n);
            for (int u = 0; u < f.n; ++u)
              for (int v = u + 1; v < f.n; ++v) b.add_edges(u, v);
            return b.build();
          },
          [](const family::CompleteBipartite& f) {
            MultiGraphBuilder b(f.m + f.n);
            for (int u = 0; u < f.m; ++u) {
              b.set_label(u, "a" + std::to_string(u + 1));
              for (int v = 0; v < f.n; ++v) b.add_edges(u, f.m + v);
            }
            for (int v = 0; v < f.n; ++v) b.set_label(f.m + v, "b" + std::to_string(v + 1));
            return b.build();
          },
          [](const family::BananaUniform& f) {
            MultiGraphBuilder b(f.n);
            for (int i = 0; i < f.n; ++i) b.set_label(i, "v" + std::to_string(i + 1));
            for (int i = 0; i + 1 < f.n; ++i) b.add_edges(i, i + 1, f.e);
            return b.build();
          },
          [](const family::BananaStar& f) {
            MultiGraphBuilder b(f.a);
            add_banana_star(b, 0, f.a, f.b, false, "v");
            return b.build();
          },
          [](const family::BananaSym& f) {
            const int left_a = f.a - f.left_shortened;
            const int left_b = f.b - f.left_thinned;
            MultiGraphBuilder b(left_a + f.a);
            add_banana_star(b, 0, left_a, left_b, false, "v");
            add_banana_star(b, left_a, f.a, f.b, true, "w");
            b.add_edges(left_a - 1, left_a, f.k);
            return b.build();
          },
          [](const family::Rook& f) {
            MultiGraphBuilder b(f.n * f.m);
            auto id = [&](int i, int j) { return i * f.m + j; };
            for (int i = 0; i < f.n; ++i)
              for (int j = 0; j < f.m; ++j) {
                b.set_label(id(i, j), "r" + std::to_string(i) + "c" + std::to_string(j));
                for (int j2 = j + 1; j2 < f.m; ++j2) b.add_edges(id(i, j), id(i, j2));
                for (int i2 = i + 1; i2 < f.n; ++i2) b.add_edges(id(i, j), id(i2, j));
              }
            return b.build();
          },
          [](const family::Path& f) {
            MultiGraphBuilder b(f.n);
            for (int i = 0; i + 1 < f.n; ++i) b.add_edges(i, i + 1);
            return b.build();
          },
          [](const family::SingleVertex&) { return MultiGraphBuilder(1).build(); },
      },
      spec);
}

std::string family_name(const FamilySpec& spec) {
  static constexpr const char* names[] = {"Complete", "CompleteBipartite", "BananaUniform", "BananaStar",
                                          "BananaSym", "Rook",              "Path",          "SingleVertex"};
  return names[spec.index()];
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream out;
  out << family_name(spec);
  std::visit(overloaded{
                 [&](const family::Complete& f) { out << '(' << f.n << ')'; },
                 [&](const family::CompleteBipartite& f) { out << '(' << f.m << ',' << f.n << ')'; },
                 [&](const family::BananaUniform& f) { out << '(' << f.n << ',' << f.e << ')'; },
                 [&](const family::BananaStar& f) { out << '(' << f.a << ',' << f.b << ')'; },
                 [&](const family::BananaSym& f) {
                   out << '(' << f.left_shortened << ',' << f.left_thinned << ',' << f.a << ',' << f.b << ','
                       << f.k << ')';
                 },
                 [&](const family::Rook& f) { out << '(' << f.n << ',' << f.m << ')'; },
                 [&](const family::Path& f) { out << '(' << f.n << ')'; },
                 [&](const family::SingleVertex&) {},
             },
             spec);
  return out.str();
}

FamilySpec parse_family(const std::string& text) {
  static const std::regex pattern(R"(^\s*([A-Za-z]+)\s*(?:\(([-0-9,\s]*)\))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ParseError(0, "malformed family spec '" + text + "'");
  const std::string name = m[1];
  std::vector<int> args;
  if (m[2].matched) {
    std::string inner = m[2];
    std::istringstream in(inner);
    for (std::string tok; std::getline(in, tok, ',');) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
        args.push_back(v);
      } catch (const std::exception&) {
        throw ParseError(0, "malformed family parameter '" + tok + "'");
      }
    }
  }
  auto want = [&](std::size_t count) {
    if (args.size() != count)
      throw ParseError(0, name + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(args.size()));
  };
  FamilySpec spec;
  if (name == "Complete") {
    want(1);
    spec = family::Complete{args[0]};
  } else if (name == "CompleteBipartite") {
    want(2);
    spec = family::CompleteBipartite{args[0], args[1]};
  } else if (name == "BananaUniform") {
    want(2);
    spec = family::BananaUniform{args[0], args[1]};
  } else if (name == "BananaStar") {
    want(2);
    spec = family::BananaStar{args[0], args[1]};
  } else if (name == "BananaSym") {
    want(5);
    spec = family::BananaSym{args[0], args[1], args[2], args[3], args[4]};
  } else if (name == "Rook") {
    want(2);
    spec = family::Rook{args[0], args[1]};
  } else if (name == "Path") {
    want(1);
    spec = family::Path{args[0]};
  } else if (name == "SingleVertex") {
    want(0);
    spec = family::SingleVertex{};
  } else {
    throw ParseError(0, "unknown family '" + name + "'");
  }
  validate(spec);
  return normalized(spec);
}

nlohmann::json to_json(const FamilySpec& spec) {
  nlohmann::json j;
  j["family"] = family_name(spec);
  std::visit(overloaded{
                 [&](const family::Complete& f) { j["n"] = f.n; },
                 [&](const family::CompleteBipartite& f) {
                   j["m"] = f.m;
                   j["n"] = f.n;
                 },
                 [&](const family::BananaUniform& f) {
                   j["n"] = f.n;
                   j["e"] = f.e;
                 },
                 [&](const family::BananaStar& f) {
                   j["a"] = f.a;
                   j["b"] = f.b;
                 },
                 [&](const family::BananaSym& f) {
                   j["eps1"] = f.left_shortened;
                   j["eps2"] = f.left_thinned;
                   j["a"] = f.a;
                   j["b"] = f.b;
                   j["k"] = f.k;
                 },
                 [&](const family::Rook& f) {
                   j["n"] = f.n;
                   j["m"] = f.m;
                 },
                 [&](const family::Path& f) { j["n"] = f.n; },
                 [&](const family::SingleVertex&) {},
             },
             spec);
  return j;
}

FamilySpec family_from_json(const nlohmann::json& j) {
  const std::string name = j.at("family").get<std::string>();
  auto p = [&](const char* key) { return j.at(key).get<int>(); };
  FamilySpec spec;
  if (name == "Complete") spec = family::Complete{p("n")};
  else if (name == "CompleteBipartite") spec = family::CompleteBipartite{p("m"), p("n")};
  else if (name == "BananaUniform") spec = family::BananaUniform{p("n"), p("e")};
  else if (name == "BananaStar") spec = family::BananaStar{p("a"), p("b")};
  else if (name == "BananaSym") spec = family::BananaSym{p("eps1"), p("eps2"), p("a"), p("b"), p("k")};
  else if (name == "Rook") spec = family::Rook{p("n"), p("m")};
  else if (name == "Path") spec = family::Path{p("n")};
  else if (name == "SingleVertex") spec = family::SingleVertex{};
  else throw ParseError(0, "unknown family '" + name + "'");
  validate(spec);
  return normalized(spec);
}

}  // namespace gonseq
