#include "factorlab/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "factorlab/error.hpp"

namespace factorlab {

VertexSet FamilyInstance::role(const std::string& r) const {
  auto it = roles.find(r);
  return it == roles.end() ? VertexSet{} : it->second;
}

std::string FamilyInstance::role_sidecar() const {
  auto line = [](const std::string& name, VertexSet set) {
    std::string out = name + ":";
    for (Vertex v : set) out += ' ' + std::to_string(v);
    return out + '\n';
  };
  std::string blocks;
  std::string named;
  for (const auto& [name, set] : roles) {
    bool block = !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
    (block ? blocks : named) += line(name, set);
  }
  return blocks + named;
}

namespace {

class Builder {
public:
  explicit Builder(std::string name) { inst_.name = std::move(name); }

  Vertex add(const std::string& block, const std::string& label = {}) {
    Vertex v = count_++;
    if (v >= kMaxVertices) throw ContractViolation("family larger than 64 vertices");
    inst_.roles[block].insert(v);
    if (!label.empty()) inst_.roles[label] = VertexSet::single(v);
    return v;
  }
  std::vector<Vertex> add_many(const std::string& block, const std::string& prefix, int first,
                               int count) {
    std::vector<Vertex> out;
    for (int i = 0; i < count; ++i) {
      out.push_back(add(block, prefix.empty() ? std::string{} : prefix + std::to_string(first + i)));
    }
    return out;
  }
  void edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  void clique(const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) edge(vs[i], vs[j]);
    }
  }
  void join(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex u : a) {
      for (Vertex v : b) edge(u, v);
    }
  }
  void ensure_block(const std::string& block) { inst_.roles[block]; }

  FamilyInstance finish() {
    inst_.graph = Graph(count_, edges_);
    return std::move(inst_);
  }

private:
  FamilyInstance inst_;
  std::vector<Edge> edges_;
  int count_ = 0;
};

int param(const FamilyParams& params, const std::string& key, int fallback, int low,
          const std::string& family) {
  auto it = params.find(key);
  int value = it == params.end() ? fallback : it->second;
  if (value < low) {
    throw ContractViolation(family + ": parameter " + key + " must be at least " +
                            std::to_string(low));
  }
  return value;
}

// v[i-1] is v_i.
FamilyInstance small_exceptional(int index) {
  Builder b("H" + std::to_string(index));
  if (index == 0) {
    b.ensure_block("S");
    auto t = b.add_many("T", "t", 1, 3);
    auto d1 = b.add_many("D1", "v", 1, 3);
    auto d2 = b.add_many("D2", "v", 4, 3);
    b.clique(d1);
    b.clique(d2);
    for (int i = 0; i < 3; ++i) {
      b.edge(t[i], d1[i]);
      b.edge(t[i], d2[i]);
    }
    return b.finish();
  }
  Vertex x = b.add("S", "x");
  auto t = b.add_many("T", "t", 1, 3);
  for (Vertex ti : t) b.edge(x, ti);
  if (index == 1) {
    auto v = b.add_many("D", "v", 1, 3);
    b.clique(v);
    for (int i = 0; i < 3; ++i) b.edge(t[i], v[i]);
    return b.finish();
  }
  auto v = b.add_many("D", "v", 1, 4);
  b.edge(t[0], v[2]);
  b.edge(t[1], v[0]);
  b.edge(t[2], v[1]);
  auto e = [&](int i, int j) { b.edge(v[i - 1], v[j - 1]); };
  switch (index) {
    case 2:
      b.clique(v);
      break;
    case 3:
      e(1, 3), e(2, 4), e(1, 2), e(3, 4), e(1, 4);
      break;
    default:
      e(1, 2), e(2, 4), e(4, 1), e(3, 4);
      break;
  }
  return b.finish();
}

FamilyInstance h5(int p) {
  Builder b("H5");
  auto x = b.add_many("S", "x", 1, 2);
  auto t = b.add_many("T", "t", 1, 5);
  auto y = b.add_many("D", "y", 1, 5);
  auto rest = b.add_many("D", "", 6, p - 5);
  b.join(x, t);
  for (int i = 0; i < 5; ++i) b.edge(t[i], y[i]);
  y.insert(y.end(), rest.begin(), rest.end());
  b.clique(y);
  return b.finish();
}

// H6..H11. Every x_j sees every t_i.
FamilyInstance seven_sixths(int index) {
  Builder b("H" + std::to_string(index));
  auto x = b.add_many("S", "x", 1, 2);
  auto t = b.add_many("T", "t", 1, 5);
  b.join(x, t);

  if (index == 11) {
    auto d1 = b.add_many("D1", "v", 1, 3);
    auto d2 = b.add_many("D2", "v", 4, 3);
    b.clique(d1);
    b.clique(d2);
    b.edge(t[0], d1[0]);
    b.edge(t[1], d1[1]);
    b.edge(t[2], d1[2]);
    b.edge(t[2], d2[0]);
    b.edge(t[3], d2[1]);
    b.edge(t[4], d2[2]);
    return b.finish();
  }

  auto v = b.add_many("D", "v", 0, 6);  // v[i] is v_i
  for (int i = 1; i <= 5; ++i) {
    b.edge(t[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
    b.edge(v[0], v[static_cast<std::size_t>(i)]);
  }
  auto e = [&](int i, int j) { b.edge(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]); };
  switch (index) {
    case 6:
      b.clique({v[2], v[3], v[4], v[5]});
      b.edge(x[0], v[1]);
      break;
    case 7:
      e(1, 2), e(3, 4), e(4, 5), e(3, 5);
      break;
    case 8:
      e(1, 2), e(2, 3), e(3, 4), e(4, 5), e(3, 5);
      break;
    case 9:
      e(1, 2), e(1, 3), e(2, 3), e(3, 4), e(3, 5), e(4, 5);
      break;
    default:
      e(1, 2), e(2, 3), e(3, 4), e(4, 5), e(5, 1);
      break;
  }
  return b.finish();
}

FamilyInstance h12(int p) {
  Builder b("H12");
  Vertex x = b.add("S", "x");
  auto t = b.add_many("T", "t", 1, 3);
  auto y = b.add_many("D", "y", 1, 3);
  auto rest = b.add_many("D", "", 4, p - 3);
  for (int i = 0; i < 3; ++i) {
    b.edge(t[i], x);
    b.edge(t[i], y[i]);
  }
  y.insert(y.end(), rest.begin(), rest.end());
  b.clique(y);
  return b.finish();
}

}  // namespace

FamilyInstance build_family(const std::string& name, const FamilyParams& params) {
  if (name.size() >= 2 && name[0] == 'H' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
      name.size() <= 3) {
    int index = std::stoi(name.substr(1));
    if (index <= 4) return small_exceptional(index);
    if (index == 5) return h5(param(params, "p", 5, 5, name));
    if (index <= 11) return seven_sixths(index);
    if (index == 12) return h12(param(params, "p", 3, 3, name));
  }
  if (name == "Kmn") {
    int m = param(params, "m", 1, 1, name);
    int n = param(params, "n", 1, 1, name);
    if (m + n > kMaxVertices) throw ContractViolation("Kmn: more than 64 vertices");
    Builder b("K" + std::to_string(m) + "," + std::to_string(n));
    auto a = b.add_many("A", "", 0, m);
    auto c = b.add_many("B", "", 0, n);
    b.join(a, c);
    return b.finish();
  }
  if (name == "Pn" || name == "Cn" || name == "Kn") {
    int low = name == "Cn" ? 3 : 1;
    int n = param(params, "n", low, low, name);
    if (n > kMaxVertices) throw ContractViolation(name + ": more than 64 vertices");
    Builder b(std::string(1, name[0]) + std::to_string(n));
    auto v = b.add_many("V", "", 0, n);
    if (name == "Kn") {
      b.clique(v);
    } else {
      for (int i = 0; i + 1 < n; ++i) b.edge(v[i], v[i + 1]);
      if (name == "Cn") b.edge(v[n - 1], v[0]);
    }
    return b.finish();
  }
  throw ContractViolation("unknown family '" + name + "'");
}

std::string to_string(ExceptionCase c) {
  switch (c) {
    case ExceptionCase::Case1a: return "1a";
    case ExceptionCase::Case1b: return "1b";
    case ExceptionCase::Case2a: return "2a";
    case ExceptionCase::Case2b: return "2b";
    case ExceptionCase::Case3: return "3";
  }
  return "?";
}

std::optional<ExceptionCase> parse_exception_case(const std::string& text) {
  for (auto c : {ExceptionCase::Case1a, ExceptionCase::Case1b, ExceptionCase::Case2a,
                 ExceptionCase::Case2b, ExceptionCase::Case3}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

namespace {

enum Role { kS = 0, kT = 1, kD = 2 };

// allowed[a][b]: an edge of g between roles a and b may be absent from H.
using Allowed = std::array<std::array<bool, 3>, 3>;

Allowed allowed_for(bool s_rest, bool s_inside, bool rest_inside) {
  Allowed a{};
  a[kS][kD] = a[kD][kS] = s_rest;
  a[kS][kS] = s_inside;
  a[kD][kD] = rest_inside;
  return a;
}

class SpanningSearch {
public:
  SpanningSearch(const Graph& g, const FamilyInstance& h, const Allowed& allowed)
      : g_(g), h_(h.graph), allowed_(allowed), role_(static_cast<std::size_t>(h_.order())) {
    for (Vertex v = 0; v < h_.order(); ++v) {
      role_[static_cast<std::size_t>(v)] = h.s().contains(v) ? kS : h.t().contains(v) ? kT : kD;
    }
    // Place vertices in BFS order from a maximum-degree vertex so that most
    // steps are constrained by an already placed neighbor.
    VertexSet seen;
    for (int round = 0; round < h_.order(); ++round) {
      if (seen == h_.vertices()) break;
      Vertex start = -1;
      for (Vertex v : h_.vertices() - seen) {
        if (start < 0 || h_.degree(v) > h_.degree(start)) start = v;
      }
      std::vector<Vertex> queue{start};
      seen.insert(start);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order_.push_back(queue[i]);
        for (Vertex w : h_.neighbors(queue[i]) - seen) {
          seen.insert(w);
          queue.push_back(w);
        }
      }
    }
    image_.assign(static_cast<std::size_t>(h_.order()), -1);
  }

  bool run() {
    if (g_.order() != h_.order() || g_.size() < h_.size()) return false;
    return extend(0, VertexSet{});
  }

private:
  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order_.size()) return true;
    const Vertex a = order_[depth];
    const Role ra = role_[static_cast<std::size_t>(a)];
    for (Vertex u : g_.vertices() - used) {
      if (g_.degree(u) < h_.degree(a)) continue;
      // No allowed set touches T.
      if (ra == kT && g_.degree(u) != h_.degree(a)) continue;
      if (!consistent(a, ra, u, depth)) continue;
      image_[static_cast<std::size_t>(a)] = u;
      if (extend(depth + 1, used | VertexSet::single(u))) return true;
    }
    image_[static_cast<std::size_t>(a)] = -1;
    return false;
  }

  bool consistent(Vertex a, Role ra, Vertex u, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex b = order_[i];
      Vertex w = image_[static_cast<std::size_t>(b)];
      bool in_h = h_.has_edge(a, b);
      bool in_g = g_.has_edge(u, w);
      if (in_h && !in_g) return false;
      if (!in_h && in_g && !allowed_[ra][role_[static_cast<std::size_t>(b)]]) return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  Allowed allowed_;
  std::vector<Role> role_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
};

const FamilyInstance& cached(int index) {
  static const std::vector<FamilyInstance> all = [] {
    std::vector<FamilyInstance> out;
    for (int i = 0; i <= 11; ++i) out.push_back(build_family("H" + std::to_string(i)));
    return out;
  }();
  return all[static_cast<std::size_t>(index)];
}

bool any_spanning(const Graph& g, std::initializer_list<int> indices, const Allowed& allowed) {
  for (int i : indices) {
    if (SpanningSearch(g, cached(i), allowed).run()) return true;
  }
  return false;
}

}  // namespace

bool check_spanning_exception(const Graph& g, ExceptionCase c) {
  switch (c) {
    case ExceptionCase::Case1a:
      return any_spanning(g, {0}, allowed_for(false, false, false)) ||
             any_spanning(g, {1, 2, 3, 4}, allowed_for(true, false, false));
    case ExceptionCase::Case1b:
      return any_spanning(g, {1}, allowed_for(true, false, false));
    case ExceptionCase::Case2a:
    case ExceptionCase::Case3:
      return any_spanning(g, {5}, allowed_for(true, true, false));
    case ExceptionCase::Case2b:
      return any_spanning(g, {6, 7, 8, 9, 10, 11}, allowed_for(true, true, true));
  }
  return false;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    auto pat = [](const char* text) { return parse_pattern(text); };
    for (int i = 0; i <= 4; ++i) {
      CatalogEntry e{"H" + std::to_string(i), {}, Rational(1), {pat("P2+3P1")}, false};
      if (i == 1) e.free_of.push_back(pat("P3+2P1"));
      out.push_back(std::move(e));
    }
    out.push_back({"H5", {{"p", 5}}, Rational(6, 5),
                   {pat("P3+4P1"), pat("P2+5P1"), pat("6P1"), pat("7P1")}, false});
    for (int p = 6; p <= 9; ++p) {
      out.push_back({"H5", {{"p", p}}, Rational(7, 6), {pat("7P1")}, false});
    }
    for (int i = 6; i <= 11; ++i) {
      out.push_back({"H" + std::to_string(i), {}, Rational(7, 6), {pat("P2+5P1")}, false});
    }
    for (int p = 3; p <= 8; ++p) {
      out.push_back({"H12", {{"p", p}}, Rational(1), {pat("5P1"), pat("P4+2P1")}, false});
    }
    for (int n = 2; n <= 6; ++n) {
      out.push_back({"Kmn", {{"m", n}, {"n", n - 1}}, Rational(n - 1, n),
                     {pat("P4"), pat("P5"), pat("P4+P1"), pat("P3+2P1"), pat("P2+3P1")}, false});
    }
    return out;
  }();
  return entries;
}

}  // namespace factorlab
