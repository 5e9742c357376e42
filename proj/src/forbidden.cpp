#include "factorlab/forbidden.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "factorlab/error.hpp"

namespace factorlab {

LinearForestPattern::LinearForestPattern(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ContractViolation("linear forest needs at least one path");
  for (int p : parts_) {
    if (p < 1) throw ContractViolation("path order must be at least 1");
  }
  if (order() > kMaxVertices) throw ContractViolation("linear forest larger than 64 vertices");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int LinearForestPattern::order() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string LinearForestPattern::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += 'P' + std::to_string(parts_[i]);
    i = j;
  }
  return out;
}

LinearForestPattern parse_pattern(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_number = [&](const char* what) {
    std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > kMaxVertices) throw ParseError(std::string("pattern: ") + what + " too large", start);
      ++pos;
    }
    if (start == pos) return -1L;
    return value;
  };

  while (true) {
    skip_space();
    std::size_t term_start = pos;
    long multiplier = read_number("multiplier");
    if (multiplier == 0) throw ParseError("pattern: multiplier must be positive", term_start);
    if (multiplier < 0) multiplier = 1;
    skip_space();
    if (pos >= text.size() || (text[pos] != 'P' && text[pos] != 'p')) {
      throw ParseError("pattern: expected 'P'", pos);
    }
    ++pos;
    std::size_t order_pos = pos;
    long order = read_number("path order");
    if (order < 0) throw ParseError("pattern: expected path order", order_pos);
    if (order == 0) throw ParseError("pattern: path order 0", order_pos);
    if (static_cast<long>(parts.size()) + multiplier > kMaxVertices) {
      throw ParseError("pattern: too many parts", term_start);
    }
    parts.insert(parts.end(), static_cast<std::size_t>(multiplier), static_cast<int>(order));
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '+') throw ParseError("pattern: expected '+'", pos);
    ++pos;
  }
  if (std::accumulate(parts.begin(), parts.end(), 0) > kMaxVertices) {
    throw ParseError("pattern: more than 64 vertices", 0);
  }
  return LinearForestPattern(std::move(parts));
}

std::string Embedding::to_string() const {
  std::string out;
  for (const auto& path : paths) {
    if (!out.empty()) out += "; ";
    out += 'P' + std::to_string(path.size()) + ": ";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) out += '-';
      out += std::to_string(path[i]);
    }
  }
  return out;
}

bool is_induced_embedding(const Graph& g, const Embedding& e) {
  VertexSet image;
  std::size_t count = 0;
  for (const auto& path : e.paths) {
    for (Vertex v : path) {
      if (v < 0 || v >= g.order()) return false;
      image.insert(v);
      ++count;
    }
  }
  if (static_cast<std::size_t>(image.size()) != count) return false;

  int required = 0;
  for (const auto& path : e.paths) {
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (!g.has_edge(path[i - 1], path[i])) return false;
      ++required;
    }
  }
  return edges_inside(g, image) == required;
}

namespace {

class InducedSearch {
public:
  InducedSearch(const Graph& g, const LinearForestPattern& r) : g_(g), parts_(r.parts()) {
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      for (int k = 0; k < parts_[p]; ++k) slots_.push_back({static_cast<int>(p), k});
    }
    placed_.reserve(slots_.size());
  }

  std::optional<Embedding> run() {
    if (static_cast<int>(slots_.size()) > g_.order()) return std::nullopt;
    if (!extend(0, VertexSet{})) return std::nullopt;
    Embedding e;
    std::size_t at = 0;
    for (int len : parts_) {
      e.paths.emplace_back(placed_.begin() + static_cast<std::ptrdiff_t>(at),
                           placed_.begin() + static_cast<std::ptrdiff_t>(at + len));
      at += static_cast<std::size_t>(len);
    }
    return e;
  }

private:
  struct Slot {
    int part;
    int offset;
  };

  // blocked: closed neighborhoods of every placed vertex except the last one.
  bool extend(std::size_t depth, VertexSet blocked) {
    if (depth == slots_.size()) return true;
    const Slot slot = slots_[depth];
    const int len = parts_[static_cast<std::size_t>(slot.part)];

    VertexSet candidates;
    VertexSet next_blocked = blocked;
    if (!placed_.empty()) next_blocked |= g_.closed_neighbors(placed_.back());
    if (slot.offset == 0) {
      candidates = g_.vertices() - next_blocked;
      // Equal-length parts appear in increasing order of first vertex.
      if (slot.part > 0 && parts_[static_cast<std::size_t>(slot.part - 1)] == len) {
        Vertex prev_first = placed_[depth - static_cast<std::size_t>(len)];
        candidates -= VertexSet::full(prev_first + 1);
      }
    } else {
      candidates = g_.neighbors(placed_.back()) - blocked;
    }
    if (slot.offset == len - 1 && len >= 2) {
      // A path is listed with its smaller endpoint first.
      Vertex start = placed_[depth - static_cast<std::size_t>(len - 1)];
      candidates -= VertexSet::full(start + 1);
    }

    for (Vertex v : candidates) {
      placed_.push_back(v);
      if (extend(depth + 1, next_blocked)) return true;
      placed_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> parts_;
  std::vector<Slot> slots_;
  std::vector<Vertex> placed_;
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& g, const LinearForestPattern& r) {
  return InducedSearch(g, r).run();
}

bool is_r_free(const Graph& g, const LinearForestPattern& r) {
  return !find_induced(g, r).has_value();
}

const std::vector<LinearForestPattern>& small_linear_forests() {
  static const std::vector<LinearForestPattern> all = [] {
    std::vector<LinearForestPattern> out;
    std::vector<int> current;
    std::function<void(int, int)> partitions = [&](int remaining, int cap) {
      if (remaining == 0) {
        out.emplace_back(current);
        return;
      }
      for (int p = std::min(remaining, cap); p >= 1; --p) {
        current.push_back(p);
        partitions(remaining - p, p);
        current.pop_back();
      }
    };
    for (int order = 5; order <= 7; ++order) partitions(order, order);
    return out;
  }();
  return all;
}

}  // namespace factorlab
