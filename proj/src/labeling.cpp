#include "ridom/labeling.hpp"

#include <bit>
#include <stdexcept>

namespace ridom {

int RikLabeling::weight() const {
  int w = 0;
  for (auto l : labels) w += l != 0;
  return w;
}

std::uint64_t RikLabeling::class_mask(int c) const {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (labels[v] == c) mask |= bit(static_cast<int>(v));
  return mask;
}

std::string RikLabeling::to_string() const {
  std::string out;
  if (k <= 9) {
    for (auto l : labels) out.push_back(static_cast<char>('0' + l));
  } else {
    out.push_back('[');
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (v) out.push_back(',');
      out += std::to_string(static_cast<int>(labels[v]));
    }
    out.push_back(']');
  }
  return out;
}

static void check_rik_shape(const Graph& g, const RikLabeling& f) {
  if (f.k < 1) throw std::invalid_argument("labeling needs k >= 1");
  if (static_cast<int>(f.labels.size()) != g.order())
    throw std::invalid_argument("label vector length != graph order");
  for (auto l : f.labels)
    if (l > f.k) throw std::invalid_argument("label exceeds k");
}

bool verify_rik(const Graph& g, const RikLabeling& f) {
  check_rik_shape(g, f);
  const int n = g.order();
  std::uint64_t cls[256] = {};  // labels are bytes
  for (int v = 0; v < n; ++v) cls[f.labels[v]] |= bit(v);
  for (int v = 0; v < n; ++v)
    if (f.labels[v] != 0 && (g.neighbors(v) & cls[f.labels[v]]))
      return false;  // color class not independent
  if (cls[0] != 0 && f.k > kMaxVertices - 1)
    return false;  // no vertex has enough neighbors for that many colors
  for (std::uint64_t m = cls[0]; m;) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    for (int c = 1; c <= f.k; ++c)
      if ((g.neighbors(v) & cls[c]) == 0) return false;
  }
  return true;
}

int RainbowSetLabeling::weight() const {
  int w = 0;
  for (auto s : sets) w += std::popcount(static_cast<unsigned>(s));
  return w;
}

std::uint64_t RainbowSetLabeling::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < sets.size(); ++v)
    if (sets[v]) mask |= bit(static_cast<int>(v));
  return mask;
}

std::string RainbowSetLabeling::to_string() const {
  std::string out;
  for (auto s : sets) {
    out.push_back('{');
    bool first = true;
    for (int c = 1; c <= k; ++c)
      if ((s >> (c - 1)) & 1) {
        if (!first) out.push_back(',');
        out += std::to_string(c);
        first = false;
      }
    out.push_back('}');
  }
  return out;
}

static void check_rk_shape(const Graph& g, const RainbowSetLabeling& f) {
  if (f.k < 1 || f.k > 8)
    throw std::invalid_argument("set labeling needs 1 <= k <= 8");
  if (static_cast<int>(f.sets.size()) != g.order())
    throw std::invalid_argument("label vector length != graph order");
  const unsigned full = (1u << f.k) - 1;
  for (auto s : f.sets)
    if (s & ~full) throw std::invalid_argument("label set outside [k]");
}

bool verify_rk(const Graph& g, const RainbowSetLabeling& f) {
  check_rk_shape(g, f);
  const unsigned full = (1u << f.k) - 1;
  for (int v = 0; v < g.order(); ++v) {
    if (f.sets[v]) continue;
    unsigned seen = 0;
    for (std::uint64_t m = g.neighbors(v); m;) {
      const int u = std::countr_zero(m);
      m &= m - 1;
      seen |= f.sets[u];
    }
    if (seen != full) return false;
  }
  return true;
}

bool verify_irk(const Graph& g, const RainbowSetLabeling& f) {
  check_rk_shape(g, f);
  const std::uint64_t support = f.support_mask();
  for (std::uint64_t m = support; m;) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    if (g.neighbors(v) & support) return false;
  }
  return verify_rk(g, f);
}

}  // namespace ridom
