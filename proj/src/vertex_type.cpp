#include "tilecover/vertex_type.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace tilecover {

VertexType::VertexType(std::vector<int> cycle) {
  if (cycle.empty()) throw std::invalid_argument("empty face cycle");
  for (int p : cycle)
    if (p < 3) throw std::invalid_argument("gon size below 3 in face cycle");
  std::vector<int> best = cycle;
  const std::size_t n = cycle.size();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<int> rot(n);
      for (std::size_t i = 0; i < n; ++i) rot[i] = cycle[(r + i) % n];
      best = std::min(best, rot);
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  cycle_ = std::move(best);
}

VertexType VertexType::parse(std::string_view text) {
  std::vector<int> cycle;
  std::size_t i = 0;
  auto read_int = [&](int& out) {
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), out);
    if (ec != std::errc()) throw std::invalid_argument("bad vertex type: " + std::string(text));
    i = static_cast<std::size_t>(ptr - text.data());
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '[' || ch == ']' || ch == ',' || ch == '.' || ch == ' ') {
      ++i;
      continue;
    }
    int gon = 0;
    int reps = 1;
    read_int(gon);
    if (i < text.size() && text[i] == '^') {
      ++i;
      read_int(reps);
    }
    if (reps < 1) throw std::invalid_argument("bad exponent in vertex type");
    cycle.insert(cycle.end(), static_cast<std::size_t>(reps), gon);
  }
  return VertexType(std::move(cycle));
}

std::vector<std::pair<int, int>> VertexType::runs() const {
  std::vector<std::pair<int, int>> out;
  for (int p : cycle_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  // The canonical rotation starts a run unless the cycle is constant.
  if (out.size() > 1 && out.front().first == out.back().first) {
    out.front().second += out.back().second;
    out.pop_back();
  }
  return out;
}

std::string VertexType::to_string() const {
  std::string s = "[";
  bool first = true;
  for (auto [gon, reps] : runs()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(gon);
    if (reps > 1) s += '^' + std::to_string(reps);
  }
  return s + ']';
}

std::string VertexType::compact() const {
  std::string s;
  for (int p : cycle_) s += std::to_string(p);
  return s;
}

std::string pair_to_string(const VertexType& first, const VertexType& second) {
  std::string a = first.to_string();
  std::string b = second.to_string();
  return a.substr(0, a.size() - 1) + ';' + b.substr(1);
}

}  // namespace tilecover
