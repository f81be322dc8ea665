#include "tga/perm.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tga {

void check_same_degree(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()));
}

Perm::Perm(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("Perm: degree out of range");
  for (int k = 0; k < kMaxDegree; ++k) img_[k] = static_cast<uint8_t>(k + 1);
}

Perm Perm::from_images(const std::vector<int>& images) {
  Perm p(static_cast<int>(images.size()));
  std::array<bool, kMaxDegree> seen{};
  for (size_t k = 0; k < images.size(); ++k) {
    int v = images[k];
    if (v < 1 || v > p.degree_ || seen[v - 1])
      throw std::invalid_argument("Perm: image word is not a bijection");
    seen[v - 1] = true;
    p.img_[k] = static_cast<uint8_t>(v);
  }
  return p;
}

Perm Perm::transposition(int degree, int a, int b) {
  Perm p(degree);
  if (a < 1 || b < 1 || a > degree || b > degree || a == b)
    throw std::invalid_argument("Perm: bad transposition");
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Perm Perm::parse(std::string_view text, int degree) {
  Perm result(degree);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos, 2) == "id") {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("Perm::parse: trailing input");
    return result;
  }
  std::vector<Perm> cycles;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("Perm::parse: expected '('");
    ++pos;
    std::vector<int> pts;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw std::invalid_argument("Perm::parse: unclosed cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("Perm::parse: expected point");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v < 1 || v > degree)
        throw std::invalid_argument("Perm::parse: point out of range");
      pts.push_back(v);
    }
    std::array<bool, kMaxDegree> used{};
    Perm c(degree);
    for (size_t k = 0; k < pts.size(); ++k) {
      int from = pts[k];
      int to = pts[(k + 1) % pts.size()];
      if (used[from - 1])
        throw std::invalid_argument("Perm::parse: repeated point in cycle");
      used[from - 1] = true;
      c.img_[from - 1] = static_cast<uint8_t>(to);
    }
    cycles.push_back(from_images(std::vector<int>(c.img_.begin(), c.img_.begin() + degree)));
  }
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) result = *it * result;
  return result;
}

bool Perm::is_identity() const {
  for (int k = 0; k < degree_; ++k)
    if (img_[k] != k + 1) return false;
  return true;
}

Perm Perm::operator*(const Perm& q) const {
  check_same_degree(*this, q);
  Perm r(degree_);
  for (int k = 0; k < degree_; ++k) r.img_[k] = img_[q.img_[k] - 1];
  return r;
}

Perm Perm::inverse() const {
  Perm r(degree_);
  for (int k = 0; k < degree_; ++k) r.img_[img_[k] - 1] = static_cast<uint8_t>(k + 1);
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const { return g * (*this) * g.inverse(); }

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> seen{};
  for (int start = 1; start <= degree_; ++start) {
    if (seen[start - 1] || img_[start - 1] == start) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      seen[x - 1] = true;
      cyc.push_back(x);
      x = img_[x - 1];
    } while (x != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> type;
  int moved = 0;
  for (const auto& c : cycles()) {
    type.push_back(static_cast<int>(c.size()));
    moved += static_cast<int>(c.size());
  }
  for (int k = moved; k < degree_; ++k) type.push_back(1);
  std::sort(type.rbegin(), type.rend());
  return type;
}

int Perm::parity() const {
  int odd = 0;
  for (const auto& c : cycles()) odd += static_cast<int>(c.size()) - 1;
  return odd % 2;
}

Perm Perm::padded(int new_degree) const {
  if (new_degree < degree_) throw std::invalid_argument("Perm::padded: smaller degree");
  Perm r(new_degree);
  std::copy(img_.begin(), img_.begin() + degree_, r.img_.begin());
  return r;
}

Perm Perm::restricted(int new_degree) const {
  if (new_degree > degree_) throw std::invalid_argument("Perm::restricted: larger degree");
  Perm r(new_degree);
  for (int k = 0; k < degree_; ++k) {
    if (k < new_degree && img_[k] <= new_degree) {
      r.img_[k] = img_[k];
    } else if (img_[k] != k + 1) {
      throw std::invalid_argument("Perm::restricted: moves a point beyond " +
                                  std::to_string(new_degree));
    }
  }
  return r;
}

uint64_t Perm::key() const {
  // 12 nibbles; image values are 1..12 so they always fit after the -1 shift.
  uint64_t k = 0;
  for (int j = 0; j < kMaxDegree; ++j)
    k |= static_cast<uint64_t>(img_[j] - 1) << (4 * j);
  return k;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty()) return "id";
  std::string s;
  for (const auto& c : cs) {
    s += "(";
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) s += " ";
      s += std::to_string(c[k]);
    }
    s += ")";
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.str(); }

}  // namespace tga
