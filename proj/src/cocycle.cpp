#include "tga/cocycle.hpp"

#include <bit>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tga {

const Scalar& fourth_root_value(int e) {
  static const std::array<Scalar, 4> roots = {Scalar(1), Scalar::i(), Scalar(-1),
                                              -Scalar::i()};
  return roots[((e % 4) + 4) % 4];
}

namespace {

int exponent_of(const Scalar& s) {
  for (int e = 0; e < 4; ++e)
    if (s == fourth_root_value(e)) return e;
  throw std::invalid_argument("Cocycle: value " + s.str() + " is not in {1,-1,i,-i}");
}

}  // namespace

Cocycle::Cocycle(int rank, std::vector<uint8_t> exps)
    : rank_(rank), exps_(std::move(exps)) {
  validate();
}

Cocycle::Cocycle(int rank, std::vector<uint8_t> exps, AlreadyValid)
    : rank_(rank), exps_(std::move(exps)) {}

Cocycle::Cocycle(int rank, std::vector<Scalar> table) : rank_(rank) {
  if (rank < 0 || rank > 12) throw std::invalid_argument("Cocycle: rank out of range");
  size_t n = size_t(1) << (2 * rank);
  if (table.size() != n) throw std::invalid_argument("Cocycle: table size mismatch");
  exps_.resize(n);
  for (size_t k = 0; k < n; ++k) exps_[k] = static_cast<uint8_t>(exponent_of(table[k]));
  validate();
}

void Cocycle::validate() const {
  if (!identity_holds()) throw std::invalid_argument("Cocycle: invariants fail");
}

bool Cocycle::identity_holds() const noexcept {
  uint32_t n = order();
  for (uint32_t a = 0; a < n; ++a)
    if (exponent(a, 0) != 0 || exponent(0, a) != 0) return false;
  // cocycle identity c(a,b) c(ab,d) = c(b,d) c(a,bd), all triples
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      int left_ab = exponent(a, b);
      for (uint32_t d = 0; d < n; ++d) {
        int lhs = left_ab + exponent(a ^ b, d);
        int rhs = exponent(b, d) + exponent(a, b ^ d);
        if ((lhs - rhs) % 4 != 0) return false;
      }
    }
  return true;
}

Cocycle Cocycle::trivial(int rank) {
  return Cocycle(rank, std::vector<uint8_t>(size_t(1) << (2 * rank), 0));
}

Cocycle Cocycle::from_bicharacter(const std::vector<std::vector<int>>& b) {
  int rank = static_cast<int>(b.size());
  for (const auto& row : b)
    if (static_cast<int>(row.size()) != rank)
      throw std::invalid_argument("Cocycle: bicharacter matrix is not square");
  uint32_t n = 1u << rank;
  std::vector<uint8_t> exps(size_t(n) * n);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t bb = 0; bb < n; ++bb) {
      int e = 0;
      for (int i = 0; i < rank; ++i) {
        if (!(a & (1u << i))) continue;
        for (int j = 0; j < rank; ++j)
          if ((bb & (1u << j)) && (b[i][j] & 1)) e ^= 1;
      }
      exps[(size_t(a) << rank) | bb] = static_cast<uint8_t>(e ? 2 : 0);
    }
  return Cocycle(rank, std::move(exps));
}

const Scalar& Cocycle::value(uint32_t a, uint32_t b) const {
  return fourth_root_value(exponent(a, b));
}

const Scalar& Cocycle::value_inverse(uint32_t a, uint32_t b) const {
  return fourth_root_value(4 - exponent(a, b));
}

Cocycle Cocycle::multiplied(const Cocycle& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("Cocycle: rank mismatch");
  std::vector<uint8_t> exps(exps_.size());
  for (size_t k = 0; k < exps_.size(); ++k)
    exps[k] = static_cast<uint8_t>((exps_[k] + o.exps_[k]) % 4);
  return Cocycle(rank_, std::move(exps), AlreadyValid{});
}

Cocycle Cocycle::inversed() const {
  std::vector<uint8_t> exps(exps_.size());
  for (size_t k = 0; k < exps_.size(); ++k)
    exps[k] = static_cast<uint8_t>((4 - exps_[k]) % 4);
  return Cocycle(rank_, std::move(exps), AlreadyValid{});
}

Cocycle Cocycle::paired_with_inverse() const {
  int rank2 = 2 * rank_;
  if (rank2 > 12) throw std::invalid_argument("Cocycle: paired rank too large");
  uint32_t n = order();
  std::vector<uint8_t> exps(size_t(1) << (2 * rank2));
  for (uint32_t a1 = 0; a1 < n; ++a1)
    for (uint32_t b1 = 0; b1 < n; ++b1) {
      uint32_t x = (a1 << rank_) | b1;
      for (uint32_t a2 = 0; a2 < n; ++a2)
        for (uint32_t b2 = 0; b2 < n; ++b2) {
          uint32_t y = (a2 << rank_) | b2;
          int e = exponent(a1, a2) + 4 - exponent(b1, b2);
          exps[(size_t(x) << rank2) | y] = static_cast<uint8_t>(e % 4);
        }
    }
  return Cocycle(rank2, std::move(exps), AlreadyValid{});
}

Cocycle Cocycle::restricted(const std::vector<uint32_t>& gens) const {
  int r = static_cast<int>(gens.size());
  uint32_t n = 1u << r;
  // expansion table and injectivity check
  std::vector<uint32_t> expand(n, 0);
  std::vector<bool> seen(order(), false);
  for (uint32_t x = 0; x < n; ++x) {
    uint32_t m = 0;
    for (int i = 0; i < r; ++i)
      if (x & (1u << i)) m ^= gens[i];
    if (m >= order()) throw std::invalid_argument("Cocycle: generator mask out of range");
    if (seen[m]) throw std::invalid_argument("Cocycle: generators are not independent");
    seen[m] = true;
    expand[x] = m;
  }
  std::vector<uint8_t> exps(size_t(n) * n);
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y)
      exps[(size_t(x) << r) | y] = static_cast<uint8_t>(exponent(expand[x], expand[y]));
  return Cocycle(r, std::move(exps), AlreadyValid{});
}

std::vector<uint32_t> Cocycle::radical() const {
  std::vector<uint32_t> rad;
  uint32_t n = order();
  for (uint32_t g = 0; g < n; ++g) {
    bool regular = true;
    for (uint32_t h = 0; h < n && regular; ++h)
      regular = exponent(g, h) == exponent(h, g);
    if (regular) rad.push_back(g);
  }
  return rad;
}

Cocycle::Wedderburn Cocycle::wedderburn_profile() const {
  Wedderburn w;
  auto rad = radical();
  w.block_count = rad.size();
  w.block_dim = order() / rad.size();
  uint64_t root = 1;
  while (root * root < w.block_dim) ++root;
  w.irrep_dim = root;
  w.consistent = root * root == w.block_dim;
  return w;
}

namespace {

uint32_t parse_bitvector(const std::string& tok, int* rank_out) {
  uint32_t mask = 0;
  for (size_t j = 0; j < tok.size(); ++j) {
    if (tok[j] == '1')
      mask |= 1u << j;
    else if (tok[j] != '0')
      throw std::invalid_argument("Cocycle::parse: bad bit-vector '" + tok + "'");
  }
  if (rank_out) *rank_out = static_cast<int>(tok.size());
  return mask;
}

int parse_entry(const std::string& tok) {
  if (tok == "1") return 0;
  if (tok == "i") return 1;
  if (tok == "-1") return 2;
  if (tok == "-i") return 3;
  throw std::invalid_argument("Cocycle::parse: bad entry '" + tok + "'");
}

std::vector<std::string> tokenize_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) return toks;
  }
  return {};
}

}  // namespace

Cocycle Cocycle::parse(std::istream& in) {
  auto header = tokenize_line(in);
  if (header.size() != 1 || (header[0] != "table" && header[0] != "bicharacter"))
    throw std::invalid_argument("Cocycle::parse: expected 'table' or 'bicharacter'");

  if (header[0] == "bicharacter") {
    std::vector<std::vector<int>> b;
    for (;;) {
      auto toks = tokenize_line(in);
      if (toks.empty()) break;
      if (toks.size() != 1)
        throw std::invalid_argument("Cocycle::parse: one 0/1 row per line");
      std::vector<int> row;
      for (char ch : toks[0]) {
        if (ch != '0' && ch != '1')
          throw std::invalid_argument("Cocycle::parse: bad matrix entry");
        row.push_back(ch - '0');
      }
      b.push_back(std::move(row));
    }
    if (b.empty()) throw std::invalid_argument("Cocycle::parse: empty matrix");
    return from_bicharacter(b);
  }

  auto cols_line = tokenize_line(in);
  if (cols_line.size() < 2)
    throw std::invalid_argument("Cocycle::parse: missing column header");
  int rank = 0;
  std::vector<uint32_t> col_masks;
  for (size_t k = 1; k < cols_line.size(); ++k)
    col_masks.push_back(parse_bitvector(cols_line[k], &rank));
  uint32_t n = 1u << rank;
  if (col_masks.size() != n)
    throw std::invalid_argument("Cocycle::parse: wrong number of columns");

  std::vector<uint8_t> exps(size_t(n) * n, 255);
  std::vector<bool> row_seen(n, false);
  for (uint32_t r = 0; r < n; ++r) {
    auto row = tokenize_line(in);
    if (row.size() != n + 1)
      throw std::invalid_argument("Cocycle::parse: wrong number of row entries");
    uint32_t row_mask = parse_bitvector(row[0], nullptr);
    if (row_mask >= n || row_seen[row_mask])
      throw std::invalid_argument("Cocycle::parse: bad or repeated row header");
    row_seen[row_mask] = true;
    for (uint32_t c = 0; c < n; ++c)
      exps[(size_t(row_mask) << rank) | col_masks[c]] =
          static_cast<uint8_t>(parse_entry(row[c + 1]));
  }
  for (uint8_t e : exps)
    if (e == 255) throw std::invalid_argument("Cocycle::parse: missing table entries");
  return Cocycle(rank, std::move(exps));
}

Cocycle coboundary(int rank, const std::vector<Scalar>& q) {
  uint32_t n = 1u << rank;
  if (q.size() != n) throw std::invalid_argument("coboundary: q size mismatch");
  if (!q[0].is_one()) throw std::invalid_argument("coboundary: q(1) must be 1");
  std::vector<int> qe(n);
  for (uint32_t k = 0; k < n; ++k) {
    if (q[k].is_zero()) throw std::invalid_argument("coboundary: q values must be nonzero");
    qe[k] = exponent_of(q[k]);
  }
  std::vector<uint8_t> exps(size_t(n) * n);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      exps[(size_t(a) << rank) | b] =
          static_cast<uint8_t>(((qe[a] + qe[b] + 4 - qe[a ^ b]) % 4));
  return Cocycle(rank, std::move(exps));
}

}  // namespace tga
