#include "tnn_cells/minors.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tnn {

MinorId::MinorId(IndexSet r, IndexSet c) : rows(std::move(r)), cols(std::move(c)) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs |rows| = |cols|");
  if (rows.empty()) throw std::invalid_argument("the empty minor is never stored");
}

std::string MinorId::str() const { return "[" + rows.str() + "|" + cols.str() + "]"; }

namespace {

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc()) throw std::invalid_argument("bad index list: " + std::string(s));
    pos = static_cast<std::size_t>(ptr - s.data());
    out.push_back(v);
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos < s.size()) {
      if (s[pos] != ',') throw std::invalid_argument("bad index list: " + std::string(s));
      ++pos;
    }
  }
  return out;
}

}  // namespace

MinorId MinorId::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("minor must look like [1,2|1,3]: " + std::string(text));
  }
  text = text.substr(1, text.size() - 2);
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("minor is missing '|'");
  return {IndexSet(parse_int_list(text.substr(0, bar))), IndexSet(parse_int_list(text.substr(bar + 1)))};
}

std::uint32_t to_mask(const IndexSet& s) {
  std::uint32_t m = 0;
  for (int v : s) {
    if (v > 32) throw std::out_of_range("index too large for mask");
    m |= 1U << (v - 1);
  }
  return m;
}

IndexSet from_mask(std::uint32_t mask) {
  std::vector<int> v;
  for (; mask; mask &= mask - 1) v.push_back(__builtin_ctz(mask) + 1);
  return IndexSet(std::move(v));
}

void check_minor_bounds(int rows, int cols, const MinorId& id) {
  if (id.rows.empty() || id.rows.back() > rows || id.cols.back() > cols) {
    throw std::out_of_range("minor " + id.str() + " outside " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

MinorFamily::MinorFamily(int m, int p, std::vector<MinorId> members) : m_(m), p_(p), members_(std::move(members)) {
  for (const MinorId& id : members_) check(id);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

void MinorFamily::check(const MinorId& id) const { check_minor_bounds(m_, p_, id); }

bool MinorFamily::contains(const MinorId& id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

void MinorFamily::insert(const MinorId& id) {
  check(id);
  auto it = std::lower_bound(members_.begin(), members_.end(), id);
  if (it == members_.end() || *it != id) members_.insert(it, id);
}

bool MinorFamily::is_subset_of(const MinorFamily& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

MinorFamily MinorFamily::transposed() const {
  std::vector<MinorId> out;
  out.reserve(members_.size());
  for (const MinorId& id : members_) out.push_back(id.transposed());
  return MinorFamily(p_, m_, std::move(out));
}

std::string MinorFamily::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) s += (k ? ", " : "") + members_[k].str();
  return s + "}";
}

std::string MinorFamily::canonical() const {
  std::string s = std::to_string(m_) + "x" + std::to_string(p_) + ":";
  for (const MinorId& id : members_) s += id.str();
  return s;
}

std::uint64_t MinorFamily::hash() const {
  // FNV-1a over the canonical serialization.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<MinorId> all_minor_ids(int m, int p) {
  if (m < 1 || p < 1) throw std::invalid_argument("all_minor_ids: m, p must be positive");
  std::vector<int> rows(static_cast<std::size_t>(m));
  std::vector<int> cols(static_cast<std::size_t>(p));
  for (int k = 0; k < m; ++k) rows[k] = k + 1;
  for (int k = 0; k < p; ++k) cols[k] = k + 1;
  std::vector<MinorId> out;
  for (int k = 1; k <= std::min(m, p); ++k) {
    for_each_subset(rows, k, [&](const IndexSet& I) {
      for_each_subset(cols, k, [&](const IndexSet& L) { out.emplace_back(I, L); });
    });
  }
  return out;
}

MinorFamily all_minors_family(int m, int p) { return MinorFamily(m, p, all_minor_ids(m, p)); }

MinorFamily vanishing_family_symbolic(const LaurentMatrix& m, std::uint64_t seed) {
  const int nv = m.rows() * m.cols();
  int vars = nv;
  if (m.rows() > 0 && m.cols() > 0) vars = m(0, 0).num_vars();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 1L << 30);
  std::vector<Rational> point;
  point.reserve(static_cast<std::size_t>(vars));
  for (int v = 0; v < vars; ++v) point.emplace_back(mpz_class(dist(rng)), mpz_class(dist(rng)));

  const RationalMatrix numeric = evaluate(m, point);
  const MinorTable<Rational> table(numeric);
  std::vector<MinorId> out;
  for (MinorId& id : all_minor_ids(m.rows(), m.cols())) {
    if (!table(id).is_zero()) continue;
    if (eval_minor(m, id).is_zero()) out.push_back(std::move(id));
  }
  return MinorFamily(m.rows(), m.cols(), std::move(out));
}

}  // namespace tnn
