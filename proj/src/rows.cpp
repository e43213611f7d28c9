#include "ringhcp/rows.hpp"

#include <algorithm>
#include <bit>

namespace ringhcp {

int factorial(int n) {
  int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Row Row::rounds(int n_bells) {
  if (n_bells < 1 || n_bells > kMaxBells) {
    throw NotationError("unsupported bell count " + std::to_string(n_bells));
  }
  Row r;
  r.size_ = static_cast<std::uint8_t>(n_bells);
  for (int p = 0; p < n_bells; ++p) r.bells_[p] = static_cast<std::uint8_t>(p + 1);
  return r;
}

Row Row::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxBells) {
    throw NotationError("bad row '" + std::string(text) + "'");
  }
  Row r = rounds(static_cast<int>(text.size()));
  for (std::size_t p = 0; p < text.size(); ++p) {
    char ch = text[p];
    if (ch < '1' || ch > '9') throw NotationError("bad row '" + std::string(text) + "'");
    r.bells_[p] = static_cast<std::uint8_t>(ch - '0');
  }
  if (!r.is_permutation()) {
    throw NotationError("row '" + std::string(text) + "' is not a permutation");
  }
  return r;
}

Row Row::unrank(int index, int n_bells) {
  Row r = rounds(n_bells);
  std::array<std::uint8_t, kMaxBells> pool = r.bells_;
  int remaining = n_bells;
  for (int p = 0; p < n_bells; ++p) {
    int f = factorial(remaining - 1);
    int d = index / f;
    index %= f;
    r.bells_[p] = pool[d];
    std::copy(pool.begin() + d + 1, pool.begin() + remaining, pool.begin() + d);
    --remaining;
  }
  return r;
}

int Row::place_of(int bell) const {
  for (int p = 0; p < size_; ++p) {
    if (bells_[p] == bell) return p;
  }
  return -1;
}

std::string Row::to_string() const {
  std::string s(size_, '0');
  for (int p = 0; p < size_; ++p) s[p] = static_cast<char>('0' + bells_[p]);
  return s;
}

int Row::rank() const {
  int index = 0;
  for (int p = 0; p < size_; ++p) {
    int smaller = 0;
    for (int q = p + 1; q < size_; ++q) smaller += bells_[q] < bells_[p];
    index += smaller * factorial(size_ - 1 - p);
  }
  return index;
}

bool Row::is_permutation() const {
  unsigned seen = 0;
  for (int p = 0; p < size_; ++p) {
    int b = bells_[p];
    if (b < 1 || b > size_) return false;
    seen |= 1u << b;
  }
  return std::popcount(seen) == size_;
}

Parity parity(const Row& r) {
  // Sign via cycle decomposition: a cycle of length L is L-1 transpositions.
  unsigned visited = 0;
  int transpositions = 0;
  for (int p = 0; p < r.size(); ++p) {
    if (visited >> p & 1u) continue;
    int len = 0;
    for (int q = p; !(visited >> q & 1u); q = r[q] - 1) {
      visited |= 1u << q;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

Change::Change(std::uint16_t fixed_mask, int n_bells)
    : fixed_(fixed_mask), n_(static_cast<std::uint8_t>(n_bells)) {
  if (!valid_mask(fixed_mask, n_bells)) {
    throw NotationError("fixed places do not leave adjacent swapping pairs");
  }
}

bool Change::valid_mask(std::uint16_t fixed_mask, int n_bells) {
  if (n_bells < 1 || n_bells > kMaxBells) return false;
  if (fixed_mask >> n_bells) return false;
  int run = 0;
  for (int p = 0; p < n_bells; ++p) {
    if (fixed_mask >> p & 1u) {
      if (run % 2) return false;
      run = 0;
    } else {
      ++run;
    }
  }
  return run % 2 == 0;
}

Change Change::parse(std::string_view token, int n_bells) {
  if (token.empty()) throw NotationError("empty place notation token");
  if (token == "x" || token == "X" || token == "-") {
    if (n_bells % 2) {
      throw NotationError("'x' is only valid for an even number of bells");
    }
    return Change(0, n_bells);
  }
  std::uint16_t mask = 0;
  for (char ch : token) {
    if (ch < '1' || ch > '9') {
      throw NotationError("bad place notation token '" + std::string(token) + "'");
    }
    int place = ch - '0';
    if (place > n_bells) {
      throw NotationError("place " + std::string(1, ch) + " exceeds " +
                          std::to_string(n_bells) + " bells");
    }
    mask |= static_cast<std::uint16_t>(1u << (place - 1));
  }
  if (!valid_mask(mask, n_bells)) {
    throw NotationError("token '" + std::string(token) +
                        "' leaves an odd run of non-fixed places");
  }
  return Change(mask, n_bells);
}

std::vector<int> Change::fixed_places() const {
  std::vector<int> out;
  for (int p = 1; p <= n_; ++p) {
    if (is_fixed(p)) out.push_back(p);
  }
  return out;
}

std::string Change::to_string() const {
  if (fixed_ == 0) return "x";
  std::string s;
  for (int p : fixed_places()) s.push_back(static_cast<char>('0' + p));
  return s;
}

std::string PlaceNotation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < changes_.size(); ++i) {
    if (i) s.push_back('.');
    s += changes_[i].to_string();
  }
  return s;
}

PlaceNotation parse_place_notation(std::string_view text, int n_bells) {
  std::vector<Change> changes;
  if (text.empty()) return PlaceNotation{};
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string_view token =
        text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    changes.push_back(Change::parse(token, n_bells));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return PlaceNotation(std::move(changes));
}

Row apply_change(const Row& r, const Change& c) {
  if (r.size() != c.n_bells()) {
    throw NotationError("change for " + std::to_string(c.n_bells()) + " bells applied to row " +
                        r.to_string());
  }
  Row out = r;
  for (int p = 0; p < r.size();) {
    if (c.is_fixed(p + 1)) {
      ++p;
    } else {
      out.swap_places(p);
      p += 2;
    }
  }
  return out;
}

Row apply_sequence(Row r, const PlaceNotation& pn) {
  for (const Change& c : pn.changes()) r = apply_change(r, c);
  return r;
}

std::optional<Change> change_between(const Row& prev, const Row& next) {
  if (prev.size() != next.size()) return std::nullopt;
  std::uint16_t mask = 0;
  for (int p = 0; p < prev.size();) {
    if (prev[p] == next[p]) {
      mask |= static_cast<std::uint16_t>(1u << p);
      ++p;
    } else if (p + 1 < prev.size() && prev[p] == next[p + 1] && prev[p + 1] == next[p]) {
      p += 2;
    } else {
      return std::nullopt;
    }
  }
  return Change(mask, prev.size());
}

std::size_t plain_course_length(const PlaceNotation& pn, const Row& start) {
  if (pn.empty()) throw std::invalid_argument("plain_course_length: empty notation");
  const std::size_t limit = static_cast<std::size_t>(factorial(start.size())) * pn.size();
  Row r = start;
  for (std::size_t n = 1; n <= limit; ++n) {
    r = apply_change(r, pn[(n - 1) % pn.size()]);
    if (r == start) return n;
  }
  throw std::logic_error("plain course did not close within " + std::to_string(limit) +
                         " changes");
}

}  // namespace ringhcp
