#pragma once

// Rows, changes and place notation for change ringing on up to nine bells.
//
// A Row is stored place-indexed: bells_[p] is the bell struck in place p+1.
// Changes act on places; relabellings (see groups.hpp) act on bell values.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ringhcp {

inline constexpr int kMaxBells = 9;
inline constexpr int kTriples = 7;

class NotationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Parity { even, odd };

class Row {
 public:
  // Rounds on seven bells.
  Row() : size_(kTriples) {
    for (int p = 0; p < kTriples; ++p) bells_[p] = static_cast<std::uint8_t>(p + 1);
  }

  static Row rounds(int n_bells = kTriples);
  // Parses "1325476". Throws NotationError unless the digits are a
  // permutation of 1..n.
  static Row parse(std::string_view text);
  // Inverse of rank(): the index-th row of n bells in lexicographic order.
  static Row unrank(int index, int n_bells = kTriples);

  int size() const { return size_; }
  // Bell in 0-based place p.
  int operator[](int p) const { return bells_[p]; }
  // 0-based place of bell b (1-based bell label).
  int place_of(int bell) const;

  std::string to_string() const;
  // Lexicographic index among all n! rows of the same size.
  int rank() const;

  void swap_places(int p) { std::swap(bells_[p], bells_[p + 1]); }
  void set(int p, int bell) { bells_[p] = static_cast<std::uint8_t>(bell); }

  bool is_permutation() const;

  friend bool operator==(const Row&, const Row&) = default;
  friend std::strong_ordering operator<=>(const Row& a, const Row& b) {
    return a.bells_ <=> b.bells_;
  }

 private:
  std::array<std::uint8_t, kMaxBells> bells_{};
  std::uint8_t size_ = 0;
};

Parity parity(const Row& r);

// A change: the set of places left unchanged, every other place swapping
// with an adjacent one.
class Change {
 public:
  // fixed_mask bit p (0-based) set means place p+1 stays fixed.
  Change(std::uint16_t fixed_mask, int n_bells);

  // Accepts digits in any order or "x". Throws NotationError.
  static Change parse(std::string_view token, int n_bells = kTriples);
  static bool valid_mask(std::uint16_t fixed_mask, int n_bells);

  std::uint16_t fixed_mask() const { return fixed_; }
  int n_bells() const { return n_; }
  bool is_fixed(int place1) const { return (fixed_ >> (place1 - 1)) & 1u; }
  std::vector<int> fixed_places() const;

  // Ascending fixed places, "x" when nothing is fixed.
  std::string to_string() const;

  friend bool operator==(const Change&, const Change&) = default;

 private:
  std::uint16_t fixed_;
  std::uint8_t n_;
};

class PlaceNotation {
 public:
  PlaceNotation() = default;
  explicit PlaceNotation(std::vector<Change> changes) : changes_(std::move(changes)) {}

  const std::vector<Change>& changes() const { return changes_; }
  std::size_t size() const { return changes_.size(); }
  bool empty() const { return changes_.empty(); }
  const Change& operator[](std::size_t i) const { return changes_[i]; }

  std::string to_string() const;

  friend bool operator==(const PlaceNotation&, const PlaceNotation&) = default;

 private:
  std::vector<Change> changes_;
};

// Dot-separated tokens, e.g. "3.1.3.1.3.7". The empty string is the empty
// sequence.
PlaceNotation parse_place_notation(std::string_view text, int n_bells = kTriples);

Row apply_change(const Row& r, const Change& c);
Row apply_sequence(Row r, const PlaceNotation& pn);

// If `next` differs from `prev` by a valid change, returns it.
std::optional<Change> change_between(const Row& prev, const Row& next);

// Number of changes, cycling through pn from start, until start recurs.
std::size_t plain_course_length(const PlaceNotation& pn, const Row& start);

int factorial(int n);

}  // namespace ringhcp
