#pragma once

// The 840 sixes of the triples extent and the call transition maps between
// six-ends.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringhcp/rows.hpp"

namespace ringhcp {

inline constexpr int kExtentRows = 5040;
inline constexpr int kSixCount = 840;
inline constexpr int kSixEndCount = 3 * kSixCount;

enum class Method { erin, stedman };
enum class Speed { none, slow, quick };

// Erin uses plain/bob; Stedman names the call after the speed of the six
// that is ending.
enum class Call { plain, bob, slow_plain, quick_plain, slow_bob, quick_bob };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);
std::string_view call_token(Call c);  // "p", "b", "sp", "qp", "sb", "qb"
Call parse_call(std::string_view token);
bool is_bob(Call c);
// Six changes: the call change followed by the internal changes of the
// next six.
const PlaceNotation& call_notation(Call c);
std::span<const Call> calls_for(Method m);
// Call of the given kind (plain/bob) leaving a six-end of the given speed.
Call call_for(Speed from, bool bob);
Speed speed_after(Call c);

struct Six {
  int id = 0;                  // 1..840
  std::array<Row, 6> members;  // from the smallest member, 3.1.3.1.3 order
  std::array<Row, 3> six_ends; // odd members, ascending
};

struct SixEndRef {
  int six_id = 0;  // 1..840
  int k = 0;       // 1..3
  Speed speed = Speed::none;

  int base_index() const { return (six_id - 1) * 3 + (k - 1); }
  friend bool operator==(const SixEndRef&, const SixEndRef&) = default;
  friend auto operator<=>(const SixEndRef&, const SixEndRef&) = default;
};

// The six containing r, canonical member order.
Six generate_six(const Row& r);

// Partition of the 5040 rows into sixes with dense lookup tables. Built once
// and immutable afterwards.
class Extent {
 public:
  Extent();

  static const Extent& instance();

  const std::vector<Six>& sixes() const { return sixes_; }
  const Six& six(int id) const { return sixes_.at(id - 1); }
  int six_of(const Row& r) const { return six_of_rank_[r.rank()]; }

  const Row& row(const SixEndRef& e) const { return six(e.six_id).six_ends[e.k - 1]; }
  // Throws std::logic_error if r is not a six-end (not odd).
  SixEndRef six_end_of(const Row& r, Speed speed) const;
  SixEndRef from_base_index(int index, Speed speed) const {
    return SixEndRef{index / 3 + 1, index % 3 + 1, speed};
  }

  // "1325476S", "1325476Q", or the bare row for Speed::none.
  std::string format(const SixEndRef& e) const;
  SixEndRef parse_six_end(std::string_view text) const;

 private:
  std::vector<Six> sixes_;
  std::vector<int> six_of_rank_;
};

std::vector<Six> partition_extent();

class TransitionMaps {
 public:
  TransitionMaps(Method method, const Extent& extent);

  Method method() const { return method_; }
  // Image of e under the call. For Stedman, slow calls take a slow six-end
  // to a quick one and vice versa; the speed of `e` is not checked here.
  SixEndRef apply(Call c, const SixEndRef& e) const;
  const std::vector<int>& table(Call c) const;

 private:
  Method method_;
  std::array<std::vector<int>, 6> tables_;
};

TransitionMaps erin_transitions(const Extent& extent = Extent::instance());
TransitionMaps stedman_transitions(const Extent& extent = Extent::instance());

}  // namespace ringhcp
