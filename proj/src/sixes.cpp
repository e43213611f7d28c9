#include "ringhcp/sixes.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringhcp {

namespace {

const Change& change3() {
  static const Change c = Change::parse("3");
  return c;
}
const Change& change1() {
  static const Change c = Change::parse("1");
  return c;
}

std::size_t call_slot(Call c) { return static_cast<std::size_t>(c); }

}  // namespace

std::string_view to_string(Method m) { return m == Method::erin ? "erin" : "stedman"; }

Method parse_method(std::string_view text) {
  if (text == "erin") return Method::erin;
  if (text == "stedman") return Method::stedman;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::string_view call_token(Call c) {
  switch (c) {
    case Call::plain: return "p";
    case Call::bob: return "b";
    case Call::slow_plain: return "sp";
    case Call::quick_plain: return "qp";
    case Call::slow_bob: return "sb";
    case Call::quick_bob: return "qb";
  }
  return "?";
}

Call parse_call(std::string_view token) {
  for (Call c : {Call::plain, Call::bob, Call::slow_plain, Call::quick_plain, Call::slow_bob,
                 Call::quick_bob}) {
    if (call_token(c) == token) return c;
  }
  throw std::invalid_argument("unknown call token '" + std::string(token) + "'");
}

bool is_bob(Call c) { return c == Call::bob || c == Call::slow_bob || c == Call::quick_bob; }

const PlaceNotation& call_notation(Call c) {
  static const std::array<PlaceNotation, 6> table = {
      parse_place_notation("7.3.1.3.1.3"),  // plain
      parse_place_notation("5.3.1.3.1.3"),  // bob
      parse_place_notation("7.1.3.1.3.1"),  // slow plain
      parse_place_notation("7.3.1.3.1.3"),  // quick plain
      parse_place_notation("5.1.3.1.3.1"),  // slow bob
      parse_place_notation("5.3.1.3.1.3"),  // quick bob
  };
  return table[call_slot(c)];
}

std::span<const Call> calls_for(Method m) {
  static constexpr std::array<Call, 2> erin = {Call::plain, Call::bob};
  static constexpr std::array<Call, 4> stedman = {Call::slow_plain, Call::quick_plain,
                                                   Call::slow_bob, Call::quick_bob};
  if (m == Method::erin) return erin;
  return stedman;
}

Call call_for(Speed from, bool bob) {
  switch (from) {
    case Speed::none: return bob ? Call::bob : Call::plain;
    case Speed::slow: return bob ? Call::slow_bob : Call::slow_plain;
    case Speed::quick: return bob ? Call::quick_bob : Call::quick_plain;
  }
  return Call::plain;
}

Speed speed_after(Call c) {
  switch (c) {
    case Call::plain:
    case Call::bob: return Speed::none;
    case Call::slow_plain:
    case Call::slow_bob: return Speed::quick;
    case Call::quick_plain:
    case Call::quick_bob: return Speed::slow;
  }
  return Speed::none;
}

Six generate_six(const Row& r) {
  Row smallest = r;
  Row cur = r;
  for (int i = 0; i < 6; ++i) {
    cur = apply_change(cur, i % 2 == 0 ? change3() : change1());
    smallest = std::min(smallest, cur);
  }
  if (cur != r) throw std::logic_error("3.1.3.1.3.1 did not return to " + r.to_string());

  Six six;
  cur = smallest;
  int odd = 0;
  for (int i = 0; i < 6; ++i) {
    six.members[i] = cur;
    if (parity(cur) == Parity::odd) {
      if (odd == 3) throw std::logic_error("six with more than three odd rows");
      six.six_ends[odd++] = cur;
    }
    cur = apply_change(cur, i % 2 == 0 ? change3() : change1());
  }
  if (odd != 3) throw std::logic_error("six without three odd rows");
  std::sort(six.six_ends.begin(), six.six_ends.end());
  return six;
}

std::vector<Six> partition_extent() {
  std::vector<Six> sixes;
  std::vector<bool> seen(kExtentRows, false);
  for (int rank = 0; rank < kExtentRows; ++rank) {
    if (seen[rank]) continue;
    Six six = generate_six(Row::unrank(rank));
    six.id = static_cast<int>(sixes.size()) + 1;
    for (const Row& m : six.members) {
      if (seen[m.rank()]) throw std::logic_error("sixes overlap at " + m.to_string());
      seen[m.rank()] = true;
    }
    sixes.push_back(six);
  }
  return sixes;
}

Extent::Extent() : sixes_(partition_extent()), six_of_rank_(kExtentRows, 0) {
  for (const Six& s : sixes_) {
    for (const Row& m : s.members) six_of_rank_[m.rank()] = s.id;
  }
}

const Extent& Extent::instance() {
  static const Extent extent;
  return extent;
}

SixEndRef Extent::six_end_of(const Row& r, Speed speed) const {
  const Six& s = six(six_of(r));
  for (int k = 0; k < 3; ++k) {
    if (s.six_ends[k] == r) return SixEndRef{s.id, k + 1, speed};
  }
  throw std::logic_error(r.to_string() + " is not a six-end");
}

std::string Extent::format(const SixEndRef& e) const {
  std::string s = row(e).to_string();
  if (e.speed == Speed::slow) s.push_back('S');
  if (e.speed == Speed::quick) s.push_back('Q');
  return s;
}

SixEndRef Extent::parse_six_end(std::string_view text) const {
  Speed speed = Speed::none;
  if (!text.empty() && (text.back() == 'S' || text.back() == 'Q')) {
    speed = text.back() == 'S' ? Speed::slow : Speed::quick;
    text.remove_suffix(1);
  }
  Row r = Row::parse(text);
  if (r.size() != kTriples) throw NotationError("six-end must have 7 bells");
  if (parity(r) != Parity::odd) {
    throw NotationError(std::string(text) + " is even and cannot be a six-end");
  }
  return six_end_of(r, speed);
}

TransitionMaps::TransitionMaps(Method method, const Extent& extent) : method_(method) {
  for (Call c : calls_for(method)) {
    auto& table = tables_[call_slot(c)];
    table.resize(kSixEndCount);
    const PlaceNotation& pn = call_notation(c);
    for (int i = 0; i < kSixEndCount; ++i) {
      const Row& from = extent.row(extent.from_base_index(i, Speed::none));
      Row to = apply_sequence(from, pn);
      if (parity(to) != Parity::odd) {
        throw std::logic_error("call from " + from.to_string() + " reached even row " +
                               to.to_string());
      }
      table[i] = extent.six_end_of(to, Speed::none).base_index();
    }
  }
}

const std::vector<int>& TransitionMaps::table(Call c) const {
  const auto& t = tables_[call_slot(c)];
  if (t.empty()) {
    throw std::invalid_argument(std::string("call '") + std::string(call_token(c)) +
                                "' is not part of " + std::string(to_string(method_)));
  }
  return t;
}

SixEndRef TransitionMaps::apply(Call c, const SixEndRef& e) const {
  int image = table(c)[e.base_index()];
  return SixEndRef{image / 3 + 1, image % 3 + 1, speed_after(c)};
}

TransitionMaps erin_transitions(const Extent& extent) { return {Method::erin, extent}; }
TransitionMaps stedman_transitions(const Extent& extent) { return {Method::stedman, extent}; }

}  // namespace ringhcp
