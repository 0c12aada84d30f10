#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <ranges>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>

namespace seqdist {

// Element access used by the distance algorithms. The sorting algorithm needs
// less/equal forming a total order consistent with equality; the hashing
// algorithm needs hash/equal where equal elements hash equally. Specialize for
// element types whose natural operators do not form an equivalence relation.
template <typename T>
struct ElementOps {
  bool less(const T& a, const T& b) const { return a < b; }
  bool equal(const T& a, const T& b) const { return a == b; }
  std::size_t hash(const T& x) const { return std::hash<T>{}(x); }
};

// Floating-point elements are keyed by bit pattern: NaNs with identical bits
// compare equal, +0.0 and -0.0 are distinct elements. IEEE comparison
// semantics (NaN != NaN) would break the element-count bookkeeping.
template <>
struct ElementOps<float> {
  bool less(float a, float b) const { return key(a) < key(b); }
  bool equal(float a, float b) const { return key(a) == key(b); }
  std::size_t hash(float x) const {
    return std::hash<std::uint32_t>{}(key(x));
  }

private:
  static std::uint32_t key(float x) { return std::bit_cast<std::uint32_t>(x); }
};

template <>
struct ElementOps<double> {
  bool less(double a, double b) const { return key(a) < key(b); }
  bool equal(double a, double b) const { return key(a) == key(b); }
  std::size_t hash(double x) const {
    return std::hash<std::uint64_t>{}(key(x));
  }

private:
  static std::uint64_t key(double x) {
    return std::bit_cast<std::uint64_t>(x);
  }
};

template <typename Ops, typename T>
concept OrderingOps = requires(const Ops& ops, const T& a, const T& b) {
  { ops.less(a, b) } -> std::convertible_to<bool>;
  { ops.equal(a, b) } -> std::convertible_to<bool>;
};

template <typename Ops, typename T>
concept HashingOps = requires(const Ops& ops, const T& a, const T& b) {
  { ops.hash(a) } -> std::convertible_to<std::size_t>;
  { ops.equal(a, b) } -> std::convertible_to<bool>;
};

// Any contiguous, sized range of elements: vector, string, span, array.
template <typename R>
concept ElementSequence =
    std::ranges::contiguous_range<R> && std::ranges::sized_range<R>;

template <typename R1, typename R2>
concept SharedElementSequences =
    ElementSequence<R1> && ElementSequence<R2> &&
    std::same_as<std::ranges::range_value_t<R1>,
                 std::ranges::range_value_t<R2>>;

namespace detail {

template <ElementSequence R>
auto as_span(const R& r) {
  using T = std::ranges::range_value_t<R>;
  return std::span<const T>(std::ranges::data(r), std::ranges::size(r));
}

template <typename T>
concept Streamable = requires(std::ostream& os, const T& x) {
  { os << x };
};

// Best-effort rendering of an element for error messages.
template <typename T>
std::string element_repr(const T& x) {
  if constexpr (std::is_same_v<T, std::string>) {
    return x;
  } else if constexpr (std::is_same_v<T, char32_t>) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(x));
    return buf;
  } else if constexpr (Streamable<T>) {
    std::ostringstream os;
    os << x;
    return os.str();
  } else {
    return "<element>";
  }
}

}  // namespace detail
}  // namespace seqdist
