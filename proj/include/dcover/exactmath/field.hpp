#pragma once

#include <concepts>
#include <cstdint>
#include <string>

namespace dcover {

/// A coefficient field handle: a small copyable object that owns the
/// arithmetic; elements are plain values of type F::Elem.
template <class F>
concept CoefficientField = std::copyable<F> && requires(const F& f, const typename F::Elem& a,
                                                       const typename F::Elem& b, long long n) {
    typename F::Elem;
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.from_int(n) } -> std::convertible_to<typename F::Elem>;
    { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.neg(a) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.equal(a, b) } -> std::convertible_to<bool>;
    { f.less(a, b) } -> std::convertible_to<bool>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.name() } -> std::convertible_to<std::string>;
};

}  // namespace dcover
