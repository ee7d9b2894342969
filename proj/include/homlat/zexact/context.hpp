#pragma once

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homlat {

/// A pointed category with all kernels and cokernels, presented through
/// concrete immutable object and hom values.
///
/// compose(g, f) is g∘f. kernel(f) is a normal mono into dom(f) and
/// cokernel(f) a normal epi out of cod(f). factor_through_mono(f, m) returns
/// the u with m∘u = f when it exists; factor_through_epi(f, e) returns the g
/// with g∘e = f. normal_subobjects(X) lists one representative per normal
/// subobject, and encode(m) gives a canonical string for the subobject m
/// represents (equal strings iff equal subobjects).
template <class C>
concept ZContext = requires(const C& c, const typename C::Object& x, const typename C::Hom& f) {
  typename C::Object;
  typename C::Hom;
  { C::depth } -> std::convertible_to<int>;
  { c.dom(f) } -> std::convertible_to<typename C::Object>;
  { c.cod(f) } -> std::convertible_to<typename C::Object>;
  { c.compose(f, f) } -> std::same_as<typename C::Hom>;
  { c.identity(x) } -> std::same_as<typename C::Hom>;
  { c.zero_object() } -> std::same_as<typename C::Object>;
  { c.zero_hom(x, x) } -> std::same_as<typename C::Hom>;
  { c.is_zero_object(x) } -> std::same_as<bool>;
  { c.kernel(f) } -> std::same_as<typename C::Hom>;
  { c.cokernel(f) } -> std::same_as<typename C::Hom>;
  { c.equal(f, f) } -> std::same_as<bool>;
  { c.same_object(x, x) } -> std::same_as<bool>;
  { c.factor_through_mono(f, f) } -> std::same_as<std::optional<typename C::Hom>>;
  { c.factor_through_epi(f, f) } -> std::same_as<std::optional<typename C::Hom>>;
  { c.is_iso(f) } -> std::same_as<bool>;
  { c.is_mono(f) } -> std::same_as<bool>;
  { c.is_epi(f) } -> std::same_as<bool>;
  { c.normal_subobjects(x) } -> std::same_as<std::vector<typename C::Hom>>;
  { c.describe(x) } -> std::same_as<std::string>;
  { c.encode(f) } -> std::same_as<std::string>;
};

/// A construction produced a structure violating a context invariant.
class ContextInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace homlat
