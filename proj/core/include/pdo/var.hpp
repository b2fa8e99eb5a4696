#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace pdo {

/// Variable classes, listed in their total order.
enum class VarClass : std::uint8_t { Param = 0, X = 1, Z = 2, Mu = 3 };

/// A polynomial indeterminate: a class tag plus a positive index.
///
/// Ordering is by class (Param < X < Z < Mu) and then by index. The packed
/// key keeps comparisons a single integer compare in the polynomial kernels.
class VarId {
 public:
  constexpr VarId() = default;
  constexpr VarId(VarClass cls, std::uint32_t index)
      : key_((static_cast<std::uint32_t>(cls) << 24) | (index & 0xFFFFFFu)) {}

  constexpr VarClass cls() const { return static_cast<VarClass>(key_ >> 24); }
  constexpr std::uint32_t index() const { return key_ & 0xFFFFFFu; }
  constexpr std::uint32_t key() const { return key_; }

  friend constexpr auto operator<=>(VarId, VarId) = default;

 private:
  std::uint32_t key_ = 0;
};

constexpr VarId x_var(std::uint32_t i) { return {VarClass::X, i}; }
constexpr VarId z_var(std::uint32_t i) { return {VarClass::Z, i}; }
constexpr VarId mu_var(std::uint32_t i) { return {VarClass::Mu, i}; }
constexpr VarId param_var(std::uint32_t i) { return {VarClass::Param, i}; }

/// The two named parameters used throughout: lambda is Param 1, gamma Param 2.
constexpr VarId lambda_var() { return param_var(1); }
constexpr VarId gamma_var() { return param_var(2); }

/// Printable name: x1, z2, mu3, lambda, gamma, c3, ...
std::string var_name(VarId v);

/// Short class tag used by the JSON schema: "param", "x", "z", "mu".
std::string var_class_tag(VarClass c);
VarClass var_class_from_tag(const std::string& tag);

}  // namespace pdo
