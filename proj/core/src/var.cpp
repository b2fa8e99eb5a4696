#include "pdo/var.hpp"

#include "pdo/error.hpp"

namespace pdo {

std::string var_name(VarId v) {
  const auto idx = std::to_string(v.index());
  switch (v.cls()) {
    case VarClass::X: return "x" + idx;
    case VarClass::Z: return "z" + idx;
    case VarClass::Mu: return "mu" + idx;
    case VarClass::Param:
      if (v.index() == 1) return "lambda";
      if (v.index() == 2) return "gamma";
      return "c" + idx;
  }
  return "?";
}

std::string var_class_tag(VarClass c) {
  switch (c) {
    case VarClass::Param: return "param";
    case VarClass::X: return "x";
    case VarClass::Z: return "z";
    case VarClass::Mu: return "mu";
  }
  return "?";
}

VarClass var_class_from_tag(const std::string& tag) {
  if (tag == "param") return VarClass::Param;
  if (tag == "x") return VarClass::X;
  if (tag == "z") return VarClass::Z;
  if (tag == "mu") return VarClass::Mu;
  fail(ErrorKind::InvalidArgument, "unknown variable class '" + tag + "'");
}

}  // namespace pdo
