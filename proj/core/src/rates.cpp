#include "wedgeqed/rates.hpp"

namespace wedgeqed {

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::Radial: return "radial";
    case Orientation::Polar: return "polar";
    case Orientation::Axial: return "axial";
  }
  return "?";
}

std::string_view to_string(PlaneOrientation o) {
  return o == PlaneOrientation::Parallel ? "parallel" : "perpendicular";
}

std::string_view to_string(SheetAxis a) { return a == SheetAxis::Y ? "y" : "z"; }

std::string_view to_string(const DipoleAxis& a) {
  return std::visit([](auto v) { return to_string(v); }, a);
}

}  // namespace wedgeqed
