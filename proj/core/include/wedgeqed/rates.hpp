#pragma once

#include <string_view>
#include <variant>

namespace wedgeqed {

/// Dipole direction in the wedge's cylindrical frame.
enum class Orientation { Radial, Polar, Axial };

/// Dipole direction relative to a flat conductor.
enum class PlaneOrientation { Parallel, Perpendicular };

/// Dipole direction for the half-sheet (y normal to the sheet, z along the edge).
enum class SheetAxis { Y, Z };

using DipoleAxis = std::variant<Orientation, PlaneOrientation, SheetAxis>;

struct RateResult {
  double ratio = 0.0;  // Gamma / Gamma_0
  DipoleAxis axis;
  int terms_used = 0;
  double est_error = 0.0;
};

std::string_view to_string(Orientation o);
std::string_view to_string(PlaneOrientation o);
std::string_view to_string(SheetAxis a);
std::string_view to_string(const DipoleAxis& a);

}  // namespace wedgeqed
