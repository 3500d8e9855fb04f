#pragma once

#include <string>
#include <vector>

#include "subcirc/reduction.hpp"

namespace subcirc {

// Golden reference data for the grid instances: circuit coefficient matrices
// are written row-major with entry (i,j) attached to the support point (i,j).

// The sixteen circuits of the 3x3 grid over the plane.
std::vector<Vec> grid3_plane_circuits(const SupportSet& g);
// Reference circuits with negative entry at (1,2): nine over the orthant of
// support size >= 3, seventeen over the square.
std::vector<Vec> grid3_orthant_beta12_circuits(const SupportSet& g);
std::vector<Vec> grid3_cube_beta12_circuits(const SupportSet& g);
// The four support-4 reduced circuits of the square.
std::vector<Vec> grid3_cube_reduced_support4(const SupportSet& g);

std::vector<std::vector<int>> grid3_orthant_table();
std::vector<std::vector<int>> grid3_cube_table();
std::vector<std::vector<int>> grid4_cube_table();

struct ReferenceCase {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

// Recomputes every pinned reference value; the CLI's verify-paper command.
std::vector<ReferenceCase> run_reference_suite(int parallel);

}  // namespace subcirc
