#pragma once

#include "statesum/triangulation.hpp"

namespace tqft {

// Built-in closed oriented triangulations. Names: S3_5tet, S3_2tet,
// S2xS1, RP3, L(3,1) (also accepts lens:p:q).
bool is_builtin_triangulation(const std::string &name);
Triangulation builtin_triangulation(const std::string &name);
std::vector<std::string> builtin_triangulation_names();

Triangulation boundary_of_4_simplex();
Triangulation two_tet_sphere();
Triangulation s2_x_s1();
Triangulation lens_space(int p, int q);

} // namespace tqft
