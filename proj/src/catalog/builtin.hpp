#pragma once

#include <map>
#include <memory>
#include <string>

#include "skeletal/category.hpp"

namespace tqft {

struct CrossedCategoryData; // catalog/crossed.hpp

// Built-in category constructors. Parameters come as a key=value map, e.g.
//   builtin_category("vec_g", {{"group","Z2"},{"cocycle","trivial"}})
// Every constructor returns a finalized CategoryData.
CategoryData builtin_vec();
CategoryData builtin_vec_group(int n, int cocycle_k); // pointed Z_n
CategoryData builtin_vec_z2_chi();                    // symmetric chi-braided Z2
CategoryData builtin_fibonacci();
CategoryData builtin_ising(); // TY(Z2, q(g)=i, tau=+) with its MTC braiding

// "name:k=v:k=v" specs used by the CLI; also accepts the plain names
// vec, vec_g:Z2, vec_g:Z2:cocycle=w, vec_z2_chi, fibonacci, ising,
// ty:Z2:q=i:tau=+ (crossed; see builtin_crossed).
bool is_builtin_category(const std::string &spec);
CategoryData builtin_category(const std::string &spec);

std::vector<std::string> builtin_category_names();

} // namespace tqft
