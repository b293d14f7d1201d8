#pragma once

#include <string>

#include "skeletal/category.hpp"

namespace tqft {

// Parse a fuscat/1 JSON document. Throws std::runtime_error with a
// descriptive message on schema violations, duplicate labels or dangling
// references. Axiom verification is a separate, explicit step.
CategoryData load_category_json(const std::string &text);
CategoryData load_category_file(const std::string &path);

std::string category_to_json(const CategoryData &cat);

} // namespace tqft
