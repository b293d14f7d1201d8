#pragma once

#include <string>

#include "orbifold/datum.hpp"

namespace tqft {

// orbdatum/1 JSON bundle: inline category, algebra and module carriers,
// all structure morphisms as tree-pair coefficient lists, psi, phi^2 and
// the chosen root.
std::string datum_to_json(const OrbifoldDatum &d);
OrbifoldDatum datum_from_json(const std::string &text);
OrbifoldDatum datum_from_file(const std::string &path);

std::string condition_report_to_json(const ConditionReport &rep);

// point every morphism of `d` at `cat`; requires structurally identical
// category tables (same simples, fusion rules and scalar tables)
void rebase_datum(OrbifoldDatum &d, const CategoryData *cat);
bool same_category_tables(const CategoryData &a, const CategoryData &b);

} // namespace tqft
