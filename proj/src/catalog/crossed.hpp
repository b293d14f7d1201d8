#pragma once

#include "orbifold/datum.hpp"

namespace tqft {

// Ribbon crossed G-category data in strictified form: the underlying
// category carries the full skeletal tables (the crossed braiding lives
// in underlying.ribbon), the grading assigns a group element to every
// simple, and the G-action is required to fix labels (which covers the
// catalog instances; extensions that cannot be presented this way are
// out of reach of this format).
struct CrossedCategoryData {
    std::shared_ptr<CategoryData> underlying;
    std::vector<std::string> elements;        // group elements, [0] = unit
    std::vector<std::vector<int>> mtable;     // group multiplication
    std::vector<int> grading;                 // simple -> element index
    std::string name = "crossed";

    int g_mul(int a, int b) const {
        return mtable[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    int g_inv(int a) const {
        for (int b = 0; b < static_cast<int>(elements.size()); ++b)
            if (g_mul(a, b) == 0)
                return b;
        throw std::runtime_error("group element without inverse");
    }
};

VerificationReport validate_crossed(const CrossedCategoryData &data);

// Tambara-Yamagami TY(Z2, chi_q, tau) as a Z2-crossed extension of
// vect_{Z2,chi}; q is the value of the quadratic form on the generator
// (+-i) and tau_sign picks the square root tau = +-1/sqrt(2).
CrossedCategoryData builtin_ty_z2(cplx q_of_g, int tau_sign);

bool is_builtin_crossed(const std::string &spec);
CrossedCategoryData builtin_crossed(const std::string &spec);

// crossed/1 file format: a fuscat/1 document with "group", "grading" and
// "action" blocks (the crossed braiding rides in the R table)
std::string crossed_to_json(const CrossedCategoryData &data);
CrossedCategoryData load_crossed_json(const std::string &text);
CrossedCategoryData load_crossed_file(const std::string &path);
bool json_is_crossed(const std::string &text);

// Datum from a crossed extension and a choice m: G -> simples
// of one simple object per degree (m[0] must be the unit).
OrbifoldDatum from_crossed_extension(const CrossedCategoryData &data,
                                     const std::vector<SimpleId> &m);

// The canonical T-compatible isomorphism data between the datum built
// from choices m and the Morita transport along X = (+) m~* (x) m of the
// datum built from m~ is exercised in the tests via
// check_T_compatible_iso.

} // namespace tqft
