#pragma once

#include <string>

#include <json.hpp>

#include "waring/decompositions.hpp"

namespace waring {

using Json = nlohmann::ordered_json;

/// {"d": order, "coeffs": ["1", "-1/2", ...]} over the power basis 1, w, ..., w^{phi(d)-1}.
Json to_json(const Cyc& c);
Cyc cyc_from_json(const Json& j);

/// {"num", "den", "root_power_combination"}; num and den are null unless c is rational.
Json coeff_to_json(const Cyc& c);

/// Sparse entries [[i, j, cyc], ...] in row-major order.
Json to_json(const LinForm& form);
LinForm form_from_json(const Json& j, int d, int order);

Json to_json(const PowerDecomposition& dec);
PowerDecomposition decomposition_from_json(const Json& j);

Json to_json(const ProductDecomposition& pd);

/// "\omega^{2}" style; integers and root powers print compactly, anything else
/// as a parenthesized polynomial in \omega.
std::string to_latex(const Cyc& c);
std::string to_latex(const PowerDecomposition& dec);
std::string to_latex(const ProductDecomposition& pd);

/// One line per term, e.g. "+ (x11 + w*x22)^2".
std::string to_text(const PowerDecomposition& dec);
std::string to_text(const ProductDecomposition& pd);

}  // namespace waring
