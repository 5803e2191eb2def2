#pragma once

#include <json.hpp>

#include "demflag/qpolynomial.hpp"
#include "demflag/xpolynomial.hpp"

namespace demflag {

/// {"coeffs": {"<exponent>": "<decimal integer string>", ...}} with the
/// exponent keys in ascending numeric order.
nlohmann::ordered_json qpoly_to_json(const QPolynomial& poly);
QPolynomial qpoly_from_json(const nlohmann::json& j);

/// {"order": N, "x_coeffs": [<QPolynomial JSON>, ...]}
nlohmann::ordered_json xseries_to_json(const XSeries& series);
XSeries xseries_from_json(const nlohmann::json& j);

}  // namespace demflag
