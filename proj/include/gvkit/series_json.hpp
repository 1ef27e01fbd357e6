#pragma once

#include <json.hpp>

#include "gvkit/bivariate.hpp"
#include "gvkit/series.hpp"

namespace gvkit {

// {"variable": "q", "min_exp": -2, "trunc": 6, "coeffs": ["1/6", "0", ...]}
// The coefficient list spans min_exp..trunc; readers also accept shorter
// lists, the remainder of the window being zero.
nlohmann::json series_to_json(const LaurentSeries& f);
LaurentSeries series_from_json(const nlohmann::json& j);

// {"secondary": "q", "t_trunc": 3, "blocks": [<series>, ...]}
nlohmann::json bivariate_to_json(const BivariateSeries& f);
BivariateSeries bivariate_from_json(const nlohmann::json& j);

}  // namespace gvkit
