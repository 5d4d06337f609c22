#pragma once

/// \file serialize.hpp
/// JSON for reports and estimates, CSV for suite summaries and field samples.
/// Key order is fixed, so equal inputs give byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "hma/chain.hpp"
#include "hma/convexity.hpp"
#include "hma/measure.hpp"
#include "hma/mollified_max.hpp"
#include "hma/principles.hpp"
#include "hma/quadrature.hpp"
#include "hma/suites.hpp"

namespace hma {

using Json = nlohmann::ordered_json;

Json to_json(const Point& p);
Json to_json(const MeasureEstimate& m);
Json to_json(const VerificationReport& r);
Json to_json(const ChainReport& r);
Json to_json(const ConvexityReport& r);
Json to_json(const ConstantEstimate& c);
Json to_json(const AlphaConstant& a);
Json to_json(const SuiteRun& run);

MeasureEstimate measure_estimate_from_json(const Json& j);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

/// Header "case,lhs,rhs,margin,pass", one row per report.
std::string summary_csv(const SuiteRun& run);

/// Header "x,y,t,value"; points outside the field's domain are skipped.
std::string field_csv(const ScalarField& u, const std::vector<Point>& points);

}  // namespace hma
