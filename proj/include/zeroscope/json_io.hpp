#pragma once

// JSON serialization for the exchange types and the root-set CSV writer.
// ExtScalar is the pair {m, e}: the exponent is a JSON integer when it fits
// in 64 bits and a decimal string beyond that, and both forms parse back
// exactly.

#include <iosfwd>

#include <json.hpp>

#include "zeroscope/convex.hpp"
#include "zeroscope/measures.hpp"
#include "zeroscope/pipeline.hpp"
#include "zeroscope/roots.hpp"
#include "zeroscope/series.hpp"
#include "zeroscope/wiman.hpp"

namespace zeroscope::xnum {
void to_json(nlohmann::json& j, const ExtScalar& x);
void from_json(const nlohmann::json& j, ExtScalar& x);
void to_json(nlohmann::json& j, const ExtComplex& z);
void from_json(const nlohmann::json& j, ExtComplex& z);
}  // namespace zeroscope::xnum

namespace zeroscope::series {
void to_json(nlohmann::json& j, const CoeffSeq& f);
void from_json(const nlohmann::json& j, CoeffSeq& f);
void to_json(nlohmann::json& j, const BigIntPoly& p);
void from_json(const nlohmann::json& j, BigIntPoly& p);
}  // namespace zeroscope::series

namespace zeroscope::convex {
void to_json(nlohmann::json& j, const PiecewiseConvex& f);
void from_json(const nlohmann::json& j, PiecewiseConvex& f);
}  // namespace zeroscope::convex

namespace zeroscope::wiman {
void to_json(nlohmann::json& j, const Profile& p);
void from_json(const nlohmann::json& j, Profile& p);
void to_json(nlohmann::json& j, const Segmentation& s);
}  // namespace zeroscope::wiman

namespace zeroscope::measures {
void to_json(nlohmann::json& j, const EmpiricalMeasure& m);
void from_json(const nlohmann::json& j, EmpiricalMeasure& m);
}  // namespace zeroscope::measures

namespace zeroscope::pipeline {
void to_json(nlohmann::json& j, const Theorem1Report& r);
void to_json(nlohmann::json& j, const UniformityReport& r);
void to_json(nlohmann::json& j, const DerivativeReport& r);
}  // namespace zeroscope::pipeline

namespace zeroscope::roots {
// Columns: re, im, modulus, residual_log, multiplicity_hint. Deflated origin
// roots get one row each. 17 significant digits.
void write_roots_csv(const RootSet& rs, std::ostream& out);
}  // namespace zeroscope::roots
