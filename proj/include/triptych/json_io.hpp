#pragma once

#include <json.hpp>

#include "triptych/analysis.hpp"
#include "triptych/decomp.hpp"
#include "triptych/murphy.hpp"
#include "triptych/reliability.hpp"
#include "triptych/roc.hpp"
#include "triptych/scoring.hpp"

// JSON mappings for every result type. Infinite values are written as the
// strings "inf" and "-inf"; everything reads back to an equal object.
namespace triptych {

using nlohmann::json;

json number_or_inf(double v);
double parse_number_or_inf(const json& j);

void to_json(json& j, const ExtendedReal& v);
void from_json(const json& j, ExtendedReal& v);

void to_json(json& j, const ScoringRule& rule);
void from_json(const json& j, ScoringRule& rule);

void to_json(json& j, const MurphyCurve& c);
void from_json(const json& j, MurphyCurve& c);

void to_json(json& j, const ReliabilityDiagram& d);
void from_json(const json& j, ReliabilityDiagram& d);

void to_json(json& j, const RocCurve& c);
void from_json(const json& j, RocCurve& c);

void to_json(json& j, const ScoreDecomposition& d);
void from_json(const json& j, ScoreDecomposition& d);

void to_json(json& j, const McbDscPlot& p);
void from_json(const json& j, McbDscPlot& p);

void to_json(json& j, const PiecewiseFunction& f);
void from_json(const json& j, PiecewiseFunction& f);

void to_json(json& j, const CrossingReport& r);
void from_json(const json& j, CrossingReport& r);

}  // namespace triptych
