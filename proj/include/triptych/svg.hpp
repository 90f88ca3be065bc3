#pragma once

#include <span>
#include <string>

#include "triptych/decomp.hpp"
#include "triptych/murphy.hpp"
#include "triptych/reliability.hpp"
#include "triptych/roc.hpp"

namespace triptych {

// Static SVG figures. Output depends only on the arguments, byte for byte.
struct SvgOptions {
  int panel_size = 320;
  // Restrict reliability x-ranges to [min, max] of the forecast values.
  bool support_range = false;
};

std::string murphy_svg(std::span<const MurphyCurve> curves, const SvgOptions& opt = {});
std::string reliability_svg(std::span<const ReliabilityDiagram> diagrams, const SvgOptions& opt = {});
std::string roc_svg(std::span<const RocCurve> curves, const SvgOptions& opt = {});

// Murphy, reliability and ROC panels side by side.
std::string triptych_svg(std::span<const MurphyCurve> murphy, std::span<const ReliabilityDiagram> reliability,
                         std::span<const RocCurve> roc, const SvgOptions& opt = {});

std::string mcbdsc_svg(const McbDscPlot& plot, const SvgOptions& opt = {});

}  // namespace triptych
