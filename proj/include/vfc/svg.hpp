// deterministic schematic rendering of curve systems
#pragma once

#include "vfc/curves.hpp"
#include "vfc/refcurves.hpp"

#include <string>

namespace vfc {

// marked points on a circle, curve itineraries as closed traces, passages as
// short chords at their exact rational angles, reference curves dashed on top;
// output is byte-identical for identical inputs. ref may be null.
std::string render_svg(const CurveSystem& sys, const ReferenceSystem* ref);

}
