// full certification pipeline and its command-line front end
#pragma once

#include "vfc/curves.hpp"
#include "vfc/refcurves.hpp"
#include "vfc/slopes.hpp"
#include "vfc/tangles.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace vfc {

struct CertifyOptions {
    std::string tangles;   // raw "q/p,q/p,..." text
    Int q = 0;             // star parameter for the case II slope stage, 0 = auto
    CaseMatch::Kind force = CaseMatch::Kind::None;  // None = accept whichever case matches
    bool include_matrix = false;   // embed the per-curve intersection matrix
    bool two_component = false;    // case I two-component variant (annulus metadata only)
};

struct CertifyOutcome {
    int exit_code = 0;  // 0 certified, 2 structurally unmatched, 3 a checked condition failed
    nlohmann::ordered_json certificate;
    // populated when the pipeline got far enough to construct the systems
    bool has_systems = false;
    CurveSystem system;
    ReferenceSystem refsys;
};

// runs parse -> invariants -> case match -> tower -> curves -> reference curves ->
// slopes and assembles the certificate; throws parse_error on malformed input
CertifyOutcome certify(const CertifyOptions& opt);

// argv-style front end used by both main() and the tests; returns the process
// exit code (0/2/3 from certify, 1 for input or I/O errors)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}
