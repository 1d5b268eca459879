#pragma once

#include <string>

#include "tldkit/cellular.hpp"
#include "tldkit/diagram.hpp"
#include "tldkit/forked.hpp"
#include "tldkit/gramdet.hpp"
#include "tldkit/halfdiag.hpp"

namespace tldkit {

// Compact single-line JSON; field order is fixed, so equal values
// serialize to equal bytes.
std::string to_json(const HalfDiagram& d);
std::string to_json(const TLDiagram& d);
std::string to_json(const FtlElement& e);
std::string to_json(const GramMatrix& g);
std::string to_json(const DetResult& r);
std::string to_json(const Verdict& v);

// Parsers for the formats above; throw InvalidArguments on malformed or
// structurally invalid input.
HalfDiagram half_from_json(const std::string& text);
GramMatrix gram_from_json(const std::string& text);

// Matrix renderings: one row per line CSV of canonical polynomial text,
// and a LaTeX pmatrix with d typeset as \delta.
std::string to_csv(const GramMatrix& g);
std::string to_latex(const GramMatrix& g);
std::string poly_latex(const Poly& p);

}  // namespace tldkit
