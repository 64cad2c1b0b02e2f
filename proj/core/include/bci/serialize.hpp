#pragma once

// JSON dumps for every module. All output is deterministic: keys and arrays
// follow the canonical orders of the underlying objects.

#include "bci/dual.hpp"
#include "bci/family.hpp"
#include "bci/lefschetz.hpp"
#include "bci/oracle.hpp"
#include "bci/reduction_graph.hpp"
#include "bci/resultant.hpp"
#include "bci/rewrite.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace bci {

/// {"n", "generators": [{"i","d","m"}], "coefficients": {"mode", "a", "b"}}.
/// Mode is "symbolic", "numeric", or "mixed" (null marks a free symbol).
std::string family_to_json(const BinomialFamily& fam);
/// Throws ParseError on malformed JSON and ValidationError on bad content.
BinomialFamily family_from_json(std::string_view text);

/// JSON when the text starts with '{', the generator grammar otherwise.
BinomialFamily parse_family_source(std::string_view text);
BinomialFamily load_family(const std::filesystem::path& path);

std::string graph_to_json(const ReductionGraph& g);
std::string outcome_to_json(const ReductionOutcome& r);
std::string reduced_to_json(const ReducedPolynomial& r);
std::string certificate_to_json(const Certificate& c);
std::string dual_to_json(const DualGenerator& F);
std::string matrix_to_json(const CMatrix& m);
std::string radical_to_json(const RadicalResult& r);
std::string hilbert_to_json(const HilbertFunction& h);
std::string lefschetz_to_json(const std::vector<LefschetzVerdict>& verdicts);

}  // namespace bci
