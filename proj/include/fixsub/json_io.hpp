#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "fixsub/constructions.hpp"
#include "fixsub/fatf.hpp"
#include "fixsub/fixpipe.hpp"
#include "fixsub/intlat.hpp"

namespace fixsub {

using Json = nlohmann::json;

// Integers are JSON numbers when they fit in 64 bits, decimal strings
// otherwise.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json vector_to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);

// {"rows": r, "cols": c, "entries": [[...], ...]}
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

// Words are strings over the ambient alphabet; "1" is the empty word.
std::string word_to_text(const Word& u, const Ambient& a);
Word word_from_text(const std::string& text, const Ambient& a);

// Endomorphism file:
// {"ambient": "free:g=2,k=2",
//  "alpha": {"images": [...], "fix": "whole" | [words] | null, "certified_complete": true},
//  "gamma": matrix, "L": matrix, "claims_automorphism": bool, "expected": "F_5",
//  "inverse": {"alpha": {"images": [...]}, "gamma": matrix, "L": matrix}}
struct EndoDocument {
  StdEndo endo;
  std::optional<StdEndo> inverse;
};

Json endo_to_json(const StdEndo& e, const std::optional<StdEndo>& inverse = std::nullopt);
// Throws ParseError on malformed documents.
EndoDocument endo_from_json(const Json& j);

// {"s", "projected": {"tag", "index", "rank"}, "iso", "witnesses": [[word, [ints]], ...], "notes"}
Json fix_to_json(const Ambient& a, const FixDescription& d);

Json recipe_to_json(const Recipe& r);

}  // namespace fixsub
