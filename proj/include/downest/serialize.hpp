#pragma once

#include <json.hpp>

#include "downest/diagrams.hpp"
#include "downest/enumeration.hpp"
#include "downest/nesting.hpp"
#include "downest/patterns.hpp"
#include "downest/word.hpp"

// JSON shapes, stable across runs:
//   Word            → [1, 2, 1, 2]                  (letter ids)
//   MaximalSubword  → {"start", "length", "kind"}   (kind: repeat|return|both)
//   ReductionTrace  → {"initial", "steps": [{"op": "op1", "removed": [...],
//                      "word": [...]} | {"op": "op2", "letter": a,
//                      "word": [...]}]}
//   NestingResult   → {"index", "witness"}
//   ChordDiagram    → {"length", "chords": [{"letter": "sym",
//                      "positions": [i, j]}]}
//   CircleGraph     → {"vertices": ["sym"], "edges": [["sym", "sym"]]}
//   TallyRow        → {"size", "tallies": {"ni": count}}

namespace downest {

nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const MaximalSubword& m);
nlohmann::json to_json(const ReductionTrace& t);
nlohmann::json to_json(const NestingResult& r);
nlohmann::json to_json(const ChordDiagram& d);
nlohmann::json to_json(const CircleGraph& g);
nlohmann::json to_json(const TallyRow& row);

}  // namespace downest
