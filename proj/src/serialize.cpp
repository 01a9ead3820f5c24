#include "downest/serialize.hpp"

namespace downest {

using nlohmann::json;

json to_json(const Word& w) {
  return json(w.letters());
}

json to_json(const MaximalSubword& m) {
  return json{{"start", m.span.start},
              {"length", m.span.length},
              {"kind", to_string(m.kind)}};
}

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const TraceStep& step : t.steps) {
    json entry;
    if (step.op == ReductionOp::Op1) {
      entry["op"] = "op1";
      json removed = json::array();
      for (const MaximalSubword& m : step.removed) removed.push_back(to_json(m));
      entry["removed"] = std::move(removed);
    } else {
      entry["op"] = "op2";
      entry["letter"] = step.letter;
    }
    entry["word"] = to_json(step.word);
    steps.push_back(std::move(entry));
  }
  return json{{"initial", to_json(t.initial)}, {"steps", std::move(steps)}};
}

json to_json(const NestingResult& r) {
  return json{{"index", r.index}, {"witness", to_json(r.witness)}};
}

json to_json(const ChordDiagram& d) {
  json chords = json::array();
  for (const Chord& c : d.chords())
    chords.push_back(json{{"letter", d.symbol(c.letter)},
                          {"positions", json::array({c.first, c.second})}});
  return json{{"length", d.length()}, {"chords", std::move(chords)}};
}

json to_json(const CircleGraph& g) {
  json vertices = json::array();
  for (Letter v : g.vertices()) vertices.push_back(g.symbol(v));
  json edges = json::array();
  for (const auto& [a, b] : g.edges())
    edges.push_back(json::array({g.symbol(a), g.symbol(b)}));
  return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json to_json(const TallyRow& row) {
  json tallies = json::object();
  for (const auto& [ni, count] : row.counts)
    tallies[std::to_string(ni)] = count;
  return json{{"size", row.size}, {"tallies", std::move(tallies)}};
}

}  // namespace downest
