#ifndef LSV_JSON_RENDER_HPP
#define LSV_JSON_RENDER_HPP

#include <json.hpp>

#include "lsv/series.hpp"

namespace lsv {

// Canonical structured rendering: one {word: [names], coeff: "p/q"} record
// per term, in length-lex order. Stable across runs.
inline nlohmann::ordered_json series_terms_json(const Series& s) {
  auto records = nlohmann::ordered_json::array();
  for (const auto& [w, c] : s.terms()) {
    auto names = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < w.size(); ++i)
      names.push_back(s.alphabet()->name(w[i]));
    records.push_back({{"word", std::move(names)}, {"coeff", to_string(c)}});
  }
  return records;
}

}  // namespace lsv

#endif
