#ifndef MACDONALD_IO_HPP
#define MACDONALD_IO_HPP

#include <string>

#include "json.hpp"
#include "macdonald/flipops.hpp"
#include "macdonald/mlq.hpp"

namespace macd {

using nlohmann::json;

json poly_to_json(const PolyQT& p);
PolyQT poly_from_json(const json& j);
// {"text":..., "num":..., "den_int":..., "den_factors":[[a,b,d,e]...], "den_extra":...}
json qtrat_to_json(const QTRat& r);
QTRat qtrat_from_json(const json& j);

// {"partition":[...],"columns":[[bottom..top],...]}; barred letters are negative
json filling_to_json(const Filling& s);
Filling filling_from_json(const json& j);
// JSON if the text starts with '{', the row text format otherwise
Filling parse_filling_any(const std::string& text);

json mlq_to_json(const MultilineQueue& m);
MultilineQueue mlq_from_json(const json& j);

json outcomes_to_json(const OutcomeSet& o);
json xpoly_to_json(const XPoly& p, bool msym);
json jack_to_json(const JackPoly& p, bool msym);

std::string xpoly_to_text(const XPoly& p, bool msym);
std::string jack_to_text(const JackPoly& p, bool msym);

std::string read_file(const std::string& path);

}  // namespace macd

#endif
