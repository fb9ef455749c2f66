#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qwalk/types.hpp"

namespace qwalk {

/// Round-trip-safe decimal rendering ("%.17g").
std::string format_g17(double v);

void write_csv_header(std::ostream& os);

/// One row per basis state with a nonzero amplitude, ascending (x, coin):
/// coin,x,re,im,prob
void write_csv_rows(std::ostream& os, const StateVector& state);

nlohmann::ordered_json spec_json(const WalkSpec& spec);

/// {spec, engine, entries:[{coin,x,re,im,prob}...]} with zero-amplitude
/// entries omitted.
nlohmann::ordered_json state_json(const WalkSpec& spec, std::string_view engine,
                                  const StateVector& state);

}  // namespace qwalk
