#pragma once

#include "rotnum/fraction.hpp"
#include "rotnum/game.hpp"
#include "rotnum/isobar.hpp"
#include "rotnum/limits.hpp"
#include "rotnum/rotation.hpp"
#include "rotnum/stairstep.hpp"

#include "json.hpp"

#include <string>

namespace rotnum {

/// Fractions travel as "num/den" strings; field order is fixed.
using Json = nlohmann::ordered_json;

Fraction fraction_from_json(const Json& j);

Json evaluation_json(const Word& w, const Fraction& r, const Fraction& s, const Evaluation& e);

Json staircase_json(const Staircase& sc);
Staircase staircase_from_json(const Json& j);

Json frontier_json(const IsobarFrontier& f);
IsobarFrontier frontier_from_json(const Json& j);

Json limit_json(const LimitResult& l);
LimitResult limit_from_json(const Json& j);

Json verdict_json(const GameVerdict& v);
GameVerdict verdict_from_json(const Json& j);

Json game_win_json(const std::optional<GameWin>& win);

Json scan_json(const SlipperyScan& scan);

/// r_num,r_den,s_num,s_den,val_num,val_den with a header, rows sorted by (r, s).
std::string grid_csv(const ZigguratGrid& grid);
ZigguratGrid grid_from_csv(const std::string& csv);

/// P5, 16-bit big-endian. Values map affinely onto 0..65535; column = r index,
/// top row = largest s.
std::string grid_pgm(const ZigguratGrid& grid);

std::string scan_csv(const SlipperyScan& scan);

/// P5, 8-bit.
std::string raster_pgm(const Raster& img);

}  // namespace rotnum
