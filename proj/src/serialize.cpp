#include "rotnum/serialize.hpp"

#include "rotnum/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace rotnum {

namespace {

Json frac(const Fraction& f) { return f.str_full(); }

Json point(const Fraction& r, const Fraction& s) {
  Json j;
  j["r"] = frac(r);
  j["s"] = frac(s);
  return j;
}

std::string pgm_header(int width, int height, int maxval) {
  return "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n" +
         std::to_string(maxval) + "\n";
}

}  // namespace

Fraction fraction_from_json(const Json& j) { return Fraction::parse(j.get<std::string>()); }

Json evaluation_json(const Word& w, const Fraction& r, const Fraction& s, const Evaluation& e) {
  Json j;
  j["word"] = w.str();
  j["r"] = frac(r);
  j["s"] = frac(s);
  j["value"] = frac(e.value);
  j["witness_necklace"] = e.witness ? Json(e.witness->str()) : Json(nullptr);
  j["witness_orbit_period"] = e.witness_period;
  return j;
}

Json staircase_json(const Staircase& sc) {
  Json j;
  j["word"] = sc.word.str();
  j["r"] = frac(sc.r);
  Json steps = Json::array();
  for (const auto& st : sc.steps) {
    Json s;
    s["threshold"] = frac(st.threshold);
    s["value"] = frac(st.value);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

Staircase staircase_from_json(const Json& j) {
  Staircase sc;
  sc.word = parse_word(j.at("word").get<std::string>());
  sc.r = fraction_from_json(j.at("r"));
  for (const auto& s : j.at("steps"))
    sc.steps.push_back({fraction_from_json(s.at("threshold")), fraction_from_json(s.at("value"))});
  return sc;
}

Json frontier_json(const IsobarFrontier& f) {
  Json j;
  j["word"] = f.word.str();
  j["level"] = frac(f.level);
  j["D"] = f.D;
  Json corners = Json::array();
  for (const auto& c : f.corners) {
    Json p = point(c.r, c.s);
    p["at_corner_ok"] = c.at_corner_ok;
    p["below_ok"] = c.below_ok;
    corners.push_back(std::move(p));
  }
  j["corners"] = std::move(corners);
  Json rows = Json::array();
  for (const auto& row : f.rows) {
    Json p;
    p["r"] = frac(row.r);
    p["s_min"] = row.s_min ? frac(*row.s_min) : Json(nullptr);
    rows.push_back(std::move(p));
  }
  j["rows"] = std::move(rows);
  return j;
}

IsobarFrontier frontier_from_json(const Json& j) {
  IsobarFrontier f;
  f.word = parse_word(j.at("word").get<std::string>());
  f.level = fraction_from_json(j.at("level"));
  f.D = j.at("D").get<long long>();
  for (const auto& c : j.at("corners"))
    f.corners.push_back({fraction_from_json(c.at("r")), fraction_from_json(c.at("s")),
                         c.at("at_corner_ok").get<bool>(), c.at("below_ok").get<bool>()});
  for (const auto& row : j.at("rows")) {
    FrontierRow fr;
    fr.r = fraction_from_json(row.at("r"));
    if (!row.at("s_min").is_null()) fr.s_min = fraction_from_json(row.at("s_min"));
    f.rows.push_back(std::move(fr));
  }
  return f;
}

Json limit_json(const LimitResult& l) {
  Json j;
  j["value"] = frac(l.value);
  j["status"] = to_string(l.status);
  j["k"] = l.k;
  Json trace = Json::array();
  for (const auto& [k, v] : l.trace) {
    Json t;
    t["k"] = k;
    t["value"] = frac(v);
    trace.push_back(std::move(t));
  }
  j["trace"] = std::move(trace);
  j["linear_value"] = l.linear_value ? frac(*l.linear_value) : Json(nullptr);
  return j;
}

LimitResult limit_from_json(const Json& j) {
  LimitResult l;
  l.value = fraction_from_json(j.at("value"));
  const auto status = j.at("status").get<std::string>();
  if (status == "exact")
    l.status = LimitStatus::exact;
  else if (status == "stabilized")
    l.status = LimitStatus::stabilized;
  else if (status == "inconclusive")
    l.status = LimitStatus::inconclusive;
  else
    throw DomainError("limit_from_json: unknown status " + status);
  l.k = j.at("k").get<long long>();
  for (const auto& t : j.at("trace")) l.trace.emplace_back(t.at("k").get<long long>(), fraction_from_json(t.at("value")));
  if (!j.at("linear_value").is_null()) l.linear_value = fraction_from_json(j.at("linear_value"));
  return l;
}

Json verdict_json(const GameVerdict& v) {
  Json j;
  j["t"] = frac(v.point.t);
  j["u"] = frac(v.point.u);
  j["status"] = to_string(v.status);
  j["m"] = v.m;
  if (v.triangle) {
    Json tri;
    tri["n"] = v.triangle->n;
    tri["i"] = v.triangle->i;
    j["triangle"] = std::move(tri);
  } else {
    j["triangle"] = nullptr;
  }
  Json chain = Json::array();
  for (const auto& child : v.children) chain.push_back(verdict_json(*child));
  j["chain"] = std::move(chain);
  if (v.status == GameStatus::unknown) j["depth"] = v.depth;
  return j;
}

GameVerdict verdict_from_json(const Json& j) {
  GameVerdict v;
  v.point = GamePoint(fraction_from_json(j.at("t")), fraction_from_json(j.at("u")));
  const auto status = j.at("status").get<std::string>();
  if (status == "InU")
    v.status = GameStatus::in_u;
  else if (status == "NotInU")
    v.status = GameStatus::not_in_u;
  else if (status == "Unknown")
    v.status = GameStatus::unknown;
  else
    throw DomainError("verdict_from_json: unknown status " + status);
  v.m = j.at("m").get<long long>();
  if (!j.at("triangle").is_null())
    v.triangle = Triangle{j["triangle"].at("n").get<long long>(), j["triangle"].at("i").get<long long>()};
  for (const auto& child : j.at("chain"))
    v.children.push_back(std::make_shared<GameVerdict>(verdict_from_json(child)));
  if (j.contains("depth")) v.depth = j["depth"].get<int>();
  return v;
}

Json game_win_json(const std::optional<GameWin>& win) {
  if (!win) return nullptr;
  Json j;
  j["n"] = win->n;
  j["interval"] = Json::array({frac(win->lo), frac(win->hi)});
  return j;
}

Json scan_json(const SlipperyScan& scan) {
  Json j;
  j["word"] = scan.word.str();
  j["D"] = scan.D;
  j["m"] = scan.m;
  j["points"] = scan.points.size();
  Json by_q = Json::array();
  for (const auto& [q, dev] : scan.max_deviation_by_q()) {
    Json e;
    e["q"] = q;
    e["max_deviation"] = frac(dev);
    e["bound"] = frac(Fraction(scan.m, q));
    by_q.push_back(std::move(e));
  }
  j["by_q"] = std::move(by_q);
  Json violations = Json::array();
  for (const auto& p : scan.violations) {
    Json e = point(p.r, p.s);
    e["value"] = frac(p.value);
    e["deviation"] = frac(p.deviation);
    e["bound"] = frac(p.bound);
    violations.push_back(std::move(e));
  }
  j["violations"] = std::move(violations);
  return j;
}

std::string grid_csv(const ZigguratGrid& grid) {
  const std::size_t n = grid.axis.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return grid.axis[a] < grid.axis[b]; });
  std::ostringstream out;
  out << "r_num,r_den,s_num,s_den,val_num,val_den\n";
  for (std::size_t i : order)
    for (std::size_t j : order) {
      const Fraction &r = grid.axis[i], &s = grid.axis[j], &v = grid.at(i, j);
      out << r.numerator() << ',' << r.denominator() << ',' << s.numerator() << ',' << s.denominator() << ','
          << v.numerator() << ',' << v.denominator() << '\n';
    }
  return out.str();
}

ZigguratGrid grid_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  if (line != "r_num,r_den,s_num,s_den,val_num,val_den") throw ParseError("grid_from_csv: bad header", 0);
  std::vector<std::array<Fraction, 3>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::array<BigInt, 6> f;
    std::istringstream fields(line);
    std::string cell;
    for (auto& x : f) {
      if (!std::getline(fields, cell, ',')) throw ParseError("grid_from_csv: short row", lineno);
      x = BigInt(cell);
    }
    rows.push_back({Fraction(f[0], f[1]), Fraction(f[2], f[3]), Fraction(f[4], f[5])});
  }
  ZigguratGrid grid;
  for (const auto& row : rows)
    if (grid.axis.empty() || grid.axis.back() < row[1]) grid.axis.push_back(row[1]);
    else if (row[1] == grid.axis.front()) break;
  const std::size_t n = grid.axis.size();
  if (rows.size() != n * n) throw ParseError("grid_from_csv: not a square grid", lineno);
  grid.D = 0;
  for (const auto& a : grid.axis) grid.D = std::max<long long>(grid.D, a.den64());
  for (const auto& row : rows) grid.values.push_back(row[2]);
  return grid;
}

std::string grid_pgm(const ZigguratGrid& grid) {
  const std::size_t n = grid.axis.size();
  std::string out = pgm_header(static_cast<int>(n), static_cast<int>(n), 65535);
  if (n == 0) return out;
  const auto [lo, hi] = std::minmax_element(grid.values.begin(), grid.values.end());
  const Fraction span = *hi - *lo;
  for (std::size_t row = 0; row < n; ++row) {
    const std::size_t j = n - 1 - row;
    for (std::size_t i = 0; i < n; ++i) {
      long long gray = 0;
      if (span.sign() > 0)
        gray = static_cast<long long>(((grid.at(i, j) - *lo) / span * Fraction(65535) + Fraction(1, 2)).floor());
      out.push_back(static_cast<char>((gray >> 8) & 0xff));
      out.push_back(static_cast<char>(gray & 0xff));
    }
  }
  return out;
}

std::string scan_csv(const SlipperyScan& scan) {
  std::ostringstream out;
  out << "r,s,value,q,deviation,bound\n";
  for (const auto& p : scan.points)
    out << p.r.str_full() << ',' << p.s.str_full() << ',' << p.value.str_full() << ',' << p.q << ','
        << p.deviation.str_full() << ',' << p.bound.str_full() << '\n';
  return out.str();
}

std::string raster_pgm(const Raster& img) {
  std::string out = pgm_header(img.width, img.height, 255);
  out.append(img.pixels.begin(), img.pixels.end());
  return out;
}

}  // namespace rotnum
