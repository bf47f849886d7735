#include "ellstab/io.hpp"

#include "ellstab/errors.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace ellstab {

namespace {

// JSON numbers are kept for values a 64-bit reader stores exactly; anything
// larger is emitted as a canonical decimal string.
Json int_json(const Int& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(int_str(n));
}

Json rat_json(const Rat& q) { return Json(rat_str(q)); }

Json half_int_json(const Rat& q) {
  if (is_integer(q)) return int_json(to_int(q));
  return rat_json(q);
}

Int int_field(const Json& j, const std::string& field) {
  if (!j.contains(field))
    throw usage_error("missing field '" + field + "'");
  const Json& x = j.at(field);
  if (x.is_number_integer()) return Int((long)x.get<int64_t>());
  if (x.is_string()) {
    auto n = parse_int(x.get<std::string>());
    if (n) return *n;
  }
  throw usage_error("field '" + field + "' must be an integer");
}

Rat rat_field(const Json& j, const std::string& field) {
  if (!j.contains(field))
    throw usage_error("missing field '" + field + "'");
  const Json& x = j.at(field);
  if (x.is_number_integer()) return Rat((long)x.get<int64_t>());
  if (x.is_string()) {
    auto q = parse_rat(x.get<std::string>());
    if (q) return *q;
  }
  throw usage_error("field '" + field +
                    "' must be a rational \"p/q\" string or an integer");
}

Json box_range(const Int& lo, const Int& hi) {
  return Json::array({int_json(lo), int_json(hi)});
}

// Two-decimal fixed-point coordinate, computed without floating point.
std::string svg_coord(const Rat& r) {
  Int scaled = floor_rat(r * 100 + make_rat(Int(1), Int(2)));
  bool neg = scaled < 0;
  Int mag = neg ? Int(-scaled) : scaled;
  Int whole = mag / 100;
  Int frac = mag % 100;
  std::ostringstream os;
  if (neg) os << '-';
  os << whole.get_str() << '.';
  long f = frac.get_si();
  os << (f < 10 ? "0" : "") << f;
  return os.str();
}

} // namespace

Json to_json(const ChernTable& v) {
  Json j;
  j["n"] = int_json(v.n);
  j["d"] = int_json(v.d);
  j["c"] = half_int_json(v.c);
  j["s"] = rat_json(v.s);
  return j;
}

Json to_json(const Divisor& D) {
  Json j;
  j["alpha"] = rat_json(D.alpha);
  j["beta"] = rat_json(D.beta);
  return j;
}

Json to_json(const StabParams& P) {
  Json j;
  j["a"] = rat_json(P.a);
  j["p"] = rat_json(P.p);
  j["q"] = rat_json(P.q);
  j["b"] = rat_json(P.b);
  return j;
}

Json to_json(const Mat2& T) {
  return Json::array(
      {rat_str(T.m00), rat_str(T.m01), rat_str(T.m10), rat_str(T.m11)});
}

Json to_json(const TransportResult& r, const SurfaceGeometry& g) {
  Json j;
  j["surface"] = Json{{"e", int_json(g.e)}};
  j["barred"] = to_json(r.barred);
  j["unbarred"] = to_json(r.unbarred);
  j["T"] = to_json(r.T);
  j["volume_barred"] = Json{{"U", rat_str(r.u_bar)}, {"V", rat_str(r.v_bar)}};
  j["volume_unbarred"] = Json{{"U", rat_str(r.u)}, {"V", rat_str(r.v)}};
  j["a_nonpositive"] = r.a_nonpositive;
  return j;
}

Json to_json(const EuclidTrace& t, const SurfaceGeometry& g) {
  Json j;
  j["surface"] = Json{{"e", int_json(g.e)}};
  j["input"] = to_json(t.input);
  Json moves = Json::array();
  for (const auto& m : t.moves) {
    Json mj;
    switch (m.kind) {
      case EuclidMove::Kind::Upsilon:
        mj["kind"] = "upsilon";
        mj["k"] = int_json(m.param);
        break;
      case EuclidMove::Kind::Psi:
        mj["kind"] = "psi";
        mj["m"] = int_json(m.param);
        break;
      case EuclidMove::Kind::FinalPhiDual:
        mj["kind"] = "final_phi_dual";
        mj["k"] = int_json(m.param);
        break;
    }
    mj["before"] = to_json(m.before);
    mj["after"] = to_json(m.after);
    moves.push_back(std::move(mj));
  }
  j["moves"] = std::move(moves);
  j["final"] = to_json(t.final_table);
  j["Lambda"] = Json{{"alpha", int_json(to_int(t.lambda.alpha))},
                     {"beta", int_json(to_int(t.lambda.beta))}};
  j["K"] = int_json(t.big_k);
  j["numerics_only"] = t.numerics_only;
  return j;
}

Json to_json(const WallReport& r, const SurfaceGeometry& g) {
  Json j;
  j["surface"] = Json{{"e", int_json(g.e)}};
  j["v"] = to_json(r.v);
  j["params"] = Json{{"p", rat_str(r.B.alpha)},
                     {"q", rat_str(r.B.beta)},
                     {"b", rat_str(r.b)}};
  Json box;
  box["n"] = box_range(r.box.n_lo, r.box.n_hi);
  box["d"] = box_range(r.box.d_lo, r.box.d_hi);
  box["c"] = box_range(r.box.c_lo, r.box.c_hi);
  box["s"] = r.box.s_range
                 ? Json::array({rat_str(r.box.s_range->first),
                                rat_str(r.box.s_range->second)})
                 : Json(nullptr);
  j["box"] = std::move(box);
  j["include_boundary"] = r.include_boundary;
  Json walls = Json::array();
  for (const auto& w : r.walls) {
    Json wj;
    wj["a"] = rat_str(w.a);
    Json wit = Json::array();
    for (const auto& A : w.witnesses) wit.push_back(to_json(A));
    wj["witnesses"] = std::move(wit);
    walls.push_back(std::move(wj));
  }
  j["walls"] = std::move(walls);
  Json alla = Json::array();
  for (const auto& A : r.all_a_witnesses) alla.push_back(to_json(A));
  j["all_a_witnesses"] = std::move(alla);
  j["generic"] = r.generic;
  return j;
}

ChernTable table_from_json(const Json& j) {
  if (!j.is_object())
    throw usage_error("a Chern table must be a JSON object "
                      "{\"n\",\"d\",\"c\",\"s\"}");
  Int n = int_field(j, "n");
  Int d = int_field(j, "d");
  Rat c = rat_field(j, "c");
  Rat s = rat_field(j, "s");
  try {
    return {std::move(n), std::move(d), std::move(c), std::move(s)};
  } catch (const usage_error& err) {
    throw usage_error(std::string("invalid Chern table: ") + err.what());
  }
}

StabParams params_from_json(const Json& j) {
  if (!j.is_object())
    throw usage_error("stability parameters must be a JSON object "
                      "{\"a\",\"p\",\"q\",\"b\"}");
  return {rat_field(j, "a"), rat_field(j, "p"), rat_field(j, "q"),
          rat_field(j, "b")};
}

ChernTable read_table_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw usage_error(std::string("input is not valid JSON: ") + err.what());
  }
  return table_from_json(j);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string walls_tsv(const WallReport& r) {
  std::ostringstream os;
  os << "a\tn_A\td_A\tc_A\ts_A\n";
  for (const auto& w : r.walls)
    for (const auto& A : w.witnesses)
      os << rat_str(w.a) << '\t' << int_str(A.n) << '\t' << int_str(A.d)
         << '\t' << rat_str(A.c) << '\t' << rat_str(A.s) << '\n';
  return os.str();
}

std::string walls_svg(const WallReport& r) {
  const int width = 720;
  const int height = 360;
  const int pad = 32;
  const int x0 = 96;
  const int x1 = 600;

  Rat a_max(1);
  for (const auto& w : r.walls)
    if (w.a > a_max) a_max = w.a;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  os << "  <line class=\"axis\" x1=\"" << x0 << "\" y1=\"" << pad
     << "\" x2=\"" << x0 << "\" y2=\"" << height - pad
     << "\" stroke=\"black\"/>\n";
  os << "  <text x=\"" << x0 - 80 << "\" y=\"" << pad + 8
     << "\" font-size=\"12\">a (ray)</text>\n";
  for (const auto& w : r.walls) {
    Rat frac = w.a / a_max; // in (0, 1]
    Rat y = Rat(height - pad) - frac * Rat(height - 2 * pad);
    std::string ys = svg_coord(y);
    os << "  <line class=\"wall\" x1=\"" << x0 << "\" y1=\"" << ys
       << "\" x2=\"" << x1 << "\" y2=\"" << ys
       << "\" stroke=\"crimson\"/>\n";
    os << "  <text x=\"" << x1 + 8 << "\" y=\"" << ys
       << "\" font-size=\"11\">a = " << rat_str(w.a) << " ("
       << w.witnesses.size() << (w.witnesses.size() == 1 ? " witness" : " witnesses")
       << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace ellstab
