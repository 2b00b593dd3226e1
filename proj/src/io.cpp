#include "cyclord/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cyclord::io {

Label label_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("label must be a string or integer");
}

json order_to_json(const FiniteCyclicOrder& x) {
  json j;
  j["arrangement"] = x.arrangement();
  return j;
}

FiniteCyclicOrder order_from_json(const json& j) {
  if (!j.contains("arrangement") || !j["arrangement"].is_array())
    throw InputError("expected {\"arrangement\": [...]}");
  std::vector<Label> labels;
  for (const auto& e : j["arrangement"]) labels.push_back(label_from_json(e));
  return FiniteCyclicOrder(std::move(labels));
}

json relation_to_json(const TernaryRelation& rel) {
  json j;
  j["ground"] = rel.ground;
  json triples = json::array();
  for (const auto& t : rel.triples) triples.push_back({t[0], t[1], t[2]});
  j["triples"] = triples;
  return j;
}

TernaryRelation relation_from_json(const json& j) {
  if (!j.contains("ground") || !j.contains("triples"))
    throw InputError("expected {\"ground\": [...], \"triples\": [[a,b,c],...]}");
  TernaryRelation rel;
  for (const auto& e : j["ground"]) rel.ground.push_back(label_from_json(e));
  for (const auto& t : j["triples"]) {
    if (!t.is_array() || t.size() != 3)
      throw InputError("each triple must have three entries");
    rel.triples.push_back(
        {label_from_json(t[0]), label_from_json(t[1]), label_from_json(t[2])});
  }
  return rel;
}

json point_map_to_json(const PointMap& f) {
  json j;
  j["domain"] = order_to_json(f.domain);
  j["codomain"] = order_to_json(f.codomain);
  std::map<Label, Label> sorted(f.map.begin(), f.map.end());
  j["map"] = sorted;
  return j;
}

PointMap point_map_from_json(const json& j) {
  if (!j.contains("domain") || !j.contains("codomain") || !j.contains("map"))
    throw InputError("expected {\"domain\":..., \"codomain\":..., \"map\":{...}}");
  std::unordered_map<Label, Label> m;
  for (auto it = j["map"].begin(); it != j["map"].end(); ++it)
    m.emplace(it.key(), label_from_json(it.value()));
  return PointMap(order_from_json(j["domain"]), order_from_json(j["codomain"]),
                  std::move(m));
}

json angle_spec_to_json(const AngleSpec& spec) {
  json angles = json::array();
  for (const auto& a : spec.angles) {
    if (a.kind == Angle::Kind::Decimal)
      angles.push_back({{"decimal", rat_to_decimal(a.decimal_value, spec.precision)}});
    else
      angles.push_back({{"named", a.describe()}});
  }
  return json{{"angles", angles}, {"precision", spec.precision}};
}

AngleSpec angle_spec_from_json(const json& j, int default_precision) {
  AngleSpec spec;
  spec.precision = j.value("precision", default_precision);
  if (!j.contains("angles") || !j["angles"].is_array() || j["angles"].empty())
    throw InputError("angle spec needs a nonempty \"angles\" array");
  for (const auto& a : j["angles"]) {
    if (a.contains("named"))
      spec.angles.push_back(Angle::named(a["named"].get<std::string>()));
    else if (a.contains("decimal"))
      spec.angles.push_back(Angle::decimal(
          parse_decimal(a["decimal"].get<std::string>(), spec.precision)));
    else
      throw InputError("angle entry needs \"named\" or \"decimal\"");
  }
  return spec;
}

json split_to_json(const SplitOrder& s) {
  json j;
  j["arrangement"] = s.order.arrangement();
  std::map<Label, Label> sorted(s.nu.begin(), s.nu.end());
  j["nu"] = sorted;
  return j;
}

json validation_to_json(const ValidationReport& r) {
  json j;
  j["is_corder"] = r.is_corder;
  json vs = json::array();
  for (const auto& v : r.violations) {
    json w = json::array();
    for (const auto& t : v.witness) w.push_back({t[0], t[1], t[2]});
    vs.push_back({{"axiom", v.axiom}, {"witness", w}});
  }
  j["violations"] = vs;
  return j;
}

json verdict_to_json(const VerdictReport& r) {
  json j;
  j["cop"] = r.cop;
  if (!r.cop) {
    j["reason"] = r.reason;
    j["witness"] = r.witness;
  }
  return j;
}

json function_sample_to_json(const FunctionSample& f) {
  json j;
  j["circular"] = f.circular;
  j["order"] = f.order;
  json vals;
  for (const auto& l : f.order)
    vals[l] = rat_to_decimal(f.value(l), 12);
  j["values"] = vals;
  return j;
}

FunctionSample function_sample_from_json(const json& j) {
  FunctionSample f;
  f.circular = j.value("circular", true);
  if (!j.contains("order") || !j.contains("values"))
    throw InputError("expected {\"circular\":..., \"order\":[...], \"values\":{...}}");
  for (const auto& e : j["order"]) f.order.push_back(label_from_json(e));
  for (auto it = j["values"].begin(); it != j["values"].end(); ++it) {
    const auto& v = it.value();
    if (v.is_string())
      f.values.emplace(it.key(), parse_decimal(v.get<std::string>(), 40));
    else if (v.is_number_integer())
      f.values.emplace(it.key(), Rat(v.get<long long>()));
    else if (v.is_number_float()) {
      // exact binary rational of the given double
      double d = v.get<double>();
      Rat r;
      long long scaled = (long long)(d * (double)(1ll << 40));
      r = Rat(Int(scaled), Int(1ll << 40));
      f.values.emplace(it.key(), r);
    } else {
      throw InputError("sample values must be numbers or decimal strings");
    }
  }
  for (const auto& l : f.order) f.value(l);
  return f;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace((unsigned char)s[a])) ++a;
  while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(strip(cur));
  return out;
}

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit((unsigned char)c)) return false;
  return true;
}

int resolve_angle_name(const RotationContext& ctx, const std::string& name) {
  const auto& angles = ctx.spec().angles;
  if (name == "alpha") {
    if (ctx.k() != 1)
      throw InputError("\"alpha\" is ambiguous for k > 1; use alpha<i>");
    return 0;
  }
  if (name.rfind("alpha", 0) == 0) {
    std::string idx = name.substr(5);
    if (!is_integer_literal(idx)) throw InputError("bad angle name: " + name);
    int i = std::stoi(idx);
    if (i < 1 || i > ctx.k())
      throw InputError("angle index out of range: " + name);
    return i - 1;
  }
  Angle::Kind want;
  if (name == "golden") want = Angle::Kind::Golden;
  else if (name == "sqrt2m1") want = Angle::Kind::Sqrt2m1;
  else throw InputError("unknown angle name: " + name);
  for (int i = 0; i < (int)angles.size(); ++i)
    if (angles[i].kind == want) return i;
  throw InputError("the spec carries no angle named " + name);
}

}  // namespace

Angle parse_angle(const std::string& text, int precision) {
  std::string s = strip(text);
  if (s == "golden" || s == "sqrt2m1") return Angle::named(s);
  return Angle::decimal(parse_decimal(s, precision));
}

std::vector<Angle> parse_angle_list(const std::string& comma_separated,
                                    int precision) {
  std::vector<Angle> out;
  for (const auto& part : split_list(comma_separated, ','))
    out.push_back(parse_angle(part, precision));
  return out;
}

CirclePoint parse_point(const RotationContext& ctx, const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw InputError("empty point expression");
  Rat base = 0;
  std::vector<Int> coeffs(ctx.k(), 0);
  std::size_t i = 0;
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = strip(s.substr(i, j - i));
    if (term.empty()) throw InputError("bad point expression: " + text);
    auto star = term.find('*');
    if (star != std::string::npos) {
      std::string coef = strip(term.substr(0, star));
      std::string name = strip(term.substr(star + 1));
      if (!is_integer_literal(coef))
        throw InputError("angle coefficients must be integers: " + term);
      coeffs[resolve_angle_name(ctx, name)] += sgn * Int(coef);
    } else if (std::isalpha((unsigned char)term[0])) {
      coeffs[resolve_angle_name(ctx, term)] += sgn;
    } else {
      base += Rat(sgn) * parse_decimal(term, ctx.spec().precision);
    }
    i = j;
  }
  return ctx.point(base, std::move(coeffs));
}

std::vector<CirclePoint> parse_point_list(const RotationContext& ctx,
                                          const std::string& comma_separated) {
  std::vector<CirclePoint> out;
  for (const auto& part : split_list(comma_separated, ','))
    out.push_back(parse_point(ctx, part));
  return out;
}

std::pair<long, long> parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    std::string s = strip(text);
    long v = std::stol(s);
    return {v, v};
  }
  long a = std::stol(strip(text.substr(0, pos)));
  long b = std::stol(strip(text.substr(pos + 2)));
  if (a > b) throw InputError("range bounds out of order: " + text);
  return {a, b};
}

ArcCover parse_arcs(const RotationContext& ctx, const std::string& text) {
  ArcCover cover;
  for (const auto& part : split_list(text, ',')) {
    auto colon = part.find(':');
    if (colon == std::string::npos)
      throw InputError("arcs are written start:end, got " + part);
    cover.arcs.push_back({parse_point(ctx, part.substr(0, colon)),
                          parse_point(ctx, part.substr(colon + 1))});
  }
  return cover;
}

}  // namespace cyclord::io
