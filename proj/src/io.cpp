#include "finembed/io.hpp"

#include <fstream>
#include <sstream>

#include "finembed/error.hpp"

namespace finembed::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& why) {
  throw Error(ErrorCode::kMalformedInput, where + ": " + why);
}

// Re-raises library errors with the JSON path in front.
template <typename Fn>
auto in_context(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.detail());
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(where + "." + key, "missing");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

Predicate as_predicate(const json& j, const std::string& where) {
  const auto text = as_string(j, where);
  return in_context(where, [&] { return Predicate::parse(text); });
}

Element as_element(const Window& w, const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    const auto e = w.from_value(v);
    if (!e) throw Error(ErrorCode::kElementOutOfWindow, where + ": " + std::to_string(v) + " is outside the window");
    return *e;
  }
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    return in_context(where, [&] { return w.parse(text); });
  }
  bad(where, "expected an integer or a word");
}

std::string rational(const Rational& r) { return r.to_string(); }

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMalformedInput, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedInput, path + ": " + e.what());
  }
}

WindowPtr parse_window(const json& j, const std::string& where) {
  const auto kind_name = as_string(field(j, "kind", where), where + ".kind");
  const auto kind = in_context(where + ".kind", [&] { return parse_window_kind(kind_name); });
  if (kind == WindowKind::kTable) {
    const auto& rows = field(j, "table", where);
    if (!rows.is_array()) bad(where + ".table", "expected an array of rows");
    std::vector<std::vector<std::uint32_t>> table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string row_where = where + ".table[" + std::to_string(i) + "]";
      if (!rows[i].is_array()) bad(row_where, "expected an array");
      std::vector<std::uint32_t> row;
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        const auto v = as_int(rows[i][k], row_where + "[" + std::to_string(k) + "]");
        if (v < 0) bad(row_where + "[" + std::to_string(k) + "]", "expected a non-negative entry");
        row.push_back(static_cast<std::uint32_t>(v));
      }
      table.push_back(std::move(row));
    }
    return in_context(where + ".table", [&] { return Window::make_table(std::move(table)); });
  }
  const auto bound = as_int(field(j, "bound", where), where + ".bound");
  if (bound < 0) bad(where + ".bound", "expected a non-negative integer");
  std::vector<char> alphabet;
  if (j.contains("alphabet")) {
    const auto& letters = j["alphabet"];
    if (!letters.is_array()) bad(where + ".alphabet", "expected an array of letters");
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const auto letter = as_string(letters[i], where + ".alphabet[" + std::to_string(i) + "]");
      if (letter.size() != 1) bad(where + ".alphabet[" + std::to_string(i) + "]", "expected a single letter");
      alphabet.push_back(letter[0]);
    }
  }
  return in_context(where, [&] { return Window::make(kind, static_cast<std::uint64_t>(bound), alphabet); });
}

GroundSet parse_set(const json& j, const std::string& where, WindowPtr fallback) {
  if (!j.is_object()) bad(where, "expected an object");
  WindowPtr window = fallback;
  if (j.contains("window")) {
    window = parse_window(j["window"], where + ".window");
  } else if (!window) {
    bad(where + ".window", "missing");
  }
  const auto& body = field(j, "set", where);
  const std::string label = j.contains("label") ? as_string(j["label"], where + ".label") : std::string{};
  if (body.contains("explicit")) {
    const auto& list = body["explicit"];
    if (!list.is_array()) bad(where + ".set.explicit", "expected an array");
    std::vector<Element> members;
    for (std::size_t i = 0; i < list.size(); ++i) {
      members.push_back(as_element(*window, list[i], where + ".set.explicit[" + std::to_string(i) + "]"));
    }
    return GroundSet::explicit_set(window, std::move(members), label);
  }
  if (body.contains("predicate")) {
    auto predicate = as_predicate(body["predicate"], where + ".set.predicate");
    return in_context(where + ".set.predicate",
                      [&] { return GroundSet::from_predicate(window, std::move(predicate), label); });
  }
  bad(where + ".set", "expected \"explicit\" or \"predicate\"");
}

ParamEnumeration parse_enumeration(const json& j, const std::string& where) {
  ParamEnumeration e;
  if (!j.is_object()) bad(where, "expected an object");
  if (j.contains("mode")) {
    const auto mode = as_string(j["mode"], where + ".mode");
    if (mode == "complete-anchored") {
      e.mode = EnumMode::kCompleteAnchored;
    } else if (mode == "bounded-scan") {
      e.mode = EnumMode::kBoundedScan;
    } else {
      bad(where + ".mode", "expected complete-anchored or bounded-scan");
    }
  }
  if (j.contains("bound")) {
    e.bound = as_int(j["bound"], where + ".bound");
    if (e.bound < 0) bad(where + ".bound", "expected a non-negative integer");
  }
  return e;
}

FamilySpec parse_family(const json& j, WindowPtr window, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  if (j.contains("pair")) {
    const auto& p = j["pair"];
    const std::string pw = where + ".pair";
    const auto n = as_int(field(p, "n", pw), pw + ".n");
    const auto k = as_int(field(p, "k", pw), pw + ".k");
    if (n < 1) bad(pw + ".n", "expected an integer >= 1");
    if (k < 0) bad(pw + ".k", "expected a non-negative integer");
    const auto term = as_string(field(p, "term", pw), pw + ".term");
    ParamRegion region;
    if (p.contains("R")) {
      const auto& r = p["R"];
      if (r.is_array()) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          region.per_param.push_back(as_predicate(r[i], pw + ".R[" + std::to_string(i) + "]"));
        }
      } else {
        region.per_param.push_back(as_predicate(r, pw + ".R"));
      }
    }
    ParamEnumeration e;
    e.mode = EnumMode::kBoundedScan;
    if (p.contains("enum")) e = parse_enumeration(p["enum"], pw + ".enum");
    return in_context(pw, [&] {
      return make_family_from_pair(window, static_cast<std::size_t>(n), static_cast<std::size_t>(k), term, region, e);
    });
  }

  const auto name = as_string(field(j, "builtin", where), where + ".builtin");
  const json args = j.contains("args") ? j["args"] : json::object();
  const std::string aw = where + ".args";
  if (!args.is_object()) bad(aw, "expected an object");
  auto family = in_context(where, [&]() -> FamilySpec {
    if (name == "translations-right" || name == "translations-left") {
      std::optional<Predicate> region;
      if (args.contains("R")) region = as_predicate(args["R"], aw + ".R");
      return builtin_translations(window, name == "translations-right" ? TranslationSide::kRight : TranslationSide::kLeft,
                                  region);
    }
    if (name == "affine") {
      const std::int64_t slope = args.contains("min_slope") ? as_int(args["min_slope"], aw + ".min_slope") : 1;
      return builtin_affine(window, slope);
    }
    if (name == "geoarithmetic") return builtin_geoarithmetic(window);
    if (name == "polynomial") {
      const auto& s = field(args, "S", aw);
      const auto coeff_window = additive_window(static_cast<std::uint64_t>(std::max<std::int64_t>(window->max_value(), 1)));
      GroundSet coefficients = s.is_array() ? parse_set(json{{"set", {{"explicit", s}}}}, aw + ".S", coeff_window)
                                            : GroundSet::from_predicate(coeff_window, as_predicate(s, aw + ".S"));
      const auto& d_list = field(args, "D", aw);
      if (!d_list.is_array()) bad(aw + ".D", "expected an array of exponents");
      std::vector<int> exponents;
      for (std::size_t i = 0; i < d_list.size(); ++i) {
        exponents.push_back(static_cast<int>(as_int(d_list[i], aw + ".D[" + std::to_string(i) + "]")));
      }
      int degree = 0;
      for (const auto e : exponents) degree = std::max(degree, e);
      if (args.contains("d")) degree = static_cast<int>(as_int(args["d"], aw + ".d"));
      return builtin_polynomial(window, coefficients, exponents, degree);
    }
    if (name == "word-suffix") {
      const auto letter = as_string(field(args, "letter", aw), aw + ".letter");
      if (letter.size() != 1) bad(aw + ".letter", "expected a single letter");
      return builtin_word_suffix(window, letter[0]);
    }
    bad(where + ".builtin", "unknown family '" + name + "'");
  });
  if (j.contains("enum")) family = family.with_enumeration(parse_enumeration(j["enum"], where + ".enum"));
  return family;
}

json element_json(const Window& w, Element e) {
  if (w.is_numeric()) return w.value(e);
  return w.display(e);
}

json elements_json(const Window& w, std::span<const Element> elements) {
  json out = json::array();
  for (const auto e : elements) out.push_back(element_json(w, e));
  return out;
}

json params_json(const FamilySpec& family, const ParamTuple& params) {
  json out = json::array();
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto e = family.param_is_element(i) ? family.window().from_value(params[i]) : std::nullopt;
    out.push_back(e ? element_json(family.window(), *e) : json(params[i]));
  }
  return out;
}

json to_json(const EmbedVerdict& verdict, const FamilySpec& family) {
  json out{{"outcome", std::string(outcome_name(verdict.outcome))},
           {"complete", verdict.complete},
           {"params_examined", verdict.params_examined},
           {"family", family.name()}};
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    out["witness"] = {{"F", elements_json(family.window(), w.F)},
                      {"params", params_json(family, w.params)},
                      {"image", elements_json(family.window(), w.image)}};
  }
  return out;
}

json to_json(const std::vector<ProbeResult>& probes, const FamilySpec& family) {
  json list = json::array();
  std::optional<std::size_t> refuted;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    json p = to_json(probes[i].verdict, family);
    p["size"] = probes[i].requested_size;
    p["random"] = probes[i].random;
    if (probes[i].verdict.outcome == Outcome::kNo && !refuted) refuted = i;
    list.push_back(std::move(p));
  }
  json out{{"probes", list}, {"family", family.name()}};
  out["relation"] = refuted ? "refuted" : "consistent";
  if (refuted) out["counterexample_probe"] = *refuted;
  return out;
}

json to_json(const ProgressionCertificate& c) {
  json out{{"kind", std::string(progression_kind_name(c.kind))},
           {"length", c.length},
           {"params", c.params},
           {"realized", c.realized}};
  if (c.kind == ProgressionKind::kPolynomial) out["exponents"] = c.exponents;
  return out;
}

json to_json(const ThickReport& report, const Window& w) {
  json probes = json::array();
  for (const auto& p : report.probes) {
    probes.push_back({{"length", p.length}, {"shift", p.shift ? element_json(w, *p.shift) : json(nullptr)}});
  }
  return {{"kind", "thick"}, {"probes", probes}, {"all_found", report.all_found()}};
}

json to_json(const SyndeticReport& report) {
  json probes = json::array();
  for (const auto& p : report.probes) {
    probes.push_back({{"span", p.span}, {"start", p.start ? json(*p.start) : json(nullptr)}});
  }
  return {{"kind", "piecewise-syndetic"}, {"gap", report.gap}, {"probes", probes}, {"all_found", report.all_found()}};
}

namespace {

json witness_json(const DensityWitness& w, const Window& window) {
  return {{"n", w.n},
          {"shift", w.formal_identity ? json("identity") : element_json(window, w.shift)},
          {"hits", w.hits},
          {"size", w.level_size},
          {"ratio", rational(w.ratio)}};
}

}  // namespace

json to_json(const DensityReport& report, const Window& w) {
  json tails = json::array();
  for (const auto& t : report.tails) {
    json entry = witness_json(t.witness, w);
    entry["m"] = t.m;
    tails.push_back(std::move(entry));
  }
  return {{"value", rational(report.value)},
          {"tail_start", report.tail_start},
          {"witness", witness_json(report.witness(), w)},
          {"tails", tails},
          {"shifts_skipped", report.shifts_skipped}};
}

json to_json(const MonotonicityReport& report) {
  json pairs = json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back({{"density_a", rational(p.density_a)},
                     {"density_b", rational(p.density_b)},
                     {"margin", rational(p.margin)},
                     {"holds", p.holds}});
  }
  return {{"b", report.b},
          {"tolerance", rational(report.tolerance)},
          {"pairs", pairs},
          {"violations", report.violations},
          {"holds", report.violations == 0}};
}

json to_json(const ColoringCertificate& c) {
  json out{{"outcome", std::string(coloring_outcome_name(c.outcome))},
           {"pattern", c.pattern},
           {"colors", c.colors},
           {"nodes", c.nodes},
           {"exhaustive", c.exhaustive},
           {"instances", c.instance_count}};
  if (!c.universe.empty() && c.universe.front() == 1 && c.universe.back() == static_cast<std::int64_t>(c.universe.size())) {
    out["N"] = c.universe.size();
  } else {
    out["universe"] = c.universe;
  }
  if (c.outcome == ColoringOutcome::kAvoiding) {
    out["coloring"] = c.coloring;
    json classes = json::array();
    for (std::size_t k = 0; k < c.colors; ++k) classes.push_back(json::array());
    for (std::size_t i = 0; i < c.coloring.size(); ++i) classes[static_cast<std::size_t>(c.coloring[i])].push_back(c.universe[i]);
    out["classes"] = classes;
  }
  return out;
}

json to_json(const ThresholdResult& r) {
  json out{{"threshold", r.threshold ? json(*r.threshold) : json(nullptr)}, {"nmax", r.n_max}};
  if (!r.threshold) out["status"] = "unknown";
  if (r.last_avoiding) out["last_avoiding"] = to_json(*r.last_avoiding);
  return out;
}

json to_json(const HomogeneousReport& report) {
  return {{"polynomial", report.polynomial},
          {"homogeneous", report.homogeneous},
          {"monomial_degrees", report.monomial_degrees},
          {"solutions", report.solutions},
          {"certificate", to_json(report.certificate)}};
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace finembed::io
