#include "qrefl/report.hpp"

#include <sstream>

#include "qrefl/error.hpp"

namespace qrefl {

using nlohmann::json;

namespace {

json quat(const Quaternion& q) { return json::array({q.a, q.b, q.c, q.d}); }

Quaternion quat_from(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(), j.at(3).get<double>()};
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json component_json(const SolutionComponent& c) {
  json j{{"kind", to_string(c.kind())}, {"provenance", c.provenance}};
  switch (c.kind()) {
    case ComponentKind::point: j["q"] = quat(std::get<PointComponent>(c.shape).q); break;
    case ComponentKind::segment: {
      const auto& s = std::get<SegmentComponent>(c.shape);
      j["u"] = quat(s.u);
      j["lo"] = s.lo;
      j["hi"] = s.hi;
      j["hi_closed"] = s.hi_closed;
      j["exclude_zero"] = s.exclude_zero;
      break;
    }
    case ComponentKind::circle: {
      const auto& s = std::get<CircleComponent>(c.shape);
      j["u"] = quat(s.u);
      j["v"] = quat(s.v);
      break;
    }
    case ComponentKind::disk: {
      const auto& s = std::get<DiskComponent>(c.shape);
      j["u"] = quat(s.u);
      j["v"] = quat(s.v);
      break;
    }
    case ComponentKind::sphere: {
      const auto& s = std::get<SphereComponent>(c.shape);
      j["center"] = s.center;
      j["radius"] = s.radius;
      break;
    }
  }
  return j;
}

SolutionComponent component_from(const json& j) {
  const auto kind = component_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw Error(ErrorKind::Parse, "unknown component kind " + j.at("kind").dump());
  SolutionComponent c{PointComponent{}, j.value("provenance", std::string())};
  switch (*kind) {
    case ComponentKind::point: c.shape = PointComponent{quat_from(j.at("q"))}; break;
    case ComponentKind::segment:
      c.shape = SegmentComponent{quat_from(j.at("u")), j.at("lo").get<double>(), j.at("hi").get<double>(),
                                 j.at("hi_closed").get<bool>(), j.at("exclude_zero").get<bool>()};
      break;
    case ComponentKind::circle: c.shape = CircleComponent{quat_from(j.at("u")), quat_from(j.at("v"))}; break;
    case ComponentKind::disk: c.shape = DiskComponent{quat_from(j.at("u")), quat_from(j.at("v"))}; break;
    case ComponentKind::sphere:
      c.shape = SphereComponent{j.at("center").get<double>(), j.at("radius").get<double>()};
      break;
  }
  return c;
}

}  // namespace

bool Report::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void Report::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

json to_json(const SolutionSet& s) {
  json comps = json::array();
  for (const auto& c : s.components) comps.push_back(component_json(c));
  return {{"includes_standard", s.includes_standard},
          {"determined", s.determined},
          {"note", s.note},
          {"rendered", s.render()},
          {"components", comps}};
}

SolutionSet solution_set_from_json(const json& j) {
  SolutionSet s;
  s.includes_standard = j.at("includes_standard").get<bool>();
  s.determined = j.value("determined", true);
  s.note = j.value("note", std::string());
  for (const auto& c : j.at("components")) s.components.push_back(component_from(c));
  return s;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"id", r.id},
          {"kind", r.kind},
          {"tolerance", r.tolerance},
          {"order", opt(r.order)},
          {"expected_order", opt(r.expected_order)},
          {"reflection_count", opt(r.reflection_count)},
          {"expected_reflection_count", opt(r.expected_reflection_count)},
          {"L_size", opt(r.L_size)},
          {"H_size", opt(r.H_size)},
          {"solutions", r.solutions ? to_json(*r.solutions) : json(nullptr)},
          {"expected_solutions", r.expected_solutions ? to_json(*r.expected_solutions) : json(nullptr)},
          {"notes", r.notes},
          {"checks", checks},
          {"seconds", r.seconds},
          {"passed", r.passed()}};
}

Report report_from_json(const json& j) {
  Report r;
  r.id = j.at("id").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.tolerance = j.at("tolerance").get<double>();
  r.order = opt_from<std::size_t>(j, "order");
  r.expected_order = opt_from<std::size_t>(j, "expected_order");
  r.reflection_count = opt_from<std::size_t>(j, "reflection_count");
  r.expected_reflection_count = opt_from<std::size_t>(j, "expected_reflection_count");
  r.L_size = opt_from<std::size_t>(j, "L_size");
  r.H_size = opt_from<std::size_t>(j, "H_size");
  if (j.contains("solutions") && !j.at("solutions").is_null()) {
    r.solutions = solution_set_from_json(j.at("solutions"));
  }
  if (j.contains("expected_solutions") && !j.at("expected_solutions").is_null()) {
    r.expected_solutions = solution_set_from_json(j.at("expected_solutions"));
  }
  r.notes = j.value("notes", std::vector<std::string>{});
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.value("detail", std::string())});
  }
  r.seconds = j.value("seconds", 0.0);
  return r;
}

bool operator==(const Report& x, const Report& y) { return to_json(x) == to_json(y); }

std::string print_report(const Report& r, bool structured) {
  if (structured) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.id;
  if (r.order) os << "  order " << *r.order;
  if (r.reflection_count) os << "  reflections " << *r.reflection_count;
  os << '\n';
  if (r.solutions) os << "  systems: " << r.solutions->render() << '\n';
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

std::string print_reports(const std::vector<Report>& rs, bool structured) {
  if (structured) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : rs) {
    out += print_report(r, false);
    passed += r.passed() ? 1 : 0;
  }
  out += std::to_string(passed) + "/" + std::to_string(rs.size()) + " passed\n";
  return out;
}

Report parse_report(std::string_view text) {
  try {
    return report_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::vector<Report> parse_reports(std::string_view text) {
  try {
    std::vector<Report> out;
    for (const auto& j : json::parse(text)) out.push_back(report_from_json(j));
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace qrefl
