#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace homlink::cli {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json forms_json(const std::vector<Polynomial>& forms) {
  Json a = Json::array();
  for (const auto& f : forms) a.push_back(f.to_string());
  return a;
}

Json ideal_json(const Ideal& I) {
  return Json{{"generators", forms_json(I.generators())},
              {"minimal_generators", forms_json(I.minimal_generators())},
              {"groebner_basis", forms_json(I.groebner().elements)}};
}

Json betti_json(const BettiTable& b) {
  Json entries = Json::array();
  for (const auto& [k, v] : b.entries()) entries.push_back(Json{{"i", k.first}, {"j", k.second}, {"b", v}});
  return Json{{"indexing", "ideal"}, {"entries", entries}, {"grid", b.to_grid()}};
}

Json hilbert_json(const HilbertData& h) {
  return Json{{"dim", h.dim},
              {"degree", h.degree},
              {"numerator", h.numerator},
              {"h_vector", h.h_vector},
              {"values", h.values}};
}

Json sequence_json(const RegularSequenceCert& c) {
  return Json{{"forms", forms_json(c.forms)}, {"degrees", c.degrees}, {"verified", c.verified}};
}

Json link_step_json(const LinkStep& s) {
  return Json{{"sequence", sequence_json(s.sequence)},
              {"min_degrees", s.min_degrees},
              {"minimal", s.minimal},
              {"back_verified", s.back_verified},
              {"method", s.method},
              {"target", ideal_json(s.target)}};
}

Json chain_json(const ChainReport& r) {
  Json steps = Json::array();
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    Json s = Json{{"index", k + 1}};
    s.update(link_step_json(r.steps[k].step));
    s["expect_matched"] = r.steps[k].expect_matched ? Json(*r.steps[k].expect_matched) : Json();
    steps.push_back(s);
  }
  Json out{{"steps", steps},
           {"complete", r.complete},
           {"all_minimal", r.all_minimal},
           {"terminal_is_ci", r.terminal_is_ci},
           {"minimally_licci", r.minimally_licci()},
           {"failed_step", r.failed_step},
           {"failure", r.failure.empty() ? Json() : Json(r.failure)}};
  if (!r.steps.empty()) out["terminal"] = ideal_json(r.steps.back().step.target);
  else out["terminal"] = nullptr;
  return out;
}

Json make_report(const std::string& command, const std::vector<std::string>& argv) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"argv", argv},
              {"inputs", Json{{"digest", nullptr}, {"files", Json::array()}, {"field", nullptr}, {"ring", nullptr}}},
              {"seed", nullptr},
              {"results", Json::object()},
              {"verdict", Json{{"holds", nullptr}, {"summary", ""}, {"exit_code", 0}}},
              {"error", nullptr},
              {"timing", Json{{"wall_seconds", 0.0}}}};
}

namespace {

bool inline_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

bool inline_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (!inline_scalar(e)) return false;
  return true;
}

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << v.get<double>();
    return os.str();
  }
  return v.dump();
}

void render(const Json& v, int indent, std::ostringstream& os);

void render_value(const std::string& key, const Json& v, int indent, std::ostringstream& os) {
  std::string pad(indent, ' ');
  if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
    os << pad << key << ":\n";
    std::istringstream lines(v.get<std::string>());
    for (std::string l; std::getline(lines, l);) os << pad << "  " << l << '\n';
  } else if (inline_scalar(v)) {
    os << pad << key << ": " << scalar_text(v) << '\n';
  } else if (inline_array(v)) {
    os << pad << key << ": [";
    bool strings = !v.empty() && v[0].is_string();
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? (strings ? ", " : " ") : "") << scalar_text(v[i]);
    os << "]\n";
  } else if (v.empty()) {
    os << pad << key << ": " << (v.is_array() ? "[]" : "{}") << '\n';
  } else {
    os << pad << key << ":\n";
    render(v, indent + 2, os);
  }
}

void render(const Json& v, int indent, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) render_value(k, x, indent, os);
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) render_value("[" + std::to_string(i + 1) + "]", v[i], indent, os);
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

}  // namespace homlink::cli
