#include "homlink/script.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "homlink/parse.hpp"

namespace homlink {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; });
}

long long parse_int(const std::string& text, int line, const std::string& what) {
  std::string t = trim(text);
  long long v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty())
    throw ScriptError("expected an integer for " + what + ", got '" + t + "'", line);
  return v;
}

bool is_annotation(const std::string& key) { return key.rfind("expect-", 0) == 0; }

void check_keys(const ScriptBlock& b, const std::set<std::string>& allowed, bool allow_annotations = false) {
  std::set<std::string> seen;
  for (const auto& e : b.entries) {
    if (!allowed.count(e.key) && !(allow_annotations && is_annotation(e.key)))
      throw ScriptError("unknown key '" + e.key + "'" + (b.name.empty() ? "" : " in " + b.name + " block"), e.line);
    if (!seen.insert(e.key).second) throw ScriptError("duplicate key '" + e.key + "'", e.line);
  }
}

}  // namespace

std::vector<ScriptEntry> annotations(const ScriptBlock& block) {
  std::vector<ScriptEntry> out;
  for (const auto& e : block.entries)
    if (is_annotation(e.key)) out.push_back(e);
  return out;
}

const ScriptEntry* ScriptBlock::find(const std::string& key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

std::vector<ScriptBlock> read_script(const std::string& text) {
  std::vector<ScriptBlock> blocks(1);
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  ScriptEntry* open = nullptr;  // entry being continued
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string line = trim(raw);
    if (open) {
      open->value += " " + line;
      if (line.empty() || (line.back() != ',' && line.back() != ';')) open = nullptr;
      continue;
    }
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (!is_identifier(line)) throw ScriptError("expected 'key = value' or a block keyword", lineno);
      blocks.push_back(ScriptBlock{line, lineno, {}});
      continue;
    }
    std::string key = trim(line.substr(0, eq));
    if (!is_identifier(key)) throw ScriptError("invalid key '" + key + "'", lineno);
    auto& entries = blocks.back().entries;
    entries.push_back(ScriptEntry{key, trim(line.substr(eq + 1)), lineno});
    const std::string& v = entries.back().value;
    if (!v.empty() && (v.back() == ',' || v.back() == ';')) open = &entries.back();
  }
  if (open) throw ScriptError("input ends inside a continued entry", open->line);
  return blocks;
}

RingPtr ring_from_block(const ScriptBlock& block, const std::optional<Field>& field_override) {
  const ScriptEntry* r = block.find("ring");
  if (!r) throw ScriptError("missing 'ring' entry", block.line);
  std::vector<std::string> names;
  try {
    names = parse_variable_list(r->value);
  } catch (const std::exception& e) {
    throw ScriptError(e.what(), r->line);
  }
  Field field = Field::rationals();
  if (field_override) {
    field = *field_override;
  } else if (const ScriptEntry* f = block.find("field")) {
    try {
      field = Field::parse(f->value);
    } catch (const std::exception& e) {
      throw ScriptError(e.what(), f->line);
    }
  }
  try {
    return make_ring(std::move(names), field);
  } catch (const std::exception& e) {
    throw ScriptError(e.what(), r->line);
  }
}

std::vector<Polynomial> forms_from_entry(const ScriptEntry& entry, const RingPtr& ring, char sep) {
  try {
    return parse_polynomial_list(entry.value, ring, sep);
  } catch (const std::exception& e) {
    throw ScriptError(std::string("in '") + entry.key + "': " + e.what(), entry.line);
  }
}

IdealFile parse_ideal_file(const std::string& text, const RingPtr& ring, const std::optional<Field>& field_override) {
  auto blocks = read_script(text);
  if (blocks.size() > 1) throw ScriptError("unexpected block '" + blocks[1].name + "'", blocks[1].line);
  const auto& head = blocks[0];
  check_keys(head, {"name", "ring", "field", "ideal"}, true);
  RingPtr R = ring;
  if (!R || head.find("ring")) R = ring_from_block(head, field_override);
  std::vector<Polynomial> gens;
  if (const ScriptEntry* e = head.find("ideal")) gens = forms_from_entry(*e, R);
  try {
    return IdealFile{R, Ideal(R, std::move(gens)), head.find("name") ? head.find("name")->value : "",
                     annotations(head)};
  } catch (const std::exception& e) {
    throw ScriptError(e.what(), head.find("ideal") ? head.find("ideal")->line : 0);
  }
}

ChainScript parse_chain_script(const std::string& text, const std::optional<Field>& field_override) {
  auto blocks = read_script(text);
  const auto& head = blocks[0];
  check_keys(head, {"name", "ring", "field", "ideal"}, true);
  RingPtr R = ring_from_block(head, field_override);
  const ScriptEntry* ie = head.find("ideal");
  if (!ie) throw ScriptError("missing 'ideal' entry", 1);
  ChainScript out{head.find("name") ? head.find("name")->value : "", R, Ideal::zero(R), {}, annotations(head)};
  try {
    out.ideal = Ideal(R, forms_from_entry(*ie, R));
  } catch (const ScriptError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScriptError(e.what(), ie->line);
  }
  if (out.ideal.is_zero()) throw ScriptError("the starting ideal is zero", ie->line);

  for (std::size_t b = 1; b < blocks.size(); ++b) {
    const auto& blk = blocks[b];
    if (blk.name != "step") throw ScriptError("unknown block '" + blk.name + "'", blk.line);
    check_keys(blk, {"seq", "seed", "expect"});
    StepSpec s;
    s.line = blk.line;
    const ScriptEntry* seq = blk.find("seq");
    if (!seq) throw ScriptError("step without 'seq'", blk.line);
    std::string v = seq->value;
    if (v.rfind("degrees", 0) == 0) {
      auto open = v.find('('), close = v.find(')');
      if (open == std::string::npos || close == std::string::npos || close < open)
        throw ScriptError("expected degrees(d1, ..., dc)", seq->line);
      std::stringstream ds(v.substr(open + 1, close - open - 1));
      std::string tok;
      while (std::getline(ds, tok, ',')) {
        long long d = parse_int(tok, seq->line, "a degree");
        if (d < 1) throw ScriptError("degrees must be positive", seq->line);
        s.degrees.push_back(static_cast<int>(d));
      }
      if (s.degrees.empty()) throw ScriptError("empty degree list", seq->line);
      std::string rest = trim(v.substr(close + 1));
      if (!rest.empty()) {
        auto eq = rest.find('=');
        if (eq == std::string::npos || trim(rest.substr(0, eq)) != "seed")
          throw ScriptError("expected 'seed = N' after the degree list", seq->line);
        s.seed = static_cast<std::uint64_t>(parse_int(rest.substr(eq + 1), seq->line, "seed"));
      }
      if (const ScriptEntry* se = blk.find("seed")) {
        if (!rest.empty()) throw ScriptError("seed given twice", se->line);
        s.seed = static_cast<std::uint64_t>(parse_int(se->value, se->line, "seed"));
      }
    } else {
      if (const ScriptEntry* se = blk.find("seed")) throw ScriptError("seed applies only to degrees(...)", se->line);
      s.forms = forms_from_entry(*seq, R, ';');
      if (s.forms.empty()) throw ScriptError("empty sequence", seq->line);
      for (const auto& f : s.forms)
        if (!f.is_homogeneous()) throw ScriptError("form is not homogeneous: " + f.to_string(), seq->line);
      s.degrees = degrees_of(s.forms);
    }
    if (const ScriptEntry* ex = blk.find("expect")) {
      try {
        s.expect = Ideal(R, forms_from_entry(*ex, R));
      } catch (const ScriptError&) {
        throw;
      } catch (const std::exception& e) {
        throw ScriptError(e.what(), ex->line);
      }
    }
    out.steps.push_back(std::move(s));
  }
  if (out.steps.empty()) throw ScriptError("no step blocks", 0);
  return out;
}

ChainReport chain_verify(const ChainScript& script) {
  ChainReport rep;
  Ideal current = script.ideal;
  for (std::size_t k = 0; k < script.steps.size(); ++k) {
    const StepSpec& s = script.steps[k];
    const std::string where = "step " + std::to_string(k + 1) + " (line " + std::to_string(s.line) + ")";
    RegularSequenceCert cert;
    if (!s.forms.empty()) {
      cert = is_regular_sequence(s.forms);
      if (!cert.verified) {
        rep.failed_step = k + 1;
        rep.failure = where + ": not a regular sequence; height stops increasing at form " +
                      std::to_string(cert.failed_at);
        return rep;
      }
    } else {
      auto found = find_reg_seq(current, s.degrees, s.seed);
      if (!found) {
        rep.failed_step = k + 1;
        rep.failure = where + ": no regular sequence of the requested degrees found in the ideal";
        return rep;
      }
      cert = std::move(*found);
    }
    std::optional<LinkStep> ls;
    try {
      ls = link(current, cert, true);
    } catch (const LinkError& e) {
      rep.failed_step = k + 1;
      rep.failure = where + ": " + e.what();
      return rep;
    }
    ChainStepResult r{std::move(*ls), std::nullopt};
    if (s.expect) r.expect_matched = (r.step.target == *s.expect);
    current = r.step.target;
    bool mismatch = r.expect_matched && !*r.expect_matched;
    rep.steps.push_back(std::move(r));
    if (mismatch) {
      rep.failed_step = k + 1;
      rep.failure = where + ": linked ideal differs from the expected one";
      return rep;
    }
  }
  rep.complete = true;
  rep.all_minimal = std::all_of(rep.steps.begin(), rep.steps.end(), [](const auto& r) { return r.step.minimal; });
  rep.terminal_is_ci = is_complete_intersection(current);
  return rep;
}

}  // namespace homlink
