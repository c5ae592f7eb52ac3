#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "homlink/parse.hpp"

#ifndef HOMLINK_FIXTURE_DIR
#define HOMLINK_FIXTURE_DIR "fixtures"
#endif

namespace homlink::cli {

namespace {

// Bad files, flags or values; always exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string ring_file, ideal_file, chain_file, out_file, field_text;
  std::string format = "text";
  std::uint64_t seed = 1;
  bool seed_given = false;
  int max_degree = 10;
  std::string seq_text, degrees_text, params_text = "1,4,5,8", section_degree = "auto";
  int vars = 4;
  std::string fixture_id, fixture_dir;
};

struct Verdict {
  std::optional<bool> holds;
  std::string summary;
};

// Accumulates the report while a command runs.
struct Context {
  Options opt;
  Json report;
  std::string digest_input;

  std::optional<Field> field() const {
    if (opt.field_text.empty()) return std::nullopt;
    try {
      return Field::parse(opt.field_text);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    report["inputs"]["files"].push_back(Json{{"path", path}, {"fnv1a", fnv1a_hex(text)}});
    digest_input += path + '\0' + text + '\0';
    return text;
  }

  void describe_ring(const RingPtr& R) {
    report["inputs"]["field"] = R->field().name();
    report["inputs"]["ring"] = R->names();
  }

  void use_seed() { report["seed"] = opt.seed; }
};

std::string located(const std::string& path, const ScriptError& e) { return path + ": " + e.what(); }

RingPtr load_ring(Context& ctx) {
  if (ctx.opt.ring_file.empty()) return nullptr;
  std::string text = ctx.read(ctx.opt.ring_file);
  try {
    auto blocks = read_script(text);
    return ring_from_block(blocks[0], ctx.field());
  } catch (const ScriptError& e) {
    throw InputError(located(ctx.opt.ring_file, e));
  }
}

IdealFile load_ideal(Context& ctx) {
  if (ctx.opt.ideal_file.empty()) throw InputError("--ideal FILE is required");
  RingPtr R = load_ring(ctx);
  std::string text = ctx.read(ctx.opt.ideal_file);
  try {
    IdealFile f = parse_ideal_file(text, R, ctx.field());
    ctx.describe_ring(f.ring);
    return f;
  } catch (const ScriptError& e) {
    throw InputError(located(ctx.opt.ideal_file, e));
  }
}

ChainScript load_chain(Context& ctx, const std::string& path) {
  std::string text = ctx.read(path);
  try {
    ChainScript s = parse_chain_script(text, ctx.field());
    ctx.describe_ring(s.ring);
    return s;
  } catch (const ScriptError& e) {
    throw InputError(located(path, e));
  }
}

std::vector<int> int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("bad integer '" + tok + "' in " + what);
    }
  }
  return out;
}

std::string join(const std::vector<int>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Json betti_full(const Ideal& I) {
  BettiTable b = betti_table(I);
  Json j = betti_json(b);
  j["regularity"] = regularity(b);
  j["projective_dimension"] = I.is_zero() ? 0 : proj_dim(b) + 1;
  return j;
}

// ---- plain commands -------------------------------------------------------

Verdict cmd_gb(Context& ctx) {
  auto f = load_ideal(ctx);
  auto& r = ctx.report["results"];
  r["order"] = f.ring->order().name();
  r["ideal"] = ideal_json(f.ideal);
  return {std::nullopt, std::to_string(f.ideal.groebner().size()) + " basis elements"};
}

Verdict cmd_hilbert(Context& ctx) {
  auto f = load_ideal(ctx);
  if (ctx.opt.max_degree < 0) throw InputError("--max-degree must be non-negative");
  auto h = hilbert(f.ideal, ctx.opt.max_degree);
  ctx.report["results"]["hilbert"] = hilbert_json(h);
  return {std::nullopt, "dim " + std::to_string(h.dim) + ", degree " + std::to_string(h.degree)};
}

Verdict cmd_betti(Context& ctx) {
  auto f = load_ideal(ctx);
  if (f.ideal.is_unit()) throw InputError("the unit ideal has no resolution");
  auto& r = ctx.report["results"];
  r["betti"] = betti_full(f.ideal);
  if (!f.ideal.is_zero()) {
    r["height"] = height(f.ideal);
    r["cohen_macaulay"] = is_cohen_macaulay(f.ideal);
  }
  return {std::nullopt, "regularity " + std::to_string(r["betti"]["regularity"].get<int>())};
}

Verdict cmd_height(Context& ctx) {
  auto f = load_ideal(ctx);
  if (f.ideal.is_unit()) throw InputError("height of the unit ideal");
  auto& r = ctx.report["results"];
  r["height"] = height(f.ideal);
  r["krull_dim"] = krull_dim(f.ideal);
  return {std::nullopt, "height " + std::to_string(r["height"].get<int>())};
}

Verdict cmd_mindeg(Context& ctx) {
  auto f = load_ideal(ctx);
  if (f.ideal.is_unit() || f.ideal.is_zero()) throw InputError("needs a proper nonzero ideal");
  auto d = min_reg_seq_degrees(f.ideal);
  auto& r = ctx.report["results"];
  r["height"] = height(f.ideal);
  r["min_degrees"] = d;
  return {std::nullopt, "(" + join(d) + ")"};
}

Verdict cmd_link(Context& ctx) {
  auto f = load_ideal(ctx);
  auto& r = ctx.report["results"];
  r["source"] = ideal_json(f.ideal);
  RegularSequenceCert cert;
  if (!ctx.opt.seq_text.empty()) {
    std::vector<Polynomial> forms;
    try {
      forms = parse_polynomial_list(ctx.opt.seq_text, f.ring, ';');
    } catch (const std::exception& e) {
      throw InputError(std::string("--seq: ") + e.what());
    }
    cert = is_regular_sequence(forms);
  } else if (!ctx.opt.degrees_text.empty()) {
    ctx.use_seed();
    auto found = find_reg_seq(f.ideal, int_list(ctx.opt.degrees_text, "--degrees"), ctx.opt.seed);
    if (!found) {
      r["failure"] = "no regular sequence of degrees (" + ctx.opt.degrees_text + ") found";
      return {false, r["failure"].get<std::string>()};
    }
    cert = *found;
  } else {
    throw InputError("link needs --seq or --degrees");
  }
  try {
    LinkStep s = link(f.ideal, cert, true);
    r["step"] = link_step_json(s);
    return {s.minimal, s.minimal ? "minimal link" : "link is not minimal: (" + join(sorted(cert.degrees)) +
                                                        ") vs minimal (" + join(s.min_degrees) + ")"};
  } catch (const LinkError& e) {
    r["failure"] = e.what();
    return {false, e.what()};
  }
}

std::string chain_summary(const ChainReport& rep) {
  if (!rep.complete) return rep.failure;
  std::string s = std::to_string(rep.steps.size()) + " steps";
  if (rep.all_minimal) {
    s += ", all minimal";
  } else {
    for (std::size_t k = 0; k < rep.steps.size(); ++k)
      if (!rep.steps[k].step.minimal)
        s += ", step " + std::to_string(k + 1) + " not minimal (" + join(sorted(rep.steps[k].step.sequence.degrees)) +
             " vs " + join(rep.steps[k].step.min_degrees) + ")";
  }
  s += rep.terminal_is_ci ? ", terminal CI " : ", terminal not a CI ";
  s += Ideal(rep.steps.back().step.target.ring_ptr(), rep.steps.back().step.target.minimal_generators()).to_string();
  return s;
}

Verdict cmd_chain_verify(Context& ctx) {
  if (ctx.opt.chain_file.empty()) throw InputError("--chain FILE is required");
  ChainScript sc = load_chain(ctx, ctx.opt.chain_file);
  ChainReport rep = chain_verify(sc);
  auto& r = ctx.report["results"];
  r["name"] = sc.name;
  r["start"] = ideal_json(sc.ideal);
  r["chain"] = chain_json(rep);
  return {rep.minimally_licci(), chain_summary(rep)};
}

Json scan_json(const LicciScan& scan, const RingPtr& R) {
  Json trace = Json::array();
  for (const auto& I : scan.trace) trace.push_back(forms_json(I.minimal_generators()));
  Json sharp = Json::array();
  for (const auto& m : scan.fixpoint_sharp) sharp.push_back(R->monomial_to_string(m));
  return Json{{"verdict", to_string(scan.verdict)},
              {"trace", trace},
              {"fixpoint_sharp", sharp},
              {"sharp_height", scan.sharp_height},
              {"note", scan.note}};
}

Verdict cmd_monomial_scan(Context& ctx) {
  auto f = load_ideal(ctx);
  LicciScan scan;
  try {
    scan = monomial_licci_scan(f.ideal);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  ctx.report["results"]["scan"] = scan_json(scan, f.ring);
  return {scan.verdict == LicciVerdict::ReducedToCI, to_string(scan.verdict)};
}

Verdict cmd_socle_check(Context& ctx) {
  auto f = load_ideal(ctx);
  if (ctx.opt.degrees_text.empty()) throw InputError("socle-check needs --degrees");
  auto d = int_list(ctx.opt.degrees_text, "--degrees");
  SocleCheck sc;
  try {
    sc = socle_degree_bound_check(f.ideal, d);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  auto& r = ctx.report["results"];
  r["degrees"] = d;
  r["sum"] = sc.sum;
  r["bound"] = sc.bound;
  r["strict"] = sc.strict;
  r["passes"] = sc.passes;
  return {sc.passes, std::to_string(sc.sum) + (sc.strict ? " > " : " >= ") + std::to_string(sc.bound) +
                         (sc.passes ? " holds" : " fails")};
}

Thm32Params read_params(const Options& o) {
  auto v = int_list(o.params_text, "--params");
  if (v.size() != 4) throw InputError("--params needs four integers a1,a2,a3,a4");
  Thm32Params p{v[0], v[1], v[2], v[3], o.seed};
  try {
    check_params(p);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("parameters: ") + e.what());
  }
  return p;
}

Json star_json(const StarCheck& s, const Thm32Params& p) {
  return Json{{"height_ok", s.height_ok},
              {"sequence", s.sequence ? sequence_json(*s.sequence) : Json()},
              {"sequence_degrees", std::vector<int>{2, p.a2, p.a4 + 1}},
              {"shape", betti_json(star_table(p))},
              {"betti", betti_json(s.betti)},
              {"shape_ok", s.shape_ok},
              {"holds", s.holds()}};
}

Verdict cmd_star_check(Context& ctx) {
  auto f = load_ideal(ctx);
  Thm32Params p = read_params(ctx.opt);
  ctx.use_seed();
  StarCheck s = star_condition_check(f.ideal, p, ctx.opt.seed);
  ctx.report["results"]["star"] = star_json(s, p);
  return {s.holds(), s.holds() ? "condition holds" : "condition fails"};
}

RingPtr construction_ring(Context& ctx) {
  std::optional<Field> F = ctx.field();
  if (!F) F = Field::prime(kDefaultPrime);
  if (!F->is_prime_field()) throw InputError("the construction needs a prime field");
  RingPtr R = load_ring(ctx);
  if (!R) {
    if (ctx.opt.vars < 4 || ctx.opt.vars > static_cast<int>(kMaxVars)) throw InputError("--vars must be 4..16");
    std::vector<std::string> names;
    for (int i = 0; i < ctx.opt.vars; ++i) names.push_back("x" + std::to_string(i));
    R = make_ring(names, *F);
  }
  if (!R->field().is_prime_field()) throw InputError("the construction needs a prime field");
  ctx.describe_ring(R);
  return R;
}

// Construction plus every claim made about it.
struct Construction {
  Thm32Instance inst;
  Json results;
  bool holds = false;
  std::vector<LinkStep> double_link;
};

Construction construct(const RingPtr& R, const Thm32Params& p) {
  Construction c{construct_thm32(R, p), Json::object(), false, {}};
  const auto& in = c.inst;
  Json forms{{"L1", in.L1.to_string()}, {"L2", in.L2.to_string()}, {"F1", in.F1.to_string()},
             {"F2", in.F2.to_string()}, {"F3", in.F3.to_string()}, {"F4", in.F4.to_string()}};
  auto& r = c.results;
  r["params"] = std::vector<int>{p.a1, p.a2, p.a3, p.a4};
  r["draws"] = in.draws;
  r["forms"] = forms;
  r["I1"] = ideal_json(in.I1);
  r["ideal"] = ideal_json(in.I);
  const int h = height(in.I);
  const long long deg = hilbert(in.I).degree;
  const bool cm = is_cohen_macaulay(in.I);
  auto md = min_reg_seq_degrees(in.I);
  std::vector<int> want{2, p.a2, p.a4 + 1};
  StarCheck star = star_condition_check(in.I, p, p.seed);
  c.double_link = thm32_double_link(in, p.seed);
  bool dl_ok = c.double_link.size() == 2 && c.double_link[0].back_verified && c.double_link[1].back_verified &&
               c.double_link[1].target == in.I1;
  r["height"] = h;
  r["degree"] = deg;
  r["expected_degree"] = p.a2 * p.a3 + p.a4;
  r["cohen_macaulay"] = cm;
  r["min_degrees"] = md;
  r["expected_min_degrees"] = want;
  r["betti"] = betti_json(star.betti);
  r["star"] = star_json(star, p);
  Json steps = Json::array();
  for (const auto& s : c.double_link) steps.push_back(link_step_json(s));
  r["double_link"] = Json{{"steps", steps}, {"reaches_I1", dl_ok}};
  c.holds = h == 3 && deg == p.a2 * p.a3 + p.a4 && cm && md == want && star.holds() && dl_ok;
  return c;
}

Verdict cmd_construct(Context& ctx) {
  RingPtr R = construction_ring(ctx);
  Thm32Params p = read_params(ctx.opt);
  ctx.use_seed();
  Construction c = construct(R, p);
  ctx.report["results"]["construction"] = c.results;
  return {c.holds, "degree " + std::to_string(c.results["degree"].get<long long>()) +
                       (c.holds ? ", all properties verified" : ", some property failed")};
}

int section_degree(const std::string& text, const Ideal& I) {
  if (text == "auto") return height(I) * regularity(betti_table(I));
  auto v = int_list(text, "--degree");
  if (v.size() != 1 || v[0] < 1) throw InputError("--degree must be 'auto' or a positive integer");
  return v[0];
}

Json section_json(const HypersurfaceSection& hs, int D, const std::vector<int>& md, const std::vector<int>& want) {
  Json lifted = Json::array();
  for (const auto& s : hs.lifted) lifted.push_back(link_step_json(s));
  return Json{{"degree", D},
              {"F", hs.F.to_string()},
              {"draws", hs.draws},
              {"ideal", ideal_json(hs.ideal)},
              {"height", height(hs.ideal)},
              {"lifted", lifted},
              {"min_degrees", md},
              {"expected_min_degrees", want}};
}

struct Section {
  Json results;
  bool holds = false;
  int D = 0;
};

Section section(const Ideal& I, const std::vector<LinkStep>& chain, const std::string& degree, std::uint64_t seed) {
  Section s;
  s.D = section_degree(degree, I);
  std::optional<HypersurfaceSection> hs;
  try {
    hs = hypersurface_section(I, chain, s.D, seed);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  auto md = min_reg_seq_degrees(hs->ideal);
  auto want = min_reg_seq_degrees(I);
  want.push_back(s.D);
  s.results = section_json(*hs, s.D, md, want);
  bool lifted_ok = hs->lifted.size() == chain.size() &&
                   std::all_of(hs->lifted.begin(), hs->lifted.end(), [](const LinkStep& l) { return l.back_verified; });
  s.holds = lifted_ok && md == want;
  return s;
}

Verdict cmd_hyp_section(Context& ctx) {
  ctx.use_seed();
  std::optional<Ideal> I;
  std::vector<LinkStep> chain;
  if (!ctx.opt.chain_file.empty()) {
    ChainScript sc = load_chain(ctx, ctx.opt.chain_file);
    if (!sc.ring->field().is_prime_field()) throw InputError("random sections need a prime field (use --field GF:p)");
    ChainReport rep = chain_verify(sc);
    if (!rep.complete) throw InputError("chain does not replay: " + rep.failure);
    I = sc.ideal;
    for (auto& s : rep.steps) chain.push_back(s.step);
  } else {
    RingPtr R = construction_ring(ctx);
    Thm32Params p = read_params(ctx.opt);
    Thm32Instance inst = construct_thm32(R, p);
    chain = thm32_double_link(inst, p.seed);
    I = inst.I;
    ctx.report["results"]["construction"] = Json{{"params", std::vector<int>{p.a1, p.a2, p.a3, p.a4}},
                                                 {"ideal", ideal_json(*I)}};
  }
  Section s = section(*I, chain, ctx.opt.section_degree, mix_seed(ctx.opt.seed, 0x5ec));
  ctx.report["results"]["section"] = s.results;
  return {s.holds, "D = " + std::to_string(s.D) + (s.holds ? ", lifted chain verified, minimal type (" +
                                                                  join(s.results["min_degrees"].get<std::vector<int>>()) + ")"
                                                            : ", verification failed")};
}

// ---- reproduce ------------------------------------------------------------

struct Claims {
  Json list = Json::array();
  bool all = true;
  void add(const std::string& what, const Json& expected, const Json& observed) {
    bool ok = expected == observed;
    all = all && ok;
    list.push_back(Json{{"claim", what}, {"expected", expected}, {"observed", observed}, {"holds", ok}});
  }
};

const ScriptEntry& annotation(const std::vector<ScriptEntry>& a, const std::string& key) {
  for (const auto& e : a)
    if (e.key == "expect-" + key) return e;
  throw InputError("fixture lacks expect-" + key);
}

std::vector<std::vector<int>> twist_lists(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(text);
  std::string step;
  while (std::getline(ss, step, ';')) {
    std::stringstream ws(step);
    std::vector<int> t;
    for (int x; ws >> x;) t.push_back(x);
    out.push_back(t);
  }
  return out;
}

Json entries_of(const BettiTable& b) { return betti_json(b)["entries"]; }

std::string fixture_path(const Context& ctx, const std::string& file) {
  std::string dir = ctx.opt.fixture_dir;
  if (dir.empty()) {
    const char* env = std::getenv("HOMLINK_FIXTURES");
    dir = env ? env : HOMLINK_FIXTURE_DIR;
  }
  return dir + "/" + file;
}

void common_ideal_claims(Claims& cl, const std::vector<ScriptEntry>& ann, const Ideal& I, Json& r) {
  auto h = hilbert(I);
  BettiTable b = betti_table(I);
  r["hilbert"] = hilbert_json(h);
  r["betti"] = betti_json(b);
  cl.add("h-vector", int_list(annotation(ann, "h-vector").value, "h-vector"), h.h_vector);
  cl.add("minimal resolution", entries_of(table_from_shape(twist_lists(annotation(ann, "resolution").value))),
         entries_of(b));
}

Verdict reproduce_ex22(Context& ctx) {
  std::string path = fixture_path(ctx, "ex2.2.ideal");
  ctx.opt.ideal_file = path;
  auto f = load_ideal(ctx);
  Claims cl;
  auto& r = ctx.report["results"];
  r["ideal"] = ideal_json(f.ideal);
  common_ideal_claims(cl, f.annotations, f.ideal, r);
  DoubleLink dl = monomial_double_link(f.ideal);
  auto want_dl = Ideal(f.ring, forms_from_entry(annotation(f.annotations, "double-link"), f.ring));
  cl.add("double link cancelling the gcd of I#", forms_json(want_dl.minimal_generators()),
         forms_json(dl.result.minimal_generators()));
  // The same ideal through two explicit links.
  LinkStep a = link(f.ideal, is_regular_sequence(dl.first), true);
  LinkStep b = link(a.target, is_regular_sequence(dl.second), true);
  cl.add("double link equals two explicit links", true, b.target == dl.result);
  LicciScan scan = monomial_licci_scan(f.ideal);
  r["scan"] = scan_json(scan, f.ring);
  std::vector<Polynomial> sharp;
  for (const auto& m : scan.fixpoint_sharp) sharp.push_back(Polynomial::monomial(f.ring, m, f.ring->field().one()));
  auto want_sharp = forms_from_entry(annotation(f.annotations, "sharp"), f.ring);
  cl.add("fixpoint I#", forms_json(Ideal(f.ring, want_sharp).minimal_generators()),
         forms_json(Ideal(f.ring, sharp).minimal_generators()));
  cl.add("height of fixpoint I#", int_list(annotation(f.annotations, "sharp-height").value, "sharp-height")[0],
         scan.sharp_height);
  cl.add("verdict", annotation(f.annotations, "verdict").value, to_string(scan.verdict));
  r["claims"] = cl.list;
  r["reproduced"] = cl.all;
  // The headline property is licci-ness.
  bool licci = scan.verdict == LicciVerdict::ReducedToCI;
  return {cl.all ? std::optional<bool>(licci) : std::optional<bool>(false),
          std::string(cl.all ? "reproduced" : "NOT reproduced") + ": " + to_string(scan.verdict)};
}

Verdict reproduce_chain(Context& ctx, const std::string& file) {
  std::string path = fixture_path(ctx, file);
  ChainScript sc = load_chain(ctx, path);
  Claims cl;
  auto& r = ctx.report["results"];
  r["start"] = ideal_json(sc.ideal);
  common_ideal_claims(cl, sc.annotations, sc.ideal, r);
  auto md = min_reg_seq_degrees(sc.ideal);
  cl.add("minimal regular sequence degrees", int_list(annotation(sc.annotations, "min-degrees").value, "min-degrees"),
         md);
  for (const auto& e : sc.annotations) {
    if (e.key == "expect-no-sequence") {
      auto d = int_list(e.value, e.key);
      cl.add("no regular sequence of degrees (" + e.value + ") found", true,
             !find_reg_seq(sc.ideal, d, ctx.opt.seed).has_value());
      auto want = int_list(annotation(sc.annotations, "obstruction").value, "obstruction");
      if (want.size() != 3) throw InputError("expect-obstruction needs degree, ci dim, ideal dim");
      auto dc = dimension_count(sc.ideal, d, want[0]);
      // Upper bound for dim (I_{<=m})_t read off the resolution: generators
      // of degree <= m minus their relations of degree <= m + 1.
      const int m = *std::max_element(d.begin(), d.end()), t = want[0];
      BettiTable b = betti_table(sc.ideal);
      long long bound = 0;
      for (const auto& [k, v] : b.entries()) {
        if (k.first == 0 && k.second <= m) bound += v * count_monomials(sc.ring->nvars(), t - k.second);
        if (k.first == 1 && k.second <= m + 1) bound -= v * count_monomials(sc.ring->nvars(), t - k.second);
      }
      auto first = dimension_obstruction(sc.ideal, d, t);
      r["obstruction"] = Json{{"degree", t},
                              {"ci_dim", dc.ci_dim},
                              {"resolution_bound", bound},
                              {"ideal_dim", dc.ideal_dim},
                              {"first_degree", first ? Json(first->degree) : Json()}};
      cl.add("dimension count (degree, complete intersection piece, bound from the resolution)",
             std::vector<long long>(want.begin(), want.end()), std::vector<long long>{t, dc.ci_dim, bound});
      cl.add("graded_piece_dim of I_{<=max d} within the bound and below the complete intersection", true,
             dc.ideal_dim <= bound && bound < dc.ci_dim);
    }
  }
  ChainReport rep = chain_verify(sc);
  r["chain"] = chain_json(rep);
  cl.add("chain replays with every printed intermediate", true, rep.complete);
  cl.add("terminal ideal is a complete intersection", true, rep.terminal_is_ci);
  r["claims"] = cl.list;
  r["reproduced"] = cl.all;
  std::string s = chain_summary(rep);
  return {cl.all ? std::optional<bool>(rep.minimally_licci()) : std::optional<bool>(false),
          std::string(cl.all ? "reproduced" : "NOT reproduced") + ": " + s};
}

struct ParamsFile {
  RingPtr ring;
  Thm32Params params;
  std::vector<std::uint64_t> seeds;
  std::string section_degree = "auto";
  std::vector<ScriptEntry> annotations;
};

ParamsFile load_params_file(Context& ctx, const std::string& path) {
  std::string text = ctx.read(path);
  try {
    auto blocks = read_script(text);
    const auto& head = blocks[0];
    ParamsFile pf;
    pf.ring = ring_from_block(head, ctx.field());
    ctx.describe_ring(pf.ring);
    auto need = [&](const char* k) -> const ScriptEntry& {
      if (const ScriptEntry* e = head.find(k)) return *e;
      throw ScriptError(std::string("missing '") + k + "'", 0);
    };
    Options o = ctx.opt;
    o.params_text = need("params").value;
    auto seed = int_list(need("seed").value, "seed");
    if (seed.size() != 1 || seed[0] < 0) throw InputError("seed must be one non-negative integer");
    o.seed = static_cast<std::uint64_t>(seed[0]);
    pf.params = read_params(o);
    if (const ScriptEntry* e = head.find("seeds"))
      for (int s : int_list(e->value, "seeds")) pf.seeds.push_back(static_cast<std::uint64_t>(s));
    if (const ScriptEntry* e = head.find("section-degree")) pf.section_degree = e->value;
    pf.annotations = annotations(head);
    return pf;
  } catch (const ScriptError& e) {
    throw InputError(located(path, e));
  }
}

Verdict reproduce_cor33(Context& ctx) {
  ParamsFile pf = load_params_file(ctx, fixture_path(ctx, "cor3.3-n28.params"));
  ctx.report["seed"] = pf.params.seed;
  Construction c = construct(pf.ring, pf.params);
  auto& r = ctx.report["results"];
  r["construction"] = c.results;
  Claims cl;
  auto ann = [&](const char* k) { return annotation(pf.annotations, k).value; };
  cl.add("height", std::stoi(ann("height")), c.results["height"]);
  cl.add("degree", std::stoll(ann("degree")), c.results["degree"]);
  cl.add("minimal regular sequence degrees", int_list(ann("min-degrees"), "min-degrees"), c.results["min_degrees"]);
  cl.add("Cohen-Macaulay", ann("cohen-macaulay") == "yes", c.results["cohen_macaulay"]);
  cl.add("condition (star)", ann("star") == "yes", c.results["star"]["holds"]);
  cl.add("double link to I1 verified both ways", true, c.results["double_link"]["reaches_I1"]);
  Json reruns = Json::array();
  for (auto s : pf.seeds) {
    Thm32Params q = pf.params;
    q.seed = s;
    Thm32Instance in = construct_thm32(pf.ring, q);
    Json inv{{"seed", s},
             {"height", height(in.I)},
             {"degree", hilbert(in.I).degree},
             {"min_degrees", min_reg_seq_degrees(in.I)},
             {"betti", entries_of(betti_table(in.I))}};
    reruns.push_back(inv);
    Json base{{"seed", s},
              {"height", c.results["height"]},
              {"degree", c.results["degree"]},
              {"min_degrees", c.results["min_degrees"]},
              {"betti", c.results["betti"]["entries"]}};
    cl.add("invariants with seed " + std::to_string(s), base, inv);
  }
  r["reruns"] = reruns;
  r["claims"] = cl.list;
  r["reproduced"] = cl.all;
  return {cl.all, std::string(cl.all ? "reproduced" : "NOT reproduced") + ": degree " +
                      std::to_string(c.results["degree"].get<long long>())};
}

Verdict reproduce_prop34(Context& ctx) {
  ParamsFile pf = load_params_file(ctx, fixture_path(ctx, "prop3.4.params"));
  ctx.report["seed"] = pf.params.seed;
  Thm32Instance in = construct_thm32(pf.ring, pf.params);
  auto chain = thm32_double_link(in, pf.params.seed);
  Section s = section(in.I, chain, pf.section_degree, mix_seed(pf.params.seed, 0x5ec));
  auto& r = ctx.report["results"];
  r["ideal"] = ideal_json(in.I);
  r["reg"] = regularity(betti_table(in.I));
  r["section"] = s.results;
  Claims cl;
  auto ann = [&](const char* k) { return annotation(pf.annotations, k).value; };
  cl.add("height of (I, F)", std::stoi(ann("height")), s.results["height"]);
  Json lifted_ok = true;
  for (const auto& l : s.results["lifted"]) lifted_ok = lifted_ok.get<bool>() && l["back_verified"].get<bool>();
  cl.add("lifted steps", std::stoi(ann("lifted-steps")), s.results["lifted"].size());
  cl.add("every lifted step verified both ways", true, lifted_ok);
  auto want = int_list(ann("min-degrees"), "min-degrees");
  want.push_back(s.D);
  cl.add("minimal type of (I, F)", want, s.results["min_degrees"]);
  r["claims"] = cl.list;
  r["reproduced"] = cl.all;
  return {cl.all && s.holds, std::string(cl.all ? "reproduced" : "NOT reproduced") + ": D = " + std::to_string(s.D)};
}

Verdict cmd_reproduce(Context& ctx) {
  const std::string& id = ctx.opt.fixture_id;
  ctx.report["results"]["id"] = id;
  if (id == "ex2.2") return reproduce_ex22(ctx);
  if (id == "ex2.3") return reproduce_chain(ctx, "ex2.3.chain");
  if (id == "thm2.4") return reproduce_chain(ctx, "thm2.4.chain");
  if (id == "cor3.3-n28") return reproduce_cor33(ctx);
  if (id == "prop3.4") return reproduce_prop34(ctx);
  throw InputError("unknown example id '" + id + "' (ex2.2, ex2.3, thm2.4, cor3.3-n28, prop3.4)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Json* report_out) {
  CLI::App app{"Homogeneous liaison toolkit", "homlink"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--ring", o.ring_file, "Ring file (ring = ..., field = ...)");
  app.add_option("--ideal", o.ideal_file, "Ideal file (ideal = ...)");
  app.add_option("--chain", o.chain_file, "Chain script");
  auto* seed_opt = app.add_option("--seed", o.seed, "Seed for random choices");
  app.add_option("--field", o.field_text, "QQ or GF:p (overrides the files)");
  app.add_option("--out", o.out_file, "Also write the report to FILE");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  struct Cmd {
    const char* name;
    const char* help;
    Verdict (*fn)(Context&);
    CLI::App* app = nullptr;
  };
  std::vector<Cmd> cmds{{"gb", "Reduced Groebner basis", cmd_gb},
                        {"hilbert", "Hilbert function, series and degree of S/I", cmd_hilbert},
                        {"betti", "Minimal graded Betti table", cmd_betti},
                        {"height", "Height and Krull dimension", cmd_height},
                        {"mindeg", "Smallest degrees of a regular sequence in I", cmd_mindeg},
                        {"link", "Link by a regular sequence", cmd_link},
                        {"chain-verify", "Replay a chain script", cmd_chain_verify},
                        {"monomial-scan", "Double-link reduction of a monomial ideal", cmd_monomial_scan},
                        {"construct-thm32", "Codimension-3 construction from (a1,a2,a3,a4)", cmd_construct},
                        {"socle-check", "Regular sequence degrees against the last Betti twist", cmd_socle_check},
                        {"star-check", "Check condition (star) for given parameters", cmd_star_check},
                        {"hyp-section", "Hypersurface section with the lifted chain", cmd_hyp_section},
                        {"reproduce", "Reproduce a worked example by id", cmd_reproduce}};
  for (auto& c : cmds) {
    c.app = app.add_subcommand(c.name, c.help)->fallthrough();
    std::string n = c.name;
    if (n == "hilbert") c.app->add_option("--max-degree", o.max_degree, "Hilbert function up to this degree");
    if (n == "link") {
      c.app->add_option("--seq", o.seq_text, "Forms separated by ';'");
      c.app->add_option("--degrees", o.degrees_text, "Degrees d1,...,dc for a random sequence");
    }
    if (n == "socle-check") c.app->add_option("--degrees", o.degrees_text, "Degrees d1,...,dc")->required();
    if (n == "construct-thm32" || n == "star-check" || n == "hyp-section")
      c.app->add_option("--params", o.params_text, "a1,a2,a3,a4");
    if (n == "construct-thm32" || n == "hyp-section")
      c.app->add_option("--vars", o.vars, "Number of variables when no ring file is given");
    if (n == "hyp-section") c.app->add_option("--degree", o.section_degree, "Degree of F, or auto");
    if (n == "reproduce") {
      c.app->add_option("id", o.fixture_id, "ex2.2 | ex2.3 | thm2.4 | cor3.3-n28 | prop3.4")->required();
      c.app->add_option("--fixtures", o.fixture_dir, "Fixture directory");
    }
  }

  std::vector<std::string> argv_store{"homlink"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "homlink: " << e.what() << '\n';
    return kInputError;
  }
  o.seed_given = seed_opt->count() > 0;

  Cmd* chosen = nullptr;
  for (auto& c : cmds)
    if (c.app->parsed()) chosen = &c;
  Context ctx{o, make_report(chosen->name, args), chosen->name};
  Stopwatch clock;
  int code = kOk;
  try {
    Verdict v = chosen->fn(ctx);
    ctx.report["verdict"]["holds"] = v.holds ? Json(*v.holds) : Json();
    ctx.report["verdict"]["summary"] = v.summary;
    code = v.holds && !*v.holds ? kVerdictFalse : kOk;
  } catch (const InputError& e) {
    ctx.report["error"] = e.what();
    code = kInputError;
  } catch (const ParseError& e) {
    ctx.report["error"] = e.what();
    code = kInputError;
  } catch (const ScriptError& e) {
    ctx.report["error"] = e.what();
    code = kInputError;
  } catch (const std::logic_error& e) {
    ctx.report["error"] = e.what();
    code = kInputError;
  } catch (const std::exception& e) {
    // Exhausted random draws and similar: no verdict could be certified.
    ctx.report["error"] = e.what();
    code = kVerdictFalse;
  }
  // Presentation options do not change the inputs.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--format" || a == "--out") {
      ++i;
      continue;
    }
    if (a.rfind("--format=", 0) == 0 || a.rfind("--out=", 0) == 0) continue;
    ctx.digest_input += a + '\0';
  }
  ctx.report["inputs"]["digest"] = "fnv1a64:" + fnv1a_hex(ctx.digest_input);
  ctx.report["verdict"]["exit_code"] = code;
  ctx.report["timing"]["wall_seconds"] = clock.seconds();
  if (!ctx.report["error"].is_null()) err << "homlink " << chosen->name << ": " << ctx.report["error"].get<std::string>() << '\n';

  std::string rendered = o.format == "json" ? ctx.report.dump(2) + "\n" : render_text(ctx.report);
  out << rendered;
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) {
      err << "homlink: cannot write " << o.out_file << '\n';
      return kInputError;
    }
    f << rendered;
  }
  if (report_out) *report_out = ctx.report;
  return code;
}

}  // namespace homlink::cli
