#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homlink/ideal.hpp"
#include "homlink/liaison.hpp"

namespace homlink {

/// Input error in a script or ideal file; `line` is 1-based (0 when unknown).
class ScriptError : public std::runtime_error {
 public:
  ScriptError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ScriptEntry {
  std::string key;
  std::string value;
  int line = 0;
};

/// Entries up to the first block header, then one block per header line
/// (a line holding a bare keyword such as `step`).
struct ScriptBlock {
  std::string name;  // empty for the leading block
  int line = 0;
  std::vector<ScriptEntry> entries;

  const ScriptEntry* find(const std::string& key) const;
};

/// Splits text into blocks of `key = value` entries. `#` starts a comment;
/// a line ending in ',' or ';' continues on the next line.
std::vector<ScriptBlock> read_script(const std::string& text);

/// Ring from the `ring` and optional `field` entries (default QQ); a given
/// override replaces the file's field.
RingPtr ring_from_block(const ScriptBlock& block, const std::optional<Field>& field_override = {});

/// The entry's value as a list of forms separated by `sep`; errors carry
/// the entry's line.
std::vector<Polynomial> forms_from_entry(const ScriptEntry& entry, const RingPtr& ring, char sep = ',');

/// Leading-block entries whose key starts with "expect-": claims that a
/// fixture carries about its own ideal, left uninterpreted here.
std::vector<ScriptEntry> annotations(const ScriptBlock& block);

struct IdealFile {
  RingPtr ring;
  Ideal ideal;
  std::string name;
  std::vector<ScriptEntry> annotations;
};

/// `ideal = ...` with the ring taken from `ring` when given, otherwise from
/// the file's own `ring`/`field` entries. A missing `ideal` entry or an
/// empty one gives the zero ideal.
IdealFile parse_ideal_file(const std::string& text, const RingPtr& ring = nullptr,
                           const std::optional<Field>& field_override = {});

struct StepSpec {
  int line = 0;
  /// Explicit forms; empty when the step asks for random forms by degree.
  std::vector<Polynomial> forms;
  std::vector<int> degrees;
  std::uint64_t seed = 0;
  std::optional<Ideal> expect;
};

struct ChainScript {
  std::string name;
  RingPtr ring;
  Ideal ideal;
  std::vector<StepSpec> steps;
  std::vector<ScriptEntry> annotations;
};

/// Grammar in docs/grammar.md.
ChainScript parse_chain_script(const std::string& text, const std::optional<Field>& field_override = {});

struct ChainStepResult {
  LinkStep step;
  /// Present when the script gave `expect`.
  std::optional<bool> expect_matched;
};

struct ChainReport {
  std::vector<ChainStepResult> steps;
  /// Every step replayed and matched its expectation.
  bool complete = false;
  bool all_minimal = false;
  bool terminal_is_ci = false;
  /// 1-based step that failed, 0 when none did.
  std::size_t failed_step = 0;
  std::string failure;

  /// Valid chain of minimal links ending in a complete intersection.
  bool minimally_licci() const { return complete && all_minimal && terminal_is_ci; }
};

/// Replays every step through link(…, check_back = true), stopping at the
/// first failure with a diagnostic.
ChainReport chain_verify(const ChainScript& script);

}  // namespace homlink
