#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "homlink/idealops.hpp"
#include "homlink/liaison.hpp"
#include "homlink/resolution.hpp"
#include "homlink/script.hpp"

namespace homlink::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

Json forms_json(const std::vector<Polynomial>& forms);
/// Generators, minimal generators and reduced Groebner basis.
Json ideal_json(const Ideal& I);
/// Entries indexed from the ideal, plus the quotient grid.
Json betti_json(const BettiTable& b);
Json hilbert_json(const HilbertData& h);
Json sequence_json(const RegularSequenceCert& c);
Json link_step_json(const LinkStep& s);
Json chain_json(const ChainReport& r);

/// Skeleton with every section present and null results.
Json make_report(const std::string& command, const std::vector<std::string>& argv);

/// Indented key/value rendering of the same document; multi-line strings
/// (Betti grids) are printed as blocks.
std::string render_text(const Json& report);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace homlink::cli
