#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclres/pipeline.hpp"

namespace cyclres {

using Json = nlohmann::ordered_json;

Json ring_to_json(const RingCtx& ring);
Ring ring_from_json(const Json& j);

/// {ctx, modules: [[twists]...], diffs: [{i, entries: [[r, c, "poly"]...]}]}
Json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

/// {ctx, gens: ["poly"...]}
Json generators_to_json(const Ring& ring, const std::vector<Poly>& gens);
Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

/// {codim, entries: [[i, j, b]...], totals}
Json betti_to_json(const BettiTable& b);
BettiTable betti_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);

/// Macaulay2 ring declaration followed by one `map` per differential.
std::string complex_to_m2(const ChainComplex& c);
std::string generators_to_m2(const Ring& ring, const std::vector<Poly>& gens);

/// Pretty JSON with a trailing newline.
std::string dump(const Json& j);

/// Bad flags or parameters; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { table, json, m2 };
OutputFormat parse_format(const std::string& text);

struct CommandOptions {
  int d = 0;
  int m = 0;
  std::optional<int> i;
  std::optional<std::string> subset;
  std::string which = "I";
  std::string field = "prime:32003";
  std::string format = "table";
  std::optional<std::string> checks;
  std::optional<std::string> out;
  std::string source = "complex";
};

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CommandResult cmd_faces(const CommandOptions& o);
CommandResult cmd_complex(const CommandOptions& o);
CommandResult cmd_ideal(const CommandOptions& o);
CommandResult cmd_resolve(const CommandOptions& o);
CommandResult cmd_betti(const CommandOptions& o);
CommandResult cmd_eta(const CommandOptions& o);

/// Dispatches by name; catches UsageError (exit 2) and other failures
/// (exit 1).
CommandResult run_command(const std::string& name, const CommandOptions& o);

/// Writes UTF-8 text with LF line endings and a trailing newline.
void write_text_file(const std::string& path, std::string text);

}  // namespace cyclres
