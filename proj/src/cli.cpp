#include "dcla/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "dcla/error.hpp"
#include "dcla/herm_spectral.hpp"
#include "dcla/json_io.hpp"
#include "dcla/right_eig.hpp"
#include "dcla/svd.hpp"

namespace dcla::cli {

namespace fs = std::filesystem;
using json_io::json;

namespace {

struct Failure {
  int code;
  std::string message;
};

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Spectral: return "spectral";
    case Command::Svd: return "svd";
    case Command::Eig: return "eig";
    case Command::Verify: return "verify";
    case Command::Gen: return "gen";
  }
  return "unknown";
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kMalformed, "cannot read " + path.string()};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_document(const std::string& text, const std::string& name) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; translate it to line and column.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Failure{kMalformed, name + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                  ": malformed JSON (" + e.what() + ")"};
  }
}

void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{kMalformed, "cannot write " + tmp.string()};
    out << content;
    if (!out.flush()) throw Failure{kMalformed, "cannot write " + tmp.string()};
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Failure{kMalformed, "cannot rename onto " + path.string() + ": " + ec.message()};
}

double verify_threshold(const DCMatrix& a, const Tolerances& tol) {
  return tol.resid_tol * (1.0 + frobenius_norm(a) + a.infinitesimal().norm());
}

json verify_document(const json& doc, const Tolerances& tol) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("A")) {
    throw Error(ErrorCode::InvalidArgument, "verify expects a spectral, svd or eig result document");
  }
  const std::string kind = doc.at("kind").is_string() ? doc.at("kind").get<std::string>() : "";
  const DCMatrix a = json_io::decode_matrix(doc.at("A"));
  ResidualPair r;
  if (kind == "spectral") {
    r = verify_spectral(a, json_io::decode_spectral(doc));
  } else if (kind == "svd") {
    r = verify_svd(a, json_io::decode_svd(doc), tol);
  } else if (kind == "eig") {
    for (const auto& p : json_io::decode_eigs(doc)) {
      const ResidualPair e = verify_eigenpair(a, p.value, p.vector, tol);
      r = {std::max(r.standard, e.standard), std::max(r.infinitesimal, e.infinitesimal)};
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown result kind '" + kind + "'");
  }
  const double threshold = verify_threshold(a, tol);
  json out;
  out["kind"] = "verify";
  out["of"] = kind;
  out["residual"] = json_io::encode_residual(r);
  out["threshold"] = threshold;
  out["ok"] = r.within(threshold);
  return out;
}

// Result document for one input, or a Failure.
json process(Command command, const json& input, const Tolerances& tol) {
  switch (command) {
    case Command::Spectral: {
      const DCMatrix a = json_io::decode_matrix(input);
      return json_io::encode_spectral(a, herm_spectral(a, tol));
    }
    case Command::Svd: {
      const DCMatrix a = json_io::decode_matrix(input);
      const SvdResult s = dc_svd(a, tol);
      const ResidualPair r = verify_svd(a, s, tol);
      if (!r.within(verify_threshold(a, tol))) {
        throw Error(ErrorCode::ResidualExceeded, "svd residual exceeds tolerance");
      }
      return json_io::encode_svd(a, s, r);
    }
    case Command::Eig: {
      const DCMatrix a = json_io::decode_matrix(input);
      return json_io::encode_eigs(a, dual_right_eigs(a, tol));
    }
    case Command::Verify: {
      json out = verify_document(input, tol);
      if (!out["ok"].get<bool>()) {
        throw Failure{kNumerical, "verification residual exceeds tolerance: " + out["residual"].dump()};
      }
      return out;
    }
    case Command::Gen:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "command takes no input");
}

std::string render(const json& doc, bool compact) { return (compact ? doc.dump() : doc.dump(2)) + "\n"; }

// Runs fn, mapping every failure to an exit code and a message.
template <class Fn>
int guarded(const std::string& label, std::ostream& err, Fn&& fn) {
  try {
    fn();
    return kOk;
  } catch (const Failure& f) {
    err << "dctool: " << label << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "dctool: " << label << e.what() << "\n";
    return is_validation_error(e.code()) ? kValidation : kNumerical;
  } catch (const std::exception& e) {
    err << "dctool: " << label << e.what() << "\n";
    return kNumerical;
  }
}

int run_batch(const JobSpec& spec, std::ostream& err) {
  if (spec.output_path.empty()) {
    err << "dctool: --input-dir requires --output <directory>\n";
    return kValidation;
  }
  std::vector<fs::path> inputs;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(spec.input_dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") inputs.push_back(entry.path());
  }
  if (ec) {
    err << "dctool: cannot list " << spec.input_dir << ": " << ec.message() << "\n";
    return kMalformed;
  }
  std::sort(inputs.begin(), inputs.end());
  fs::create_directories(spec.output_path, ec);

  struct Outcome {
    int code = kOk;
    std::string diagnostics;
  };
  auto job = [&](const fs::path& in) {
    Outcome o;
    std::ostringstream diag;
    o.code = guarded(in.filename().string() + ": ", diag, [&] {
      const json doc = parse_document(read_file(in), in.string());
      const json result = process(spec.command, doc, spec.tolerances);
      const fs::path target =
          fs::path(spec.output_path) / (in.stem().string() + "." + std::string(command_name(spec.command)) + ".json");
      write_atomic(target, render(result, spec.compact));
    });
    o.diagnostics = diag.str();
    return o;
  };

  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Outcome> outcomes(inputs.size());
  for (std::size_t start = 0; start < inputs.size(); start += workers) {
    std::vector<std::future<Outcome>> batch;
    for (std::size_t i = start; i < std::min(inputs.size(), start + workers); ++i) {
      batch.push_back(std::async(std::launch::async, job, inputs[i]));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) outcomes[start + i] = batch[i].get();
  }
  int code = kOk;
  for (const auto& o : outcomes) {
    err << o.diagnostics;
    code = std::max(code, o.code);
  }
  return code;
}

}  // namespace

Tolerances parse_tolerance_overrides(std::string_view text, Tolerances base) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "tolerance override '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad number in tolerance override '" + item + "'");
    }
    if (key == "group") {
      base.group_tol = value;
    } else if (key == "resid") {
      base.resid_tol = value;
    } else if (key == "zero") {
      base.zero_tol = value;
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown tolerance key '" + key + "'");
    }
  }
  base.validate();
  return base;
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  if (!(spec.tolerances.group_tol > 0 && spec.tolerances.resid_tol > 0 && spec.tolerances.zero_tol > 0)) {
    err << "dctool: tolerances must be positive\n";
    return kValidation;
  }
  if (spec.command == Command::Gen) {
    return guarded("", err, [&] {
      const auto n = spec.n > 0 ? spec.n : spec.m;
      const DCMatrix a = gen_random(spec.kind, spec.m, n, spec.seed.value_or(0));
      const std::string text = render(json_io::encode(a), spec.compact);
      if (spec.output_path.empty()) {
        out << text;
      } else {
        write_atomic(spec.output_path, text);
      }
    });
  }
  if (!spec.input_dir.empty()) return run_batch(spec, err);
  if (spec.input_path.empty()) {
    err << "dctool: " << command_name(spec.command) << " needs --input or --input-dir\n";
    return kValidation;
  }
  return guarded("", err, [&] {
    const json doc = parse_document(read_file(spec.input_path), spec.input_path);
    const std::string text = render(process(spec.command, doc, spec.tolerances), spec.compact);
    if (spec.output_path.empty()) {
      out << text;
    } else {
      write_atomic(spec.output_path, text);
    }
  });
}

int main(int argc, char** argv) {
  JobSpec spec;
  if (const char* env = std::getenv("DCTOOL_TOL")) {
    try {
      spec.tolerances = parse_tolerance_overrides(env, spec.tolerances);
    } catch (const Error& e) {
      std::cerr << "dctool: DCTOOL_TOL: " << e.what() << "\n";
      return kValidation;
    }
  }

  CLI::App app{"dctool: decompositions of dual complex matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string kind = "general";
  std::uint64_t seed = 0;
  app.add_option("--input", spec.input_path, "Input JSON file");
  app.add_option("--input-dir", spec.input_dir, "Process every *.json file in a directory");
  app.add_option("--output", spec.output_path, "Output file (or directory with --input-dir)");
  app.add_option("--group-tol", spec.tolerances.group_tol, "Eigenvalue clustering tolerance");
  app.add_option("--resid-tol", spec.tolerances.resid_tol, "Residual tolerance");
  app.add_option("--zero-tol", spec.tolerances.zero_tol, "Rank cutoff");
  auto* seed_opt = app.add_option("--seed", seed, "Random seed for gen");
  app.add_option("--kind", kind, "Matrix kind for gen")->check(CLI::IsMember({"general", "hermitian", "unitary", "psd"}));
  app.add_option("--m", spec.m, "Rows for gen");
  app.add_option("--n", spec.n, "Columns for gen (defaults to --m)");
  app.add_flag("--json-compact", spec.compact, "Single-line JSON output");

  const std::pair<const char*, Command> commands[] = {
      {"spectral", Command::Spectral}, {"svd", Command::Svd}, {"eig", Command::Eig},
      {"verify", Command::Verify},     {"gen", Command::Gen}};
  const char* help[] = {"Block spectral decomposition of a Hermitian matrix",
                        "Singular value decomposition", "Right eigenvalues and eigenvectors",
                        "Re-check a spectral, svd or eig result document", "Generate a random matrix"};
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    app.add_subcommand(commands[i].first, help[i])->callback([&spec, c = commands[i].second] { spec.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }
  if (*seed_opt) spec.seed = seed;
  spec.kind = parse_random_kind(kind);
  if (spec.command == Command::Gen && spec.m <= 0) {
    std::cerr << "dctool: gen needs --m\n";
    return kValidation;
  }
  return run(spec, std::cout, std::cerr);
}

}  // namespace dcla::cli
