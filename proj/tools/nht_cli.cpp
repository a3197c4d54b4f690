// Command-line front end for the number theoretic Hilbert transform library.
//
// Exit status: 0 success, 1 domain failure (invalid spec, bad frame, failed
// check), 2 usage or I/O failure. Machine-readable output goes to stdout,
// diagnostics to stderr.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nht/nht.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsageFailure = 2;

/// Input that cannot be read or decoded. Maps to exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { csv, jsonl };

nht::NhtSpec load_spec_file(const std::string& path, bool allow_zero) {
  try {
    return nht::load_spec(path, allow_zero);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

nht::Bytes read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return nht::Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_bytes(const std::string& path, const nht::Bytes& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw InputError("short write to '" + path + "'");
}

std::string read_text(const std::string& path) {
  try {
    return nht::read_text_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + *path + "'");
  out << text;
}

int cmd_verify(const std::string& spec_path, bool allow_zero, Format format) {
  const auto spec = load_spec_file(spec_path, allow_zero);
  const auto report = nht::verify_solution(spec);
  if (format == Format::jsonl) {
    nlohmann::json doc{{"size", spec.size()},
                       {"modulus", spec.modulus().value()},
                       {"r", report.conditions.residues},
                       {"gram_identity", report.gram_identity},
                       {"valid", report.valid()}};
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << "size = " << spec.size() << ", modulus = " << spec.modulus().value() << '\n'
              << "r = " << nht::format_residues(report.conditions.residues) << '\n'
              << "gram = " << (report.gram_identity ? "identity" : "not identity") << '\n'
              << "verdict = " << (report.valid() ? "valid" : "invalid") << '\n';
  }
  if (spec.has_zero_coefficient()) std::cerr << "note: spec has zero coefficients (allow-zero mode)\n";
  if (!report.agreement()) {
    std::cerr << "error: lag conditions and gram product disagree\n";
    return kDomainFailure;
  }
  return report.valid() ? kOk : kDomainFailure;
}

int cmd_transform(const std::string& spec_path, const std::string& input_path, bool inverse, bool allow_zero,
                  const std::optional<std::string>& output) {
  const auto spec = load_spec_file(spec_path, allow_zero);
  nht::ParsedVector parsed{nht::ResidueVector(spec.modulus())};
  try {
    parsed = nht::parse_vector(read_text(input_path), spec.modulus());
  } catch (const nht::ParseError& e) {
    throw InputError(input_path + ": " + e.what());
  }
  if (parsed.reduced_count != 0) {
    std::cerr << "warning: reduced " << parsed.reduced_count << " entries modulo " << spec.modulus().value() << '\n';
  }
  const auto result = inverse ? nht::inverse(spec, parsed.vector) : nht::forward(spec, parsed.vector);
  emit(output, nht::format_vector(result) + '\n');
  return kOk;
}

struct SearchFlags {
  std::size_t size = 0;
  std::int64_t modulus = 0;
  bool exhaustive = false;
  bool random = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool dedup = false;
  std::optional<std::size_t> limit;
  bool allow_zero = false;
  bool force_budget = false;
  unsigned workers = 0;
};

int cmd_search(const SearchFlags& flags, Format format) {
  if (flags.size == 0 || flags.size % 2 != 0) throw CLI::ValidationError("--size", "must be a positive even number");
  nht::SearchConfig cfg;
  cfg.half_size = flags.size / 2;
  try {
    cfg.modulus = nht::Modulus(flags.modulus);
  } catch (const nht::InvalidModulus& e) {
    throw CLI::ValidationError("--modulus", e.what());
  }
  cfg.mode = flags.random ? nht::SearchMode::randomized : nht::SearchMode::exhaustive;
  cfg.trials = flags.trials;
  cfg.seed = flags.seed;
  cfg.dedup = flags.dedup;
  cfg.allow_zero = flags.allow_zero;
  cfg.limit = flags.limit;
  if (flags.force_budget) cfg.budget.reset();
  cfg.workers = flags.workers != 0 ? flags.workers : std::max(1U, std::thread::hardware_concurrency());

  const auto stream = nht::search(cfg);
  std::string out;
  for (const auto& s : stream.solutions) {
    if (format == Format::jsonl) {
      out += nht::to_json_line(s);
    } else {
      out += std::to_string(s.size()) + ',' + std::to_string(s.modulus().value());
      for (auto c : s.coeffs()) out += ',' + std::to_string(c);
    }
    out += '\n';
  }
  std::cout << out;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(stream.summary.elapsed).count();
  std::cerr << stream.summary.count << " solutions (" << stream.summary.candidates << " candidates, " << ms << " ms)"
            << (cfg.allow_zero ? " [allow-zero]" : "") << '\n';
  return kOk;
}

int cmd_eigen(const std::string& spec_path, bool allow_zero, Format format) {
  const auto spec = load_spec_file(spec_path, allow_zero);
  const auto pairs = nht::find_scalar_shape_pairs(spec);
  if (format == Format::jsonl) {
    for (const auto& p : pairs) {
      nlohmann::json basis = nlohmann::json::array();
      for (const auto& v : p.basis) basis.push_back(std::vector<std::uint64_t>(v.entries().begin(), v.entries().end()));
      std::cout << nlohmann::json{{"lambda", p.lambda}, {"basis", basis}}.dump() << '\n';
    }
  } else {
    std::cout << nht::eigen_csv(pairs, spec.size());
  }
  return kOk;
}

int cmd_scramble(const std::string& spec_path, const std::string& in, const std::string& out, bool reverse) {
  const nht::ScrambleKey key(load_spec_file(spec_path, false));
  const auto data = read_bytes(in);
  write_bytes(out, reverse ? nht::descramble_bytes(data, key) : nht::scramble_bytes(data, key));
  return kOk;
}

int cmd_tables(Format format) {
  const auto checks = nht::published_table_checks();
  bool all_pass = true;
  if (format == Format::jsonl) {
    for (const auto& c : checks) {
      std::cout << nlohmann::json{{"kind", c.kind}, {"label", c.label}, {"modulus", c.modulus},
                                  {"result", c.pass ? "pass" : "fail"}, {"detail", c.detail}}
                       .dump()
                << '\n';
    }
  } else {
    std::cout << nht::table_checks_csv(checks);
  }
  for (const auto& c : checks) {
    if (!c.pass) {
      all_pass = false;
      std::cerr << "fail: " << c.label << " mod " << c.modulus << ' ' << c.detail << '\n';
    }
  }
  return all_pass ? kOk : kDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Number theoretic Hilbert transform toolkit"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string input_path;
  std::optional<std::string> output_path;
  bool inverse = false;
  bool allow_zero = false;
  Format format = Format::jsonl;
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"jsonl", Format::jsonl}};

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* verify = app.add_subcommand("verify", "Check N N^T = I for a spec document");
  verify->add_option("--spec", spec_path, "Spec JSON file")->required();
  verify->add_flag("--allow-zero", allow_zero, "Accept zero coefficients");
  add_format(verify);

  auto* transform = app.add_subcommand("transform", "Apply the forward or inverse transform to a vector");
  transform->add_option("--spec", spec_path, "Spec JSON file")->required();
  transform->add_option("--input", input_path, "Vector file (comma or whitespace separated)")->required();
  transform->add_option("--output", output_path, "Write the result here instead of stdout");
  transform->add_flag("--inverse", inverse, "Apply N^T instead of N");
  transform->add_flag("--allow-zero", allow_zero, "Accept zero coefficients");

  SearchFlags sf;
  auto* search = app.add_subcommand("search", "Enumerate or sample valid coefficient vectors");
  search->add_option("--size", sf.size, "Transform size 2n")->required();
  search->add_option("--modulus", sf.modulus, "Modulus m")->required();
  auto* exhaustive = search->add_flag("--exhaustive", sf.exhaustive, "Enumerate every candidate (default)");
  auto* random = search->add_flag("--random", sf.random, "Sample candidates with a seeded generator");
  exhaustive->excludes(random);
  auto* trials = search->add_option("--trials", sf.trials, "Samples drawn in --random mode");
  auto* seed = search->add_option("--seed", sf.seed, "Seed for --random mode");
  trials->needs(random);
  seed->needs(random);
  search->add_flag("--dedup", sf.dedup, "Emit one canonical representative per symmetry orbit");
  search->add_option("--limit", sf.limit, "Stop after this many solutions");
  search->add_flag("--allow-zero", sf.allow_zero, "Let coefficients be zero");
  search->add_flag("--force-budget", sf.force_budget, "Ignore the exhaustive candidate budget");
  search->add_option("--workers", sf.workers, "Worker threads (0 = hardware concurrency)");
  add_format(search);
  format = Format::jsonl;  // search defaults to spec documents

  auto* eigen = app.add_subcommand("eigen", "List lambda with N F = lambda F (mod m) and eigenspace bases");
  eigen->add_option("--spec", spec_path, "Spec JSON file")->required();
  eigen->add_flag("--allow-zero", allow_zero, "Accept zero coefficients");
  add_format(eigen);

  auto* scramble = app.add_subcommand("scramble", "Scramble a file into an NHT1 frame (not encryption)");
  auto* descramble = app.add_subcommand("descramble", "Recover a file from an NHT1 frame");
  for (auto* cmd : {scramble, descramble}) {
    cmd->add_option("--spec", spec_path, "Spec JSON file (must be orthogonal)")->required();
    cmd->add_option("--input", input_path, "Input file")->required();
    cmd->add_option("--output", output_path, "Output file")->required();
  }

  auto* tables = app.add_subcommand("paper-tables", "Check every built-in published key and transform pair");
  add_format(tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageFailure;
  }
  // Only search defaults to jsonl; the rest default to csv unless --format was given.
  if (!search->parsed()) {
    auto* flag = app.get_subcommands().front()->get_option_no_throw("--format");
    if (flag == nullptr || flag->count() == 0) format = Format::csv;
  }

  try {
    if (verify->parsed()) return cmd_verify(spec_path, allow_zero, format);
    if (transform->parsed()) return cmd_transform(spec_path, input_path, inverse, allow_zero, output_path);
    if (search->parsed()) return cmd_search(sf, format);
    if (eigen->parsed()) return cmd_eigen(spec_path, allow_zero, format);
    if (scramble->parsed()) return cmd_scramble(spec_path, input_path, *output_path, false);
    if (descramble->parsed()) return cmd_scramble(spec_path, input_path, *output_path, true);
    if (tables->parsed()) return cmd_tables(format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageFailure;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageFailure;
  } catch (const nht::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kUsageFailure;
}
