#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "rlpc/error.hpp"
#include "rlpc/oracle.hpp"
#include "rlpc/serialize.hpp"

namespace rlpc::cli {

namespace {

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_text(const std::string& path, const std::string& text) {
  write_bytes(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

Pmf load_pmf(const CommandSpec& spec) {
  if (!spec.pmf_path.empty()) return pmf_from_file(spec.pmf_path);
  if (spec.dist == "benford") return benford_pmf();
  if (spec.dist.rfind("zipf:", 0) == 0) {
    const std::string arg = spec.dist.substr(5);
    std::size_t used = 0;
    unsigned long long n = 0;
    try {
      n = std::stoull(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != arg.size()) fail(ErrorKind::UsageError, "bad zipf size '" + arg + "'");
    return zipf_pmf(static_cast<std::size_t>(n));
  }
  fail(ErrorKind::UsageError, "unknown distribution '" + spec.dist + "' (use zipf:N or benford)");
}

CostFunction load_phi(const std::string& text) {
  if (text.rfind("table:", 0) == 0) {
    const std::string rest = text.substr(6);
    std::ifstream in(rest);
    if (in) {
      std::string values{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
      for (char& c : values)
        if (c == '\n' || c == '\r' || c == ' ' || c == '\t') c = ',';
      std::string cleaned;
      for (char c : values)
        if (!(c == ',' && (cleaned.empty() || cleaned.back() == ','))) cleaned.push_back(c);
      if (!cleaned.empty() && cleaned.back() == ',') cleaned.pop_back();
      return parse_cost_function("table:" + cleaned);
    }
  }
  return parse_cost_function(text);
}

Solution huffman_solution(const Pmf& pmf) {
  Solution s;
  s.lengths = oracle::huffman(pmf);
  s.codebook = assign_canonical(s.lengths);
  s.cost = expected_length(pmf, s.lengths);
  std::vector<unsigned> used(s.lengths.begin(), s.lengths.end());
  s.lambda_used = LengthSet(std::move(used));
  s.kraft = kraft_sum(s.lengths);
  return s;
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

CommandResult solve_command(const CommandSpec& spec, const CostFunction& cost) {
  const Pmf pmf = load_pmf(spec);
  const LengthSet ls(spec.lambda);
  const Solution s = solve_reserved(pmf, ls, cost);
  if (!spec.grid_csv_path.empty()) {
    const LengthSet used = truncate_length_set(ls, pmf.size());
    write_text(spec.grid_csv_path, grid_csv(dp_grids(pmf, used, cost, {simd::default_isa(), true})));
  }
  return {kExitOk, spec.json ? dump_json(to_json(s)) : render_solution(s, pmf, spec.digits), {}};
}

CommandResult encode_command(const CommandSpec& spec) {
  const std::vector<std::uint8_t> data = read_bytes(spec.input_path);
  const Pmf pmf = pmf_from_bytes(data);
  const Solution s = spec.lambda.empty() ? huffman_solution(pmf) : solve_reserved(pmf, LengthSet(spec.lambda));

  // user index (position among observed byte values) -> sorted index
  std::vector<std::uint32_t> to_sorted(pmf.size());
  for (std::size_t i = 0; i < pmf.size(); ++i) to_sorted[pmf.perm()[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::int32_t> byte_to_user(256, -1);
  for (std::size_t u = 0; u < pmf.labels().size(); ++u) byte_to_user[std::stoul(pmf.labels()[u])] = static_cast<std::int32_t>(u);
  SymbolStream symbols;
  symbols.reserve(data.size());
  for (std::uint8_t b : data) symbols.push_back(to_sorted[static_cast<std::size_t>(byte_to_user[b])]);

  const Container c = encode_container(s.codebook, symbols);
  write_bytes(spec.out_path, serialize_container(c));

  std::ostringstream labels;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    labels << pmf.label_of_sorted(i) << ',' << format_real(pmf[i], 17) << '\n';
  }
  write_text(spec.out_path + ".pmf.csv", labels.str());

  std::ostringstream out;
  out << "symbols: " << symbols.size() << "\ndistinct lengths: " << distinct_lengths(s.lengths)
      << "\nbits per symbol: " << format_real(s.cost, spec.digits) << "\npayload bits: " << c.payload.bit_count
      << "\nwrote " << spec.out_path << " and " << spec.out_path << ".pmf.csv\n";
  return {kExitOk, out.str(), {}};
}

CommandResult decode_command(const CommandSpec& spec) {
  const std::vector<std::uint8_t> bytes = read_bytes(spec.input_path);
  const Container c = parse_container(bytes);
  const std::string labels_path = spec.labels_path.empty() ? spec.input_path + ".pmf.csv" : spec.labels_path;
  const Pmf pmf = pmf_from_file(labels_path, PmfFormat::Csv);
  if (pmf.size() != c.lengths.size())
    fail(ErrorKind::SizeMismatch, "label file has " + std::to_string(pmf.size()) + " symbols, container has " +
                                      std::to_string(c.lengths.size()));
  std::vector<std::uint8_t> byte_of(pmf.size());
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const unsigned long v = std::stoul(pmf.label_of_sorted(i));
    if (v > 255) fail(ErrorKind::ParseError, "label is not a byte value");
    byte_of[i] = static_cast<std::uint8_t>(v);
  }
  const SymbolStream symbols = decode_container(c);
  std::vector<std::uint8_t> data;
  data.reserve(symbols.size());
  for (std::uint32_t s : symbols) data.push_back(byte_of[s]);
  write_bytes(spec.out_path, data);
  return {kExitOk, "decoded " + std::to_string(data.size()) + " symbols to " + spec.out_path + "\n", {}};
}

CommandResult bench_command(const CommandSpec& spec) {
  const Pmf pmf = load_pmf(spec);
  const SymbolStream stream = make_symbol_stream(pmf, spec.count, spec.seed);

  std::vector<std::pair<std::string, Solution>> codes;
  codes.emplace_back("huffman", huffman_solution(pmf));
  if (!spec.lambda.empty()) {
    const LengthSet ls(spec.lambda);
    codes.emplace_back("reserved " + ls.to_string(), solve_reserved(pmf, ls));
  }

  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream table;
  table << "code\tdistinct lengths\texpected length\tkraft sum\tpayload bits/symbol\tmedian symbols/s\n";
  for (const auto& [name, s] : codes) {
    const BitStream bs = encode(s.codebook, stream);
    const DecodeTable dt = build_decode_table(s.codebook);
    if (decode(dt, bs, stream.size()) != stream) fail(ErrorKind::InvalidCode, name + " failed to round-trip");
    const ThroughputReport r = bench_decode(dt, bs, stream.size(), spec.repeats);
    const double bits_per_symbol = stream.empty() ? 0.0 : static_cast<double>(bs.bit_count) / stream.size();
    rows.push_back({{"code", name},
                    {"distinct_lengths", distinct_lengths(s.lengths)},
                    {"expected_length", s.cost},
                    {"kraft", s.kraft.to_string()},
                    {"payload_bits_per_symbol", bits_per_symbol},
                    {"throughput", to_json(r)}});
    table << name << '\t' << distinct_lengths(s.lengths) << '\t' << format_real(s.cost, spec.digits) << '\t'
          << s.kraft.to_string() << '\t' << format_real(bits_per_symbol, spec.digits) << '\t'
          << format_real(r.median_symbols_per_second, spec.digits) << '\n';
  }
  table << "kernel: " << simd::to_string(simd::default_isa()) << ", symbols: " << stream.size()
        << ", repeats: " << spec.repeats << '\n';
  return {kExitOk, spec.json ? dump_json(rows) : table.str(), {}};
}

CommandResult table1_command(const CommandSpec& spec) {
  const Pmf pmf = benford_pmf();
  const LengthSet ls{1, 2, 4, 8};
  const CostGrid grid = dp_grids(pmf, ls, {}, {simd::default_isa(), true});
  if (spec.csv) return {kExitOk, grid_csv(grid), {}};
  const int decimals = spec.digits == 6 ? 3 : spec.digits;
  return {kExitOk, render_grids(grid, ls, decimals), {}};
}

}  // namespace

std::variant<CommandSpec, CommandResult> parse_command_line(const std::vector<std::string>& args) {
  CommandSpec spec;
  CLI::App app{"Optimal prefix codes with restricted codeword lengths", "rlpc"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("--dist", spec.dist, "Named distribution: zipf:N or benford");
      sub->add_option("--pmf", spec.pmf_path, "PMF file (.csv label,weight; .json {weights,labels}; other: byte histogram)");
    }
    sub->add_option("--out", spec.out_path, "Output path (default stdout)");
    sub->add_flag("--json", spec.json, "Emit JSON");
    sub->add_option("--digits", spec.digits, "Significant digits for printed reals")->check(CLI::Range(1, 17));
  };
  auto add_lambda = [&](CLI::App* sub) {
    return sub->add_option("--lambda", spec.lambda, "Allowed codeword lengths, comma separated")->delimiter(',');
  };

  CLI::App* huffman = app.add_subcommand("huffman", "Unrestricted Huffman code");
  add_common(huffman, true);
  CLI::App* reserved = app.add_subcommand("reserved", "Optimal code with lengths restricted to --lambda");
  add_common(reserved, true);
  add_lambda(reserved);
  reserved->add_option("--dump-grid", spec.grid_csv_path, "Write every finite grid cell as CSV");
  CLI::App* glengths = app.add_subcommand("glengths", "Best codes using at most g distinct lengths");
  add_common(glengths, true);
  glengths->add_option("--g", spec.g, "Maximum number of distinct lengths");
  glengths->add_option("--phi", spec.phi, "Cost function: identity | exp:<t> | table:<path or list>");
  CLI::App* quasi = app.add_subcommand("quasi", "Reserved-length code under a quasiarithmetic cost");
  add_common(quasi, true);
  add_lambda(quasi);
  quasi->add_option("--phi", spec.phi, "Cost function: identity | exp:<t> | table:<path or list>");
  quasi->add_option("--dump-grid", spec.grid_csv_path, "Write every finite grid cell as CSV");
  CLI::App* encode = app.add_subcommand("encode", "Compress a file with a canonical code");
  encode->add_option("--input", spec.input_path, "File to compress")->required();
  encode->add_option("--out", spec.out_path, "Container to write (labels go to <out>.pmf.csv)")->required();
  add_lambda(encode);
  encode->add_option("--digits", spec.digits)->check(CLI::Range(1, 17));
  CLI::App* decode = app.add_subcommand("decode", "Expand an RLPC container");
  decode->add_option("--input", spec.input_path, "Container to read")->required();
  decode->add_option("--out", spec.out_path, "File to write")->required();
  decode->add_option("--labels", spec.labels_path, "Label CSV (default <input>.pmf.csv)");
  CLI::App* bench = app.add_subcommand("bench", "Decode throughput: Huffman vs reserved lengths");
  add_common(bench, true);
  add_lambda(bench);
  bench->add_option("--count", spec.count, "Symbols in the test stream");
  bench->add_option("--repeats", spec.repeats, "Timed decode repetitions")->check(CLI::PositiveNumber);
  bench->add_option("--seed", spec.seed, "Stream seed");
  CLI::App* table1 = app.add_subcommand("table1", "Grids for the Benford / {1,2,4,8} example");
  add_common(table1, false);
  table1->add_flag("--csv", spec.csv, "Emit grid cells as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return CommandResult{kExitOk, app.help(), {}};
  } catch (const CLI::CallForAllHelp&) {
    return CommandResult{kExitOk, app.help("", CLI::AppFormatMode::All), {}};
  } catch (const CLI::ParseError& e) {
    fail(ErrorKind::UsageError, e.what());
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {huffman, Subcommand::Huffman}, {reserved, Subcommand::Reserved}, {glengths, Subcommand::GLengths},
      {quasi, Subcommand::Quasi},     {encode, Subcommand::Encode},     {decode, Subcommand::Decode},
      {bench, Subcommand::Bench},     {table1, Subcommand::Table1}};
  for (const auto& [sub, kind] : table)
    if (sub->parsed()) spec.subcommand = kind;

  const bool needs_input = spec.subcommand == Subcommand::Huffman || spec.subcommand == Subcommand::Reserved ||
                           spec.subcommand == Subcommand::GLengths || spec.subcommand == Subcommand::Quasi ||
                           spec.subcommand == Subcommand::Bench;
  if (needs_input && spec.dist.empty() == spec.pmf_path.empty())
    fail(ErrorKind::UsageError, "give exactly one of --dist or --pmf");
  if ((spec.subcommand == Subcommand::Reserved || spec.subcommand == Subcommand::Quasi) && spec.lambda.empty())
    fail(ErrorKind::UsageError, "--lambda is required");
  if (spec.subcommand == Subcommand::GLengths && !spec.g) fail(ErrorKind::UsageError, "--g is required");
  return spec;
}

CommandResult run(const CommandSpec& spec) {
  try {
    switch (spec.subcommand) {
      case Subcommand::Huffman: {
        const Pmf pmf = load_pmf(spec);
        const Solution s = huffman_solution(pmf);
        return {kExitOk, spec.json ? dump_json(to_json(s)) : render_solution(s, pmf, spec.digits), {}};
      }
      case Subcommand::Reserved: return solve_command(spec, CostFunction::identity());
      case Subcommand::Quasi: return solve_command(spec, load_phi(spec.phi));
      case Subcommand::GLengths: {
        const GSearchReport r = solve_g_lengths(load_pmf(spec), *spec.g, load_phi(spec.phi));
        return {kExitOk, spec.json ? dump_json(to_json(r)) : render_g_report(r, spec.digits), {}};
      }
      case Subcommand::Encode: return encode_command(spec);
      case Subcommand::Decode: return decode_command(spec);
      case Subcommand::Bench: return bench_command(spec);
      case Subcommand::Table1: return table1_command(spec);
    }
  } catch (const CodingError& e) {
    return {e.kind() == ErrorKind::UsageError ? kExitUsage : kExitModuleError, {}, e.what()};
  } catch (const std::exception& e) {
    return {kExitModuleError, {}, e.what()};
  }
  return {kExitUsage, {}, "unknown subcommand"};
}

int main_with_args(const std::vector<std::string>& args) {
  CommandResult result;
  std::string out_path;
  try {
    auto parsed = parse_command_line(args);
    if (auto* spec = std::get_if<CommandSpec>(&parsed)) {
      result = run(*spec);
      const bool writes_own_files = spec->subcommand == Subcommand::Encode || spec->subcommand == Subcommand::Decode;
      if (!writes_own_files) out_path = spec->out_path;
    } else {
      result = std::get<CommandResult>(parsed);
    }
  } catch (const CodingError& e) {
    result = {kExitUsage, {}, e.what()};
  }

  if (result.exit_code != kExitOk) {
    std::cerr << "error: " << result.diagnostic << '\n';
    return result.exit_code;
  }
  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    try {
      write_text(out_path, result.output);
    } catch (const CodingError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitModuleError;
    }
  }
  return kExitOk;
}

}  // namespace rlpc::cli
