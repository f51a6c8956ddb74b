#include "fcrs/cli.hpp"

#include "fcrs/cluster_state.hpp"
#include "fcrs/comparison.hpp"
#include "fcrs/errors.hpp"
#include "fcrs/flow_analysis.hpp"
#include "fcrs/repair_sim.hpp"
#include "fcrs/tables.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace fcrs::cli {

namespace {

struct Options {
  int n = 0;
  int k = 0;
  int s = 0;
  int points = 200;
  std::string out;
  std::string format = "csv";
  std::string file;
  std::string dir;
  std::string server;
  std::string servers;
  int helper = 0;
  std::string alpha;
  std::string beta = "1";
  bool sweep = false;
  int max_length = -1;
  std::string policy = "random";
  int length = 0;
  std::uint64_t seed = 0;
  int sample = 0;
  bool write_back = false;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("cannot write " + path);
}

std::vector<ServerAddress> parse_server_list(const std::string& text) {
  std::vector<ServerAddress> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_server(item));
  return out;
}

std::string fraction_and_decimal(const Rational& r) { return to_fraction(r) + " " + to_decimal(r); }

void emit(const Table& table, const Options& o, std::ostream& out) {
  write_table(table, parse_table_format(o.format), o.out, out);
}

void run_tradeoff(const Options& o, std::ostream& out) {
  emit(tradeoff_table(tradeoff_rows(ClusterParams::make(o.n, o.k, o.s), o.points)), o, out);
}

void run_mbr(const Options& o, std::ostream& out) {
  const auto params = ClusterParams::make(o.n, o.k, o.s);
  const Rational fcrs = mbr_point(params).gamma;
  const Rational baseline = baseline_mbr(BaselineParams::make(o.n, o.k, o.s));
  const Rational cubic = gamma_cubic(params);
  const std::vector<std::pair<std::string, Rational>> rows = {
      {"gamma_fcrs", fcrs}, {"gamma_baseline", baseline}, {"ratio", fcrs / baseline},
      {"gamma_cubic", cubic}, {"cubic_ratio", cubic / baseline}};
  if (o.format == "text") {
    std::ostringstream text;
    for (const auto& [name, v] : rows) text << name << '=' << fraction_and_decimal(v) << '\n';
    if (o.out.empty()) {
      out << text.str();
    } else {
      const std::string s = text.str();
      write_file(o.out, std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
    }
    return;
  }
  Table t{{"quantity", "fraction", "decimal"}, {}};
  for (const auto& [name, v] : rows) t.rows.push_back({name, to_fraction(v), to_decimal(v)});
  emit(t, o, out);
}

void run_compare(const Options& o, std::ostream& out) { emit(availability_table(comparison_rows(o.n, o.k)), o, out); }

void run_encode(const Options& o, std::ostream& out) {
  const auto params = ClusterParams::make(o.n, o.k, o.s);
  const Bytes data = read_file(o.file);
  const ClusterState state = encode_file(data, params);
  save_state(state, o.dir);
  out << "m=" << state.plan().message_length() << " stripes=" << state.stripe_count()
      << " bytes=" << state.file_length() << " sha256=" << state.sha256() << '\n';
}

void run_repair(const Options& o, std::ostream& out) {
  ClusterState state = load_state(o.dir);
  const ServerAddress failed = parse_server(o.server);
  require_valid_server(state.params(), failed);
  state.fail_server(failed);
  const RepairTranscript tr = repair(state, failed, o.helper);
  apply_repair(state, tr);
  save_state(state, o.dir);
  out << "repaired " << format_server(failed) << " from cluster " << o.helper
      << " symbols_moved=" << tr.symbols_moved() << '\n';
}

void run_recover(const Options& o, std::ostream& out) {
  const ClusterState state = load_state(o.dir);
  const Bytes data = recover_file(state, parse_server_list(o.servers));
  write_file(o.out, data);
  out << "recovered " << data.size() << " bytes sha256=" << sha256_hex(data) << '\n';
}

void run_verify(const Options& o, std::ostream& out) {
  const ClusterState state = load_state(o.dir);
  const RecoveryMode mode = o.sample > 0 ? RecoveryMode::sample(o.sample, o.seed) : RecoveryMode::exhaustive();
  const RecoveryReport report = verify_recovery(state, mode);
  out << "checked=" << report.checked.size() << " failures=" << report.failures.size() << '\n';
  for (const auto& f : report.failures) {
    for (std::size_t i = 0; i < f.servers.size(); ++i) out << (i ? "," : "") << format_server(f.servers[i]);
    out << ": " << f.reason << '\n';
  }
  if (!report.ok()) throw VerificationFailure("recovery failed for some collectors");
}

void run_mincut(const Options& o, std::ostream& out) {
  const auto params = ClusterParams::make(o.n, o.k, o.s);
  const int d = params.d();
  const int k = params.k();
  std::vector<std::pair<Rational, Rational>> caps;
  if (o.sweep) {
    for (int twice = 0; twice <= 2 * d; ++twice) caps.emplace_back(Rational(twice, 2), Rational(1));
  } else {
    if (o.alpha.empty()) throw ParameterError("mincut needs --alpha or --sweep");
    caps.emplace_back(parse_rational(o.alpha), parse_rational(o.beta));
  }
  const int max_length = o.max_length < 0 ? k : o.max_length;
  const auto results = exhaustive_min_cut(params, caps, max_length);

  Table t{{"alpha", "beta", "min_cut", "fstar_closed", "twin_cut", "instances", "match"}, {}};
  bool all_match = true;
  for (const auto& r : results) {
    const Rational closed = fstar_closed(r.alpha, r.beta, d, k);
    Rational twin = -1;
    for (int k1 = (k + 1) / 2; k1 <= std::min(k, d); ++k1) {
      if (k - k1 > d) continue;
      const Rational cut = min_cut(build_flow_graph(twin_sequence(params, k1, r.alpha, r.beta)));
      if (twin < 0 || cut < twin) twin = cut;
    }
    const bool match = r.min_cut == closed && twin == closed;
    all_match = all_match && match;
    t.rows.push_back({to_fraction(r.alpha), to_fraction(r.beta), to_fraction(r.min_cut), to_fraction(closed),
                      to_fraction(twin), std::to_string(r.instances), match ? "yes" : "no"});
  }
  emit(t, o, out);
  if (!all_match) throw VerificationFailure("min-cut differs from the closed form");
}

void run_simulate(const Options& o, std::ostream& out) {
  const ClusterState initial = load_state(o.dir);
  const Schedule schedule = generate_schedule(initial.params(), parse_policy(o.policy), o.length, o.seed);
  const SimulationResult result = run_simulation(initial, schedule);
  emit(ledger_table(result.ledger), o, out);
  if (!o.out.empty())
    out << "events=" << result.ledger.entries.size() << " symbols_moved=" << result.ledger.total() << '\n';
  if (o.write_back) save_state(result.state, o.dir);
  if (!(result.state == initial)) throw VerificationFailure("final state differs from the initial state");
}

void add_params(CLI::App* cmd, Options& o, bool with_s = true) {
  cmd->add_option("--n", o.n, "number of servers")->required();
  cmd->add_option("--k", o.k, "servers contacted by a data collector")->required();
  if (with_s) cmd->add_option("--s", o.s, "number of complete clusters")->required();
}

void add_output(CLI::App* cmd, Options& o, const std::string& formats = "csv or json") {
  cmd->add_option("--out", o.out, "output file (default: standard output)");
  cmd->add_option("--format", o.format, formats);
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fixed cluster repair systems: Cubic Codes, trade-off analysis and simulation", "fcrs"};
  app.require_subcommand(1);

  auto* tradeoff = app.add_subcommand("tradeoff", "storage/bandwidth trade-off table against the baseline");
  add_params(tradeoff, o);
  tradeoff->add_option("--points", o.points, "grid points");
  add_output(tradeoff, o);

  auto* mbr = app.add_subcommand("mbr", "minimum-bandwidth operating points and ratios");
  add_params(mbr, o);
  mbr->add_option("--out", o.out, "output file (default: standard output)");
  mbr->add_option("--format", o.format, "text, csv or json")->default_str("text");
  mbr->preparse_callback([&o](std::size_t) { o.format = "text"; });

  auto* compare = app.add_subcommand("compare", "bandwidth per availability level");
  add_params(compare, o, false);
  add_output(compare, o);

  auto* encode = app.add_subcommand("encode", "encode a file into a state directory");
  add_params(encode, o);
  encode->add_option("--file", o.file, "input file")->required();
  encode->add_option("--dir", o.dir, "state directory")->required();

  auto* repair_cmd = app.add_subcommand("repair", "rebuild one server from a helper cluster");
  repair_cmd->add_option("--dir", o.dir, "state directory")->required();
  repair_cmd->add_option("--server", o.server, "failed server, c<i>s<j>")->required();
  repair_cmd->add_option("--helper", o.helper, "helper cluster")->required();

  auto* recover = app.add_subcommand("recover", "decode the file from k servers");
  recover->add_option("--dir", o.dir, "state directory")->required();
  recover->add_option("--servers", o.servers, "comma-separated c<i>s<j> list")->required();
  recover->add_option("--out", o.out, "output file")->required();

  auto* verify = app.add_subcommand("verify", "decode from every (or a sample of) k-subsets");
  verify->add_option("--dir", o.dir, "state directory")->required();
  verify->add_option("--sample", o.sample, "number of sampled subsets (0: all)");
  verify->add_option("--seed", o.seed, "sampling seed");

  auto* mincut = app.add_subcommand("mincut", "exhaustive min-cut against the closed form");
  add_params(mincut, o);
  mincut->add_option("--alpha", o.alpha, "per-server storage");
  mincut->add_option("--beta", o.beta, "per-helper transfer");
  mincut->add_flag("--sweep", o.sweep, "alpha/beta in {0, 1/2, ..., d}");
  mincut->add_option("--max-length", o.max_length, "longest failure sequence (default k)");
  add_output(mincut, o);

  auto* simulate = app.add_subcommand("simulate", "run a failure schedule on a state directory");
  simulate->add_option("--dir", o.dir, "state directory")->required();
  simulate->add_option("--policy", o.policy, "random, round-robin or twin:<k1>");
  simulate->add_option("--length", o.length, "number of events")->required();
  simulate->add_option("--seed", o.seed, "schedule seed");
  simulate->add_flag("--write", o.write_back, "store the final state");
  add_output(simulate, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tradeoff) run_tradeoff(o, out);
    else if (*mbr) run_mbr(o, out);
    else if (*compare) run_compare(o, out);
    else if (*encode) run_encode(o, out);
    else if (*repair_cmd) run_repair(o, out);
    else if (*recover) run_recover(o, out);
    else if (*verify) run_verify(o, out);
    else if (*mincut) run_mincut(o, out);
    else if (*simulate) run_simulate(o, out);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const CorruptionError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace fcrs::cli
