// snprnet: command line front end.
//
// Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error,
// 3 verify found a formula/oracle disagreement.

#include <CLI11.hpp>

#include <bit>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "snprnet/canon.hpp"
#include "snprnet/census.hpp"
#include "snprnet/enewick.hpp"
#include "snprnet/errors.hpp"
#include "snprnet/formulas.hpp"
#include "snprnet/serialize.hpp"
#include "snprnet/spacegen.hpp"

namespace {

using namespace snprnet;
using nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagree = 3;

// File or stdin could not be read; reported like a domain error.
struct IoFailure {
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure{"cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<PhyloNetwork> read_networks(const std::string& path) {
  auto nets = parse_enewick_document(read_input(path));
  if (nets.empty()) throw IoFailure{"no network in '" + path + "'"};
  return nets;
}

// Writes to --out if given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoFailure{"cannot write '" + path + "'"};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Options {
  std::vector<std::string> inputs;
  std::string klass = "all";
  bool json = false;
  bool canonical = false;
  std::string out;
  std::uint64_t seed = 1;
  int n = 0;
  int r = 0;
  int cap = 0;
  std::string to = "enewick";
  int jobs = 1;
  std::string family;
};

KindFilter class_filter(const std::string& klass) {
  if (klass == "snpr") return KindFilter::only(OpKind::SNPR);
  if (klass == "snpr+") return KindFilter::only(OpKind::SNPRPlus);
  if (klass == "snpr-") return KindFilter::only(OpKind::SNPRMinus);
  return KindFilter{};
}

const char* json_kind(OpKind kind) {
  switch (kind) {
    case OpKind::SNPR: return "snpr";
    case OpKind::SNPRPlus: return "snpr_plus";
    default: return "snpr_minus";
  }
}

const KindCounts& counts_of(const FormulaBreakdown& b, OpKind kind) {
  switch (kind) {
    case OpKind::SNPR: return b.snpr;
    case OpKind::SNPRPlus: return b.snpr_plus;
    default: return b.snpr_minus;
  }
}

std::string counts_line(const std::string& name, const KindCounts& k) {
  return name + " ops=" + std::to_string(k.ops) + " trivial=" + std::to_string(k.trivial) +
         " discards=" + std::to_string(k.discards) + " neighbours=" + std::to_string(k.neighbours);
}

int cmd_validate(const Options& o) {
  Output out(o.out);
  for (const auto& path : o.inputs) {
    for (const PhyloNetwork& net : read_networks(path)) {
      const bool tc = is_tree_child(net);
      if (o.json) {
        ordered_json j;
        j["n"] = net.leaf_count();
        j["r"] = net.reticulation_count();
        j["m"] = net.edge_count();
        j["tree_child"] = tc;
        out.stream() << j.dump() << '\n';
      } else {
        out.stream() << "n=" << net.leaf_count() << " r=" << net.reticulation_count()
                     << " m=" << net.edge_count() << " tree_child=" << (tc ? "yes" : "no")
                     << '\n';
      }
    }
  }
  return 0;
}

int cmd_census(const Options& o) {
  Output out(o.out);
  for (const auto& path : o.inputs) {
    for (const PhyloNetwork& net : read_networks(path)) {
      const ordered_json j = census_to_json(census(net));
      if (o.json) {
        out.stream() << j.dump() << '\n';
        continue;
      }
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        out.stream() << (first ? "" : " ") << key << '=' << value.dump();
        first = false;
      }
      out.stream() << '\n';
    }
  }
  return 0;
}

int cmd_count(const Options& o) {
  Output out(o.out);
  for (const auto& path : o.inputs) {
    for (const PhyloNetwork& net : read_networks(path)) {
      const FormulaBreakdown b = formula_breakdown(census(net));
      if (o.klass == "all") {
        if (o.json) {
          out.stream() << breakdown_to_json(b).dump() << '\n';
        } else {
          for (OpKind kind : kCountedKinds) {
            out.stream() << counts_line(std::string(op_kind_name(kind)), counts_of(b, kind)) << '\n';
          }
          out.stream() << counts_line("total", b.total) << '\n';
        }
        continue;
      }
      const OpKind kind = o.klass == "snpr"    ? OpKind::SNPR
                          : o.klass == "snpr+" ? OpKind::SNPRPlus
                                               : OpKind::SNPRMinus;
      if (o.json) {
        ordered_json j;
        j[json_kind(kind)] = breakdown_to_json(b)[json_kind(kind)];
        out.stream() << j.dump() << '\n';
      } else {
        out.stream() << counts_line(std::string(op_kind_name(kind)), counts_of(b, kind)) << '\n';
      }
    }
  }
  return 0;
}

int cmd_enumerate(const Options& o) {
  Output out(o.out);
  for (const auto& path : o.inputs) {
    for (const PhyloNetwork& net : read_networks(path)) {
      const Neighbourhood nb = enumerate_neighbourhood(net, class_filter(o.klass), o.jobs);
      std::set<std::string> keys;
      for (const auto& [kind, res] : nb.by_kind) keys.insert(res.neighbour_keys.begin(), res.neighbour_keys.end());
      for (const std::string& k : keys) out.stream() << k << '\n';
    }
  }
  return 0;
}

int cmd_verify(const Options& o) {
  Output out(o.out);
  bool all = true;
  for (const auto& path : o.inputs) {
    for (const PhyloNetwork& net : read_networks(path)) {
      const NeighbourhoodReport rep = verify(net, o.jobs);
      all = all && rep.all_agree();
      if (o.json) {
        out.stream() << report_to_json(rep, false).dump() << '\n';
        continue;
      }
      for (OpKind kind : kCountedKinds) {
        const auto formula = counts_of(rep.formula, kind).neighbours;
        const auto oracle = static_cast<std::int64_t>(rep.oracle.by_kind.at(kind).neighbour_keys.size());
        out.stream() << op_kind_name(kind) << " formula=" << formula << " oracle=" << oracle
                     << (formula == oracle ? " agree" : " DISAGREE") << '\n';
      }
      out.stream() << "total formula=" << rep.formula.total.neighbours
                   << " oracle=" << rep.oracle_total()
                   << (rep.agrees_total ? " agree" : " DISAGREE") << '\n';
    }
  }
  return all ? 0 : kExitDisagree;
}

int cmd_generate(const Options& o) {
  Output out(o.out);
  auto emit = [&](const PhyloNetwork& net) {
    out.stream() << write_enewick(net, o.canonical) << '\n';
  };
  if (o.family == "chain") {
    emit(gen_chain(o.n));
  } else if (o.family == "balanced") {
    if (o.n < 2 || !std::has_single_bit(static_cast<unsigned>(o.n))) {
      throw Error(ErrorCode::BadParam, "balanced trees need a power of two --n, got " + std::to_string(o.n));
    }
    emit(gen_balanced(std::countr_zero(static_cast<unsigned>(o.n))));
  } else if (o.family == "random") {
    emit(o.r == 0 ? gen_random_tree(o.n, o.seed) : gen_random_tree_child(o.n, o.r, o.seed));
  } else {
    ExhaustiveLimits limits;
    if (o.cap > 0) limits.max_networks = static_cast<std::size_t>(o.cap);
    for (const auto& [key, net] : gen_exhaustive(o.n, o.r, limits)) out.stream() << key.key << '\n';
  }
  return 0;
}

int cmd_distance(const Options& o) {
  std::vector<PhyloNetwork> nets;
  for (const auto& path : o.inputs) {
    for (PhyloNetwork& net : read_networks(path)) nets.push_back(std::move(net));
  }
  if (nets.size() != 2) {
    throw IoFailure{"distance needs exactly two networks, got " + std::to_string(nets.size())};
  }
  Output out(o.out);
  const auto d = bfs_distance(nets[0], nets[1], o.cap > 0 ? o.cap : 6);
  if (o.json) {
    ordered_json j;
    if (d) j["distance"] = *d; else j["distance"] = "exhausted";
    out.stream() << j.dump() << '\n';
  } else {
    out.stream() << (d ? std::to_string(*d) : std::string("exhausted")) << '\n';
  }
  return 0;
}

int cmd_convert(const Options& o) {
  Output out(o.out);
  for (const auto& path : o.inputs) {
    for (const PhyloNetwork& net : read_networks(path)) {
      out.stream() << (o.to == "dot" ? write_dot(net) : write_enewick(net, o.canonical) + "\n");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-child phylogenetic networks: SNPR neighbourhoods and friends"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> classes{"snpr", "snpr+", "snpr-", "all"};
  auto add_inputs = [&](CLI::App* sub, bool required = true) {
    sub->add_option("inputs", o.inputs, "eNewick files, one network per line ('-' for stdin)")
        ->required(required);
    sub->add_option("--out", o.out, "write output here instead of stdout");
  };

  auto* validate = app.add_subcommand("validate", "parse and check networks");
  add_inputs(validate);
  validate->add_flag("--json", o.json);

  auto* census_cmd = app.add_subcommand("census", "structure census");
  add_inputs(census_cmd);
  census_cmd->add_flag("--json", o.json);

  auto* count = app.add_subcommand("count", "neighbourhood sizes from the formulas");
  add_inputs(count);
  count->add_option("--class", o.klass)->check(CLI::IsMember(classes));
  count->add_flag("--json", o.json);

  auto* enumerate = app.add_subcommand("enumerate", "canonical neighbours by brute force");
  add_inputs(enumerate);
  enumerate->add_option("--class", o.klass)->check(CLI::IsMember(classes));
  enumerate->add_option("--jobs", o.jobs)->check(CLI::Range(1, 256));

  auto* verify_cmd = app.add_subcommand("verify", "compare formulas with enumeration");
  add_inputs(verify_cmd);
  verify_cmd->add_flag("--json", o.json);
  verify_cmd->add_option("--jobs", o.jobs)->check(CLI::Range(1, 256));

  auto* generate = app.add_subcommand("generate", "generate networks");
  generate->add_option("family", o.family)
      ->required()
      ->check(CLI::IsMember({"chain", "balanced", "random", "exhaustive"}));
  generate->add_option("--n", o.n, "leaves")->required();
  generate->add_option("--r", o.r, "reticulations (random), or the maximum (exhaustive)");
  generate->add_option("--seed", o.seed);
  generate->add_option("--cap", o.cap, "maximum number of networks (exhaustive)");
  generate->add_flag("--canonical", o.canonical);
  generate->add_option("--out", o.out);

  auto* distance = app.add_subcommand("distance", "tree-child SNPR distance by BFS");
  add_inputs(distance);
  distance->add_option("--cap", o.cap, "search depth (default 6)");
  distance->add_flag("--json", o.json);

  auto* convert = app.add_subcommand("convert", "rewrite as eNewick or DOT");
  add_inputs(convert);
  convert->add_option("--to", o.to)->check(CLI::IsMember({"enewick", "dot"}));
  convert->add_flag("--canonical", o.canonical);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*census_cmd) return cmd_census(o);
    if (*count) return cmd_count(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*generate) return cmd_generate(o);
    if (*distance) return cmd_distance(o);
    return cmd_convert(o);
  } catch (const Error& e) {
    std::cerr << error_to_json(e).dump() << '\n';
    return kExitDomain;
  } catch (const IoFailure& e) {
    ordered_json j;
    j["error"] = {{"code", "cli.IoError"}, {"message", e.message}};
    std::cerr << j.dump() << '\n';
    return kExitDomain;
  }
}
