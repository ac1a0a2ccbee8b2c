#include "gradedexp/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "gradedexp/codim.hpp"
#include "gradedexp/decomposition.hpp"
#include "gradedexp/error.hpp"
#include "gradedexp/expconj.hpp"
#include "gradedexp/generator.hpp"
#include "gradedexp/grassmann.hpp"
#include "gradedexp/instance.hpp"
#include "gradedexp/trace.hpp"

namespace gradedexp {

namespace {

using Summary = std::vector<std::pair<std::string, std::string>>;

// Bad input that is reported as a usage error.
class UsageError : public Error {
 public:
  using Error::Error;
};

template <typename Range>
std::string join(const Range& r, const char* sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : r) {
    if (!first) os << sep;
    os << x;
    first = false;
  }
  return os.str();
}

std::string bracket(std::span<const Element> xs) { return "[" + join(xs) + "]"; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

// A subgroup record name, or an element list such as "0,2".
Subgroup resolve_subgroup(const Instance& inst, const std::string& text) {
  if (auto it = inst.subgroups.find(text); it != inst.subgroups.end()) return it->second;
  std::vector<Element> elems;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw UsageError("\"" + text + "\" is neither a subgroup record name nor an element list");
    if (v >= inst.group->order()) throw UsageError("subgroup element " + item + " is out of range");
    elems.push_back(static_cast<Element>(v));
  }
  if (elems.empty()) throw UsageError("empty subgroup");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  try {
    return Subgroup(inst.group, elems);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("subgroup ") + text + ": " + e.what());
  }
}

struct Common {
  std::string instance;
  std::string subgroup;
  std::string out_file;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  Summary summary;
  std::string hash;  // of the loaded instance
};

Instance load_instance(const std::string& path, Context& ctx) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const InstanceSpec spec = parse_instance(buf.str());
  ctx.hash = instance_hash(spec);
  return materialize(spec);
}

// ---- subcommands -----------------------------------------------------------

int cmd_validate(const Common& c, Context& ctx) {
  const Instance inst = load_instance(c.instance, ctx);
  const GluedAlgebra& a = *inst.algebra;
  SplitMix64 rng(inst.spec.seed.value_or(0));
  const StructureReport s = verify_structure(a, rng);
  ctx.out << "group " << inst.group->name() << " of order " << inst.group->order() << "\n"
          << "components " << a.components().size() << ", edges " << a.edges().size() << ", truncation "
          << a.truncation() << "\n"
          << "dimension " << a.dimension() << " (semisimple " << a.semisimple_dimension() << ")\n"
          << "structure " << (s.ok ? "ok" : "FAILED: " + s.failure) << " (" << s.pairs_checked << " pairs, "
          << s.triples_checked << " triples" << (s.triples_exhaustive ? ", exhaustive" : ", sampled") << ")\n";
  ctx.summary = {{"dimension", std::to_string(a.dimension())},
                 {"components", std::to_string(a.components().size())},
                 {"valid", yes_no(s.ok)}};
  return s.ok ? kExitOk : kExitCheckFailed;
}

void print_result(std::ostream& out, const GluedAlgebra& a, const ExpConjResult& r) {
  out << "value " << r.value << "\n";
  for (std::size_t b : r.sequence) {
    const SubBlock& blk = r.blocks[b];
    out << "  block component=" << blk.component << " indices=[" << join(blk.members) << "] dim=" << blk.dimension
        << "\n";
  }
  out << "walk";
  for (std::size_t x : r.walk) out << " " << a.basis_label(x);
  out << "\ncertified " << yes_no(r.certified) << "\n";
}

int cmd_expconj(const Common& c, bool oracle, Context& ctx) {
  const Instance inst = load_instance(c.instance, ctx);
  const GluedAlgebra& a = *inst.algebra;
  std::optional<Subgroup> k;
  if (!c.subgroup.empty()) k = resolve_subgroup(inst, c.subgroup);
  const ExpConjResult r = k ? exp_conj_sub(a, *k) : exp_conj(a);
  print_result(ctx.out, a, r);
  ctx.summary = {{"value", std::to_string(r.value)}, {"certified", yes_no(r.certified)}};
  bool ok = r.certified;
  if (oracle) {
    std::size_t dim = a.dimension();
    if (k) dim = subgroup_component(inst.algebra, *k).algebra->dimension();
    if (dim > kOracleMaxDimension) {
      ctx.out << "oracle skipped (dimension " << dim << " > " << kOracleMaxDimension << ")\n";
      ctx.summary.emplace_back("oracle", "skipped");
    } else {
      const std::size_t o = k ? exp_conj_oracle(a, *k) : exp_conj_oracle(a);
      ctx.out << "oracle " << o << (o == r.value ? " (agrees)" : " (DISAGREES)") << "\n";
      ctx.summary.emplace_back("oracle", std::to_string(o));
      ok = ok && o == r.value;
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_decompose(const Common& c, Context& ctx) {
  const Instance inst = load_instance(c.instance, ctx);
  if (c.subgroup.empty()) throw UsageError("decompose needs --subgroup");
  const Subgroup k = resolve_subgroup(inst, c.subgroup);
  bool ok = true;
  std::size_t blocks = 0;
  for (std::size_t t = 0; t < inst.algebra->components().size(); ++t) {
    const GradedSimplePtr& b = inst.algebra->components()[t];
    const KDecomposition d = k_simple_blocks(b, k);
    ctx.out << "component " << t << ": H=" << bracket(b->subgroup().elements()) << " tuple=[" << join(b->tuple())
            << "] K-dimension " << d.k_dimension << "\n";
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      const KBlock& blk = d.blocks[i];
      ctx.out << "  double coset " << bracket(d.cosets.classes[blk.double_coset]) << " pi=" << blk.pi()
              << " |g^-1Hg cap K|=" << blk.intersection.size() << " dim=" << blk.dimension;
      if (blk.pi() > 0) {
        const BlockIsomorphism iso = build_block_isomorphism(d, i);
        ctx.out << " isomorphism " << (iso.verified ? "verified" : "FAILED: " + iso.failure) << " ("
                << iso.pairs_checked << " pairs)";
        ok = ok && iso.verified;
        ++blocks;
      }
      ctx.out << "\n";
    }
  }
  ctx.summary = {{"blocks", std::to_string(blocks)}, {"verified", yes_no(ok)}};
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_check(const Common& c, Context& ctx) {
  const Instance inst = load_instance(c.instance, ctx);
  std::vector<Subgroup> ks;
  if (c.subgroup.empty())
    ks = all_subgroups(inst.group);
  else
    ks.push_back(resolve_subgroup(inst, c.subgroup));
  std::size_t failures = 0;
  for (const Subgroup& k : ks) {
    const MainInequalityReport r = check_main_inequality(*inst.algebra, k);
    if (ks.size() > 1) ctx.out << "K=" << bracket(k.elements()) << " ";
    ctx.out << "lhs=" << r.lhs << " rhs=" << r.rhs << " index=" << r.index << " k_value=" << r.k_value
            << " holds=" << yes_no(r.holds) << "\n";
    failures += !r.holds;
    if (ks.size() == 1)
      ctx.summary = {{"lhs", std::to_string(r.lhs)},
                     {"rhs", std::to_string(r.rhs)},
                     {"index", std::to_string(r.index)},
                     {"holds", yes_no(r.holds)}};
  }
  if (ks.size() > 1)
    ctx.summary = {{"subgroups", std::to_string(ks.size())},
                   {"failures", std::to_string(failures)},
                   {"holds", yes_no(failures == 0)}};
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

void print_trace_full(std::ostream& out, const GluedAlgebra& a, const TraceReport& r) {
  const Group& g = *a.grading_group();
  out << "factors:\n";
  for (std::size_t p = 0; p < r.monomial.factors.size(); ++p)
    out << "  " << p + 1 << " " << a.basis_label(r.monomial.factors[p])
        << "  prefix degree " << g.label(r.monomial.prefix_degrees[p]) << "\n";
  out << "omega:";
  for (Element x : r.omega.omega) out << " " << g.label(x) << "(mu=" << r.omega.mu[x] << ")";
  out << "\ncosets meeting omega:";
  for (const auto& coset : r.omega.pi) out << " [" << join(coset) << "]";
  out << "\nomega0: [" << join(r.omega.omega0) << "]\n";
  for (const GDecomposition& d : r.parses) {
    out << "g=" << g.label(d.g) << " X=[" << d.x.begin + 1 << "," << d.x.end << "]";
    for (const FactorRange& s : d.sigma) out << " S=[" << s.begin + 1 << "," << s.end << "]";
    out << " Y=" << (d.y.size() ? "[" + std::to_string(d.y.begin + 1) + "," + std::to_string(d.y.end) + "]" : "empty")
        << "\n  stops:";
    for (const KStop& s : d.stops)
      out << " (" << s.position + 1 << ": component " << s.component << " e_" << s.index + 1 << " class "
          << s.k_class << " degree " << g.label(s.k_degree) << ")";
    out << "\n";
  }
}

int cmd_trace(const Common& c, const std::string& format, Context& ctx) {
  const Instance inst = load_instance(c.instance, ctx);
  if (c.subgroup.empty()) throw UsageError("trace needs --subgroup");
  const Subgroup k = resolve_subgroup(inst, c.subgroup);
  const GluedAlgebra& a = *inst.algebra;
  const TraceReport r = run_trace(a, k);
  ctx.out << "witness value " << r.witness.value << ", monomial value " << r.monomial.value << ", "
          << r.monomial.factors.size() << " factors\n";
  ctx.out << "|omega| " << r.omega.omega.size() << ", |omega0| " << r.omega.omega0.size() << ", [G:K] "
          << subgroup_index(k) << "\n";
  if (format == "full") print_trace_full(ctx.out, a, r);
  std::size_t bad_parses = 0;
  for (std::size_t i = 0; i < r.parses.size(); ++i) bad_parses += !r.parse_conditions[i] || r.parse_counts[i] != 1;
  ctx.out << "parses " << r.parses.size() << ", failing " << bad_parses << "\n";
  ctx.out << "visits (component, class, observed, expected):\n";
  for (const VisitRow& v : r.visits.rows)
    ctx.out << "  " << v.component << " " << v.k_class << " " << v.observed << " " << v.expected
            << (v.observed == v.expected ? "" : "  MISMATCH") << "\n";
  const LemmaChecks& l = r.lemmas;
  ctx.out << "lemmas omega0_bound=" << yes_no(l.omega0_bound) << " same_class=" << yes_no(l.same_class_per_component)
          << " determined=" << yes_no(l.every_class_determined) << " coset_class=" << yes_no(l.coset_set_same_class)
          << " coset_represented=" << yes_no(l.coset_set_represented)
          << " determining_inside=" << yes_no(l.determining_inside_coset_set) << " aggregate=" << yes_no(l.aggregate)
          << "\n";
  for (const std::string& f : l.failures) ctx.out << "  " << f << "\n";
  for (std::size_t i = 0; i < r.chains.size(); ++i) {
    const FinalChainReport& ch = r.chains[i];
    ctx.out << "component " << r.monomial.components[i] << ": pi=[" << join(ch.pi) << "] m=" << ch.m
            << " identity=" << yes_no(ch.group_identity) << " (a) " << ch.lhs_a << "<=" << ch.rhs_a << " (b) "
            << ch.lhs_b << "<=" << ch.rhs_b << " (c) " << ch.lhs_c << "<=" << ch.rhs_c << "\n";
  }
  ctx.out << "trace " << (r.ok() ? "ok" : "FAILED") << "\n";
  ctx.summary = {{"value", std::to_string(r.witness.value)},
                 {"factors", std::to_string(r.monomial.factors.size())},
                 {"omega0", std::to_string(r.omega.omega0.size())},
                 {"ok", yes_no(r.ok())}};
  return r.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_envelope(const Common& c, std::size_t m, Context& ctx) {
  const Instance inst = load_instance(c.instance, ctx);
  std::shared_ptr<const EnvelopeAlgebra> env;
  try {
    env = envelope(inst.algebra, m);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  SplitMix64 rng(inst.spec.seed.value_or(0));
  const StructureReport s = verify_structure(*env, rng);
  const EnvelopeComponentReport rep = check_envelope_e_component(inst.algebra, m);
  ctx.out << "envelope over " << env->grading_group()->name() << " with " << m << " generators: dimension "
          << env->dimension() << "\n"
          << "structure " << (s.ok ? "ok" : "FAILED: " + s.failure) << "\n"
          << "identity component: restricted-then-enveloped " << rep.left_dimension << ", enveloped-then-restricted "
          << rep.right_dimension << ", " << rep.products_checked << " products compared, "
          << (rep.ok ? "equal" : "DIFFERENT: " + rep.failure) << "\n";
  ctx.summary = {{"dimension", std::to_string(env->dimension())},
                 {"e_dimension", std::to_string(rep.right_dimension)},
                 {"holds", yes_no(rep.ok && s.ok)}};
  return rep.ok && s.ok ? kExitOk : kExitCheckFailed;
}

int cmd_codim(const Common& c, std::size_t n_max, bool graded, bool sample, std::size_t work_cap, Context& ctx) {
  const Instance inst = load_instance(c.instance, ctx);
  std::optional<Subgroup> k;
  if (!c.subgroup.empty()) k = resolve_subgroup(inst, c.subgroup);
  CodimOptions opt;
  opt.allow_sampling = sample;
  opt.work_cap = work_cap;
  CodimReport rep;
  try {
    rep = growth_report(inst.algebra, n_max, k, graded, opt);
  } catch (const CapExceeded& e) {
    throw UsageError(std::string(e.what()) + " (try --sample or a smaller --n-max)");
  }
  auto mark = [](bool exact) { return exact ? "" : " (lower bound)"; };
  ctx.out << "exp_conj " << rep.exp_conj;
  if (rep.exp_conj_sub) ctx.out << ", exp_conj_K " << *rep.exp_conj_sub << ", [G:K] " << *rep.subgroup_index;
  ctx.out << "\n";
  for (const CodimRow& row : rep.rows) {
    char root[32];
    std::snprintf(root, sizeof root, "%.4f", row.root);
    ctx.out << "n=" << row.n << " c=" << row.c << mark(row.c_exact) << " root=" << root;
    if (row.c_graded) ctx.out << " c_G=" << *row.c_graded << mark(row.c_graded_exact);
    if (row.c_sub) ctx.out << " c(A_K)=" << *row.c_sub << mark(row.c_sub_exact);
    ctx.out << "\n";
    ctx.summary.emplace_back("c" + std::to_string(row.n), std::to_string(row.c));
  }
  ctx.out << rep.note << "\n";
  ctx.summary.emplace_back("exp_conj", std::to_string(rep.exp_conj));
  return kExitOk;
}

struct SweepItem {
  std::uint64_t seed = 0;
  std::string hash, group, error;
  std::size_t dimension = 0, checks = 0, failures = 0, oracle_checks = 0, oracle_failures = 0;
  std::vector<std::string> failed;
};

SweepItem sweep_one(std::uint64_t seed, const std::string& mode, bool oracle) {
  SweepItem it;
  it.seed = seed;
  try {
    const InstanceSpec spec = generate_instance(seed);
    it.hash = instance_hash(spec);
    const Instance inst = materialize(spec);
    it.group = inst.group->name();
    it.dimension = inst.algebra->dimension();
    std::vector<Subgroup> ks;
    if (mode == "named") {
      for (const auto& [name, k] : inst.subgroups) ks.push_back(k);
    } else {
      for (const Subgroup& k : all_subgroups(inst.group))
        if (mode == "all" || is_normal(k)) ks.push_back(k);
    }
    for (const Subgroup& k : ks) {
      const MainInequalityReport r = check_main_inequality(*inst.algebra, k);
      ++it.checks;
      if (!r.holds) {
        ++it.failures;
        it.failed.push_back("K=" + bracket(k.elements()) + " lhs=" + std::to_string(r.lhs) +
                            " rhs=" + std::to_string(r.rhs));
      }
      if (oracle && subgroup_component(inst.algebra, k).algebra->dimension() <= kOracleMaxDimension) {
        ++it.oracle_checks;
        if (exp_conj_oracle(*inst.algebra, k) != r.k_value) ++it.oracle_failures;
      }
    }
    if (oracle && it.dimension <= kOracleMaxDimension) {
      ++it.oracle_checks;
      if (exp_conj_oracle(*inst.algebra) != exp_conj(*inst.algebra).value) ++it.oracle_failures;
    }
  } catch (const std::exception& e) {
    it.error = e.what();
  }
  return it;
}

int cmd_sweep(std::uint64_t seed, std::size_t count, const std::string& mode, std::size_t jobs, bool oracle,
              Context& ctx) {
  std::vector<SweepItem> items(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) items[i] = sweep_one(seed + i, mode, oracle);
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::max<std::size_t>(jobs, 1); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t checks = 0, failures = 0, errors = 0, oracle_checks = 0, oracle_failures = 0;
  for (const SweepItem& it : items) {
    ctx.out << "seed=" << it.seed << " hash=" << it.hash << " group=" << it.group << " dim=" << it.dimension
            << " checks=" << it.checks << " failures=" << it.failures;
    if (oracle) ctx.out << " oracle=" << it.oracle_checks - it.oracle_failures << "/" << it.oracle_checks;
    if (!it.error.empty()) ctx.out << " error=\"" << it.error << "\"";
    ctx.out << "\n";
    for (const std::string& f : it.failed) ctx.out << "  FAILED " << f << "\n";
    checks += it.checks;
    failures += it.failures;
    errors += !it.error.empty();
    oracle_checks += it.oracle_checks;
    oracle_failures += it.oracle_failures;
  }
  const bool ok = failures == 0 && errors == 0 && oracle_failures == 0;
  ctx.out << "instances=" << count << " checks=" << checks << " failures=" << failures << " errors=" << errors;
  if (oracle) ctx.out << " oracle_checks=" << oracle_checks << " oracle_failures=" << oracle_failures;
  ctx.out << " all_hold=" << yes_no(ok) << "\n";
  ctx.summary = {{"instances", std::to_string(count)}, {"checks", std::to_string(checks)},
                 {"failures", std::to_string(failures)}, {"errors", std::to_string(errors)},
                 {"holds", yes_no(ok)}};
  if (oracle) {
    ctx.summary.emplace_back("oracle_checks", std::to_string(oracle_checks));
    ctx.summary.emplace_back("oracle_failures", std::to_string(oracle_failures));
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded exponent toolkit: exact checks on small graded algebras", "gradedexp"};
  app.require_subcommand(1);

  Common common;
  bool oracle = false, graded = false, sample = false;
  std::string format = "summary", mode = "all";
  std::size_t generators = 2, n_max = 3, work_cap = CodimOptions{}.work_cap, count = 100, jobs = 1;
  std::uint64_t seed = 0;

  auto with_instance = [&](CLI::App* sub, bool subgroup) {
    sub->add_option("--instance", common.instance, "instance file")->required();
    if (subgroup) sub->add_option("--subgroup", common.subgroup, "subgroup record name or element list like 0,2");
    sub->add_option("--out", common.out_file, "write a key=value summary to this file");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse, build and self-check an instance");
  with_instance(validate, false);
  CLI::App* expconj = app.add_subcommand("expconj", "exp^Conj of A, or of A_K with --subgroup");
  with_instance(expconj, true);
  expconj->add_flag("--oracle", oracle, "compare with the brute-force oracle (dimension <= 200)");
  CLI::App* decompose = app.add_subcommand("decompose", "K-simple blocks of every component");
  with_instance(decompose, true);
  CLI::App* check = app.add_subcommand("check", "exp^Conj_G(A) <= [G:K]^2 exp^Conj_K(A_K); every K if none given");
  with_instance(check, true);
  CLI::App* trace = app.add_subcommand("trace", "replay the counting argument on the witness");
  with_instance(trace, true);
  trace->add_option("--format", format, "summary or full")->check(CLI::IsMember({"summary", "full"}));
  CLI::App* env = app.add_subcommand("envelope", "Grassmann envelope over the leading Z2 factor");
  with_instance(env, false);
  env->add_option("--generators", generators, "Grassmann generators m")->check(CLI::Range(1, 12));
  CLI::App* codim = app.add_subcommand("codim", "multilinear codimensions c_n (trend only)");
  with_instance(codim, true);
  codim->add_option("--n-max", n_max, "largest n")->check(CLI::Range(1, 8));
  codim->add_flag("--graded", graded, "also graded codimensions");
  codim->add_flag("--sample", sample, "sample substitutions above the work cap (lower bounds)");
  codim->add_option("--work-cap", work_cap, "basis multiplications allowed per table");
  CLI::App* sweep = app.add_subcommand("sweep", "check the inequality on generated instances");
  sweep->add_option("--seed", seed, "first seed");
  sweep->add_option("--count", count, "number of seeds")->check(CLI::Range(1, 1000000));
  sweep->add_option("--subgroup-mode", mode, "all, normal or named")->check(CLI::IsMember({"all", "normal", "named"}));
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  sweep->add_flag("--oracle", oracle, "also compare exp^Conj with the oracle where dimension <= 200");
  sweep->add_option("--out", common.out_file, "write a key=value summary to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  Context ctx{out, err, {}, {}};
  const auto start = std::chrono::steady_clock::now();
  int status = kExitOk;
  std::string name;
  try {
    if (validate->parsed()) {
      name = "validate";
      try {
        status = cmd_validate(common, ctx);
      } catch (const UsageError&) {
        throw;
      } catch (const Error& e) {
        // for validate a bad instance is the failed check
        err << "invalid instance: " << e.what() << "\n";
        status = kExitCheckFailed;
      }
    } else if (expconj->parsed()) {
      name = "expconj";
      status = cmd_expconj(common, oracle, ctx);
    } else if (decompose->parsed()) {
      name = "decompose";
      status = cmd_decompose(common, ctx);
    } else if (check->parsed()) {
      name = "check";
      status = cmd_check(common, ctx);
    } else if (trace->parsed()) {
      name = "trace";
      status = cmd_trace(common, format, ctx);
    } else if (env->parsed()) {
      name = "envelope";
      status = cmd_envelope(common, generators, ctx);
    } else if (codim->parsed()) {
      name = "codim";
      status = cmd_codim(common, n_max, graded, sample, work_cap, ctx);
    } else {
      name = "sweep";
      status = cmd_sweep(seed, count, mode, jobs, oracle, ctx);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << common.instance << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << common.instance << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  if (!common.out_file.empty()) {
    std::ofstream f(common.out_file);
    if (!f) {
      err << "error: cannot write " << common.out_file << "\n";
      return kExitUsage;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    f << "command=" << name << "\n";
    if (!ctx.hash.empty()) f << "instance_hash=" << ctx.hash << "\n";
    for (const auto& [k, v] : ctx.summary) f << k << "=" << v << "\n";
    f << "exit=" << status << "\n" << "elapsed_ms=" << ms.count() << "\n";
  }
  return status;
}

}  // namespace gradedexp
