#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "crn/balance.hpp"
#include "crn/groebner.hpp"
#include "crn/hypergraph.hpp"
#include "crn/json_io.hpp"
#include "crn/massaction.hpp"
#include "crn/network.hpp"
#include "crn/transforms.hpp"

namespace crn::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Negative outcome that is reported as an error message (exit 1).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

enum class Format { Text, Json, Dot };

struct Config {
  std::vector<std::string> inputs;
  std::string network;  // member only; a vector positional would swallow the monomial
  std::string monomial;
  unsigned trials = 3;
  std::uint64_t seed = 0;
  std::string order = "degrevlex";
  std::string format;
  std::vector<std::string> forbid;
  std::optional<unsigned> bound;
  std::string vertex;
  std::string script;
  std::string op;
  std::optional<std::size_t> reaction;
  std::string species;
  std::optional<std::size_t> aux;
  bool verify = false;
};

Format resolve_format(const Config& c, Format fallback, std::initializer_list<Format> allowed) {
  Format f = fallback;
  if (c.format == "text") {
    f = Format::Text;
  } else if (c.format == "json") {
    f = Format::Json;
  } else if (c.format == "dot") {
    f = Format::Dot;
  } else if (!c.format.empty()) {
    throw UsageError("unknown format '" + c.format + "'");
  }
  for (Format a : allowed) {
    if (a == f) return f;
  }
  throw UsageError("format '" + c.format + "' is not supported by this command");
}

OracleOptions oracle_options(const Config& c) {
  if (c.trials == 0) throw UsageError("--trials must be at least 1");
  return OracleOptions{c.trials, c.seed, parse_order(c.order)};
}

// `.json` inputs use the network JSON schema; anything else is `.crn` text.
Network load(const std::string& path) {
  if (path.size() < 5 || path.substr(path.size() - 5) != ".json") return parse_network_file(path);
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return network_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw Error(path + ": " + e.what());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void require_zero_one(const Network& n, const std::string& what) {
  if (!is_zero_one(n)) throw PreconditionError(what + " requires a 0,1-network");
}

std::string multiset_text(const NetworkHypergraph& h, const std::map<EdgeId, std::uint64_t>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [e, k] : m) {
    if (!first) out += ", ";
    first = false;
    out += h.edge_name(e);
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out + "}";
}

std::string certificate_text(const Network& n, const NetworkHypergraph& h, const BalanceCertificate& c) {
  std::string out = vertex_name(c.target) + ": red " + multiset_text(h, c.red) + " blue " + multiset_text(h, c.blue) +
                    " k=" + std::to_string(c.k);
  if (is_zero_one(n)) {
    VerifiedTerm t = verify_certificate(n, c.target, c);
    out += " => " + format_rate_polynomial(t.residual, n.species());
  }
  return out;
}

Json certificate_json(const Network& n, const NetworkHypergraph& h, const BalanceCertificate& c) {
  Json j = certificate_to_json(n, h, c);
  if (is_zero_one(n)) {
    VerifiedTerm t = verify_certificate(n, c.target, c);
    j["verified"] = format_rate_polynomial(t.residual, n.species());
  }
  return j;
}

std::vector<VertexId> selected_vertices(const Config& c, const NetworkHypergraph& h) {
  if (c.vertex.empty()) return h.vertices();
  VertexId v = parse_vertex(c.vertex);
  if (!h.has_vertex(v)) throw UsageError("no vertex " + c.vertex + " in this network");
  return {v};
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_verdict_text(std::ostream& out, const Verdict& v) {
  out << to_string(v.answer) << '\n';
  out << "trials: " << v.trials << ", seed: " << v.seed << ", order: " << to_string(v.order) << '\n';
  if (const Witness* w = v.witness()) {
    out << "witness: " << w->description << '\n';
    out << "  polynomial: " << w->polynomial.to_string() << '\n';
    out << "  normal form: " << w->remainder.to_string() << '\n';
  }
}

std::string join(const std::vector<QPolynomial>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].to_string();
  return out.empty() ? "(zero ideal)" : out;
}

int cmd_validate(const Config& c, std::ostream& out) {
  Format f = resolve_format(c, Format::Text, {Format::Text, Format::Json});
  Network n = load(c.inputs.at(0));
  ValidationReport rep = validate_network(n);
  if (f == Format::Json) {
    Json findings = Json::array();
    for (const auto& x : rep.findings) findings.push_back({{"kind", to_string(x.kind)}, {"detail", x.detail}});
    print_json(out, {{"ok", rep.ok()},
                     {"species", n.species_count()},
                     {"reactions", n.reaction_count()},
                     {"zero_one", is_zero_one(n)},
                     {"findings", std::move(findings)}});
  } else {
    for (const auto& x : rep.findings) out << to_string(x.kind) << ": " << x.detail << '\n';
    out << (rep.ok() ? "ok" : "invalid") << ": " << n.species_count() << " species, " << n.reaction_count()
        << " reactions, 0,1-network: " << (is_zero_one(n) ? "yes" : "no") << '\n';
  }
  return rep.ok() ? kOk : kNegative;
}

int cmd_odes(const Config& c, std::ostream& out) {
  Format f = resolve_format(c, Format::Text, {Format::Text, Format::Json});
  Network n = load(c.inputs.at(0));
  SteadyStateSystem sys = steady_state_system(n);
  if (f == Format::Json) {
    Json j = Json::object();
    for (std::size_t s = 0; s < n.species_count(); ++s) {
      j[n.species()[s]] = format_rate_polynomial(sys.of(s), n.species());
    }
    print_json(out, j);
  } else {
    out << format_system(sys);
  }
  return kOk;
}

int cmd_hypergraph(const Config& c, std::ostream& out) {
  Format f = resolve_format(c, Format::Text, {Format::Text, Format::Json, Format::Dot});
  Network n = load(c.inputs.at(0));
  NetworkHypergraph h(n);
  if (f == Format::Json) {
    print_json(out, hypergraph_to_json(h));
  } else if (f == Format::Dot) {
    out << hypergraph_to_dot(n, h);
  } else {
    out << "vertices:";
    for (const auto& v : h.vertices()) out << ' ' << vertex_name(v);
    out << '\n';
    for (const auto& e : h.edges()) {
      out << h.edge_name(e) << ':';
      if (h.members(e).empty()) out << " (empty)";
      for (const auto& v : h.members(e)) out << ' ' << vertex_name(v);
      out << '\n';
    }
  }
  return kOk;
}

int cmd_balance(const Config& c, std::ostream& out) {
  Format f = resolve_format(c, Format::Json, {Format::Text, Format::Json});
  Network n = load(c.inputs.at(0));
  NetworkHypergraph h(n);
  std::set<EdgeId> forbidden;
  for (const auto& name : c.forbid) forbidden.insert(h.parse_edge(name));
  if (c.bound && !forbidden.empty()) throw UsageError("--forbid cannot be combined with --bound");

  auto vertices = selected_vertices(c, h);
  bool any = false;
  Json all = Json::array();
  for (const auto& v : vertices) {
    std::optional<BalanceCertificate> cert;
    if (c.bound) {
      try {
        cert = brute_force_certificate(h, v, *c.bound);
      } catch (const SearchCapExceeded& e) {
        throw UsageError(std::string(e.what()) + "; lower --bound");
      }
    } else {
      cert = find_certificate(h, v, forbidden);
    }
    any = any || cert.has_value();
    if (f == Format::Text) {
      out << (cert ? certificate_text(n, h, *cert) : vertex_name(v) + ": not almost balanced") << '\n';
    } else if (cert) {
      all.push_back(certificate_json(n, h, *cert));
    } else {
      all.push_back({{"vertex", vertex_name(v)}, {"almost_balanced", false}});
    }
  }
  if (f == Format::Json) print_json(out, c.vertex.empty() ? all : all.front());
  return any ? kOk : kNegative;
}

int cmd_obstructions(const Config& c, std::ostream& out) {
  Format f = resolve_format(c, Format::Text, {Format::Text, Format::Json});
  Network n = load(c.inputs.at(0));
  NetworkHypergraph h(n);
  Json all = Json::array();
  for (const auto& v : selected_vertices(c, h)) {
    auto obs = structural_obstructions(n, v);
    if (f == Format::Json) {
      Json list = Json::array();
      for (const auto& o : obs) list.push_back(obstruction_to_json(n, o));
      all.push_back({{"vertex", vertex_name(v)}, {"obstructions", std::move(list)}});
      continue;
    }
    out << vertex_name(v) << ':';
    if (obs.empty()) out << " none";
    for (std::size_t k = 0; k < obs.size(); ++k) {
      const auto& o = obs[k];
      out << (k ? "; " : " ") << to_string(o.kind);
      if (!o.reactions.empty()) {
        out << " [";
        for (std::size_t r = 0; r < o.reactions.size(); ++r) out << (r ? "," : "") << o.reactions[r];
        out << ']';
      }
      if (!o.cycle.empty()) {
        out << ' ';
        for (const auto& y : o.cycle) out << format_complex(y, n.species()) << " -> ";
        out << format_complex(o.cycle.front(), n.species());
      }
    }
    out << '\n';
  }
  if (f == Format::Json) print_json(out, all);
  return kOk;
}

int cmd_minimal_reactants(const Config& c, std::ostream& out) {
  Format f = resolve_format(c, Format::Text, {Format::Text, Format::Json});
  Network n = load(c.inputs.at(0));
  Json all = Json::array();
  for (const auto& y : minimal_reactants(n)) {
    if (f == Format::Json) {
      all.push_back(format_monomial(y, n.species()));
    } else {
      out << format_monomial(y, n.species()) << '\n';
    }
  }
  if (f == Format::Json) print_json(out, all);
  return kOk;
}

int cmd_monomial_ideal(const Config& c, std::ostream& out) {
  Format f = resolve_format(c, Format::Text, {Format::Text, Format::Json});
  OracleOptions opt = oracle_options(c);
  Network n = load(c.inputs.at(0));
  require_zero_one(n, "the monomial-ideal certificate");
  NetworkHypergraph h(n);
  auto certs = monomial_ideal_certificate(n);
  Verdict v = is_monomial_ideal(n, opt);
  if (f == Format::Json) {
    Json j;
    if (certs) {
      j["certificate"] = Json::array();
      for (const auto& mc : *certs) {
        j["certificate"].push_back({{"reactant", format_monomial(mc.reactant, n.species())},
                                    {"certificate", certificate_json(n, h, mc.certificate)}});
      }
    } else {
      j["certificate"] = nullptr;
    }
    j["oracle"] = verdict_to_json(v);
    print_json(out, j);
  } else {
    if (certs) {
      out << "certificate: found\n";
      for (const auto& mc : *certs) {
        out << "  " << format_monomial(mc.reactant, n.species()) << " via " << certificate_text(n, h, mc.certificate)
            << '\n';
      }
    } else {
      out << "certificate: none\n";
    }
    out << "oracle: ";
    print_verdict_text(out, v);
    out << "basis: " << join(v.records.front().ideals.front().basis) << '\n';
  }
  return is_affirmative(v.answer) ? kOk : kNegative;
}

TransformRequest single_request(const Config& c, const Network& n) {
  if (!c.reaction) throw UsageError("--reaction is required");
  std::size_t i = *c.reaction;
  if (c.op == "product" || c.op == "add_product_species") {
    if (c.species.empty()) throw UsageError("--species is required");
    return ProductRequest{i, c.species};
  }
  if (c.op == "degradation" || c.op == "add_degradation") return DegradationRequest{i};
  if (c.op != "reactant" && c.op != "add_reactant_species") throw UsageError("unknown --op '" + c.op + "'");
  if (c.species.empty()) throw UsageError("--species is required");
  if (c.aux) return ReactantRequest{i, c.species, *c.aux};
  if (i == 0 || i > n.reaction_count()) {
    throw TransformError(TransformFailure::UnknownReaction, "no reaction with index " + std::to_string(i));
  }
  // search for a usable j
  std::string reasons;
  for (const auto& r : n.reactions()) {
    if (r.index == i || !complex_divides(r.reactant, n.reaction(i).reactant)) continue;
    try {
      add_species_to_reactant(n, i, c.species, r.index);
      return ReactantRequest{i, c.species, r.index};
    } catch (const TransformError& e) {
      reasons += "\n  j=" + std::to_string(r.index) + ": " + e.what();
    }
  }
  if (reasons.empty()) {
    throw TransformError(TransformFailure::NotDivisible,
                         "no reaction j != " + std::to_string(i) + " has a reactant dividing y_" + std::to_string(i));
  }
  throw TransformError(TransformFailure::VertexNotBalanced, "no reaction j admits the rewrite:" + reasons);
}

int cmd_transform(const Config& c, std::ostream& out) {
  Format f = resolve_format(c, Format::Text, {Format::Text, Format::Json});
  Network n = load(c.inputs.at(0));
  std::vector<TransformRequest> ops;
  if (!c.script.empty()) {
    if (!c.op.empty()) throw UsageError("--script cannot be combined with --op");
    ops = parse_script_file(c.script);
  } else if (!c.op.empty()) {
    ops.push_back(single_request(c, n));
  } else {
    throw UsageError("either --op or --script is required");
  }
  ScriptResult res = apply_script(n, ops);

  std::optional<Verdict> check;
  if (c.verify) check = ideal_equal(n, res.output, oracle_options(c));

  if (f == Format::Json) {
    Json steps = Json::array();
    Network current = n;
    for (const auto& s : res.steps) {
      steps.push_back(transcript_to_json(current, s.transcript));
      current = s.output;
    }
    Json j{{"steps", std::move(steps)}, {"network", network_to_json(res.output)}};
    if (check) j["ideal_check"] = verdict_to_json(*check);
    print_json(out, j);
  } else {
    Network current = n;
    for (const auto& s : res.steps) {
      const Transcript& t = s.transcript;
      NetworkHypergraph h(current);
      out << "# " << to_string(t.op) << " reaction " << t.reaction;
      if (t.species) out << " species " << *t.species;
      if (t.aux_reaction) out << " aux " << *t.aux_reaction;
      out << "; certificate " << certificate_text(current, h, t.certificate) << "; new rate " << t.new_rate << '\n';
      current = s.output;
    }
    if (check) out << "# ideal check: " << to_string(check->answer) << '\n';
    out << serialize_network(res.output);
  }
  if (check && check->answer != Answer::Equal) return kInternal;
  return kOk;
}

int cmd_compare(const Config& c, std::ostream& out) {
  Format f = resolve_format(c, Format::Text, {Format::Text, Format::Json});
  OracleOptions opt = oracle_options(c);
  Network a = load(c.inputs.at(0));
  Network b = load(c.inputs.at(1));
  Verdict v = ideal_equal(a, b, opt);
  if (f == Format::Json) {
    print_json(out, verdict_to_json(v));
  } else {
    print_verdict_text(out, v);
  }
  return is_affirmative(v.answer) ? kOk : kNegative;
}

int cmd_member(const Config& c, std::ostream& out) {
  Format f = resolve_format(c, Format::Text, {Format::Text, Format::Json});
  OracleOptions opt = oracle_options(c);
  Network n = load(c.network);
  Complex m;
  try {
    m = parse_complex(c.monomial, n);
  } catch (const ParseError& e) {
    throw UsageError("monomial: " + e.detail());
  }
  Verdict v = contains_monomial(n, m, opt);
  if (f == Format::Json) {
    print_json(out, verdict_to_json(v));
  } else {
    print_verdict_text(out, v);
  }
  return is_affirmative(v.answer) ? kOk : kNegative;
}

int cmd_gb(const Config& c, std::ostream& out) {
  Format f = resolve_format(c, Format::Text, {Format::Text, Format::Json});
  OracleOptions opt = oracle_options(c);
  Network n = load(c.inputs.at(0));
  Verdict v = groebner_trials(n, opt);
  if (f == Format::Json) {
    print_json(out, verdict_to_json(v));
    return kOk;
  }
  out << "order: " << to_string(v.order) << ", seed: " << v.seed << '\n';
  for (const auto& r : v.records) {
    out << "trial " << r.index + 1 << ':';
    for (const auto& [label, q] : r.kappa) out << ' ' << label << '=' << q.get_str();
    out << '\n';
    for (const auto& g : r.ideals.front().basis) out << "  " << g.to_string() << '\n';
    if (r.ideals.front().basis.empty()) out << "  (zero ideal)\n";
  }
  return kOk;
}

void add_oracle_flags(CLI::App* sub, Config& c) {
  sub->add_option("--trials", c.trials, "random specializations (default 3)");
  sub->add_option("--seed", c.seed, "seed of the rate sampler (default 0)");
  sub->add_option("--order", c.order, "degrevlex or lex")->check(CLI::IsMember({"degrevlex", "lex"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Steady-state ideal toolkit for mass-action reaction networks", "crn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "crn 1.0.0");

  auto network_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("network", c.inputs, "network file (.crn)")->required()->expected(1);
    sub->add_option("--format", c.format, "output format");
    return sub;
  };

  CLI::App* validate = network_cmd("validate", "check a network for structural problems");
  CLI::App* odes = network_cmd("odes", "print the mass-action steady-state polynomials");
  CLI::App* hyper = network_cmd("hypergraph", "print the network hypergraph (text, json or dot)");
  CLI::App* balance = network_cmd("balance", "find almost-balanced certificates");
  balance->add_option("--vertex", c.vertex, "vertex u<i> or v<i> (default: all)");
  balance->add_option("--forbid", c.forbid, "edges the certificate must avoid")->delimiter(',');
  balance->add_option("--bound", c.bound, "use exhaustive search with multiplicities in [-bound, bound]");
  CLI::App* obstructions = network_cmd("obstructions", "list structural obstructions to almost balance");
  obstructions->add_option("--vertex", c.vertex, "vertex u<i> or v<i> (default: all)");
  CLI::App* minimal = network_cmd("minimal-reactants", "print the minimal reactant monomials");
  CLI::App* monomial = network_cmd("monomial-ideal", "certificate and oracle check that the ideal is monomial");
  add_oracle_flags(monomial, c);
  CLI::App* transform = network_cmd("transform", "apply ideal-preserving rewrites");
  transform->add_option("--op", c.op, "product, reactant or degradation");
  transform->add_option("--reaction", c.reaction, "reaction index i");
  transform->add_option("--species", c.species, "species to add");
  transform->add_option("--aux", c.aux, "reaction j whose reactant divides y_i (searched when omitted)");
  transform->add_option("--script", c.script, "JSON list of operations");
  transform->add_flag("--verify", c.verify, "check ideal equality of input and output with the oracle");
  add_oracle_flags(transform, c);

  CLI::App* compare = app.add_subcommand("compare", "decide whether two networks have the same steady-state ideal");
  compare->add_option("networks", c.inputs, "two network files")->required()->expected(2);
  compare->add_option("--format", c.format, "output format");
  add_oracle_flags(compare, c);

  CLI::App* member = app.add_subcommand("member", "decide whether a monomial lies in the steady-state ideal");
  member->add_option("network", c.network, "network file (.crn)")->required();
  member->add_option("monomial", c.monomial, "monomial as a complex, e.g. A+B")->required();
  member->add_option("--format", c.format, "output format");
  add_oracle_flags(member, c);

  CLI::App* gb = network_cmd("gb", "reduced Groebner basis of the specialized ideal per trial");
  add_oracle_flags(gb, c);

  std::vector<std::string> argv_store{"crn"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "crn 1.0.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "crn: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(c, out);
    if (odes->parsed()) return cmd_odes(c, out);
    if (hyper->parsed()) return cmd_hypergraph(c, out);
    if (balance->parsed()) return cmd_balance(c, out);
    if (obstructions->parsed()) return cmd_obstructions(c, out);
    if (minimal->parsed()) return cmd_minimal_reactants(c, out);
    if (monomial->parsed()) return cmd_monomial_ideal(c, out);
    if (transform->parsed()) return cmd_transform(c, out);
    if (compare->parsed()) return cmd_compare(c, out);
    if (member->parsed()) return cmd_member(c, out);
    if (gb->parsed()) return cmd_gb(c, out);
  } catch (const ParseError& e) {
    err << "crn: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "crn: " << e.what() << '\n';
    return kUsage;
  } catch (const UnluckySpecialization& e) {
    err << "crn: " << e.what() << '\n';
    return kInternal;
  } catch (const CertificateError& e) {
    err << "crn: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const TransformError& e) {
    err << "crn: " << e.what() << '\n';
    return kNegative;
  } catch (const ScriptError& e) {
    err << "crn: " << e.what() << '\n';
    return kNegative;
  } catch (const PreconditionError& e) {
    err << "crn: " << e.what() << '\n';
    return kNegative;
  } catch (const Error& e) {
    err << "crn: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "crn: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace crn::cli
