#include "cid/runner.hpp"

#include <sstream>

#include "cid/multiplier.hpp"
#include "cid/realize.hpp"

namespace cid {

namespace {

const Cluster& need_cluster(const Document& doc, const std::string& name) {
  auto it = doc.clusters.find(name);
  if (it == doc.clusters.end())
    throw DomainError("unknown cluster '" + name + "'");
  return it->second;
}

const Divisor& need_divisor(const Document& doc, const std::string& name) {
  auto it = doc.divisors.find(name);
  if (it == doc.divisors.end())
    throw DomainError("unknown divisor '" + name + "'");
  return it->second;
}

const CompleteIdeal& need_ideal(const Document& doc, const std::string& name) {
  auto it = doc.ideals.find(name);
  if (it == doc.ideals.end()) throw DomainError("unknown ideal '" + name + "'");
  return it->second;
}

const NewtonPolygon& need_monomial(const Document& doc,
                                   const std::string& name) {
  auto it = doc.monomials.find(name);
  if (it == doc.monomials.end())
    throw DomainError("unknown monomial ideal '" + name + "'");
  return it->second;
}

Rat option_rat(const std::vector<std::string>& args, const std::string& flag,
               bool required, const Rat& fallback = Rat(0)) {
  for (size_t i = 1; i + 1 < args.size(); ++i)
    if (args[i] == flag) return parse_rational(args[i + 1]);
  if (required) throw DomainError("missing required option " + flag);
  return fallback;
}

bool has_option(const std::vector<std::string>& args, const std::string& flag) {
  for (size_t i = 1; i + 1 < args.size(); ++i)
    if (args[i] == flag) return true;
  return false;
}

std::string option_str(const std::vector<std::string>& args,
                       const std::string& flag) {
  for (size_t i = 1; i + 1 < args.size(); ++i)
    if (args[i] == flag) return args[i + 1];
  throw DomainError("missing required option " + flag);
}

void emit_vec(std::ostream& os, const std::string& key, const Vec& v) {
  os << key;
  for (long long x : v) os << " " << x;
  os << "\n";
}

void emit_cluster_block(std::ostream& os, const std::string& name,
                        const Cluster& c) {
  os << "cluster " << name << "\n";
  for (PointId id = 1; id <= c.size(); ++id) {
    const ClusterPoint& p = c.point(id);
    if (p.parent == 0) {
      os << "point " << id << " root\n";
    } else {
      os << "point " << id << " parent " << p.parent;
      if (p.satellite != 0) os << " satellite " << p.satellite;
      os << "\n";
    }
  }
}

int cmd_realize(const std::vector<std::string>& args, const Document& doc,
                bool verbose, std::ostream& os) {
  const CompleteIdeal& j = need_ideal(doc, args[1]);
  std::optional<Rat> c_override;
  std::optional<std::vector<long long>> chains_override;
  if (has_option(args, "--c")) c_override = option_rat(args, "--c", true);
  if (has_option(args, "--chains")) {
    std::vector<long long> ns;
    std::istringstream cs(option_str(args, "--chains"));
    std::string tok;
    while (std::getline(cs, tok, ','))
      ns.push_back(std::stoll(tok));
    chains_override = ns;
  }

  RealizationCertificate cert = realize(j, c_override, chains_override);
  if (cert.trivial) {
    os << "trivial true\n";
    os << "c 1\n";
    os << "verification OK\n";
    return 0;
  }

  os << "epsilon_bound " << epsilon_bound(j).str() << "\n";
  os << "epsilon " << cert.params.epsilon.str() << "\n";
  os << "c " << cert.params.c.str() << "\n";
  long long total = 0;
  for (const ChainPlanEntry& e : cert.plan) total += e.excess * e.length;
  os << "N " << total << "\n";
  os << "chain_plan";
  for (const ChainPlanEntry& e : cert.plan)
    os << " " << e.point << ":" << e.excess << ":" << e.length;
  os << "\n";
  emit_cluster_block(os, "Y", cert.extended);
  os << "ideal I on Y values";
  for (long long x : cert.companion.divisor.coeff) os << " " << x;
  os << "\n";
  os << "ideal J_pullback on Y values";
  for (long long x : cert.expected.coeff) os << " " << x;
  os << "\n";
  if (verbose) {
    emit_vec(os, "# recomputed", cert.recomputed.coeff);
    ResidualReport rep = verify_residual(cert);
    os << "# residual " << (rep.ok ? "ok" : "violated") << "\n";
  }
  os << "verification " << (cert.verified ? "OK" : "FAIL") << "\n";
  return cert.verified ? 0 : 3;
}

int dispatch(const std::vector<std::string>& args, const Document& doc,
             bool verbose, std::ostream& os) {
  if (args.empty()) throw DomainError("no command given");
  const std::string& cmd = args[0];

  if (cmd == "validate") {
    auto report_one = [&](const std::string& name, const Cluster& c) {
      ValidationReport rep = validate(c);
      for (const std::string& v : rep.violations)
        os << "violation " << name << " " << v << "\n";
      os << "valid " << name << " " << (rep.ok ? "true" : "false") << "\n";
    };
    if (args.size() >= 2) {
      report_one(args[1], need_cluster(doc, args[1]));
    } else {
      for (const auto& [name, c] : doc.clusters) report_one(name, c);
    }
    return 0;
  }
  if (cmd == "matrix") {
    Mat m = intersection_matrix(need_cluster(doc, args.at(1)));
    for (size_t i = 0; i < m.size(); ++i)
      emit_vec(os, "matrix_row " + std::to_string(i + 1), m[i]);
    return 0;
  }
  if (cmd == "canonical") {
    emit_vec(os, "canonical",
             canonical_divisor(need_cluster(doc, args.at(1))).coeff);
    return 0;
  }
  if (cmd == "unload") {
    emit_vec(os, "unload", unload(need_divisor(doc, args.at(1))).coeff);
    return 0;
  }
  if (cmd == "factor") {
    const CompleteIdeal& ideal = need_ideal(doc, args.at(1));
    for (const SimpleFactor& f : factor_simple(ideal))
      os << "factor " << f.point << " " << f.exponent << "\n";
    os << "simple " << (is_simple(ideal) ? "true" : "false") << "\n";
    return 0;
  }
  if (cmd == "colength") {
    os << "colength " << colength(need_ideal(doc, args.at(1))) << "\n";
    return 0;
  }
  if (cmd == "order") {
    os << "order " << order_of(need_ideal(doc, args.at(1))) << "\n";
    return 0;
  }
  if (cmd == "mult") {
    const CompleteIdeal& ideal = need_ideal(doc, args.at(1));
    Rat c = option_rat(args, "-c", true);
    CompleteIdeal m = multiplier_ideal(ideal, c);
    emit_vec(os, "mult_values", m.divisor.coeff);
    emit_vec(os, "mult_mults", point_basis(m));
    return 0;
  }
  if (cmd == "jump") {
    const CompleteIdeal& ideal = need_ideal(doc, args.at(1));
    if (ideal.is_unit()) throw DomainError("jump: unit ideal");
    Rat max = option_rat(args, "--max", true);
    for (const Rat& c : jumping_numbers(ideal, max))
      os << "jumping " << c.str() << "\n";
    return 0;
  }
  if (cmd == "realize") {
    if (args.size() < 2) throw DomainError("usage: realize NAME [--c p/q] [--chains n,...]");
    return cmd_realize(args, doc, verbose, os);
  }
  if (cmd == "adjoint") {
    const CompleteIdeal& ideal = need_ideal(doc, args.at(1));
    AdjointResult res = classify_adjoint(ideal);
    os << "adjoint " << (res.adjoint ? "true" : "false") << "\n";
    if (res.adjoint) {
      os << "witness J(J^2)=J " << (res.witness_ok ? "OK" : "FAIL") << "\n";
      return res.witness_ok ? 0 : 3;
    }
    return 0;
  }
  if (cmd == "oracle") {
    if (args.size() < 3) throw DomainError("usage: oracle closure|cross NAME ...");
    if (args[1] == "closure") {
      const Divisor& d = need_divisor(doc, args[2]);
      Divisor closed = exhaustive_antinef_closure(d);
      emit_vec(os, "closure", closed.coeff);
      bool agree = closed.coeff == unload(d).coeff;
      os << "agrees_unload " << (agree ? "true" : "false") << "\n";
      return agree ? 0 : 3;
    }
    if (args[1] == "cross") {
      const NewtonPolygon& p = need_monomial(doc, args[2]);
      std::vector<std::string> sub(args.begin() + 1, args.end());
      Rat c = option_rat(sub, "-c", true);
      bool ok = cross_check(p, c);
      os << "cross " << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 3;
    }
    throw DomainError("unknown oracle subcommand '" + args[1] + "'");
  }
  throw DomainError("unknown command '" + cmd + "'");
}

}  // namespace

RunResult run_command(const std::vector<std::string>& args, const Document& doc,
                      bool verbose) {
  std::ostringstream os;
  RunResult res;
  try {
    res.exit_code = dispatch(args, doc, verbose, os);
  } catch (const DomainError& e) {
    os << "error " << e.what() << "\n";
    res.exit_code = 1;
  } catch (const std::invalid_argument& e) {
    os << "error " << e.what() << "\n";
    res.exit_code = 1;
  } catch (const std::out_of_range&) {
    os << "error missing argument\n";
    res.exit_code = 1;
  }
  res.report = os.str();
  return res;
}

RunResult run_on_text(const std::vector<std::string>& args,
                      const std::string& text, bool verbose) {
  Document doc;
  try {
    doc = parse_document(text);
  } catch (const SyntaxError& e) {
    return {2, std::string("error ") + e.what() + "\n"};
  }
  return run_command(args, doc, verbose);
}

}  // namespace cid
