#include "cid/document.hpp"

#include <sstream>

namespace cid {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

long long parse_int(const std::string& tok, int line) {
  size_t pos = 0;
  long long v;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw SyntaxError(line, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw SyntaxError(line, "expected integer, got '" + tok + "'");
  return v;
}

// Keys whose whole line is stored verbatim as a parameter; this is what
// makes emitted realization certificates re-parseable.
bool is_param_key(const std::string& key) {
  return key == "epsilon_bound" || key == "epsilon" || key == "c" ||
         key == "N" || key == "chain_plan" || key == "verification" ||
         key == "trivial";
}

}  // namespace

Rat parse_rational(const std::string& token) {
  size_t slash = token.find('/');
  try {
    if (slash == std::string::npos) {
      size_t pos = 0;
      long long n = std::stoll(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      return Rat(n);
    }
    size_t p1 = 0, p2 = 0;
    long long n = std::stoll(token.substr(0, slash), &p1);
    long long d = std::stoll(token.substr(slash + 1), &p2);
    if (p1 != slash || p2 != token.size() - slash - 1 || d <= 0)
      throw std::invalid_argument(token);
    return Rat(n, d);
  } catch (const std::exception&) {
    throw DomainError("malformed rational '" + token + "'");
  }
}

Document parse_document(const std::string& text) {
  Document doc;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::string open_cluster;  // cluster currently receiving point lines

  auto get_cluster = [&](const std::string& name, int ln) -> const Cluster& {
    auto it = doc.clusters.find(name);
    if (it == doc.clusters.end())
      throw SyntaxError(ln, "unknown cluster '" + name + "'");
    ValidationReport rep = validate(it->second);
    if (!rep.ok)
      throw SyntaxError(ln, "cluster '" + name + "' is invalid: " +
                                rep.violations.front());
    return it->second;
  };

  while (std::getline(is, line)) {
    ++lineno;
    std::vector<std::string> t = split_tokens(line);
    if (t.empty()) continue;
    const std::string& key = t[0];

    if (key == "cluster") {
      if (t.size() != 2) throw SyntaxError(lineno, "usage: cluster NAME");
      if (doc.clusters.count(t[1]))
        throw SyntaxError(lineno, "duplicate cluster '" + t[1] + "'");
      doc.clusters[t[1]] = Cluster();
      doc.order.push_back({"cluster", t[1]});
      open_cluster = t[1];
    } else if (key == "point") {
      if (open_cluster.empty())
        throw SyntaxError(lineno, "point line outside a cluster block");
      Cluster& c = doc.clusters[open_cluster];
      if (t.size() < 3) throw SyntaxError(lineno, "malformed point line");
      long long id = parse_int(t[1], lineno);
      if (id != c.size() + 1)
        throw SyntaxError(lineno, "point ids must be sequential from 1");
      if (t[2] == "root") {
        if (t.size() != 3 || id != 1)
          throw SyntaxError(lineno, "malformed root point");
        c = Cluster::single_point();
      } else if (t[2] == "parent") {
        if (t.size() != 4 && !(t.size() == 6 && t[4] == "satellite"))
          throw SyntaxError(lineno, "malformed point line");
        long long parent = parse_int(t[3], lineno);
        long long sat = t.size() == 6 ? parse_int(t[5], lineno) : 0;
        if (parent < 1 || parent >= id || sat < 0 || sat >= id)
          throw SyntaxError(lineno, "point references must precede the point");
        if (c.size() == 0)
          throw SyntaxError(lineno, "first point must be the root");
        if (sat == 0)
          c.add_free((PointId)parent);
        else
          c.add_satellite((PointId)parent, (PointId)sat);
      } else {
        throw SyntaxError(lineno, "malformed point line");
      }
    } else if (key == "divisor" || key == "ideal") {
      open_cluster.clear();
      if (t.size() < 5 || t[2] != "on")
        throw SyntaxError(lineno,
                          "usage: " + key + " NAME on CLUSTER values|mults ...");
      const std::string& name = t[1];
      const Cluster& c = get_cluster(t[3], lineno);
      const std::string& mode = t[4];
      Vec v;
      for (size_t i = 5; i < t.size(); ++i) v.push_back(parse_int(t[i], lineno));
      if ((int)v.size() != c.size())
        throw SyntaxError(lineno, "'" + name + "': expected " +
                                      std::to_string(c.size()) +
                                      " coefficients, got " +
                                      std::to_string(v.size()));
      if (key == "divisor") {
        if (mode != "values")
          throw SyntaxError(lineno, "divisor requires 'values'");
        if (doc.divisors.count(name))
          throw SyntaxError(lineno, "duplicate divisor '" + name + "'");
        doc.divisors[name] = make_divisor(c, v);
        doc.divisor_cluster[name] = t[3];
        doc.order.push_back({"divisor", name});
      } else {
        if (doc.ideals.count(name))
          throw SyntaxError(lineno, "duplicate ideal '" + name + "'");
        CompleteIdeal ideal;
        if (mode == "mults") {
          for (long long m : v)
            if (m < 0)
              throw SyntaxError(lineno, "'" + name + "': negative multiplicity");
          Divisor d = make_divisor(c, solve_proximity(c, v));
          if (!is_antinef(d))
            throw SyntaxError(lineno, "'" + name +
                                          "': mults violate the proximity "
                                          "inequality (no such ideal)");
          ideal = CompleteIdeal{d};
        } else if (mode == "values") {
          ideal = ideal_from_divisor(make_divisor(c, v));
        } else {
          throw SyntaxError(lineno, "ideal requires 'mults' or 'values'");
        }
        doc.ideals[name] = ideal;
        doc.ideal_cluster[name] = t[3];
        doc.order.push_back({"ideal", name});
      }
    } else if (key == "monomial") {
      open_cluster.clear();
      if (t.size() < 4 || t[2] != "gens")
        throw SyntaxError(lineno, "usage: monomial NAME gens a,b ...");
      if (doc.monomials.count(t[1]))
        throw SyntaxError(lineno, "duplicate monomial '" + t[1] + "'");
      std::vector<LatticePoint> pts;
      for (size_t i = 3; i < t.size(); ++i) {
        size_t comma = t[i].find(',');
        if (comma == std::string::npos)
          throw SyntaxError(lineno, "malformed exponent pair '" + t[i] + "'");
        long long a = parse_int(t[i].substr(0, comma), lineno);
        long long b = parse_int(t[i].substr(comma + 1), lineno);
        pts.push_back({a, b});
      }
      try {
        doc.monomials[t[1]] = newton_from_monomials(pts);
      } catch (const std::invalid_argument& e) {
        throw SyntaxError(lineno, "'" + t[1] + "': " + e.what());
      }
      doc.order.push_back({"monomial", t[1]});
    } else if (key == "param") {
      open_cluster.clear();
      if (t.size() < 3) throw SyntaxError(lineno, "usage: param NAME VALUE...");
      doc.params[t[1]] = {t.begin() + 2, t.end()};
      doc.order.push_back({"param", t[1]});
    } else if (is_param_key(key)) {
      open_cluster.clear();
      if (t.size() < 2) throw SyntaxError(lineno, "missing value after " + key);
      doc.params[key] = {t.begin() + 1, t.end()};
      doc.order.push_back({"param", key});
    } else {
      throw SyntaxError(lineno, "unknown statement '" + key + "'");
    }
  }
  return doc;
}

std::string emit_document(const Document& doc) {
  std::ostringstream os;
  for (const auto& [kind, name] : doc.order) {
    if (kind == "cluster") {
      const Cluster& c = doc.clusters.at(name);
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
    } else if (kind == "divisor" || kind == "ideal") {
      const Vec& v = kind == "divisor" ? doc.divisors.at(name).coeff
                                       : doc.ideals.at(name).divisor.coeff;
      const std::string& cname = kind == "divisor"
                                     ? doc.divisor_cluster.at(name)
                                     : doc.ideal_cluster.at(name);
      os << kind << " " << name << " on " << cname << " values";
      for (long long x : v) os << " " << x;
      os << "\n";
    } else if (kind == "monomial") {
      os << "monomial " << name << " gens";
      for (auto [a, b] : doc.monomials.at(name).vertices)
        os << " " << a << "," << b;
      os << "\n";
    } else if (kind == "param") {
      os << "param " << name;
      for (const std::string& v : doc.params.at(name)) os << " " << v;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace cid
