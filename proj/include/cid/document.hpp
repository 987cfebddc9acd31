#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cid/dictionary.hpp"
#include "cid/oracle.hpp"

namespace cid {

// Reported with a 1-based line number; covers malformed statements and
// semantic load errors (bad references, invalid clusters, length mismatches).
class SyntaxError : public std::runtime_error {
public:
  SyntaxError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Named objects parsed from the line-oriented input grammar.
struct Document {
  std::map<std::string, Cluster> clusters;
  std::map<std::string, std::string> divisor_cluster;  // divisor -> cluster name
  std::map<std::string, Divisor> divisors;
  std::map<std::string, std::string> ideal_cluster;
  std::map<std::string, CompleteIdeal> ideals;
  std::map<std::string, NewtonPolygon> monomials;
  std::map<std::string, std::vector<std::string>> params;
  // Statement order for faithful emission: (kind, name).
  std::vector<std::pair<std::string, std::string>> order;

  friend bool operator==(const Document& a, const Document& b) {
    return a.clusters == b.clusters && a.divisors == b.divisors &&
           a.ideals == b.ideals && a.monomials == b.monomials &&
           a.params == b.params;
  }
};

Document parse_document(const std::string& text);
std::string emit_document(const Document& doc);

Rat parse_rational(const std::string& token);

}  // namespace cid
