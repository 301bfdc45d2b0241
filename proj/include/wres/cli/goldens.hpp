#pragma once

#include <map>
#include <string>
#include <vector>

#include "wres/cli/expr.hpp"

namespace wres {

// One record: name | anchor | prefix-expression | quote=<verbatim source text>
struct GoldenRecord {
  std::string name;
  std::string anchor;
  std::string expr_text;
  ExprNode expr;
  std::string quote;
  std::size_t line = 0;
};

class GoldenParseError : public Error {
 public:
  GoldenParseError(const std::string& what, std::size_t line)
      : Error("goldens line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class Goldens {
 public:
  const GoldenRecord& at(const std::string& name) const;
  const GoldenRecord* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  const std::vector<GoldenRecord>& records() const { return records_; }
  // Names with the given prefix, in file order.
  std::vector<std::string> names_with_prefix(const std::string& prefix) const;

  void add(GoldenRecord r);

 private:
  std::vector<GoldenRecord> records_;
  std::map<std::string, std::size_t> index_;
};

Goldens parse_goldens(const std::string& text);
Goldens load_goldens(const std::string& path);

}  // namespace wres
