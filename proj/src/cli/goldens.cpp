#include "wres/cli/goldens.hpp"

#include <fstream>
#include <sstream>

namespace wres {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

GoldenRecord parse_record(const std::string& body, std::size_t line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const auto bar = body.find('|', pos);
    if (bar == std::string::npos) throw GoldenParseError("expected 'name | anchor | expr | quote=...'", line);
    fields.push_back(trim(body.substr(pos, bar - pos)));
    pos = bar + 1;
  }
  const std::string rest = trim(body.substr(pos));
  GoldenRecord r;
  r.line = line;
  r.name = fields[0];
  r.anchor = fields[1];
  r.expr_text = fields[2];
  if (r.name.empty()) throw GoldenParseError("empty record name", line);
  if (r.anchor.empty()) throw GoldenParseError("record '" + r.name + "' has no anchor", line);
  if (rest.rfind("quote=", 0) != 0) throw GoldenParseError("record '" + r.name + "' has no quote field", line);
  r.quote = trim(rest.substr(6));
  if (r.quote.empty()) throw GoldenParseError("record '" + r.name + "' has an empty quote", line);
  try {
    r.expr = parse_expr(r.expr_text);
  } catch (const ExprParseError& e) {
    throw GoldenParseError("record '" + r.name + "': " + e.what(), line);
  }
  return r;
}

}  // namespace

const GoldenRecord* Goldens::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &records_[it->second];
}

const GoldenRecord& Goldens::at(const std::string& name) const {
  if (const auto* r = find(name)) return *r;
  throw Error("no goldens record named '" + name + "'");
}

std::vector<std::string> Goldens::names_with_prefix(const std::string& prefix) const {
  std::vector<std::string> out;
  for (const auto& r : records_)
    if (r.name.rfind(prefix, 0) == 0) out.push_back(r.name);
  return out;
}

void Goldens::add(GoldenRecord r) {
  if (index_.count(r.name)) throw GoldenParseError("duplicate record '" + r.name + "'", r.line);
  index_.emplace(r.name, records_.size());
  records_.push_back(std::move(r));
}

Goldens parse_goldens(const std::string& text) {
  Goldens g;
  std::istringstream in(text);
  std::string raw;
  std::string body;
  std::size_t line = 0;
  std::size_t start = 0;
  const auto flush = [&] {
    if (!trim(body).empty()) g.add(parse_record(body, start));
    body.clear();
  };
  while (std::getline(in, raw)) {
    ++line;
    const std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    if (raw[0] == ' ' || raw[0] == '\t') {
      if (body.empty()) throw GoldenParseError("continuation line without a record", line);
      body += ' ' + t;
      continue;
    }
    flush();
    body = t;
    start = line;
  }
  flush();
  return g;
}

Goldens load_goldens(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open goldens file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_goldens(ss.str());
}

}  // namespace wres
