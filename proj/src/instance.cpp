#include "gradedexp/instance.hpp"

#include <cctype>
#include <cstdio>
#include <memory>
#include <set>
#include <sstream>
#include <variant>

#include "gradedexp/cocycle.hpp"
#include "gradedexp/error.hpp"
#include "gradedexp/graded_simple.hpp"

namespace gradedexp {

namespace {

// ---- syntax tree -----------------------------------------------------------

struct Value;
using Fields = std::vector<std::pair<std::string, Value>>;

struct Value {
  std::size_t line = 0, column = 0;
  std::variant<long long, std::string, std::vector<Value>, Fields> data;

  bool is_int() const { return std::holds_alternative<long long>(data); }
  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_list() const { return std::holds_alternative<std::vector<Value>>(data); }
  bool is_fields() const { return std::holds_alternative<Fields>(data); }
};

struct Record {
  std::string kind;
  std::size_t line, column;
  Value body;  // Fields, or an int for the bare `truncation { 3 }` form
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  std::vector<Record> records() {
    std::vector<Record> out;
    skip();
    while (pos_ < s_.size()) {
      const std::size_t line = line_, col = col_;
      std::string kind = identifier();
      skip();
      if (peek() != '{') fail("expected '{' after record kind \"" + kind + "\"");
      Record r{std::move(kind), line, col, body()};
      out.push_back(std::move(r));
      skip();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, col_, what); }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string identifier() {
    const char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected an identifier");
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      out += peek();
      advance();
    }
    return out;
  }

  // '{' already at the cursor.
  Value body() {
    Value v{line_, col_, Fields{}};
    advance();
    skip();
    if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
      Value bare = value();
      expect('}');
      return bare;
    }
    Fields fields;
    while (true) {
      skip();
      if (peek() == '}') break;
      std::string key = identifier();
      expect(':');
      skip();
      fields.emplace_back(std::move(key), value());
      skip();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() != '}') fail("expected ',' or '}'");
    }
    advance();
    v.data = std::move(fields);
    return v;
  }

  Value value() {
    skip();
    const std::size_t line = line_, col = col_;
    const char c = peek();
    if (c == '{') return body();
    if (c == '[') {
      advance();
      std::vector<Value> items;
      skip();
      if (peek() == ']') {
        advance();
        return {line, col, std::move(items)};
      }
      while (true) {
        items.push_back(value());
        skip();
        if (peek() == ',') {
          advance();
          continue;
        }
        if (peek() == ']') {
          advance();
          return {line, col, std::move(items)};
        }
        fail("expected ',' or ']'");
      }
    }
    if (c == '"') {
      advance();
      std::string out;
      while (peek() != '"') {
        if (pos_ >= s_.size() || peek() == '\n') fail("unterminated string");
        if (peek() == '\\') {
          advance();
          if (peek() != '"' && peek() != '\\') fail("unknown escape");
        }
        out += peek();
        advance();
      }
      advance();
      return {line, col, std::move(out)};
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      if (c == '-') {
        digits += '-';
        advance();
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits += peek();
        advance();
      }
      if (digits.size() > 18) throw ParseError(line, col, "integer out of range");
      return {line, col, std::stoll(digits)};
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
};

// ---- shape checks ----------------------------------------------------------

[[noreturn]] void shape_error(const Value& v, const std::string& what) { throw ParseError(v.line, v.column, what); }

long long as_int(const Value& v, const std::string& key) {
  if (!v.is_int()) shape_error(v, "\"" + key + "\" must be an integer");
  return std::get<long long>(v.data);
}

std::string as_string(const Value& v, const std::string& key) {
  if (!v.is_string()) shape_error(v, "\"" + key + "\" must be a string");
  return std::get<std::string>(v.data);
}

std::vector<long long> as_int_list(const Value& v, const std::string& key) {
  if (!v.is_list()) shape_error(v, "\"" + key + "\" must be a list of integers");
  std::vector<long long> out;
  for (const Value& item : std::get<std::vector<Value>>(v.data)) out.push_back(as_int(item, key + " entry"));
  return out;
}

std::vector<std::string> as_string_list(const Value& v, const std::string& key) {
  if (!v.is_list()) shape_error(v, "\"" + key + "\" must be a list of strings");
  std::vector<std::string> out;
  for (const Value& item : std::get<std::vector<Value>>(v.data)) out.push_back(as_string(item, key + " entry"));
  return out;
}

// Field lookup that also rejects unknown and repeated keys.
class FieldReader {
 public:
  FieldReader(const Value& body, const std::string& kind, std::set<std::string> allowed) : body_(body) {
    if (!body.is_fields()) shape_error(body, "record \"" + kind + "\" needs key: value fields");
    for (const auto& [key, value] : std::get<Fields>(body.data)) {
      if (!allowed.count(key)) shape_error(value, "unknown key \"" + key + "\" in " + kind);
      if (!map_.emplace(key, &value).second) shape_error(value, "repeated key \"" + key + "\" in " + kind);
    }
  }

  const Value* find(const std::string& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second;
  }

  const Value& require(const std::string& key, const std::string& kind) const {
    if (const Value* v = find(key)) return *v;
    shape_error(body_, "record \"" + kind + "\" is missing \"" + key + "\"");
  }

 private:
  const Value& body_;
  std::map<std::string, const Value*> map_;
};

CocycleRecord read_cocycle(const Value& v) {
  const FieldReader f(v, "cocycle", {"modulus", "kind", "data"});
  CocycleRecord c;
  if (const Value* m = f.find("modulus")) {
    const long long mod = as_int(*m, "modulus");
    if (mod < 1 || mod > 64) shape_error(*m, "cocycle modulus must be in [1, 64]");
    c.modulus = static_cast<int>(mod);
  }
  if (const Value* k = f.find("kind")) {
    c.kind = as_string(*k, "kind");
    if (c.kind != "trivial" && c.kind != "coboundary" && c.kind != "table")
      shape_error(*k, "cocycle kind must be \"trivial\", \"coboundary\" or \"table\"");
  }
  if (const Value* d = f.find("data")) c.data = as_int_list(*d, "data");
  if (c.kind == "trivial" && !c.data.empty()) shape_error(v, "a trivial cocycle takes no data");
  if (c.kind != "trivial" && !f.find("data")) shape_error(v, "cocycle kind \"" + c.kind + "\" needs data");
  return c;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <typename T>
std::string list(const std::vector<T>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    if constexpr (std::is_same_v<T, std::string>)
      os << quote(v[i]);
    else
      os << v[i];
  }
  os << ']';
  return os.str();
}

// ---- semantic checks -------------------------------------------------------

[[noreturn]] void semantic(const std::string& path, const std::string& what) {
  throw InvalidArgument(path + ": " + what);
}

Element element_at(const Group& g, long long x, const std::string& path) {
  if (x < 0 || static_cast<std::size_t>(x) >= g.order())
    semantic(path, std::to_string(x) + " is not a group element");
  return static_cast<Element>(x);
}

Subgroup subgroup_at(const GroupPtr& g, const std::vector<long long>& elems, const std::string& path) {
  if (elems.empty()) semantic(path, "empty subgroup");
  std::vector<Element> xs;
  std::set<Element> seen;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Element x = element_at(*g, elems[i], path + "[" + std::to_string(i) + "]");
    if (!seen.insert(x).second) semantic(path + "[" + std::to_string(i) + "]", "repeated element");
    xs.push_back(x);
  }
  try {
    return Subgroup(g, std::move(xs));
  } catch (const InvalidArgument& e) {
    semantic(path, e.what());
  }
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
  InstanceSpec spec;
  bool have_group = false, have_truncation = false;
  for (const Record& r : Lexer(text).records()) {
    if (r.kind == "group") {
      if (have_group) throw ParseError(r.line, r.column, "more than one group record");
      have_group = true;
      const FieldReader f(r.body, "group", {"catalog", "product", "order", "table"});
      const int forms = (f.find("catalog") != nullptr) + (f.find("product") != nullptr) + (f.find("table") != nullptr);
      if (forms != 1) throw ParseError(r.line, r.column, "group needs exactly one of catalog, product, table");
      if (const Value* c = f.find("catalog")) {
        spec.group.catalog = as_string(*c, "catalog");
        if (f.find("order")) throw ParseError(r.line, r.column, "order only goes with table");
      } else if (const Value* p = f.find("product")) {
        spec.group.product = as_string_list(*p, "product");
        if (spec.group.product.empty()) shape_error(*p, "product needs at least one factor");
        if (f.find("order")) throw ParseError(r.line, r.column, "order only goes with table");
      } else {
        const long long n = as_int(f.require("order", "group"), "order");
        if (n < 1) shape_error(f.require("order", "group"), "order must be positive");
        spec.group.order = static_cast<std::size_t>(n);
        spec.group.table = as_int_list(*f.find("table"), "table");
      }
    } else if (r.kind == "subgroup") {
      const FieldReader f(r.body, "subgroup", {"name", "elements"});
      SubgroupRecord s;
      s.name = as_string(f.require("name", "subgroup"), "name");
      s.elements = as_int_list(f.require("elements", "subgroup"), "elements");
      spec.subgroups.push_back(std::move(s));
    } else if (r.kind == "simple") {
      const FieldReader f(r.body, "simple", {"H", "cocycle", "tuple"});
      SimpleRecord s;
      s.h = as_int_list(f.require("H", "simple"), "H");
      s.tuple = as_int_list(f.require("tuple", "simple"), "tuple");
      if (const Value* c = f.find("cocycle")) s.cocycle = read_cocycle(*c);
      spec.simples.push_back(std::move(s));
    } else if (r.kind == "edge") {
      const FieldReader f(r.body, "edge", {"from", "to", "degree"});
      spec.edges.push_back({as_int(f.require("from", "edge"), "from"), as_int(f.require("to", "edge"), "to"),
                            as_int(f.require("degree", "edge"), "degree")});
    } else if (r.kind == "truncation") {
      if (have_truncation) throw ParseError(r.line, r.column, "more than one truncation record");
      have_truncation = true;
      long long n;
      if (r.body.is_int()) {
        n = std::get<long long>(r.body.data);
      } else {
        const FieldReader f(r.body, "truncation", {"N"});
        n = as_int(f.require("N", "truncation"), "N");
      }
      if (n < 1) throw ParseError(r.line, r.column, "truncation must be at least 1");
      spec.truncation = static_cast<std::size_t>(n);
    } else if (r.kind == "seed") {
      if (spec.seed) throw ParseError(r.line, r.column, "more than one seed record");
      const FieldReader f(r.body, "seed", {"value"});
      const long long s = as_int(f.require("value", "seed"), "value");
      if (s < 0) throw ParseError(r.line, r.column, "seed must be non-negative");
      spec.seed = static_cast<std::uint64_t>(s);
    } else {
      throw ParseError(r.line, r.column, "unknown record kind \"" + r.kind + "\"");
    }
  }
  if (!have_group) throw ParseError(1, 1, "missing group record");
  return spec;
}

std::string emit_instance(const InstanceSpec& spec) {
  std::ostringstream os;
  os << "group { ";
  if (spec.group.catalog)
    os << "catalog: " << quote(*spec.group.catalog);
  else if (!spec.group.product.empty())
    os << "product: " << list(spec.group.product);
  else
    os << "order: " << spec.group.order << ", table: " << list(spec.group.table);
  os << " }\n";
  if (spec.seed) os << "seed { value: " << *spec.seed << " }\n";
  for (const SubgroupRecord& s : spec.subgroups)
    os << "subgroup { name: " << quote(s.name) << ", elements: " << list(s.elements) << " }\n";
  for (const SimpleRecord& s : spec.simples) {
    os << "simple { H: " << list(s.h) << ", cocycle: { modulus: " << s.cocycle.modulus
       << ", kind: " << quote(s.cocycle.kind);
    if (!s.cocycle.data.empty()) os << ", data: " << list(s.cocycle.data);
    os << " }, tuple: " << list(s.tuple) << " }\n";
  }
  for (const EdgeRecord& e : spec.edges)
    os << "edge { from: " << e.from << ", to: " << e.to << ", degree: " << e.degree << " }\n";
  os << "truncation { N: " << spec.truncation << " }\n";
  return os.str();
}

std::string instance_hash(const InstanceSpec& spec) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : emit_instance(spec)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GroupPtr materialize_group(const GroupRecord& record) {
  if (record.catalog) {
    try {
      return catalog_group(*record.catalog);
    } catch (const InvalidArgument& e) {
      semantic("group.catalog", e.what());
    }
  }
  if (!record.product.empty()) {
    std::string joined;
    for (std::size_t i = 0; i < record.product.size(); ++i) {
      const std::string& name = record.product[i];
      const std::string path = "group.product[" + std::to_string(i) + "]";
      if (name.find('x') != std::string::npos) semantic(path, "factors must be single catalog names");
      try {
        catalog_group(name);
      } catch (const InvalidArgument& e) {
        semantic(path, e.what());
      }
      joined += (i ? "x" : "") + name;
    }
    return catalog_group(joined);
  }
  if (record.order > kMaxGroupOrder) semantic("group.order", "order above " + std::to_string(kMaxGroupOrder));
  if (record.table.size() != record.order * record.order)
    semantic("group.table", "expected " + std::to_string(record.order * record.order) + " entries, got " +
                                std::to_string(record.table.size()));
  std::vector<Element> table;
  for (std::size_t i = 0; i < record.table.size(); ++i) {
    const long long x = record.table[i];
    if (x < 0 || static_cast<std::size_t>(x) >= record.order)
      semantic("group.table[" + std::to_string(i) + "]", std::to_string(x) + " is out of range");
    table.push_back(static_cast<Element>(x));
  }
  try {
    return Group::from_table(record.order, std::move(table), "G" + std::to_string(record.order));
  } catch (const InvalidArgument& e) {
    semantic("group.table", e.what());
  }
}

Instance materialize(const InstanceSpec& spec, std::size_t basis_cap) {
  Instance out;
  out.spec = spec;
  out.group = materialize_group(spec.group);
  const GroupPtr& g = out.group;

  for (std::size_t i = 0; i < spec.subgroups.size(); ++i) {
    const SubgroupRecord& s = spec.subgroups[i];
    const std::string path = "subgroup[" + std::to_string(i) + "]";
    if (s.name.empty()) semantic(path + ".name", "empty name");
    Subgroup sub = subgroup_at(g, s.elements, path + ".elements");
    if (!out.subgroups.emplace(s.name, std::move(sub)).second) semantic(path + ".name", "duplicate name " + s.name);
  }

  if (spec.simples.empty()) semantic("simple", "at least one simple record is required");
  std::vector<GradedSimplePtr> comps;
  for (std::size_t i = 0; i < spec.simples.size(); ++i) {
    const SimpleRecord& s = spec.simples[i];
    const std::string path = "simple[" + std::to_string(i) + "]";
    const Subgroup h = subgroup_at(g, s.h, path + ".H");
    const CocycleRecord& c = s.cocycle;
    std::vector<int> data;
    for (std::size_t j = 0; j < c.data.size(); ++j) {
      const long long x = c.data[j];
      if (x < 0 || x >= c.modulus)
        semantic(path + ".cocycle.data[" + std::to_string(j) + "]", "must be in [0, modulus)");
      data.push_back(static_cast<int>(x));
    }
    std::optional<TwoCocycle> f;
    if (c.kind == "trivial") {
      f = TwoCocycle::trivial(h, c.modulus);
    } else if (c.kind == "coboundary") {
      if (data.size() != h.size())
        semantic(path + ".cocycle.data", "coboundary needs one value per element of H");
      f = TwoCocycle::coboundary(h, c.modulus, data);
    } else {
      if (data.size() != h.size() * h.size())
        semantic(path + ".cocycle.data", "table needs |H|^2 values");
      f = TwoCocycle(h, c.modulus, data);
    }
    const CocycleCheck check = verify_cocycle(*f);
    if (!check.ok) semantic(path + ".cocycle", check.reason);
    if (s.tuple.empty()) semantic(path + ".tuple", "empty tuple");
    std::vector<Element> tuple;
    for (std::size_t j = 0; j < s.tuple.size(); ++j)
      tuple.push_back(element_at(*g, s.tuple[j], path + ".tuple[" + std::to_string(j) + "]"));
    comps.push_back(build_bsz_simple(*f, std::move(tuple)));
  }

  std::vector<QuiverEdge> edges;
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const EdgeRecord& e = spec.edges[i];
    const std::string path = "edge[" + std::to_string(i) + "]";
    const auto q = static_cast<long long>(comps.size());
    if (e.from < 0 || e.from >= q) semantic(path + ".from", "no simple record " + std::to_string(e.from));
    if (e.to < 0 || e.to >= q) semantic(path + ".to", "no simple record " + std::to_string(e.to));
    edges.push_back({static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.to),
                     element_at(*g, e.degree, path + ".degree")});
  }
  out.algebra = build_glued(g, std::move(comps), std::move(edges), spec.truncation, basis_cap);
  return out;
}

}  // namespace gradedexp
