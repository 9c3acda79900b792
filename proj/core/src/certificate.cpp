#include "pgc/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pgc/sha256.hpp"

namespace pgc::cert {

// --- Block -----------------------------------------------------------

Block Block::poly(Poly p) {
  Block b;
  b.kind = Kind::Poly;
  b.p = std::move(p);
  return b;
}

Block Block::quotient(Poly p, Poly q) {
  Block b;
  b.kind = Kind::Quotient;
  b.p = std::move(p);
  b.q = std::move(q);
  return b;
}

Block Block::log_affine(Rational c, Rational a, Rational bb) {
  Block b;
  b.kind = Kind::LogAffine;
  b.c = std::move(c);
  b.a = std::move(a);
  b.b = std::move(bb);
  return b;
}

Block Block::sqrt_affine(Rational c, Rational a, Rational bb) {
  Block b;
  b.kind = Kind::SqrtAffine;
  b.c = std::move(c);
  b.a = std::move(a);
  b.b = std::move(bb);
  return b;
}

Block Block::power_odd(Poly p, Poly q, int exponent) {
  Block b;
  b.kind = Kind::PowerOdd;
  b.p = std::move(p);
  b.q = std::move(q);
  b.exponent = exponent;
  return b;
}

Block Block::log_quotient(Poly p, Poly q, Rational a, Rational bb) {
  Block b;
  b.kind = Kind::LogQuotient;
  b.p = std::move(p);
  b.q = std::move(q);
  b.a = std::move(a);
  b.b = std::move(bb);
  return b;
}

bool operator==(const Block& x, const Block& y) {
  return x.kind == y.kind && x.p == y.p && x.q == y.q && x.c == y.c &&
         x.a == y.a && x.b == y.b && x.exponent == y.exponent;
}

std::string Block::str() const {
  switch (kind) {
    case Kind::Poly:
      return "poly:" + p.str();
    case Kind::Quotient:
      return "quot:" + p.str() + ":" + q.str();
    case Kind::LogAffine:
      return "logaff:" + c.str() + ":" + a.str() + ":" + b.str();
    case Kind::SqrtAffine:
      return "sqrtaff:" + c.str() + ":" + a.str() + ":" + b.str();
    case Kind::PowerOdd:
      return "powodd:" + p.str() + ":" + q.str() + ":" + std::to_string(exponent);
    case Kind::LogQuotient:
      return "logquot:" + p.str() + ":" + q.str() + ":" + a.str() + ":" + b.str();
  }
  throw Error("unreachable block kind");
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed integer '" + std::string(s) + "'", 0);
  return value;
}

Interval parse_interval(std::string_view s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("malformed interval '" + std::string(s) + "'", 0);
  auto parts = split(s.substr(1, s.size() - 2), ',');
  if (parts.size() != 2)
    throw ParseError("malformed interval '" + std::string(s) + "'", 0);
  try {
    return Interval(Rational::from_str(parts[0]), Rational::from_str(parts[1]));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace

Block Block::from_str(std::string_view s) {
  auto parts = split(s, ':');
  auto need = [&](std::size_t n) {
    if (parts.size() != n)
      throw ParseError("malformed block '" + std::string(s) + "'", 0);
  };
  if (parts[0] == "poly") {
    need(2);
    return poly(Poly::from_str(parts[1]));
  }
  if (parts[0] == "quot") {
    need(3);
    return quotient(Poly::from_str(parts[1]), Poly::from_str(parts[2]));
  }
  if (parts[0] == "logaff") {
    need(4);
    return log_affine(Rational::from_str(parts[1]), Rational::from_str(parts[2]),
                      Rational::from_str(parts[3]));
  }
  if (parts[0] == "sqrtaff") {
    need(4);
    return sqrt_affine(Rational::from_str(parts[1]), Rational::from_str(parts[2]),
                       Rational::from_str(parts[3]));
  }
  if (parts[0] == "powodd") {
    need(4);
    return power_odd(Poly::from_str(parts[1]), Poly::from_str(parts[2]),
                     parse_int(parts[3]));
  }
  if (parts[0] == "logquot") {
    need(5);
    return log_quotient(Poly::from_str(parts[1]), Poly::from_str(parts[2]),
                        Rational::from_str(parts[3]), Rational::from_str(parts[4]));
  }
  throw ParseError("unknown block kind '" + std::string(s) + "'", 0);
}

// --- nodes -----------------------------------------------------------

NodePtr make_node(Payload data, Interval result, std::vector<NodePtr> children) {
  auto n = std::make_shared<Node>();
  n->data = std::move(data);
  n->result = std::move(result);
  n->children = std::move(children);
  return n;
}

NodePtr make_node(Payload data, std::vector<NodePtr> children) {
  return make_node(std::move(data), Interval(), std::move(children));
}

const char* Node::kind_name() const {
  static const char* names[] = {
      "const",       "var",          "arith",       "polyeval",
      "widen",       "fieldref",     "eval",        "exp",
      "log",         "sqrt",         "exppoint",    "logpoint",
      "sqrtpoint",   "piece",        "polysign",    "factor",
      "factoredsign", "derivfactored", "loglinearsign", "monotone",
      "endpointbound", "aggsum",       "rootbracket"};
  return names[data.index()];
}

// --- serialization ---------------------------------------------------

namespace {

std::string signs_str(const std::vector<int>& signs) {
  std::string s;
  for (int v : signs) s += v >= 0 ? '+' : '-';
  return s;
}

void write_node(std::string& out, const Node& node, int depth) {
  out.append(static_cast<std::size_t>(2 * depth), ' ');
  out += node.kind_name();
  auto attr = [&](const char* key, const std::string& value) {
    out += ' ';
    out += key;
    out += '=';
    out += value;
  };
  bool with_result = true;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ConstData>) {
          attr("value", d.value.str());
          with_result = false;
        } else if constexpr (std::is_same_v<T, VarData>) {
          with_result = false;
        } else if constexpr (std::is_same_v<T, ArithData>) {
          attr("op", std::string(1, d.op));
          if (d.op == '^') attr("exp", std::to_string(d.exponent));
        } else if constexpr (std::is_same_v<T, PolyEvalData>) {
          attr("poly", d.poly.str());
        } else if constexpr (std::is_same_v<T, WidenData>) {
        } else if constexpr (std::is_same_v<T, FieldRefData>) {
          attr("name", d.name);
          with_result = false;
        } else if constexpr (std::is_same_v<T, EvalData>) {
          attr("fn", d.fn);
          attr("arg", d.argument.str());
        } else if constexpr (std::is_same_v<T, ExpData> ||
                             std::is_same_v<T, LogData> ||
                             std::is_same_v<T, SqrtData>) {
        } else if constexpr (std::is_same_v<T, ExpPointData>) {
          attr("point", d.point.str());
          attr("degree", std::to_string(d.degree));
          attr("partial", d.partial.str());
          attr("rem_lo", d.rem_lo.str());
          attr("rem_hi", d.rem_hi.str());
        } else if constexpr (std::is_same_v<T, LogPointData>) {
          attr("x", d.x.str());
          attr("u", d.u.str());
          attr("terms", std::to_string(d.terms));
          attr("partial", d.partial.str());
          attr("tail_lo", d.tail_lo.str());
          attr("tail_hi", d.tail_hi.str());
        } else if constexpr (std::is_same_v<T, SqrtPointData>) {
          attr("radicand", d.radicand.str());
          attr("sq_lo", d.sq_lo.str());
          attr("sq_hi", d.sq_hi.str());
        } else if constexpr (std::is_same_v<T, PieceData>) {
          attr("domain", d.domain.str());
          attr("horner", d.horner.str());
          with_result = false;
        } else if constexpr (std::is_same_v<T, PolySignData>) {
          attr("poly", d.poly.str());
          attr("domain", d.domain.str());
          attr("sign", std::to_string(d.sign));
          with_result = false;
        } else if constexpr (std::is_same_v<T, FactorData>) {
          attr("base", d.base.str());
          attr("exp", std::to_string(d.exponent));
          attr("sign", std::to_string(d.sign));
          with_result = false;
        } else if constexpr (std::is_same_v<T, FactoredSignData>) {
          attr("coef", d.coef.str());
          attr("expfactor", d.exp_factor ? "1" : "0");
          attr("sign", std::to_string(d.sign));
          with_result = false;
        } else if constexpr (std::is_same_v<T, DerivFactoredData>) {
          attr("numer", d.numer.str());
          attr("denom", d.denom.str());
          attr("coef", d.coef.str());
          attr("sign", std::to_string(d.sign));
          with_result = false;
        } else if constexpr (std::is_same_v<T, LogLinearSignData>) {
          attr("sign", std::to_string(d.sign));
          with_result = false;
        } else if constexpr (std::is_same_v<T, MonotoneData>) {
          if (d.has_block)
            attr("block", d.block.str());
          else
            attr("fn", d.fn);
          attr("direction", std::to_string(d.direction));
          with_result = false;
        } else if constexpr (std::is_same_v<T, EndpointBoundData>) {
          attr("domain", d.domain.str());
        } else if constexpr (std::is_same_v<T, AggSumData>) {
          attr("signs", signs_str(d.signs));
        } else if constexpr (std::is_same_v<T, RootBracketData>) {
          attr("fn", d.fn);
          attr("target", d.target.str());
          attr("bracket", d.bracket.str());
          with_result = false;
        }
      },
      node.data);
  if (with_result) attr("result", node.result.str());
  out += '\n';
  for (const NodePtr& child : node.children) write_node(out, *child, depth + 1);
}

std::string serialize_body(const BoundCertificate& cert, bool with_digest) {
  std::string out = "pgc-certificate v" + std::to_string(cert.schema_version) + "\n";
  for (const auto& [key, value] : cert.config)
    out += "config " + key + "=" + value + "\n";
  if (with_digest) out += "digest " + cert.digest + "\n";
  for (const Field& field : cert.fields) {
    out += "field name=" + field.name + " claimed=" + field.claimed.str() + "\n";
    write_node(out, *field.evidence, 1);
  }
  return out;
}

struct Line {
  int depth = 0;
  std::string_view kind;
  std::vector<std::pair<std::string_view, std::string_view>> attrs;
  std::size_t number = 0;
};

Line parse_line(std::string_view raw, std::size_t number) {
  Line line;
  line.number = number;
  std::size_t indent = 0;
  while (indent < raw.size() && raw[indent] == ' ') ++indent;
  if (indent % 2 != 0)
    throw ParseError("odd indentation on line " + std::to_string(number), indent);
  line.depth = static_cast<int>(indent / 2);
  auto tokens = split(raw.substr(indent), ' ');
  if (tokens.empty() || tokens[0].empty())
    throw ParseError("empty node on line " + std::to_string(number), indent);
  line.kind = tokens[0];
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    std::size_t eq = tokens[i].find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected key=value on line " + std::to_string(number), 0);
    line.attrs.emplace_back(tokens[i].substr(0, eq), tokens[i].substr(eq + 1));
  }
  return line;
}

class AttrReader {
 public:
  AttrReader(const Line& line) : line_(line) {}
  std::string_view get(std::string_view key) {
    for (const auto& [k, v] : line_.attrs)
      if (k == key) {
        ++consumed_;
        return v;
      }
    throw ParseError("missing attribute '" + std::string(key) + "' on line " +
                         std::to_string(line_.number),
                     0);
  }
  bool has(std::string_view key) const {
    for (const auto& [k, v] : line_.attrs)
      if (k == key) return true;
    return false;
  }
  void finish() const {
    if (consumed_ != line_.attrs.size())
      throw ParseError("unexpected attribute on line " + std::to_string(line_.number), 0);
  }

 private:
  const Line& line_;
  std::size_t consumed_ = 0;
};

std::vector<int> parse_signs(std::string_view s, std::size_t line_number) {
  std::vector<int> signs;
  for (char ch : s) {
    if (ch == '+')
      signs.push_back(1);
    else if (ch == '-')
      signs.push_back(-1);
    else
      throw ParseError("malformed signs on line " + std::to_string(line_number), 0);
  }
  return signs;
}

std::pair<Payload, bool> parse_payload(const Line& line, AttrReader& attrs) {
  std::string_view k = line.kind;
  if (k == "const") return {ConstData{Rational::from_str(attrs.get("value"))}, false};
  if (k == "var") return {VarData{}, false};
  if (k == "arith") {
    ArithData d;
    std::string_view op = attrs.get("op");
    if (op.size() != 1 || std::string_view("+-*/n^").find(op[0]) == std::string_view::npos)
      throw ParseError("unknown arith op on line " + std::to_string(line.number), 0);
    d.op = op[0];
    if (d.op == '^') d.exponent = parse_int(attrs.get("exp"));
    return {d, true};
  }
  if (k == "polyeval") return {PolyEvalData{Poly::from_str(attrs.get("poly"))}, true};
  if (k == "widen") return {WidenData{}, true};
  if (k == "fieldref") return {FieldRefData{std::string(attrs.get("name"))}, false};
  if (k == "eval")
    return {EvalData{std::string(attrs.get("fn")), parse_interval(attrs.get("arg"))}, true};
  if (k == "exp") return {ExpData{}, true};
  if (k == "log") return {LogData{}, true};
  if (k == "sqrt") return {SqrtData{}, true};
  if (k == "exppoint") {
    ExpPointData d;
    d.point = Rational::from_str(attrs.get("point"));
    d.degree = parse_int(attrs.get("degree"));
    d.partial = Rational::from_str(attrs.get("partial"));
    d.rem_lo = Rational::from_str(attrs.get("rem_lo"));
    d.rem_hi = Rational::from_str(attrs.get("rem_hi"));
    return {d, true};
  }
  if (k == "logpoint") {
    LogPointData d;
    d.x = Rational::from_str(attrs.get("x"));
    d.u = Rational::from_str(attrs.get("u"));
    d.terms = parse_int(attrs.get("terms"));
    d.partial = Rational::from_str(attrs.get("partial"));
    d.tail_lo = Rational::from_str(attrs.get("tail_lo"));
    d.tail_hi = Rational::from_str(attrs.get("tail_hi"));
    return {d, true};
  }
  if (k == "sqrtpoint") {
    SqrtPointData d;
    d.radicand = Rational::from_str(attrs.get("radicand"));
    d.sq_lo = Rational::from_str(attrs.get("sq_lo"));
    d.sq_hi = Rational::from_str(attrs.get("sq_hi"));
    return {d, true};
  }
  if (k == "piece")
    return {PieceData{parse_interval(attrs.get("domain")), parse_interval(attrs.get("horner"))},
            false};
  if (k == "polysign") {
    PolySignData d;
    d.poly = Poly::from_str(attrs.get("poly"));
    d.domain = parse_interval(attrs.get("domain"));
    d.sign = parse_int(attrs.get("sign"));
    return {d, false};
  }
  if (k == "factor") {
    FactorData d;
    d.base = Poly::from_str(attrs.get("base"));
    d.exponent = parse_int(attrs.get("exp"));
    d.sign = parse_int(attrs.get("sign"));
    return {d, false};
  }
  if (k == "factoredsign") {
    FactoredSignData d;
    d.coef = Rational::from_str(attrs.get("coef"));
    d.exp_factor = attrs.get("expfactor") == "1";
    d.sign = parse_int(attrs.get("sign"));
    return {d, false};
  }
  if (k == "derivfactored") {
    DerivFactoredData d;
    d.numer = Poly::from_str(attrs.get("numer"));
    d.denom = Poly::from_str(attrs.get("denom"));
    d.coef = Rational::from_str(attrs.get("coef"));
    d.sign = parse_int(attrs.get("sign"));
    return {d, false};
  }
  if (k == "loglinearsign") {
    LogLinearSignData d;
    d.sign = parse_int(attrs.get("sign"));
    return {d, false};
  }
  if (k == "monotone") {
    MonotoneData d;
    if (attrs.has("block")) {
      d.has_block = true;
      d.block = Block::from_str(attrs.get("block"));
    } else {
      d.fn = std::string(attrs.get("fn"));
    }
    d.direction = parse_int(attrs.get("direction"));
    return {d, false};
  }
  if (k == "endpointbound")
    return {EndpointBoundData{parse_interval(attrs.get("domain"))}, true};
  if (k == "aggsum")
    return {AggSumData{parse_signs(attrs.get("signs"), line.number)}, true};
  if (k == "rootbracket") {
    RootBracketData d;
    d.fn = std::string(attrs.get("fn"));
    d.target = Rational::from_str(attrs.get("target"));
    d.bracket = parse_interval(attrs.get("bracket"));
    return {d, false};
  }
  throw ParseError("unknown node kind '" + std::string(k) + "' on line " +
                       std::to_string(line.number),
                   0);
}

}  // namespace

std::string serialize(const BoundCertificate& cert) { return serialize_body(cert, true); }

std::string compute_digest(const BoundCertificate& cert) {
  return "sha256:" + sha256_hex(serialize_body(cert, false));
}

void seal(BoundCertificate& cert) { cert.digest = compute_digest(cert); }

const Field* BoundCertificate::find(std::string_view name) const {
  for (const Field& f : fields)
    if (f.name == name) return &f;
  return nullptr;
}

BoundCertificate deserialize(std::string_view text) {
  BoundCertificate cert;
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty certificate", 0);
  if (lines[0] != "pgc-certificate v1")
    throw ParseError("unsupported certificate header '" + std::string(lines[0]) + "'", 0);
  cert.schema_version = 1;

  std::size_t i = 1;
  for (; i < lines.size() && lines[i].starts_with("config "); ++i) {
    std::string_view body = lines[i].substr(7);
    std::size_t eq = body.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("malformed config line " + std::to_string(i + 1), 0);
    cert.config.emplace(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
  }
  if (i >= lines.size() || !lines[i].starts_with("digest "))
    throw ParseError("missing digest line", 0);
  cert.digest = std::string(lines[i].substr(7));
  ++i;

  // Fields with their evidence subtrees. A stack of (depth, node) builds
  // the tree; children vectors are filled bottom-up on pop.
  struct Frame {
    int depth;
    Payload payload;
    bool with_result;
    Interval result;
    std::vector<NodePtr> children;
  };

  while (i < lines.size()) {
    if (!lines[i].starts_with("field "))
      throw ParseError("expected field on line " + std::to_string(i + 1), 0);
    Line header = parse_line(lines[i], i + 1);
    AttrReader header_attrs(header);
    Field field;
    field.name = std::string(header_attrs.get("name"));
    field.claimed = parse_interval(header_attrs.get("claimed"));
    header_attrs.finish();
    ++i;

    std::vector<Frame> stack;
    auto pop_to = [&](int depth) {
      while (!stack.empty() && stack.back().depth >= depth) {
        Frame frame = std::move(stack.back());
        stack.pop_back();
        NodePtr node =
            make_node(std::move(frame.payload), std::move(frame.result), std::move(frame.children));
        if (stack.empty()) {
          if (field.evidence)
            throw ParseError("multiple evidence roots for field " + field.name, 0);
          field.evidence = node;
        } else {
          stack.back().children.push_back(node);
        }
      }
    };

    while (i < lines.size() && !lines[i].starts_with("field ")) {
      Line line = parse_line(lines[i], i + 1);
      if (line.depth < 1 || (!stack.empty() && line.depth > stack.back().depth + 1) ||
          (stack.empty() && line.depth != 1))
        throw ParseError("bad indentation on line " + std::to_string(i + 1), 0);
      pop_to(line.depth);
      AttrReader attrs(line);
      auto [payload, with_result] = parse_payload(line, attrs);
      Frame frame;
      frame.depth = line.depth;
      frame.payload = std::move(payload);
      frame.with_result = with_result;
      if (with_result) frame.result = parse_interval(attrs.get("result"));
      attrs.finish();
      stack.push_back(std::move(frame));
      ++i;
    }
    pop_to(1);
    if (!field.evidence)
      throw ParseError("field " + field.name + " has no evidence", 0);
    cert.fields.push_back(std::move(field));
  }
  return cert;
}

}  // namespace pgc::cert
