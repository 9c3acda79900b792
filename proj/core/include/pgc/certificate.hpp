#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pgc/interval.hpp"
#include "pgc/poly.hpp"

namespace pgc::cert {

// A monotone bound is always taken over one of these one-argument
// building blocks. The descriptor is plain data so the replay checker
// can recompute endpoint values and derivatives on its own.
struct Block {
  enum class Kind { Poly, Quotient, LogAffine, SqrtAffine, PowerOdd, LogQuotient };
  Kind kind = Kind::Poly;
  Poly p;        // Poly: p(t); Quotient/PowerOdd/LogQuotient: p(t)/q(t)
  Poly q;
  Rational c;    // LogAffine: c*log(a t + b); SqrtAffine: c*sqrt(a t + b)
  Rational a;    // LogQuotient: p(t)*log(a t + b)/q(t)
  Rational b;
  int exponent = 1;  // PowerOdd: (p/q)^exponent, exponent odd

  static Block poly(Poly p);
  static Block quotient(Poly p, Poly q);
  static Block log_affine(Rational c, Rational a, Rational b);
  static Block sqrt_affine(Rational c, Rational a, Rational b);
  static Block power_odd(Poly p, Poly q, int exponent);
  static Block log_quotient(Poly p, Poly q, Rational a, Rational b);

  std::string str() const;
  static Block from_str(std::string_view s);
  friend bool operator==(const Block&, const Block&);
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// --- node payloads ---------------------------------------------------
// Value-style nodes certify an enclosure (carried in Node::result);
// sign-style nodes certify a sign or a monotonicity direction.

struct ConstData { Rational value; };
struct VarData {};
struct ArithData { char op = '+'; int exponent = 0; };  // + - * / n(eg) ^(pow)
struct PolyEvalData { Poly poly; };
struct WidenData {};                    // outward rounding step (child ⊆ result)
struct FieldRefData { std::string name; };
struct EvalData { std::string fn; Interval argument; };
struct ExpData {};    // children: input, ExpPoint at lo [, ExpPoint at hi]
struct LogData {};    // children: input, LogPoint(s)
struct SqrtData {};   // children: input, SqrtPoint(s)
struct ExpPointData {
  Rational point;
  int degree = 0;       // k: partial sum has terms x^0..x^(k-1)
  Rational partial;
  Rational rem_lo, rem_hi;
};
struct LogPointData {
  Rational x;
  Rational u;           // (x-1)/(x+1)
  int terms = 1;        // last odd series index included
  Rational partial;
  Rational tail_lo, tail_hi;
};
struct SqrtPointData { Rational radicand; Rational sq_lo, sq_hi; };
struct PieceData { Interval domain; Interval horner; };
struct PolySignData { Poly poly; Interval domain; int sign = 0; };  // children: pieces
struct FactorData { Poly base; int exponent = 1; int sign = 0; };   // child: PolySign(base)
struct FactoredSignData { Rational coef; bool exp_factor = false; int sign = 0; };
struct DerivFactoredData {  // claim: p'q - pq' == coef * prod(base_i^exp_i)
  Poly numer, denom;
  Rational coef;
  int sign = 0;
};
// Sign of log(at+b)*w*(p'q-pq') + a*p*q on an interval — the derivative
// numerator of p*log(at+b)/q. Children: LogPoint at both interval ends.
struct LogLinearSignData { int sign = 0; };
struct MonotoneData {
  bool has_block = false;
  Block block;
  std::string fn;       // transcribed factored derivative for a named function
  int direction = 0;    // +1 increasing, -1 decreasing, 0 constant
};
struct EndpointBoundData { Interval domain; };
struct AggSumData { std::vector<int> signs; };
struct RootBracketData { std::string fn; Rational target; Interval bracket; };

using Payload =
    std::variant<ConstData, VarData, ArithData, PolyEvalData, WidenData,
                 FieldRefData, EvalData, ExpData, LogData, SqrtData,
                 ExpPointData, LogPointData, SqrtPointData, PieceData,
                 PolySignData, FactorData, FactoredSignData,
                 DerivFactoredData, LogLinearSignData, MonotoneData,
                 EndpointBoundData, AggSumData, RootBracketData>;

struct Node {
  Payload data;
  Interval result;  // enclosure certified by a value-style node
  std::vector<NodePtr> children;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&data);
  }
  const char* kind_name() const;
};

NodePtr make_node(Payload data, Interval result, std::vector<NodePtr> children = {});
NodePtr make_node(Payload data, std::vector<NodePtr> children = {});

// --- certificate -----------------------------------------------------

// A named claim: "constant <name> lies in `claimed`", plus its evidence tree.
struct Field {
  std::string name;
  Interval claimed;
  NodePtr evidence;
};

struct BoundCertificate {
  int schema_version = 1;
  std::map<std::string, std::string> config;  // echo of the producing config
  std::string digest;                         // "sha256:<hex>" over canonical bytes
  std::vector<Field> fields;                  // declaration order = dependency order

  const Field* find(std::string_view name) const;
};

// Canonical, deterministic text encoding. Two serializations of the
// same certificate are byte-identical.
std::string serialize(const BoundCertificate& cert);
BoundCertificate deserialize(std::string_view text);  // throws ParseError

// Digest over the canonical bytes with the digest line excluded.
std::string compute_digest(const BoundCertificate& cert);
void seal(BoundCertificate& cert);  // sets cert.digest

}  // namespace pgc::cert
