#include <doctest.h>

#include "pgc/decimal.hpp"
#include "pgc/eval.hpp"
#include "pgc/pipeline.hpp"
#include "pgc/sha256.hpp"
#include "pgc/verify.hpp"
#include "support.hpp"

using namespace pgc;
using testsupport::Rng;

namespace {

const ConstantReport& report() {
  static const ConstantReport r = compute_all();
  return r;
}

}  // namespace

TEST_CASE("sha256 matches the reference vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
  // Padding boundary cases.
  CHECK(sha256_hex(std::string(55, 'a')) ==
        "9f4390f8d30c2dd92ec9f095b65e2b9ae9b0a925a5258e241c9f1e910f734318");
  CHECK(sha256_hex(std::string(56, 'a')) ==
        "b35439a4ac6f0948b6d6f9e3c6af0f5f590ce20f1bde7090ef7970686ec6738a");
}

TEST_CASE("serialization is deterministic and round-trips") {
  std::string first = cert::serialize(report().certificate);
  std::string second = cert::serialize(report().certificate);
  CHECK(first == second);

  cert::BoundCertificate parsed = cert::deserialize(first);
  CHECK(cert::serialize(parsed) == first);
  CHECK(parsed.fields.size() == report().certificate.fields.size());
  CHECK(parsed.digest == report().certificate.digest);
}

TEST_CASE("a degenerate claim renders its rational verbatim") {
  auto [value, node] = eval(FunctionId::h1, Interval(Rational(Int(1), Int(2))));
  cert::BoundCertificate mini;
  mini.config = Config().echo();
  mini.fields.push_back({"t0", value, node});  // name irrelevant for encoding
  cert::seal(mini);
  std::string text = cert::serialize(mini);
  CHECK(text.find("8/5") != std::string::npos);
}

TEST_CASE("the pipeline certificate replays") {
  VerifyResult result = verify(report().certificate);
  CAPTURE(result.path);
  CAPTURE(result.reason);
  CHECK(result.accepted);

  // And through the text round trip.
  VerifyResult again = verify_text(cert::serialize(report().certificate));
  CHECK(again.accepted);
}

TEST_CASE("byte tampering is caught by the digest") {
  // A tampered degree keeps the file parseable, so the digest is what
  // rejects it.
  std::string text = cert::serialize(report().certificate);
  std::size_t pos = text.find("degree=");
  REQUIRE(pos != std::string::npos);
  std::size_t digit = pos + 7;
  text[digit] = text[digit] == '9' ? '8' : '9';
  VerifyResult result = verify_text(text);
  CHECK(!result.accepted);
  CHECK(result.path == "meta/digest");

  // A tampered numerator digit may instead break rational canonicality;
  // either way the certificate is rejected.
  std::string text2 = cert::serialize(report().certificate);
  std::size_t pos2 = text2.find("result=[");
  std::size_t digit2 = text2.find_first_of("123456789", pos2);
  text2[digit2] = text2[digit2] == '9' ? '8' : '9';
  VerifyResult result2 = verify_text(text2);
  CHECK(!result2.accepted);
  CHECK((result2.path == "meta/digest" || result2.path == "meta/parse"));
}

TEST_CASE("malformed certificates are rejected with parse diagnostics") {
  CHECK(!verify_text("").accepted);
  CHECK(!verify_text("garbage\n").accepted);
  CHECK(verify_text("pgc-certificate v1\n").path == "meta/parse");
  CHECK(!verify_text("pgc-certificate v2\ndigest sha256:00\n").accepted);
}

TEST_CASE("a claim not implied by its evidence is rejected at that node") {
  cert::BoundCertificate narrowed = cert::deserialize(cert::serialize(report().certificate));
  for (cert::Field& field : narrowed.fields) {
    if (field.name == "nu") {
      field.claimed = Interval(parse_decimal("0.03"), parse_decimal("0.031"));
    }
  }
  cert::seal(narrowed);
  VerifyResult result = verify(narrowed);
  CHECK(!result.accepted);
  CHECK(result.path == "nu");
}

TEST_CASE("semantic mutations with a fresh digest are rejected by replay") {
  // Flip one digit of one numeric token inside a node line, re-seal,
  // and expect the replay to fail. 100 deterministic mutations.
  const std::string text = cert::serialize(report().certificate);
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      lines.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  // Candidate positions: digits inside attribute values of node lines.
  struct Target {
    std::size_t line;
    std::size_t column;
  };
  std::vector<Target> targets;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.rfind("pgc-certificate", 0) == 0 || line.rfind("config ", 0) == 0 ||
        line.rfind("digest ", 0) == 0)
      continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    for (std::size_t col = eq; col < line.size(); ++col)
      if (line[col] >= '0' && line[col] <= '9') targets.push_back({i, col});
  }
  REQUIRE(targets.size() > 1000);

  Rng rng(67);
  int rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Target target = targets[static_cast<std::size_t>(
        rng.integer(0, static_cast<long long>(targets.size()) - 1))];
    std::vector<std::string> mutated = lines;
    char& c = mutated[target.line][target.column];
    c = c == '9' ? '1' : c + 1;

    std::string joined;
    for (const std::string& line : mutated) {
      joined += line;
      joined += '\n';
    }
    cert::BoundCertificate parsed;
    try {
      parsed = cert::deserialize(joined);
    } catch (const ParseError&) {
      ++rejected;  // non-canonical rational or malformed structure
      continue;
    }
    cert::seal(parsed);
    if (!verify(parsed).accepted) ++rejected;
  }
  CHECK(rejected == 100);
}

TEST_CASE("verify and show agree on the claimed intervals") {
  const cert::BoundCertificate& certificate = report().certificate;
  const cert::Field* rho = certificate.find("rho");
  REQUIRE(rho != nullptr);
  DecimalBounds bounds = outward_round(rho->claimed, 11);
  CHECK(parse_decimal(bounds.lo) <= rho->claimed.lo());
  CHECK(parse_decimal(bounds.hi) >= rho->claimed.hi());
}
