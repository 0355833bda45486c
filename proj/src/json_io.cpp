#include "symq/json_io.hpp"

#include <fstream>
#include <sstream>

#include "symq/errors.hpp"
#include "symq/symmetric.hpp"

namespace symq {

namespace {

std::string axiom_message(const AxiomViolation& v) {
  std::ostringstream os;
  switch (v.axiom) {
    case 1:
      os << "axiom 1 (idempotence) fails at x=" << v.witness[0];
      break;
    case 2:
      os << "axiom 2 (right invertibility) fails at column y=" << v.witness[1];
      break;
    default:
      os << "axiom 3 (self-distributivity) fails at (" << v.witness[0] << ", "
         << v.witness[1] << ", " << v.witness[2] << ")";
  }
  return os.str();
}

void require_keys(const Json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  for (const char* k : keys)
    if (!j.contains(k))
      throw FormatError(std::string("missing key \"") + k + "\"");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw FormatError("unexpected key \"" + key + "\"");
  }
}

int int_in_range(const Json& j, int lo, int hi, const std::string& what) {
  if (!j.is_number_integer())
    throw FormatError(what + " must be an integer");
  const long long v = j.get<long long>();
  if (v < lo || v > hi)
    throw FormatError(what + " out of range: " + std::to_string(v));
  return static_cast<int>(v);
}

}  // namespace

QuandleTable quandle_from_json(const Json& j) {
  require_keys(j, {"size", "table"});
  const int n = int_in_range(j["size"], 1, 1 << 20, "\"size\"");
  if (!j["table"].is_array() || static_cast<int>(j["table"].size()) != n)
    throw FormatError("\"table\" must be an array of " + std::to_string(n) +
                      " rows");
  QuandleTable q;
  q.table.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const Json& row = j["table"][x];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw FormatError("row " + std::to_string(x) + " must have " +
                        std::to_string(n) + " entries");
    for (int y = 0; y < n; ++y)
      q.table[x][y] = int_in_range(row[y], 0, n - 1,
                                   "entry (" + std::to_string(x) + ", " +
                                       std::to_string(y) + ")");
  }
  const QuandleValidation v = validate_quandle(q);
  if (!v.ok()) throw AxiomError(axiom_message(v.violations.front()));
  return q;
}

Json quandle_to_json(const QuandleTable& q) {
  Json j;
  j["size"] = q.size();
  j["table"] = q.table;
  return j;
}

Permutation involution_from_json(const Json& j, const QuandleTable& q) {
  require_keys(j, {"rho"});
  const int n = q.size();
  if (!j["rho"].is_array() || static_cast<int>(j["rho"].size()) != n)
    throw FormatError("\"rho\" must be an array of " + std::to_string(n) +
                      " images");
  std::vector<int> imgs(n);
  for (int i = 0; i < n; ++i)
    imgs[i] =
        int_in_range(j["rho"][i], 0, n - 1, "rho[" + std::to_string(i) + "]");
  if (!Permutation::is_bijection(imgs))
    throw FormatError("\"rho\" is not a bijection");
  Permutation rho(std::move(imgs));
  if (const auto violation = check_good_involution(q, rho)) {
    std::ostringstream os;
    switch (violation->kind) {
      case InvolutionViolation::Kind::NotInvolution:
        os << "rho is not an involution at x=" << violation->x;
        break;
      case InvolutionViolation::Kind::Axiom1:
        os << "rho(x*y) != rho(x)*y at (" << violation->x << ", "
           << violation->y << ")";
        break;
      case InvolutionViolation::Kind::Axiom2:
        os << "x*rho(y) != S_y^-1(x) at (" << violation->x << ", "
           << violation->y << ")";
    }
    throw InvolutionError(os.str());
  }
  return rho;
}

Json involution_to_json(const Permutation& rho) {
  Json j;
  j["rho"] = rho.images;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Json parse_json(const std::string& text, const std::string& path) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw FormatError("invalid JSON in " + path);
  return j;
}

}  // namespace

QuandleTable load_quandle_file(const std::string& path) {
  return quandle_from_json(parse_json(read_file(path), path));
}

Permutation load_involution_file(const std::string& path,
                                 const QuandleTable& q) {
  return involution_from_json(parse_json(read_file(path), path), q);
}

Json to_json(const AbelianInvariants& inv) {
  Json j;
  j["torsion"] = inv.torsion;
  j["free_rank"] = inv.free_rank;
  return j;
}

}  // namespace symq
