#include "bpj/report_io.hpp"

#include <sstream>

namespace bpj {

using nlohmann::json;

json mat2_to_json(const Mat2& m) {
  return json{{"e11", m.e11.str()}, {"e12", m.e12.str()}, {"e21", m.e21.str()}, {"e22", m.e22.str()}};
}

Mat2 mat2_from_json(const json& j) {
  auto field = [&](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
      throw ParseError(std::string("matrix object lacks string field '") + key + "'");
    }
    return Rational::parse(j.at(key).get<std::string>());
  };
  return {field("e11"), field("e12"), field("e21"), field("e22")};
}

namespace {

json residual_to_json(const Residual& r) {
  struct Visitor {
    json operator()(const Rational& v) const { return v.str(); }
    json operator()(const Mat2& m) const { return mat2_to_json(m); }
    json operator()(const QuadNum& q) const {
      return json{{"rat", q.rat().str()}, {"coeff", q.coeff().str()}, {"disc", q.disc().str()}};
    }
  };
  return std::visit(Visitor{}, r);
}

std::array<std::string, 4> residual_cells(const std::optional<Residual>& r) {
  if (!r) return {};
  struct Visitor {
    std::array<std::string, 4> operator()(const Rational& v) const { return {v.str(), "", "", ""}; }
    std::array<std::string, 4> operator()(const Mat2& m) const {
      return {m.e11.str(), m.e12.str(), m.e21.str(), m.e22.str()};
    }
    std::array<std::string, 4> operator()(const QuadNum& q) const {
      return {q.rat().str(), q.coeff().str(), q.disc().str(), ""};
    }
  };
  return std::visit(Visitor{}, *r);
}

}  // namespace

json report_to_json(const IdentityReport& r) {
  json j;
  j["identity"] = std::string(identity_name(r.identity));
  j["a"] = r.params.a().str();
  j["b"] = r.params.b().str();
  if (r.x) j["x"] = r.x->str();
  j["n_max"] = r.range.hi;
  j["status"] = std::string(status_name(r.status));
  if (r.first_failure) j["first_failure"] = *r.first_failure;
  if (r.residual) j["residual"] = residual_to_json(*r.residual);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

std::string report_to_csv(const IdentityReport& r) {
  std::ostringstream os;
  os << identity_name(r.identity) << ',' << r.params.a() << ',' << r.params.b() << ',' << (r.x ? r.x->str() : "")
     << ',' << r.range.hi << ',' << status_name(r.status) << ','
     << (r.first_failure ? std::to_string(*r.first_failure) : "");
  for (const auto& cell : residual_cells(r.residual)) os << ',' << cell;
  return os.str();
}

std::string report_to_plain(const IdentityReport& r) {
  std::ostringstream os;
  os << identity_name(r.identity) << " a=" << r.params.a() << " b=" << r.params.b();
  if (r.x) os << " x=" << *r.x;
  os << " n=" << r.range.lo << ".." << r.range.hi << ' ' << status_name(r.status);
  if (r.status == Status::Fail) {
    os << " at " << *r.first_failure << " residual=" << residual_str(*r.residual);
    if (is_known_erratum(r)) os << " (known erratum)";
  }
  if (!r.reason.empty()) os << " (" << r.reason << ')';
  return os.str();
}

}  // namespace bpj
