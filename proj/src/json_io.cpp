#include "bv/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace bv {

namespace {

Json int_array(const std::vector<long long>& v) {
  Json a = Json::array();
  for (long long x : v) a.push_back(x);
  return a;
}

Json sign_array(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Json gaussian_array(const std::vector<Gaussian>& v) {
  Json a = Json::array();
  for (const Gaussian& g : v) a.push_back(g.str());
  return a;
}

std::string kind_name(WeylKind k) {
  switch (k) {
    case WeylKind::GL: return "GL";
    case WeylKind::BC: return "BC";
    case WeylKind::D: return "D";
  }
  throw std::logic_error("bad kind");
}

Json summand_json(const Summand& s) {
  Json j;
  j["a"] = s.chi.a.str();
  j["b"] = s.chi.b.str();
  j["dim"] = s.dim;
  return j;
}

Gaussian gaussian_from_json(const Json& j) {
  if (j.is_string()) return Gaussian::parse(j.get<std::string>());
  if (j.is_number_integer()) return Gaussian(j.get<long long>());
  throw std::invalid_argument("expected a rational string or an integer");
}

}  // namespace

Json to_json(const Partition& p) { return int_array(p); }

Json to_json(const NilpotentOrbit& o) {
  Json j;
  j["family"] = family_name(o.family);
  j["partition"] = to_json(o.partition);
  if (o.label != VeryEvenLabel::None) j["label"] = label_name(o.label);
  return j;
}

Json to_json(const Symbol& s) {
  Json j;
  j["top"] = int_array(s.top);
  j["bottom"] = int_array(s.bottom);
  return j;
}

Json to_json(const PairStructure& ps) {
  Json j;
  Json pairs = Json::array();
  for (const SymbolPair& p : ps.pairs) pairs.push_back(Json::array({p.low, p.high}));
  j["pairs"] = pairs;
  j["unpaired"] = int_array(ps.unpaired);
  j["m"] = ps.m;
  return j;
}

Json to_json(const InfChar& ic) {
  Json j;
  j["lambda"] = gaussian_array(ic.lambda);
  j["mu"] = gaussian_array(ic.mu);
  return j;
}

Json to_json(const LanglandsParam& p) {
  Json j;
  j["kind"] = kind_name(p.kind);
  if (p.zero) {
    j["zero"] = true;
    return j;
  }
  j["lambda"] = gaussian_array(p.lambda);
  j["mu"] = gaussian_array(p.mu);
  if (p.kind == WeylKind::D) j["negative"] = p.d_flip_parity;
  return j;
}

Json to_json(const ArthurParameter& psi) {
  Json j;
  Json g;
  g["family"] = case_name(psi.group.group_case);
  g["rank"] = psi.group.rank;
  j["group"] = g;
  Json s = Json::array();
  for (const Summand& x : psi.summands) s.push_back(summand_json(x));
  j["summands"] = s;
  return j;
}

Json to_json(const Packet& pk) {
  Json j;
  j["orbit"] = to_json(pk.orbit.partition);
  j["group"] = case_name(pk.group_case);
  j["m"] = pk.m;
  if (pk.group_case == GroupCase::Mpn) j["mp"] = pk.mp_coordinate;
  Json ms = Json::array();
  for (const PacketMember& m : pk.members) {
    Json e;
    e["eps"] = sign_array(m.eps);
    e["lambda"] = gaussian_array(m.param.lambda);
    e["mu"] = gaussian_array(m.param.mu);
    if (m.param.kind == WeylKind::D) e["negative"] = m.param.d_flip_parity;
    ms.push_back(e);
  }
  j["members"] = ms;
  return j;
}

Json to_json(const ArthurPacket& pk) {
  Json j;
  j["psi"] = to_json(pk.psi);
  Json ms = Json::array();
  for (const ArthurPacketMember& m : pk.members) {
    Json e;
    e["eta"] = sign_array(m.eta);
    e["param"] = to_json(m.param);
    ms.push_back(e);
  }
  j["members"] = ms;
  return j;
}

Json to_json(const SpAnalysis& sp) {
  Json j;
  Json bp = Json::array();
  for (const Summand& s : sp.psi_bp) bp.push_back(summand_json(s));
  j["psi_bp"] = bp;
  j["exchangeable"] = int_array(sp.exchangeable);
  j["u0"] = to_json(sp.u0);
  j["u_sp"] = to_json(sp.u_sp);
  j["psi_sp"] = to_json(sp.psi_sp);
  return j;
}

ArthurParameter parameter_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("summands"))
    throw std::invalid_argument("parameter json needs group and summands");
  const Json& g = j.at("group");
  ArthurParameter psi;
  psi.group.group_case = parse_case(g.at("family").get<std::string>());
  psi.group.rank = g.at("rank").get<long long>();
  for (const Json& s : j.at("summands")) {
    Summand x;
    x.chi.a = gaussian_from_json(s.at("a"));
    x.chi.b = gaussian_from_json(s.at("b"));
    x.dim = s.at("dim").get<long long>();
    psi.summands.push_back(x);
  }
  return psi;
}

ArthurParameter load_parameter(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open parameter file: " + path);
  Json j = Json::parse(in);
  return parameter_from_json(j);
}

}  // namespace bv
