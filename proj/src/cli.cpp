#include "bv/cli.hpp"

#include <exception>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bv/json_io.hpp"
#include "bv/packets.hpp"
#include "bv/parameters.hpp"
#include "bv/spectral.hpp"
#include "bv/symbols.hpp"

namespace bv {

NilpotentOrbit classify_relaxed(Family f, const Partition& p, VeryEvenLabel label);

namespace {

std::string gaussian_tuple(const std::vector<Gaussian>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

std::string sign_tuple(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string summand_str(const Summand& s) {
  if (s.chi.is_trivial()) return "Triv x R_" + std::to_string(s.dim);
  return "chi_{" + s.chi.a.str() + "," + s.chi.b.str() + "} x R_" +
         std::to_string(s.dim);
}

std::string summands_str(const std::vector<Summand>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " + ";
    s += summand_str(v[i]);
  }
  return s;
}

std::vector<long long> parse_sizes(const std::string& s) {
  std::vector<long long> sizes;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad size entry: " + tok);
    }
    if (used != tok.size() || v <= 0)
      throw std::invalid_argument("bad size entry: " + tok);
    sizes.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return sizes;
}

CollapseFamily parse_collapse_family(const std::string& s) {
  if (s == "B") return CollapseFamily::B;
  if (s == "C") return CollapseFamily::C;
  if (s == "D") return CollapseFamily::D;
  throw std::invalid_argument("unknown collapse family: " + s);
}

// Case whose dual side carries this family; used to test speciality of
// enumerated orbits.
GroupCase case_of_family(Family f) {
  switch (f) {
    case Family::Sp: return GroupCase::Bn;
    case Family::SoOdd: return GroupCase::Cn;
    case Family::SoEven: return GroupCase::Dn;
  }
  throw std::logic_error("bad family");
}

struct Emitter {
  std::ostream& out;
  bool json = false;
  bool quiet = false;

  void text(const std::string& t) const {
    if (!quiet && !json) out << t;
  }
  void object(const Json& j) const {
    if (!quiet && json) out << j.dump(2) << "\n";
  }
};

std::string group_header(GroupCase gc, long long rank) {
  return "group: " + case_name(gc) + " (rank " + std::to_string(rank) + ")\n";
}

void emit_orbit(const Emitter& em, const NilpotentOrbit& o) {
  em.text(orbit_str(o) + "\n");
  em.object(to_json(o));
}

int run_symbol(const Emitter& em, GroupCase gc, const Partition& part) {
  NilpotentOrbit o = classify_relaxed(dual_side_family(gc), part,
                                      VeryEvenLabel::None);
  SymbolDetail d = symbol_detail_of(o, gc);
  PairStructure ps = pair_structure(d);

  std::string t;
  t += "case: " + case_name(gc) + "\n";
  t += "partition: " + partition_str(part) + "\n";
  t += "symbol: " + symbol_str(d.symbol) + "\n";
  t += "pairs:";
  for (const SymbolPair& p : ps.pairs)
    t += " (" + std::to_string(p.low) + "," + std::to_string(p.high) + ")";
  t += "\n";
  t += "unpaired:";
  for (long long x : ps.unpaired) t += " " + std::to_string(x);
  t += "\n";
  t += "m: " + std::to_string(ps.m) + "\n";
  t += "abar rank: " + std::to_string(ps.m) + "\n";
  if (gc == GroupCase::Mpn)
    t += "abar_mp rank: " + std::to_string(abar_mp_rank(part)) + "\n";
  em.text(t);

  Json j = to_json(d.symbol);
  j["case"] = case_name(gc);
  j["partition"] = to_json(part);
  Json pj = to_json(ps);
  j["pairs"] = pj["pairs"];
  j["unpaired"] = pj["unpaired"];
  j["m"] = ps.m;
  j["abar_rank"] = ps.m;
  if (gc == GroupCase::Mpn) j["abar_mp_rank"] = abar_mp_rank(part);
  em.object(j);
  return 0;
}

int run_packet(const Emitter& em, GroupCase gc, const Partition& part) {
  NilpotentOrbit o = classify_relaxed(dual_side_family(gc), part,
                                      VeryEvenLabel::None);
  Packet pk = bv_packet(o, gc);

  std::string t = group_header(gc, rank_of_dual_ambient(gc, partition_sum(part)));
  t += "orbit: " + orbit_str(o) + "\n";
  t += "m: " + std::to_string(pk.m) + "\n";
  if (gc == GroupCase::Mpn)
    t += std::string("mp: ") + (pk.mp_coordinate ? "true" : "false") + "\n";
  t += "members: " + std::to_string(pk.members.size()) + "\n";
  for (const PacketMember& m : pk.members)
    t += "eps " + sign_tuple(m.eps) + ": " + param_str(m.param) + "\n";
  em.text(t);
  em.object(to_json(pk));
  return 0;
}

int run_psi_packet(const Emitter& em, const ArthurParameter& psi) {
  ArthurPacket pk = arthur_packet(psi);
  std::string t = group_header(psi.group.group_case, psi.group.rank);
  t += "members: " + std::to_string(pk.members.size()) + "\n";
  for (const ArthurPacketMember& m : pk.members)
    t += "eta " + sign_tuple(m.eta) + ": " + param_str(m.param) + "\n";
  em.text(t);
  em.object(to_json(pk));
  return 0;
}

int run_psi_validate(const Emitter& em, const ArthurParameter& psi) {
  ValidationReport r = validate(psi);
  std::string t;
  if (r.ok()) {
    t = r.almost_unitary ? "ok (almost unitary)\n" : "ok\n";
  } else {
    for (const Violation& v : r.violations) t += v.code + ": " + v.message + "\n";
  }
  em.text(t);
  Json j;
  j["ok"] = r.ok();
  j["almost_unitary"] = r.almost_unitary;
  Json vs = Json::array();
  for (const Violation& v : r.violations) {
    Json e;
    e["code"] = v.code;
    e["message"] = v.message;
    vs.push_back(e);
  }
  j["violations"] = vs;
  em.object(j);
  return r.ok() ? 0 : 2;
}

int run_psi_sp(const Emitter& em, const ArthurParameter& psi) {
  SpAnalysis sp = sp_analysis(psi);
  std::string t;
  t += "psi_bp: " + summands_str(sp.psi_bp) + "\n";
  t += "exchangeable:";
  for (long long a : sp.exchangeable) t += " " + std::to_string(a);
  t += "\n";
  t += "u0: " + orbit_str(sp.u0) + "\n";
  t += "u_sp: " + orbit_str(sp.u_sp) + "\n";
  t += "psi_sp: " + summands_str(sp.psi_sp.summands) + "\n";
  em.text(t);
  Json j;
  j["input"] = to_json(psi);
  Json a = to_json(sp);
  for (auto& [k, v] : a.items()) j[k] = v;
  em.object(j);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact combinatorics of Arthur packets for complex classical groups"};
  app.name("bvtool");
  app.fallthrough();
  app.require_subcommand(1);

  bool json = false;
  bool quiet = false;
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_flag("--quiet", quiet, "suppress normal output");

  std::string partition_s, family_s, case_s, sizes_s, file_s, file2_s;
  long long ambient = 0;
  bool special_only = false;

  CLI::App* cmd_partition = app.add_subcommand("partition", "partition arithmetic");
  cmd_partition->require_subcommand(1);
  CLI::App* p_transpose = cmd_partition->add_subcommand("transpose", "transpose");
  p_transpose->add_option("--partition", partition_s, "decreasing parts a,b,c")
      ->required();
  CLI::App* p_collapse =
      cmd_partition->add_subcommand("collapse", "parity class collapse");
  p_collapse->add_option("--partition", partition_s, "decreasing parts a,b,c")
      ->required();
  p_collapse->add_option("--family", family_s, "B, C or D")->required();

  CLI::App* cmd_orbit = app.add_subcommand("orbit", "nilpotent orbit maps");
  cmd_orbit->require_subcommand(1);
  CLI::App* o_dual = cmd_orbit->add_subcommand("dual", "duality map");
  CLI::App* o_special = cmd_orbit->add_subcommand("special", "special closure");
  CLI::App* o_antispecial =
      cmd_orbit->add_subcommand("antispecial", "antispecial closure");
  CLI::App* o_induce = cmd_orbit->add_subcommand("induce", "orbit induction");
  for (CLI::App* sub : {o_dual, o_special, o_antispecial, o_induce}) {
    sub->add_option("--case", case_s, "Cn, Bn, Dn or Mpn")->required();
    sub->add_option("--partition", partition_s, "decreasing parts a,b,c")
        ->required();
  }
  o_induce->add_option("--sizes", sizes_s, "gl block sizes a,b,c")->required();
  CLI::App* o_enumerate =
      cmd_orbit->add_subcommand("enumerate", "list orbits of an ambient");
  o_enumerate->add_option("--family", family_s, "Sp, SoOdd or SoEven")->required();
  o_enumerate->add_option("--ambient", ambient, "ambient dimension")->required();
  o_enumerate->add_flag("--special-only", special_only, "keep special orbits only");

  CLI::App* cmd_symbol = app.add_subcommand("symbol", "symbol of an orbit");
  cmd_symbol->add_option("--case", case_s, "Cn, Bn, Dn or Mpn")->required();
  cmd_symbol->add_option("--partition", partition_s, "decreasing parts a,b,c")
      ->required();

  CLI::App* cmd_packet = app.add_subcommand("packet", "packet of an orbit");
  cmd_packet->add_option("--case", case_s, "Cn, Bn, Dn or Mpn")->required();
  cmd_packet->add_option("--partition", partition_s, "decreasing parts a,b,c")
      ->required();

  CLI::App* cmd_psi = app.add_subcommand("psi", "parameter operations");
  cmd_psi->require_subcommand(1);
  CLI::App* s_validate = cmd_psi->add_subcommand("validate", "structural checks");
  CLI::App* s_infchar =
      cmd_psi->add_subcommand("infchar", "infinitesimal character");
  CLI::App* s_packet = cmd_psi->add_subcommand("packet", "packet of a parameter");
  CLI::App* s_wavefront = cmd_psi->add_subcommand("wavefront", "wavefront orbit");
  CLI::App* s_sp = cmd_psi->add_subcommand("sp", "special shape analysis");
  CLI::App* s_intersect =
      cmd_psi->add_subcommand("intersect", "packet intersection test");
  for (CLI::App* sub :
       {s_validate, s_infchar, s_packet, s_wavefront, s_sp, s_intersect}) {
    sub->add_option("--file", file_s, "parameter json file")->required();
  }
  s_intersect->add_option("--file2", file2_s, "second parameter json file")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return 1;
  }

  Partition part;
  std::vector<long long> sizes;
  GroupCase gc = GroupCase::Cn;
  try {
    if (!partition_s.empty()) part = parse_partition(partition_s);
    if (!sizes_s.empty()) sizes = parse_sizes(sizes_s);
    if (!case_s.empty()) gc = parse_case(case_s);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return 1;
  }

  Emitter em{out, json, quiet};
  try {
    if (*p_transpose) {
      Partition t = transpose(part);
      em.text(partition_str(t) + "\n");
      em.object(to_json(t));
      return 0;
    }
    if (*p_collapse) {
      Partition c = collapse(part, parse_collapse_family(family_s));
      em.text(partition_str(c) + "\n");
      em.object(to_json(c));
      return 0;
    }
    if (*o_dual) {
      NilpotentOrbit o = classify_relaxed(group_side_family(gc), part,
                                          VeryEvenLabel::None);
      emit_orbit(em, ls_dual(o, gc));
      return 0;
    }
    if (*o_special) {
      NilpotentOrbit o = classify_relaxed(dual_side_family(gc), part,
                                          VeryEvenLabel::None);
      emit_orbit(em, special_closure(o, gc));
      return 0;
    }
    if (*o_antispecial) {
      NilpotentOrbit o = classify_relaxed(dual_side_family(gc), part,
                                          VeryEvenLabel::None);
      if (o.family != Family::Sp)
        throw std::invalid_argument("antispecial closure needs a symplectic orbit");
      emit_orbit(em, special_closure(o, GroupCase::Mpn));
      return 0;
    }
    if (*o_induce) {
      NilpotentOrbit o = classify_relaxed(group_side_family(gc), part,
                                          VeryEvenLabel::None);
      emit_orbit(em, induce_orbit(o, sizes));
      return 0;
    }
    if (*o_enumerate) {
      Family f = parse_family(family_s);
      GroupCase fc = case_of_family(f);
      std::string t;
      Json arr = Json::array();
      for (const NilpotentOrbit& o : enumerate_orbits(f, ambient)) {
        if (special_only && !is_special(o, fc)) continue;
        t += orbit_str(o) + "\n";
        arr.push_back(to_json(o));
      }
      em.text(t);
      em.object(arr);
      return 0;
    }
    if (*cmd_symbol) return run_symbol(em, gc, part);
    if (*cmd_packet) return run_packet(em, gc, part);

    ArthurParameter psi = load_parameter(file_s);
    if (*s_validate) return run_psi_validate(em, psi);
    if (*s_infchar) {
      require_valid(psi, false);
      InfChar ic = infinitesimal_character(psi);
      em.text("lambda: " + gaussian_tuple(ic.lambda) + "\nmu: " +
              gaussian_tuple(ic.mu) + "\n");
      em.object(to_json(ic));
      return 0;
    }
    if (*s_packet) return run_psi_packet(em, psi);
    if (*s_wavefront) {
      emit_orbit(em, wavefront(psi));
      return 0;
    }
    if (*s_sp) return run_psi_sp(em, psi);
    if (*s_intersect) {
      ArthurParameter psi2 = load_parameter(file2_s);
      bool same = same_sp_class(psi, psi2);
      em.text(same ? "true\n" : "false\n");
      Json j;
      j["same_sp_class"] = same;
      em.object(j);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 1;
}

}  // namespace bv
