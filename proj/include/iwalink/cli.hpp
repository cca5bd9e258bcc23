#pragma once
// Command-line front end. Subcommands:
//   invariants   lambda/mu/nu of a cover tower
//   orders       per-level homology orders
//   family       list catalog families or materialize one
//   torres       Torres conditions for a 2-variable polynomial
//   pseudonull   pseudonullity verdict from a structured factorization
//   bezout       the certificate behind the bezout family
//   repro        small battery of canonical computations
// Exit codes: 0 success, 1 domain failure, 2 usage problem.

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "iwalink/catalog.hpp"
#include "iwalink/covers.hpp"
#include "iwalink/errors.hpp"
#include "iwalink/greenberg.hpp"
#include "iwalink/laurent.hpp"
#include "iwalink/parse.hpp"

namespace iwalink {

namespace cli_detail {

using nlohmann::json;

struct usage_failure {
  std::string msg;
};

struct Options {
  std::string delta_expr;
  std::string family;
  std::string knot_polys;
  std::vector<long> z;
  long p = 2;
  long nmax = 4;
  long m = 1, a = 1, b = 1, ell = 1, s = 0, r = 2, q = 2;
  std::string l12;
  int threads = 0;
  bool json_out = false;
};

inline void add_family_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--m", o.m, "family parameter m");
  cmd->add_option("--a", o.a, "family parameter a");
  cmd->add_option("--b", o.b, "family parameter b");
  cmd->add_option("--ell", o.ell, "family parameter ell");
  cmd->add_option("--s", o.s, "family parameter s");
  cmd->add_option("--r", o.r, "number of components (hosokawa)");
  cmd->add_option("--q", o.q, "family prime (hosokawa)");
}

inline void add_input_options(CLI::App* cmd, Options& o, bool with_tower) {
  cmd->add_option("--delta", o.delta_expr, "multivariate Alexander polynomial");
  cmd->add_option("--family", o.family, "catalog family name");
  add_family_params(cmd, o);
  cmd->add_option("--z", o.z, "direction vector, comma separated")->delimiter(',');
  if (with_tower) {
    cmd->add_option("--p", o.p, "prime of the tower");
    cmd->add_option("--knot-polys", o.knot_polys,
                    "semicolon-separated component polynomials in t");
    cmd->add_option("--threads", o.threads, "worker threads (0 = auto)");
  }
  cmd->add_flag("--json", o.json_out, "emit JSON");
}

inline Int parse_int_string(const std::string& s, const char* what) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw usage_failure{std::string("invalid integer for ") + what + ": '" + s + "'"};
  }
}

inline LinkFamily resolve_family(const Options& o) {
  if (o.family == "figure1") return figure1_link(o.m);
  if (o.family == "conway") return conway_two_bridge(o.a, o.b);
  if (o.family == "c4") return c4_link();
  if (o.family == "hosokawa") return hosokawa_link(o.r, o.ell, o.m, o.q);
  if (o.family == "bailey") return bailey_even_family(o.ell, o.m);
  if (o.family == "bezout") return bezout_family(o.m, o.s);
  throw usage_failure{"unknown family '" + o.family + "'"};
}

struct ResolvedInput {
  std::optional<CoverSpec> spec;          // polynomial-backed towers
  std::optional<UnitNormalForm> reduced;  // families given by their reduced polynomial
  long p = 2;
};

inline ResolvedInput resolve_input(const Options& o) {
  if (o.delta_expr.empty() == o.family.empty())
    throw usage_failure{"exactly one of --delta or --family is required"};
  ResolvedInput in;
  in.p = o.p;
  if (!o.delta_expr.empty()) {
    if (o.z.empty()) throw usage_failure{"--delta needs --z to fix the number of variables"};
    CoverSpec spec;
    spec.delta = parse_poly(o.delta_expr, static_cast<int>(o.z.size()));
    spec.z = o.z;
    spec.p = o.p;
    if (!o.knot_polys.empty()) spec.component_knot_polys = parse_knot_polys(o.knot_polys);
    in.spec = std::move(spec);
    return in;
  }
  LinkFamily fam = resolve_family(o);
  std::vector<long> z = o.z.empty() ? fam.recommended_z : o.z;
  if (fam.delta) {
    CoverSpec spec;
    spec.delta = *fam.delta;
    spec.z = z;
    spec.p = o.p;
    if (!o.knot_polys.empty()) spec.component_knot_polys = parse_knot_polys(o.knot_polys);
    in.spec = std::move(spec);
    return in;
  }
  if (z != fam.recommended_z)
    throw error(errc::unsupported,
                "family '" + fam.name + "' only supports the direction (1, ..., 1)");
  in.reduced = *fam.reduced;
  return in;
}

inline std::string unf_to_string(const UnitNormalForm& u) {
  if (u.is_zero()) return "0";
  std::string body = u.poly.to_string();
  std::string out;
  if (u.sign < 0) out += "-";
  if (u.shift != 0) {
    out += "t^" + std::to_string(u.shift) + "*(" + body + ")";
  } else if (u.sign < 0) {
    out += "(" + body + ")";
  } else {
    out += body;
  }
  return out;
}

inline UnitNormalForm input_reduced(const ResolvedInput& in) {
  return in.spec ? reduced_polynomial(*in.spec) : *in.reduced;
}

inline int cmd_invariants(const Options& o, std::ostream& out) {
  ResolvedInput in = resolve_input(o);
  IwasawaInvariants inv = in.spec
                              ? iwasawa_invariants(*in.spec, o.threads)
                              : invariants_from_reduced(*in.reduced, in.p,
                                                        std::vector<Int>{Int(1)}, o.threads);
  UnitNormalForm red = input_reduced(in);
  if (o.json_out) {
    json j;
    j["lambda"] = inv.lambda;
    j["mu"] = inv.mu;
    j["nu"] = inv.nu ? json(*inv.nu) : json(nullptr);
    j["n0"] = inv.n0;
    j["v"] = inv.v;
    j["vanishing"] = inv.vanishing_levels;
    j["reduced_poly"] = unf_to_string(red);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "reduced polynomial: " << unf_to_string(red) << "\n";
  out << "lambda = " << inv.lambda << "\n";
  out << "mu = " << inv.mu << "\n";
  if (inv.nu) {
    out << "nu = " << *inv.nu << " (valid for n >= " << inv.n0 << ")\n";
  } else {
    out << "nu undefined: homology is infinite at levels";
    for (long n : inv.vanishing_levels) out << " " << n;
    out << "\n";
  }
  out << "v = " << inv.v << "\n";
  return 0;
}

inline int cmd_orders(const Options& o, std::ostream& out) {
  if (o.nmax < 0) throw usage_failure{"--nmax must be >= 0"};
  ResolvedInput in = resolve_input(o);
  GrowthTable table = in.spec ? homology_orders(*in.spec, o.nmax, o.threads)
                              : orders_from_reduced(*in.reduced, in.p, o.nmax,
                                                    std::vector<Int>{Int(1)}, o.threads);
  if (o.json_out) {
    json rows = json::array();
    for (const GrowthRow& row : table) {
      json r;
      r["n"] = row.n;
      r["order"] = row.order.get_str();
      r["e"] = row.e ? json(*row.e) : json(nullptr);
      rows.push_back(std::move(r));
    }
    json j;
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "n\torder\te\n";
  for (const GrowthRow& row : table) {
    out << row.n << "\t" << (row.order == 0 ? std::string("infinite") : row.order.get_str())
        << "\t";
    if (row.e)
      out << *row.e;
    else
      out << "-";
    out << "\n";
  }
  return 0;
}

inline json family_to_json(const LinkFamily& fam) {
  json j;
  j["name"] = fam.name;
  j["delta"] = fam.delta ? json(fam.delta->to_string()) : json(nullptr);
  j["reduced"] = fam.reduced ? json(unf_to_string(*fam.reduced)) : json(nullptr);
  j["recommended_z"] = fam.recommended_z;
  j["linking_number"] = fam.linking_number ? json(fam.linking_number->get_str()) : json(nullptr);
  return j;
}

inline int cmd_family(const Options& o, bool list_only, std::ostream& out) {
  if (list_only) {
    static const std::vector<std::pair<const char*, const char*>> families = {
        {"figure1", "--m M           (M >= 1)"},
        {"conway", "--a A --b B     (A, B nonzero)"},
        {"c4", "                (no parameters)"},
        {"hosokawa", "--r R --ell L --m M --q Q"},
        {"bailey", "--ell L --m M   (L >= 1, M >= 0)"},
        {"bezout", "--m M --s S     (1 <= M <= 16, S >= 0)"},
    };
    if (o.json_out) {
      json arr = json::array();
      for (const auto& [name, params] : families) arr.push_back(name);
      out << arr.dump(2) << "\n";
      return 0;
    }
    for (const auto& [name, params] : families) out << name << "  " << params << "\n";
    return 0;
  }
  if (o.family.empty()) throw usage_failure{"family make needs --family"};
  LinkFamily fam = resolve_family(o);
  if (o.json_out) {
    out << family_to_json(fam).dump(2) << "\n";
    return 0;
  }
  out << "name: " << fam.name << "\n";
  if (fam.delta) out << "delta: " << fam.delta->to_string() << "\n";
  if (fam.reduced) out << "reduced: " << unf_to_string(*fam.reduced) << "\n";
  out << "recommended z:";
  for (long zi : fam.recommended_z) out << " " << zi;
  out << "\n";
  if (fam.linking_number) out << "linking number: " << fam.linking_number->get_str() << "\n";
  return 0;
}

inline int cmd_torres(const Options& o, std::ostream& out) {
  MultiLaurent delta(2);
  Int l12;
  if (!o.delta_expr.empty()) {
    delta = parse_poly(o.delta_expr, 2);
    if (o.l12.empty()) throw usage_failure{"torres needs --l12 with --delta"};
    l12 = parse_int_string(o.l12, "--l12");
  } else if (!o.family.empty()) {
    LinkFamily fam = resolve_family(o);
    if (!fam.delta)
      throw error(errc::unsupported, "family has no multivariate polynomial to check");
    delta = *fam.delta;
    if (!o.l12.empty()) {
      l12 = parse_int_string(o.l12, "--l12");
    } else if (fam.linking_number) {
      l12 = *fam.linking_number;
    } else {
      throw usage_failure{"torres needs --l12 for this family"};
    }
  } else {
    throw usage_failure{"torres needs --delta or --family"};
  }
  TorresReport rep = torres_check(delta, l12);
  if (o.json_out) {
    json j;
    j["pass"] = rep.pass;
    j["reason"] = rep.reason;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << (rep.pass ? "pass" : "fail") << ": " << rep.reason << "\n";
  return 0;
}

inline const char* verdict_name(PseudonullKind k) {
  switch (k) {
    case PseudonullKind::pseudonull_certified: return "pseudonull";
    case PseudonullKind::not_pseudonull_knot: return "not-pseudonull-knot";
    case PseudonullKind::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

inline int cmd_pseudonull(const Options& o, std::ostream& out) {
  MultiLaurent delta(1);
  if (!o.delta_expr.empty()) {
    if (o.z.empty() && o.r <= 0) throw usage_failure{"--delta needs --r or --z"};
    int r = o.z.empty() ? static_cast<int>(o.r) : static_cast<int>(o.z.size());
    delta = parse_poly(o.delta_expr, r);
  } else if (!o.family.empty()) {
    LinkFamily fam = resolve_family(o);
    if (!fam.delta)
      throw error(errc::unsupported, "family has no multivariate polynomial to factor");
    delta = *fam.delta;
  } else {
    throw usage_failure{"pseudonull needs --delta or --family"};
  }
  // Knots get their verdict without factoring; otherwise keep the
  // certificate around so the factors can be reported.
  std::optional<FactorizationCertificate> cert;
  if (delta.num_vars() > 1) {
    cert = structured_factor(delta);
    if (!cert)
      throw error(errc::unsupported,
                  "polynomial does not factor into recognized catalog pieces");
  }
  PseudonullVerdict verdict = cert ? pseudonull_criterion(*cert) : pseudonull_verdict(delta);
  if (o.json_out) {
    json j;
    j["verdict"] = verdict_name(verdict.kind);
    j["witness"] = verdict.witness ? json(verdict.witness->to_string()) : json(nullptr);
    json factors = json::array();
    if (cert) {
      for (const auto& [q, e] : cert->content_primes) {
        json f;
        f["poly"] = q.get_str();
        f["multiplicity"] = e;
        factors.push_back(std::move(f));
      }
      for (const CertFactor& fac : cert->factors) {
        json f;
        f["poly"] = fac.poly.to_string();
        f["multiplicity"] = fac.multiplicity;
        factors.push_back(std::move(f));
      }
    }
    j["factors"] = std::move(factors);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "verdict: " << verdict_name(verdict.kind) << "\n";
  if (verdict.witness) out << "witness: " << verdict.witness->to_string() << "\n";
  if (cert) {
    for (const auto& [q, e] : cert->content_primes)
      out << "factor: " << q.get_str() << " (multiplicity " << e << ")\n";
    for (const CertFactor& fac : cert->factors)
      out << "factor: " << fac.poly.to_string() << " (multiplicity " << fac.multiplicity
          << ")\n";
  }
  return 0;
}

inline int cmd_bezout(const Options& o, std::ostream& out) {
  BezoutCertificate cert = bezout_certificate(o.m);
  if (o.json_out) {
    json j;
    j["m"] = cert.m;
    j["N"] = cert.N.to_string("x");
    j["B"] = cert.B.to_string("x");
    j["F"] = cert.F.to_string("x");
    j["G"] = cert.G.to_string("x");
    j["res"] = cert.res.get_str();
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "m = " << cert.m << "\n";
  out << "N = " << cert.N.to_string("x") << "\n";
  out << "B = " << cert.B.to_string("x") << "\n";
  out << "F = " << cert.F.to_string("x") << "\n";
  out << "G = " << cert.G.to_string("x") << "\n";
  out << "Res(N, B) = " << cert.res.get_str() << "\n";
  return 0;
}

inline json invariants_to_json(const IwasawaInvariants& inv) {
  json j;
  j["lambda"] = inv.lambda;
  j["mu"] = inv.mu;
  j["nu"] = inv.nu ? json(*inv.nu) : json(nullptr);
  j["n0"] = inv.n0;
  j["v"] = inv.v;
  return j;
}

inline int cmd_repro(const Options& o, std::ostream& out) {
  json cases = json::array();
  {
    CoverSpec spec{*c4_link().delta, {1, 2}, 2, {}};
    json j;
    j["case"] = "c4 at z=(1,2), p=2";
    j["invariants"] = invariants_to_json(iwasawa_invariants(spec, o.threads));
    json orders = json::array();
    for (const GrowthRow& row : homology_orders(spec, 4, o.threads))
      orders.push_back(row.order.get_str());
    j["orders"] = std::move(orders);
    cases.push_back(std::move(j));
  }
  {
    CoverSpec spec{parse_poly("t^2-t+1", 1), {1}, 2, {}};
    json j;
    j["case"] = "trefoil at p=2";
    json orders = json::array();
    for (const GrowthRow& row : homology_orders(spec, 3, o.threads))
      orders.push_back(row.order.get_str());
    j["orders"] = std::move(orders);
    cases.push_back(std::move(j));
  }
  {
    CoverSpec spec{*figure1_link(2).delta, {1, 3}, 3, {}};
    json j;
    j["case"] = "figure1 (m=2) at z=(1,3), p=3";
    j["invariants"] = invariants_to_json(iwasawa_invariants(spec, o.threads));
    cases.push_back(std::move(j));
  }
  {
    CoverSpec spec{*conway_two_bridge(2, 3).delta, {1, 1}, 2, {}};
    json j;
    j["case"] = "conway (a=2, b=3) at z=(1,1), p=2";
    j["invariants"] = invariants_to_json(iwasawa_invariants(spec, o.threads));
    cases.push_back(std::move(j));
  }
  out << cases.dump(2) << "\n";
  return 0;
}

}  // namespace cli_detail

// args holds the argv entries after the program name, in natural order.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Iwasawa invariants of cyclic cover towers of links"};
  app.require_subcommand(1);

  Options o;
  CLI::App* inv = app.add_subcommand("invariants", "lambda, mu, nu of a tower");
  add_input_options(inv, o, true);
  CLI::App* ord = app.add_subcommand("orders", "per-level homology orders");
  add_input_options(ord, o, true);
  ord->add_option("--nmax", o.nmax, "largest level to compute");
  CLI::App* fam = app.add_subcommand("family", "catalog families");
  bool fam_list = false;
  fam->add_flag("--list", fam_list, "list family names");
  fam->add_option("--family", o.family, "family to materialize");
  add_family_params(fam, o);
  fam->add_flag("--json", o.json_out, "emit JSON");
  CLI::App* tor = app.add_subcommand("torres", "Torres conditions");
  add_input_options(tor, o, false);
  tor->add_option("--l12", o.l12, "linking number of the two components");
  CLI::App* pse = app.add_subcommand("pseudonull", "pseudonullity verdict");
  add_input_options(pse, o, false);
  CLI::App* bez = app.add_subcommand("bezout", "bezout family certificate");
  bez->add_option("--m", o.m, "certificate parameter m");
  bez->add_flag("--json", o.json_out, "emit JSON");
  CLI::App* rep = app.add_subcommand("repro", "canonical example battery");
  rep->add_option("--threads", o.threads, "worker threads (0 = auto)");
  rep->add_flag("--json", o.json_out, "emit JSON (the battery always does)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(inv)) return cmd_invariants(o, out);
    if (app.got_subcommand(ord)) return cmd_orders(o, out);
    if (app.got_subcommand(fam)) return cmd_family(o, !fam->count("--family") || fam_list, out);
    if (app.got_subcommand(tor)) return cmd_torres(o, out);
    if (app.got_subcommand(pse)) return cmd_pseudonull(o, out);
    if (app.got_subcommand(bez)) return cmd_bezout(o, out);
    if (app.got_subcommand(rep)) return cmd_repro(o, out);
    err << "usage error: no subcommand selected\n";
    return 2;
  } catch (const usage_failure& u) {
    err << "usage error: " << u.msg << "\n";
    return 2;
  } catch (const parse_error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace iwalink
