#include "ellstab/config.hpp"
#include "ellstab/errors.hpp"
#include "ellstab/euclid.hpp"
#include "ellstab/io.hpp"
#include "ellstab/transport.hpp"
#include "ellstab/walls.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

using namespace ellstab;

Rat rat_arg(const std::string& text, const std::string& flag) {
  auto q = parse_rat(text);
  if (!q)
    throw usage_error("flag " + flag + ": '" + text +
                      "' is not a rational (use p or p/q)");
  return *q;
}

Int int_arg(const std::string& text, const std::string& flag) {
  auto n = parse_int(text);
  if (!n)
    throw usage_error("flag " + flag + ": '" + text + "' is not an integer");
  return *n;
}

struct Cli {
  RunConfig cfg;
  std::string config_path;
  std::string e_str, format_str, check_str, threads_str;
  std::string out_path = "-";

  // transform
  std::string t_op, t_in = "-", t_m, t_k, t_dalpha = "0", t_dbeta = "0";
  bool t_verify = false;

  // transport
  std::string fw_abar, fw_pbar, fw_qbar, fw_bbar;
  std::string iv_a, iv_p, iv_q, iv_b;
  std::string tx_lambda, tx_z, tx_k;
  std::string th_in = "-", th_lambda, th_vbar, th_ubar;

  // bounds
  std::string bd_in = "-", bd_p = "0", bd_q = "0", bd_b, bd_lambda = "0";
  std::string bd_pbar, bd_bbar, bd_alpha, bd_beta;

  // walls
  std::string w_in = "-", w_p = "0", w_q = "0", w_b;
  std::string w_nmin, w_nmax, w_dmin, w_dmax, w_cmin, w_cmax, w_smin, w_smax;
  std::string w_bound = "auto", w_svg_out = "walls.svg", w_tsv_out;
  bool w_boundary = false, w_generic = false;

  // euclid
  std::string eu_in = "-";
  bool eu_diagram = false;
};

void emit(const Cli& cli, const std::string& text) {
  if (cli.out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cli.out_path, std::ios::binary);
  if (!out) throw usage_error("cannot open output file '" + cli.out_path + "'");
  out << text;
}

SurfaceGeometry geometry(const Cli& cli) { return SurfaceGeometry{cli.cfg.e}; }

void resolve_globals(Cli& cli) {
  if (!cli.config_path.empty()) apply_config_file(cli.cfg, cli.config_path);
  if (!cli.e_str.empty()) {
    Int e = int_arg(cli.e_str, "--e");
    if (e < 1) throw usage_error("--e must be a positive integer");
    cli.cfg.e = e;
  }
  if (!cli.format_str.empty()) cli.cfg.format = parse_format(cli.format_str);
  if (!cli.check_str.empty())
    cli.cfg.check = parse_check_level(cli.check_str);
  if (!cli.threads_str.empty()) {
    Int n = int_arg(cli.threads_str, "--threads");
    if (n < 0) throw usage_error("--threads must be nonnegative");
    cli.cfg.threads = (unsigned)n.get_ui();
  }
}

void require_json_format(const Cli& cli, const std::string& cmd) {
  if (cli.cfg.format != OutputFormat::Json)
    throw usage_error("command '" + cmd + "' only supports --format json");
}

// ---------------------------------------------------------------- transform

void run_transform(Cli& cli) {
  resolve_globals(cli);
  require_json_format(cli, "transform");
  SurfaceGeometry g = geometry(cli);
  ChernTable v = read_table_file(cli.t_in);

  Json j;
  j["command"] = "transform";
  j["op"] = cli.t_op;
  j["surface"] = Json{{"e", (long)g.e.get_si()}};

  ChernTable out = v;
  bool verified = true;
  if (cli.t_op == "phi") {
    out = phi(v, g);
    if (cli.t_verify)
      verified = phihat(out, g) == shift1(v) && phi(phihat(v, g), g) == shift1(v);
  } else if (cli.t_op == "phihat") {
    out = phihat(v, g);
    if (cli.t_verify)
      verified = phi(out, g) == shift1(v) && phihat(phi(v, g), g) == shift1(v);
  } else if (cli.t_op == "dual") {
    out = dual_d(v);
    if (cli.t_verify) verified = dual_d(out) == v;
  } else if (cli.t_op == "shift") {
    out = shift1(v);
    if (cli.t_verify) verified = shift1(out) == v;
  } else if (cli.t_op == "tensor") {
    Divisor D{Rat(int_arg(cli.t_dalpha, "--dalpha")),
              Rat(int_arg(cli.t_dbeta, "--dbeta"))};
    j["params"] = Json{{"D", to_json(D)}};
    out = tensor(v, D, g);
    if (cli.t_verify) verified = tensor(out, -D, g) == v;
  } else if (cli.t_op == "upsilon") {
    if (cli.t_k.empty()) throw usage_error("upsilon needs --k");
    Int k = int_arg(cli.t_k, "--k");
    if (k < 0) throw usage_error("upsilon needs k >= 0");
    j["params"] = Json{{"k", (long)k.get_si()}};
    out = upsilon(v, k, g);
    if (cli.t_verify)
      verified = tensor(out, Divisor{Rat(k), Rat(0)}, g) == v;
  } else if (cli.t_op == "psi") {
    if (cli.t_m.empty()) throw usage_error("psi needs --m");
    Int m = int_arg(cli.t_m, "--m");
    j["params"] = Json{{"m", (long)m.get_si()}};
    out = psi(v, m, g); // composition cross-check built in
    if (cli.t_verify) verified = out == psi_via_diagram(v, m, g);
  } else {
    throw usage_error("unknown op '" + cli.t_op +
                      "' (phi|phihat|dual|shift|tensor|psi|upsilon)");
  }

  j["input"] = to_json(v);
  j["output"] = to_json(out);
  if (cli.t_verify) {
    ensure(verified, "transform --verify found a composition mismatch");
    j["verified"] = true;
  }
  emit(cli, dump_json(j));
}

// ---------------------------------------------------------------- transport

void attach_checks(Json& j, const Cli& cli, const TransportResult& res,
                   const SurfaceGeometry& g) {
  if (cli.cfg.check != CheckLevel::Full) return;
  ConstraintCheck chk = check_constraints(res.barred, res.unbarred, g);
  j["checks"] = Json{{"constraints", Json{{"eq1", chk.eq1},
                                          {"eq2", chk.eq2},
                                          {"eq3", chk.eq3},
                                          {"eq4", chk.eq4}}},
                     {"intertwine", intertwine_check(res, g)}};
}

void run_transport_forward(Cli& cli) {
  resolve_globals(cli);
  require_json_format(cli, "transport forward");
  SurfaceGeometry g = geometry(cli);
  TransportResult res = forward_transport(
      rat_arg(cli.fw_abar, "--abar"), rat_arg(cli.fw_pbar, "--pbar"),
      rat_arg(cli.fw_qbar, "--qbar"), rat_arg(cli.fw_bbar, "--bbar"), g);
  Json j;
  j["command"] = "transport forward";
  j.update(to_json(res, g));
  attach_checks(j, cli, res, g);
  emit(cli, dump_json(j));
}

void run_transport_inverse(Cli& cli) {
  resolve_globals(cli);
  require_json_format(cli, "transport inverse");
  SurfaceGeometry g = geometry(cli);
  TransportResult res = inverse_transport(
      rat_arg(cli.iv_a, "--a"), rat_arg(cli.iv_p, "--p"),
      rat_arg(cli.iv_q, "--q"), rat_arg(cli.iv_b, "--b"), g);
  Json j;
  j["command"] = "transport inverse";
  j.update(to_json(res, g));
  attach_checks(j, cli, res, g);
  emit(cli, dump_json(j));
}

void run_transport_tx(Cli& cli) {
  resolve_globals(cli);
  require_json_format(cli, "transport tx");
  if (cli.cfg.e != 2)
    throw precondition_error("transport tx needs e = 2 (elliptic K3)");
  Rat lambda = rat_arg(cli.tx_lambda, "--lambda");
  Rat z = rat_arg(cli.tx_z, "--z");
  Int k;
  if (cli.tx_k.empty()) {
    auto kk = tx_window_k(lambda);
    if (!kk)
      throw precondition_error(
          "no admissible k: 2*lambda must not be an integer");
    k = *kk;
  } else {
    k = int_arg(cli.tx_k, "--k");
  }
  TXParams params{lambda, z, k};
  TransportResult res = tx_transport(params);
  SurfaceGeometry g{Int(2)};
  Json j;
  j["command"] = "transport tx";
  j["lambda"] = rat_str(params.lambda);
  j["z"] = rat_str(params.z);
  j["k"] = (long)params.k.get_si();
  j.update(to_json(res, g));
  attach_checks(j, cli, res, g);
  emit(cli, dump_json(j));
}

void run_transport_thm54(Cli& cli) {
  resolve_globals(cli);
  require_json_format(cli, "transport thm54");
  SurfaceGeometry g = geometry(cli);
  ChernTable v = read_table_file(cli.th_in);
  if (cli.th_lambda.empty() || cli.th_vbar.empty())
    throw usage_error("transport thm54 needs --lambda and --vbar");
  Rat lambda = rat_arg(cli.th_lambda, "--lambda");
  Int vbar = int_arg(cli.th_vbar, "--vbar");
  HalfSlopeFamily fam = half_slope_family(v, lambda, vbar, g);
  Json j;
  j["command"] = "transport thm54";
  j["surface"] = Json{{"e", (long)g.e.get_si()}};
  j["v"] = to_json(v);
  j["lambda"] = rat_str(lambda);
  j["Vbar"] = (long)vbar.get_si();
  j["mu_f"] = rat_str(fam.mu_f);
  j["Bbar"] = Json{{"p", rat_str(fam.pbar)}, {"q", rat_str(fam.qbar)}};
  j["lambda_threshold"] = rat_str(fam.lambda_threshold);
  j["lambda_ok"] = fam.lambda_ok;
  j["transport"] = to_json(fam.res, g);
  j["twisted_fiber_degree"] = rat_str(fam.twisted_fiber_degree);
  j["twisted_theta_degree"] = rat_str(fam.twisted_theta_degree);
  j["ch2_twisted"] = rat_str(fam.ch2_twisted);
  j["n_integrality"] = int_str(fam.n_integrality);
  j["volume_rhs"] = rat_str(fam.volume_rhs);
  j["vbar_min"] = int_str(fam.vbar_min);
  if (cli.cfg.check == CheckLevel::Full) {
    ConstraintCheck chk = check_constraints(fam.res.barred, fam.res.unbarred, g);
    j["checks"] = Json{{"constraints", Json{{"eq1", chk.eq1},
                                            {"eq2", chk.eq2},
                                            {"eq3", chk.eq3},
                                            {"eq4", chk.eq4}}},
                       {"intertwine", intertwine_check(fam.res, g)}};
  }
  emit(cli, dump_json(j));
}

void run_transport_friedman56(Cli& cli) {
  resolve_globals(cli);
  require_json_format(cli, "transport friedman56");
  SurfaceGeometry g = geometry(cli);
  ChernTable v = read_table_file(cli.th_in);
  if (cli.th_lambda.empty() || cli.th_ubar.empty())
    throw usage_error("transport friedman56 needs --lambda and --ubar");
  Rat lambda = rat_arg(cli.th_lambda, "--lambda");
  Int ubar = int_arg(cli.th_ubar, "--ubar");
  FriedmanThreshold thr = friedman_threshold(v, lambda, ubar, g);
  Json j;
  j["command"] = "transport friedman56";
  j["surface"] = Json{{"e", (long)g.e.get_si()}};
  j["v"] = to_json(v);
  j["lambda"] = rat_str(lambda);
  j["Ubar"] = (long)ubar.get_si();
  j["mu"] = rat_str(thr.mu);
  j["delta"] = rat_str(thr.delta);
  j["vbar_threshold"] = rat_str(thr.vbar_threshold);
  emit(cli, dump_json(j));
}

void run_transport_thm58(Cli& cli) {
  resolve_globals(cli);
  require_json_format(cli, "transport thm58");
  SurfaceGeometry g = geometry(cli);
  ChernTable v = read_table_file(cli.th_in);
  if (cli.th_lambda.empty())
    throw usage_error("transport thm58 needs --lambda");
  Rat lambda = rat_arg(cli.th_lambda, "--lambda");
  OneDimTransformBounds out = one_dim_transform_bounds(v, lambda, g);
  Json j;
  j["command"] = "transport thm58";
  j["surface"] = Json{{"e", (long)g.e.get_si()}};
  j["v"] = to_json(v);
  j["lambda"] = rat_str(lambda);
  j["theta_twisted"] = rat_str(out.theta_twisted);
  j["a0"] = rat_str(out.a0);
  j["Ubar"] = rat_str(out.ubar);
  j["omega_ch1_image"] = rat_str(out.omega_ch1_image);
  j["bbar_threshold"] = rat_str(out.bbar_threshold);
  emit(cli, dump_json(j));
}

// ------------------------------------------------------------------- bounds

Json bound_pair(const Rat& a, const SurfaceGeometry& g) {
  return Json{{"a", rat_str(a)}, {"U", rat_str(Rat(2) * a + Rat(g.e))}};
}

void run_bounds(Cli& cli, const std::string& kind) {
  resolve_globals(cli);
  require_json_format(cli, "bounds " + kind);
  SurfaceGeometry g = geometry(cli);
  Json j;
  j["command"] = "bounds " + kind;
  j["surface"] = Json{{"e", (long)g.e.get_si()}};

  if (kind == "geometric") {
    if (cli.bd_pbar.empty() || cli.bd_bbar.empty())
      throw usage_error("bounds geometric needs --pbar and --bbar");
    Rat pbar = rat_arg(cli.bd_pbar, "--pbar");
    Rat bbar = rat_arg(cli.bd_bbar, "--bbar");
    j["pbar"] = rat_str(pbar);
    j["bbar"] = rat_str(bbar);
    j["bound"] = bound_pair(geometricity_bound(pbar, bbar, g), g);
    emit(cli, dump_json(j));
    return;
  }
  if (kind == "linebundle") {
    if (cli.bd_alpha.empty() || cli.bd_beta.empty() || cli.bd_bbar.empty())
      throw usage_error(
          "bounds linebundle needs --alpha, --beta and --bbar");
    Divisor L{Rat(int_arg(cli.bd_alpha, "--alpha")),
              Rat(int_arg(cli.bd_beta, "--beta"))};
    Rat bbar = rat_arg(cli.bd_bbar, "--bbar");
    LineBundleWall w = line_bundle_wall(L, bbar, g);
    j["L"] = to_json(L);
    j["bbar"] = rat_str(bbar);
    j["wall"] = w.has_wall ? bound_pair(w.wall_a, g) : Json("NoWall");
    j["wall_value"] = rat_str(w.wall_a);
    j["sup_bound"] = bound_pair(w.sup_bound, g);
    emit(cli, dump_json(j));
    return;
  }

  ChernTable v = read_table_file(cli.bd_in);
  if (cli.bd_b.empty()) throw usage_error("bounds " + kind + " needs --b");
  Rat b = rat_arg(cli.bd_b, "--b");
  j["v"] = to_json(v);
  j["b"] = rat_str(b);

  if (kind == "gieseker") {
    Divisor B{rat_arg(cli.bd_p, "--p"), rat_arg(cli.bd_q, "--q")};
    j["B"] = Json{{"p", rat_str(B.alpha)}, {"q", rat_str(B.beta)}};
    j["n_integrality"] = int_str(integrality_constant(b, g));
    j["bound"] = bound_pair(gieseker_bound(v, B, b, g), g);
  } else if (kind == "onedim") {
    Divisor B{rat_arg(cli.bd_p, "--p"), rat_arg(cli.bd_q, "--q")};
    j["B"] = Json{{"p", rat_str(B.alpha)}, {"q", rat_str(B.beta)}};
    j["bound"] = bound_pair(onedim_bound(v, B, b, g), g);
  } else if (kind == "zerofiber") {
    Rat lambda = rat_arg(cli.bd_lambda, "--lambda");
    j["lambda"] = rat_str(lambda);
    j["n_integrality"] = int_str(integrality_constant(b, g));
    j["bound"] = bound_pair(zerofiber_bound(v, lambda, b, g), g);
  } else {
    throw usage_error("unknown bounds kind '" + kind + "'");
  }
  emit(cli, dump_json(j));
}

// -------------------------------------------------------------------- walls

void run_walls(Cli& cli) {
  resolve_globals(cli);
  SurfaceGeometry g = geometry(cli);
  ChernTable v = read_table_file(cli.w_in);
  if (cli.w_b.empty()) throw usage_error("walls needs --b");
  Rat b = rat_arg(cli.w_b, "--b");
  Divisor B{rat_arg(cli.w_p, "--p"), rat_arg(cli.w_q, "--q")};

  Box box = cli.cfg.box;
  auto setb = [](Int& target, const std::string& text, const char* flag) {
    if (!text.empty()) target = int_arg(text, flag);
  };
  setb(box.n_lo, cli.w_nmin, "--nmin");
  setb(box.n_hi, cli.w_nmax, "--nmax");
  setb(box.d_lo, cli.w_dmin, "--dmin");
  setb(box.d_hi, cli.w_dmax, "--dmax");
  setb(box.c_lo, cli.w_cmin, "--cmin");
  setb(box.c_hi, cli.w_cmax, "--cmax");
  if (!cli.w_smin.empty() || !cli.w_smax.empty()) {
    if (cli.w_smin.empty() || cli.w_smax.empty())
      throw usage_error("walls needs both --smin and --smax or neither");
    box.s_range = std::make_pair(rat_arg(cli.w_smin, "--smin"),
                                 rat_arg(cli.w_smax, "--smax"));
  }

  WallReport rep = enumerate_walls(v, B, b, box, g, cli.w_boundary,
                                   cli.cfg.threads);

  Json j;
  j["command"] = "walls";
  j.update(to_json(rep, g));

  // The matching closed-form threshold: every enumerated wall must sit
  // strictly below it.
  std::string bound_kind = cli.w_bound;
  if (bound_kind == "auto") {
    TwistedChern tv = twist(v, B, g);
    if (v.n == 0)
      bound_kind = "onedim";
    else if (tv.fch1 == 0 && v.d >= 0 && discriminant(v, g) >= 0 &&
             tv.thch1 >= 0)
      bound_kind = "zerofiber";
    else
      bound_kind = "gieseker";
  }
  if (bound_kind != "none") {
    Rat bound;
    if (bound_kind == "gieseker")
      bound = gieseker_bound(v, B, b, g);
    else if (bound_kind == "onedim")
      bound = onedim_bound(v, B, b, g);
    else if (bound_kind == "zerofiber")
      bound = zerofiber_bound(v, B.beta, b, g);
    else
      throw usage_error("unknown wall bound '" + bound_kind +
                        "' (auto|gieseker|onedim|zerofiber|none)");
    bool dominates = true;
    for (const auto& w : rep.walls)
      if (!(w.a < bound)) dominates = false;
    j["bound"] = Json{{"kind", bound_kind},
                      {"a", rat_str(bound)},
                      {"U", rat_str(Rat(2) * bound + Rat(g.e))},
                      {"dominates", dominates}};
  }
  if (cli.w_generic) {
    Json wit = Json::array();
    // Equal-phase-for-every-a witnesses double as the non-genericity proof.
    for (const auto& A : rep.all_a_witnesses) wit.push_back(to_json(A));
    j["generic_witnesses"] = std::move(wit);
  }

  switch (cli.cfg.format) {
    case OutputFormat::Json:
      emit(cli, dump_json(j));
      break;
    case OutputFormat::Tsv:
      emit(cli, walls_tsv(rep));
      break;
    case OutputFormat::SvgJson: {
      std::ofstream svg(cli.w_svg_out, std::ios::binary);
      if (!svg)
        throw usage_error("cannot open SVG output '" + cli.w_svg_out + "'");
      svg << walls_svg(rep);
      emit(cli, dump_json(j));
      break;
    }
  }
  if (!cli.w_tsv_out.empty()) {
    std::ofstream tsv(cli.w_tsv_out, std::ios::binary);
    if (!tsv)
      throw usage_error("cannot open TSV output '" + cli.w_tsv_out + "'");
    tsv << walls_tsv(rep);
  }
}

// ------------------------------------------------------------------- euclid

void run_euclid(Cli& cli) {
  resolve_globals(cli);
  require_json_format(cli, "euclid");
  SurfaceGeometry g = geometry(cli);
  ChernTable v = read_table_file(cli.eu_in);
  EuclidTrace tr = euclid_reduce(v, g);
  Json j;
  j["command"] = "euclid";
  j.update(to_json(tr, g));
  if (cli.eu_diagram) {
    // The conjugated-transform moves expanded into their arrow chain.
    Json diagrams = Json::array();
    for (const auto& m : tr.moves) {
      if (m.kind != EuclidMove::Kind::Psi) continue;
      Json dj;
      dj["m"] = (long)m.param.get_si();
      ChernTable x1 = shift1(phi(m.before, g));
      ChernTable x2 = dual_d(x1);
      ChernTable x3 = tensor(x2, Divisor{Rat(-m.param), Rat(0)}, g);
      ChernTable x4 = shift1(phi(x3, g));
      dj["chain"] = Json::array({to_json(x1), to_json(x2), to_json(x3),
                                 to_json(x4), to_json(dual_d(x4))});
      diagrams.push_back(std::move(dj));
    }
    j["psi_diagrams"] = std::move(diagrams);
  }
  emit(cli, dump_json(j));
}

} // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"Exact numerics for stability parameters, chamber bounds, "
               "walls and character-table reductions on elliptic surfaces"};
  app.require_subcommand(1);
  app.add_option("--e", cli.e_str, "surface invariant e = -Theta^2");
  app.add_option("--format", cli.format_str, "json | tsv | svg+json");
  app.add_option("--check", cli.check_str, "fast | full");
  app.add_option("--config", cli.config_path, "key=value config file");
  app.add_option("--threads", cli.threads_str,
                 "worker threads for wall enumeration (0 = auto)");
  app.add_option("--out", cli.out_path, "output path ('-' = stdout)");

  auto* tf = app.add_subcommand("transform", "apply a lattice autoequivalence");
  tf->fallthrough();
  tf->add_option("--op", cli.t_op,
                 "phi|phihat|dual|shift|tensor|psi|upsilon")
      ->required();
  tf->add_option("--in", cli.t_in, "input table JSON ('-' = stdin)");
  tf->add_option("--m", cli.t_m, "division witness for psi");
  tf->add_option("--k", cli.t_k, "twist count for upsilon");
  tf->add_option("--dalpha", cli.t_dalpha, "Theta coefficient for tensor");
  tf->add_option("--dbeta", cli.t_dbeta, "fiber coefficient for tensor");
  tf->add_flag("--verify", cli.t_verify, "replay composition identities");
  tf->callback([&cli] { run_transform(cli); });

  auto* tr = app.add_subcommand("transport", "stability parameter transport");
  tr->fallthrough();
  tr->require_subcommand(1);

  auto* fw = tr->add_subcommand("forward", "barred to unbarred parameters");
  fw->fallthrough();
  fw->add_option("--abar", cli.fw_abar)->required();
  fw->add_option("--pbar", cli.fw_pbar)->required();
  fw->add_option("--qbar", cli.fw_qbar)->required();
  fw->add_option("--bbar", cli.fw_bbar)->required();
  fw->callback([&cli] { run_transport_forward(cli); });

  auto* iv = tr->add_subcommand("inverse", "unbarred to barred parameters");
  iv->fallthrough();
  iv->add_option("--a", cli.iv_a)->required();
  iv->add_option("--p", cli.iv_p)->required();
  iv->add_option("--q", cli.iv_q)->required();
  iv->add_option("--b", cli.iv_b)->required();
  iv->callback([&cli] { run_transport_inverse(cli); });

  auto* tx = tr->add_subcommand("tx", "nef-boundary parameters on a K3");
  tx->fallthrough();
  tx->add_option("--lambda", cli.tx_lambda)->required();
  tx->add_option("--z", cli.tx_z)->required();
  tx->add_option("--k", cli.tx_k, "window integer (derived when omitted)");
  tx->callback([&cli] { run_transport_tx(cli); });

  auto* t54 = tr->add_subcommand("thm54", "half-slope projectivity family");
  t54->fallthrough();
  t54->add_option("--in", cli.th_in, "input table JSON ('-' = stdin)");
  t54->add_option("--lambda", cli.th_lambda);
  t54->add_option("--vbar", cli.th_vbar);
  t54->callback([&cli] { run_transport_thm54(cli); });

  auto* t56 = tr->add_subcommand("friedman56", "fiber-twist volume threshold");
  t56->fallthrough();
  t56->add_option("--in", cli.th_in, "input table JSON ('-' = stdin)");
  t56->add_option("--lambda", cli.th_lambda);
  t56->add_option("--ubar", cli.th_ubar);
  t56->callback([&cli] { run_transport_friedman56(cli); });

  auto* t58 = tr->add_subcommand("thm58", "fiber-degree-zero family bounds");
  t58->fallthrough();
  t58->add_option("--in", cli.th_in, "input table JSON ('-' = stdin)");
  t58->add_option("--lambda", cli.th_lambda);
  t58->callback([&cli] { run_transport_thm58(cli); });

  auto* bd = app.add_subcommand("bounds", "closed-form chamber bounds");
  bd->fallthrough();
  bd->require_subcommand(1);
  for (const char* kind :
       {"gieseker", "onedim", "zerofiber", "geometric", "linebundle"}) {
    auto* sub = bd->add_subcommand(kind);
    sub->fallthrough();
    sub->add_option("--in", cli.bd_in, "input table JSON ('-' = stdin)");
    sub->add_option("--p", cli.bd_p);
    sub->add_option("--q", cli.bd_q);
    sub->add_option("--b", cli.bd_b);
    sub->add_option("--lambda", cli.bd_lambda);
    sub->add_option("--pbar", cli.bd_pbar);
    sub->add_option("--bbar", cli.bd_bbar);
    sub->add_option("--alpha", cli.bd_alpha);
    sub->add_option("--beta", cli.bd_beta);
    std::string k = kind;
    sub->callback([&cli, k] { run_bounds(cli, k); });
  }

  auto* wl = app.add_subcommand("walls", "brute-force wall enumeration");
  wl->fallthrough();
  wl->add_option("--in", cli.w_in, "input table JSON ('-' = stdin)");
  wl->add_option("--p", cli.w_p);
  wl->add_option("--q", cli.w_q);
  wl->add_option("--b", cli.w_b);
  wl->add_option("--nmin", cli.w_nmin);
  wl->add_option("--nmax", cli.w_nmax);
  wl->add_option("--dmin", cli.w_dmin);
  wl->add_option("--dmax", cli.w_dmax);
  wl->add_option("--cmin", cli.w_cmin);
  wl->add_option("--cmax", cli.w_cmax);
  wl->add_option("--smin", cli.w_smin);
  wl->add_option("--smax", cli.w_smax);
  wl->add_option("--bound", cli.w_bound, "auto|gieseker|onedim|zerofiber|none");
  wl->add_option("--svg-out", cli.w_svg_out, "SVG path for --format svg+json");
  wl->add_option("--tsv-out", cli.w_tsv_out, "also write the TSV here");
  wl->add_flag("--include-boundary", cli.w_boundary,
               "keep candidates with Im(A) = 0 or Im(A) = Im(v)");
  wl->add_flag("--generic", cli.w_generic, "embed the genericity witnesses");
  wl->callback([&cli] { run_walls(cli); });

  auto* eu = app.add_subcommand("euclid", "reduce to a rank-one table");
  eu->fallthrough();
  eu->add_option("--in", cli.eu_in, "input table JSON ('-' = stdin)");
  eu->add_flag("--diagram", cli.eu_diagram,
               "emit the arrow chain of every psi move");
  eu->callback([&cli] { run_euclid(cli); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const internal_error& e) {
    std::cerr << "internal assertion failed: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
