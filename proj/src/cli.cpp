#include "lpgame/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lpgame/certificates.hpp"
#include "lpgame/errors.hpp"
#include "lpgame/infeasibility.hpp"
#include "lpgame/problem_io.hpp"
#include "lpgame/reductions.hpp"
#include "lpgame/simplex.hpp"

namespace lpgame {

namespace {

struct Report {
  std::ostringstream body;

  void field(const std::string& key, const std::string& value) {
    body << key << ": " << value << "\n";
  }
  void check(const std::string& name, bool pass, const std::string& detail = "") {
    body << "check " << name << ": " << (pass ? "pass" : "fail");
    if (!pass && !detail.empty()) body << " (" << detail << ")";
    body << "\n";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

const IneqLP& need_lp(const ProblemFile& file) {
  if (!file.lp.has_value()) throw DimensionError("this command needs a kind \"lp\" file");
  return *file.lp;
}

const ZeroSumGame& need_game(const ProblemFile& file) {
  if (!file.game.has_value()) throw DimensionError("this command needs a kind \"game\" file");
  return *file.game;
}

const Mat& need_rows(const ProblemFile& file) {
  if (!file.rows.has_value()) throw DimensionError("this command needs a kind \"system\" file");
  return *file.rows;
}

const Vec& need_rhs(const ProblemFile& file) {
  need_rows(file);
  if (!file.rhs.has_value()) throw DimensionError("this command needs a system with \"rhs\"");
  return *file.rhs;
}

Rat parse_rat_flag(const std::string& text, const std::string& flag) {
  auto parsed = parse_rat(text);
  if (!parsed.has_value()) throw ParseError("bad rational for " + flag + ": " + text);
  return *parsed;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void echo_lp(Report& report, const IneqLP& lp) {
  report.field("kind", "lp");
  report.field("A", to_string(lp.a));
  report.field("b", to_string(lp.b));
  report.field("c", to_string(lp.c));
}

void echo_system(Report& report, const Mat& rows, const Vec* rhs) {
  report.field("kind", "system");
  report.field("rows", to_string(rows));
  if (rhs != nullptr) report.field("rhs", to_string(*rhs));
}

std::string one_based(const std::vector<std::size_t>& indices) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out << ", ";
    out << indices[i] + 1;
  }
  out << ']';
  return out.str();
}

void cmd_solve(Report& report, const IneqLP& lp, const std::optional<Rat>& m_flag) {
  echo_lp(report, lp);
  Rat m_used = m_flag.has_value() ? *m_flag : bound_M(lp);
  report.field("M", rat_to_string(m_used));
  auto [verdict, game_value] = solve_lp_via_bm(lp, m_used);
  if (verdict.is_optimal_pair()) {
    const OptimalPair& pair = verdict.optimal_pair();
    report.field("verdict", "OptimalPair");
    report.field("value", rat_to_string(pair.value));
    report.field("x", to_string(pair.x));
    report.field("y", to_string(pair.y));
    report.field("gameValue", rat_to_string(game_value));
    report.check("Ax<=b", is_nonneg(lp.b - lp.a * pair.x));
    report.check("x>=0", is_nonneg(pair.x));
    report.check("yTA>=cT", is_nonneg(left_mul(pair.y, lp.a) - lp.c));
    report.check("y>=0", is_nonneg(pair.y));
    report.check("cTx=yTb", dot(lp.c, pair.x) == dot(pair.y, lp.b));
  } else {
    const NoOptimumCert& cert = verdict.no_optimum();
    report.field("verdict", "NoOptimum");
    report.field("x", to_string(cert.x));
    report.field("y", to_string(cert.y));
    report.field("gameValue", rat_to_string(game_value));
    report.field("primalUnboundedIfFeasible", bool_str(cert.primal_unbounded_if_feasible));
    report.field("dualUnboundedIfFeasible", bool_str(cert.dual_unbounded_if_feasible));
    report.check("Ax<=0", is_nonneg(-(lp.a * cert.x)));
    report.check("x>=0", is_nonneg(cert.x));
    report.check("ATy>=0", is_nonneg(left_mul(cert.y, lp.a)));
    report.check("y>=0", is_nonneg(cert.y));
    report.check("bTy-cTx<0", dot(cert.y, lp.b) - dot(lp.c, cert.x) < 0);
  }
}

void cmd_game(Report& report, const ZeroSumGame& game, bool enumerate, std::size_t enum_cap) {
  report.field("kind", "game");
  report.field("payoff", to_string(game.payoff));
  GameSolution solution = solve_game(game);
  report.field("value", rat_to_string(solution.value));
  report.field("rowStrategy", to_string(solution.row_strategy.probs()));
  report.field("colStrategy", to_string(solution.col_strategy.probs()));
  Vec guarantee = left_mul(solution.row_strategy.probs(), game.payoff);
  bool row_ok = true;
  for (const Rat& g : guarantee) row_ok = row_ok && g >= solution.value;
  report.check("row guarantee", row_ok);
  Vec cost = game.payoff * solution.col_strategy.probs();
  bool col_ok = true;
  for (const Rat& g : cost) col_ok = col_ok && g <= solution.value;
  report.check("column guarantee", col_ok);
  if (enumerate) {
    auto pairs = enumerate_optimal_supports(game, enum_cap);
    report.field("vertexPairs", std::to_string(pairs.size()));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      report.field("pair " + std::to_string(i + 1),
                   "row " + to_string(pairs[i].first.probs()) + " col " +
                       to_string(pairs[i].second.probs()));
    }
  }
}

void cmd_reduce(Report& report, const ProblemFile& file, const std::string& target,
                const std::optional<Rat>& m_flag, std::size_t br_cap) {
  if (target == "dantzig") {
    const IneqLP& lp = need_lp(file);
    echo_lp(report, lp);
    ZeroSumGame game = build_dantzig(lp);
    report.field("B", to_string(game.payoff));
    report.check("skew-symmetric", is_skew_symmetric(game.payoff));
  } else if (target == "bm") {
    const IneqLP& lp = need_lp(file);
    echo_lp(report, lp);
    Rat m_used = m_flag.has_value() ? *m_flag : bound_M(lp);
    report.field("M", rat_to_string(m_used));
    report.field("BM", to_string(build_bm(lp, m_used).payoff));
  } else if (target == "dm") {
    const Mat& c = need_rows(file);
    const Vec& d = need_rhs(file);
    echo_system(report, c, &d);
    if (!m_flag.has_value()) throw ParseError("reduce --target dm requires --M");
    report.field("M", rat_to_string(*m_flag));
    report.field("DM", to_string(build_dm(c, d, *m_flag).payoff));
  } else if (target == "brooks-reny") {
    const IneqLP& lp = need_lp(file);
    echo_lp(report, lp);
    BrooksRenyGame br = build_brooks_reny(lp, br_cap);
    report.field("alpha", rat_to_string(br.alpha));
    report.field("P", to_string(br.game.payoff));
  } else {
    throw ParseError("unknown reduce target \"" + target + "\"");
  }
}

FarkasVariant parse_variant(const std::string& name) {
  if (name == "eq") return FarkasVariant::Eq;
  if (name == "ineq-nonneg") return FarkasVariant::IneqNonneg;
  if (name == "ineq-free") return FarkasVariant::IneqFree;
  throw ParseError("unknown farkas variant \"" + name + "\"");
}

void cmd_farkas(Report& report, const Mat& a, const Vec& b, const std::string& variant_name) {
  echo_system(report, a, &b);
  report.field("variant", variant_name);
  FarkasVariant variant = parse_variant(variant_name);
  auto alt = farkas(a, b, variant);
  if (alt.is_left()) {
    const Vec& x = alt.left_value();
    report.field("verdict", "Left");
    report.field("x", to_string(x));
    if (variant == FarkasVariant::Eq) {
      report.check("Ax=b", a * x == b);
    } else {
      report.check("Ax<=b", is_nonneg(b - a * x));
    }
    if (variant != FarkasVariant::IneqFree) report.check("x>=0", is_nonneg(x));
  } else {
    const Vec& y = alt.right_value();
    report.field("verdict", "Right");
    report.field("y", to_string(y));
    if (variant == FarkasVariant::IneqFree) {
      report.check("yTA=0", is_zero(left_mul(y, a)));
    } else {
      report.check("yTA>=0", is_nonneg(left_mul(y, a)));
    }
    if (variant != FarkasVariant::Eq) report.check("y>=0", is_nonneg(y));
    report.check("yTb<0", dot(y, b) < 0);
  }
}

void cmd_gordan(Report& report, const Mat& a, const std::string& method_name) {
  echo_system(report, a, nullptr);
  report.field("method", method_name);
  GordanMethod method;
  if (method_name == "via-ville") {
    method = GordanMethod::ViaVille;
  } else if (method_name == "via-stiemke") {
    method = GordanMethod::ViaStiemke;
  } else {
    throw ParseError("unknown gordan method \"" + method_name + "\"");
  }
  auto alt = gordan(a, method);
  if (alt.is_left()) {
    report.field("verdict", "Left");
    report.field("x", to_string(alt.left_value()));
    report.check("Ax=0", is_zero(a * alt.left_value()));
    report.check("x>=0", is_nonneg(alt.left_value()));
    report.check("x!=0", !is_zero(alt.left_value()));
  } else {
    report.field("verdict", "Right");
    report.field("y", to_string(alt.right_value()));
    report.check("yTA>0", is_positive(left_mul(alt.right_value(), a)));
  }
}

void cmd_ville(Report& report, const Mat& a) {
  echo_system(report, a, nullptr);
  auto alt = ville(a);
  if (alt.is_left()) {
    report.field("verdict", "Left");
    report.field("x", to_string(alt.left_value()));
    report.check("Ax<=0", is_nonneg(-(a * alt.left_value())));
    report.check("x>=0", is_nonneg(alt.left_value()));
    report.check("x!=0", !is_zero(alt.left_value()));
  } else {
    report.field("verdict", "Right");
    report.field("y", to_string(alt.right_value()));
    report.check("yTA>0", is_positive(left_mul(alt.right_value(), a)));
    report.check("y>=0", is_nonneg(alt.right_value()));
  }
}

void cmd_stiemke(Report& report, const Mat& a) {
  echo_system(report, a, nullptr);
  auto alt = stiemke(a);
  if (alt.is_left()) {
    const Vec& y = alt.left_value();
    report.field("verdict", "Left");
    report.field("y", to_string(y));
    report.check("yTA>=0", is_nonneg(left_mul(y, a)));
    report.check("yTA!=0", !is_zero(left_mul(y, a)));
  } else {
    const Vec& x = alt.right_value();
    report.field("verdict", "Right");
    report.field("x", to_string(x));
    report.check("Ax=0", is_zero(a * x));
    report.check("x>0", is_positive(x));
  }
}

void cmd_tucker(Report& report, const Mat& a, const std::string& method_name) {
  echo_system(report, a, nullptr);
  report.field("method", method_name);
  TuckerMethod method;
  if (method_name == "summation") {
    method = TuckerMethod::Summation;
  } else if (method_name == "elimination") {
    method = TuckerMethod::Elimination;
  } else {
    throw ParseError("unknown tucker method \"" + method_name + "\"");
  }
  TuckerPartition part = tucker_theorem(a, method);
  report.field("support", one_based(part.support));
  report.field("x", to_string(part.x));
  report.field("y", to_string(part.y));
  Vec yta = left_mul(part.y, a);
  report.check("yTA>=0", is_nonneg(yta));
  report.check("x>=0", is_nonneg(part.x));
  report.check("Ax=0", is_zero(a * part.x));
  report.check("x+yTA>0", is_positive(part.x + yta));
  bool partition_ok = true;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool in_support = std::binary_search(part.support.begin(), part.support.end(), j);
    partition_ok = partition_ok && (in_support ? yta[j] == 0 : yta[j] > 0);
  }
  report.check("yTA zero exactly on support", partition_ok);
}

void cmd_strict_comp(Report& report, const IneqLP& lp) {
  echo_lp(report, lp);
  auto [x, y] = strict_complementary_pair(lp);
  report.field("x", to_string(x));
  report.field("y", to_string(y));
  PairReport pair_report = verify_optimal_pair(lp, x, y, true);
  for (const CheckLine& line : pair_report.checks) {
    report.check(line.name, line.pass, line.detail);
  }
}

void cmd_verify_pair(Report& report, const IneqLP& lp, const Vec& x, const Vec& y, bool strict) {
  echo_lp(report, lp);
  report.field("x", to_string(x));
  report.field("y", to_string(y));
  PairReport pair_report = verify_optimal_pair(lp, x, y, strict);
  for (const CheckLine& line : pair_report.checks) {
    report.check(line.name, line.pass, line.detail);
  }
  report.field("verdict", pair_report.pass ? "pass" : "fail");
  if (!pair_report.pass) report.field("firstViolation", pair_report.first_violation);
}

void cmd_min_infeasible(Report& report, const Mat& a, const Vec& b, std::size_t fm_cap) {
  echo_system(report, a, &b);
  IISResult iis = shrink_minimal_infeasible(a, b, fm_cap);
  report.field("subsystem", one_based(iis.rows));
  report.field("y", to_string(iis.certificate));
  for (const auto& [row, witness] : iis.reversal_witnesses) {
    report.field("witness " + std::to_string(row + 1), to_string(witness));
  }
  report.check("yTA=0", is_zero(left_mul(iis.certificate, a)));
  report.check("yTb<0", dot(iis.certificate, b) < 0);
  bool positive_on_subset = true;
  for (std::size_t r : iis.rows) positive_on_subset = positive_on_subset && iis.certificate[r] > 0;
  report.check("y>0 on subsystem", positive_on_subset);
  bool reversals_ok = true;
  for (const auto& [row, witness] : iis.reversal_witnesses) {
    reversals_ok = reversals_ok && dot(a.row(row), witness) > b[row];
  }
  report.check("reversal witnesses", reversals_ok);
}

void cmd_fm(Report& report, const Mat& a, const Vec& b, std::size_t fm_cap) {
  echo_system(report, a, &b);
  auto alt = fourier_motzkin(a, b, fm_cap);
  if (alt.is_left()) {
    report.field("verdict", "Left");
    report.field("x", to_string(alt.left_value()));
    report.check("Ax<=b", is_nonneg(b - a * alt.left_value()));
  } else {
    const Vec& y = alt.right_value();
    report.field("verdict", "Right");
    report.field("y", to_string(y));
    report.check("y>=0", is_nonneg(y));
    report.check("yTA=0", is_zero(left_mul(y, a)));
    report.check("yTb<0", dot(y, b) < 0);
  }
}

}  // namespace

int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact reductions between LP duality and zero-sum games"};
  app.require_subcommand(1);

  std::string file_path;
  std::string pair_path;
  std::string m_text;
  std::string variant = "ineq-nonneg";
  std::string gordan_method = "via-ville";
  std::string tucker_method = "summation";
  std::string target;
  bool strict = false;
  bool enumerate = false;
  std::size_t fm_cap = 10000;
  std::size_t br_cap = 8;
  std::size_t enum_cap = 10;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file_path, "JSON problem file")->required();
  };

  CLI::App* solve = app.add_subcommand("solve", "solve an LP through the extended game B_M");
  add_file(solve);
  solve->add_option("--M", m_text, "override the bound M (rational)");

  CLI::App* game = app.add_subcommand("game", "solve a zero-sum game exactly");
  add_file(game);
  game->add_flag("--enumerate", enumerate, "list all vertex optimal strategy pairs");
  game->add_option("--enum-dim-cap", enum_cap, "cap on rows+cols for enumeration");

  CLI::App* reduce = app.add_subcommand("reduce", "build a game from LP data");
  add_file(reduce);
  reduce->add_option("--target", target, "dantzig | bm | dm | brooks-reny")->required();
  reduce->add_option("--M", m_text, "bound M for bm / dm");
  reduce->add_option("--br-dim-cap", br_cap, "cap on m+n+1 for brooks-reny");

  CLI::App* bound = app.add_subcommand("bound-m", "print the a-priori bound M");
  add_file(bound);

  CLI::App* farkas_cmd = app.add_subcommand("farkas", "Lemma of Farkas certificate");
  add_file(farkas_cmd);
  farkas_cmd->add_option("--variant", variant, "eq | ineq-nonneg | ineq-free");

  CLI::App* gordan_cmd = app.add_subcommand("gordan", "Theorem of Gordan certificate");
  add_file(gordan_cmd);
  gordan_cmd->add_option("--method", gordan_method, "via-ville | via-stiemke");

  CLI::App* ville_cmd = app.add_subcommand("ville", "Theorem of Ville certificate");
  add_file(ville_cmd);

  CLI::App* stiemke_cmd = app.add_subcommand("stiemke", "Theorem of Stiemke certificate");
  add_file(stiemke_cmd);

  CLI::App* tucker_cmd = app.add_subcommand("tucker", "Tucker partition of the columns");
  add_file(tucker_cmd);
  tucker_cmd->add_option("--method", tucker_method, "summation | elimination");

  CLI::App* strict_cmd = app.add_subcommand("strict-comp", "strictly complementary optimal pair");
  add_file(strict_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify-pair", "check a claimed optimal pair");
  add_file(verify_cmd);
  verify_cmd->add_option("--pair", pair_path, "JSON file with x and y")->required();
  verify_cmd->add_flag("--strict", strict, "also require strict complementarity");

  CLI::App* minf_cmd = app.add_subcommand("min-infeasible", "minimally infeasible subsystem");
  add_file(minf_cmd);
  minf_cmd->add_option("--fm-row-cap", fm_cap, "Fourier-Motzkin row cap");

  CLI::App* fm_cmd = app.add_subcommand("fm", "Fourier-Motzkin feasibility");
  add_file(fm_cmd);
  fm_cmd->add_option("--fm-row-cap", fm_cap, "Fourier-Motzkin row cap");

  CLI::App* slack_cmd = app.add_subcommand("min-slack-w", "least slack making both LPs feasible");
  add_file(slack_cmd);

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes reversed args
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    ProblemFile file = parse_problem_file(read_file(file_path));
    std::optional<Rat> m_flag;
    if (!m_text.empty()) m_flag = parse_rat_flag(m_text, "--M");

    Report report;
    if (app.got_subcommand(solve)) {
      report.field("command", "solve");
      cmd_solve(report, need_lp(file), m_flag);
    } else if (app.got_subcommand(game)) {
      report.field("command", "game");
      cmd_game(report, need_game(file), enumerate, enum_cap);
    } else if (app.got_subcommand(reduce)) {
      report.field("command", "reduce --target " + target);
      cmd_reduce(report, file, target, m_flag, br_cap);
    } else if (app.got_subcommand(bound)) {
      report.field("command", "bound-m");
      echo_lp(report, need_lp(file));
      report.field("M", rat_to_string(bound_M(need_lp(file))));
    } else if (app.got_subcommand(farkas_cmd)) {
      report.field("command", "farkas --variant " + variant);
      cmd_farkas(report, need_rows(file), need_rhs(file), variant);
    } else if (app.got_subcommand(gordan_cmd)) {
      report.field("command", "gordan --method " + gordan_method);
      cmd_gordan(report, need_rows(file), gordan_method);
    } else if (app.got_subcommand(ville_cmd)) {
      report.field("command", "ville");
      cmd_ville(report, need_rows(file));
    } else if (app.got_subcommand(stiemke_cmd)) {
      report.field("command", "stiemke");
      cmd_stiemke(report, need_rows(file));
    } else if (app.got_subcommand(tucker_cmd)) {
      report.field("command", "tucker --method " + tucker_method);
      cmd_tucker(report, need_rows(file), tucker_method);
    } else if (app.got_subcommand(strict_cmd)) {
      report.field("command", "strict-comp");
      cmd_strict_comp(report, need_lp(file));
    } else if (app.got_subcommand(verify_cmd)) {
      report.field("command", std::string("verify-pair") + (strict ? " --strict" : ""));
      auto [x, y] = parse_pair_file(read_file(pair_path));
      cmd_verify_pair(report, need_lp(file), x, y, strict);
    } else if (app.got_subcommand(minf_cmd)) {
      report.field("command", "min-infeasible");
      cmd_min_infeasible(report, need_rows(file), need_rhs(file), fm_cap);
    } else if (app.got_subcommand(fm_cmd)) {
      report.field("command", "fm");
      cmd_fm(report, need_rows(file), need_rhs(file), fm_cap);
    } else if (app.got_subcommand(slack_cmd)) {
      report.field("command", "min-slack-w");
      echo_lp(report, need_lp(file));
      report.field("w", rat_to_string(min_slack_w(need_lp(file))));
    }
    out << report.body.str();
    return 0;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lpgame
