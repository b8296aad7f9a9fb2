#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "rootadj/error.hpp"
#include "rootadj/render.hpp"
#include "rootadj/serialize.hpp"

using namespace rootadj;

namespace {

constexpr int kExitDefinite = 0;
constexpr int kExitInput = 1;
constexpr int kExitOpen = 2;
constexpr int kExitBorderline = 3;

struct Options {
  std::string in;
  std::string role;
  long num = 0, den = 0;
  std::string out;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Problem {
  GroupSpec spec;
  Tolerances tol;
};

Problem load(const Options& o) {
  Problem p;
  p.spec = parse_group_spec(read_input(o.in));
  p.tol = Tolerances::from_environment();
  if (p.spec.tolerances) p.tol = p.spec.tolerances->apply(p.tol);
  return p;
}

RootSpec root_of(const Options& o, const GroupSpec& spec, bool required) {
  RootSpec r = spec.root.value_or(RootSpec{});
  if (!o.role.empty()) r.role = o.role == "A" ? Role::A : Role::B;
  if (o.num > 0) r.num = o.num;
  if (o.den > 0) r.den = o.den;
  if (required && !spec.root && (o.role.empty() || o.num <= 0 || o.den <= 0))
    throw Error(ErrorCode::ValidationError, "root: give --role, --num and --den or a root field");
  return r;
}

int verdict_exit(const Verdict& v) {
  if (v.borderline()) return kExitBorderline;
  if (v.outcome == Outcome::NeedsEllipticAlgorithm) return kExitOpen;
  return kExitDefinite;
}

Json root_json(const RootSpec& r) { return {{"role", to_string(r.role)}, {"num", r.num}, {"den", r.den}}; }

// Stopping input is a precondition of the decision; otherwise report the reduction attempt.
int report_not_stopping(const HexagonConfig& h, const NotStopping& ns, const Tolerances& tol) {
  Json j = {{"status", "inconclusive"}, {"stopping", to_json(StoppingResult(ns))}};
  try {
    ReduceResult r = nielsen_trace_reduce(h.a, h.b, 100, tol);
    j["reduction"] = {{"status", to_string(r.status)},
                      {"pair", {to_json(r.pair.first), to_json(r.pair.second)}},
                      {"fsequence", r.fsequence.runs}};
    if (r.witness) j["reduction"]["witness"] = to_json(*r.witness);
  } catch (const Error& e) {
    j["reduction"] = {{"error", to_string(e.code())}, {"message", e.what()}};
  }
  print(j);
  return kExitOpen;
}

int run_classify(const Options& o) {
  Problem p = load(o);
  print({{"A", to_json(classify(p.spec.a, p.tol))},
         {"B", to_json(classify(p.spec.b, p.tol))},
         {"A^-1B", to_json(classify(p.spec.a.inverse() * p.spec.b, p.tol))}});
  return kExitDefinite;
}

int run_hexagon(const Options& o) {
  Problem p = load(o);
  HexagonConfig h = build_hexagon(p.spec.a, p.spec.b, p.tol);
  print({{"hexagon", to_json(h)}, {"stopping", to_json(classify_stopping(h, p.tol))}});
  return kExitDefinite;
}

int run_adjoin(const Options& o, bool verify) {
  Problem p = load(o);
  RootSpec r = root_of(o, p.spec, true);
  HexagonConfig h = build_hexagon(p.spec.a, p.spec.b, p.tol);
  StoppingResult s = classify_stopping(h, p.tol);
  if (const auto* ns = std::get_if<NotStopping>(&s)) return report_not_stopping(h, *ns, p.tol);

  DecideOptions opt;
  opt.tol = p.tol;
  Verdict v = decide_rational_power(h, r.role, r.num, r.den, opt);
  PowerSplit split = reduce_rational_power(r.num, r.den);
  Json j = {{"root", root_json(r)}, {"split", {{"w", split.w}, {"r", split.r}}}, {"verdict", to_json(v)}};
  if (!verify) {
    print(j);
    return verdict_exit(v);
  }
  CrossCheckReport rep = cross_check(v, h, r.role, r.num, r.den, p.tol);
  j["report"] = to_json(rep);
  print(j);
  if (v.borderline()) return kExitBorderline;
  if (rep.status != CheckStatus::Agreement || v.outcome == Outcome::NeedsEllipticAlgorithm) return kExitOpen;
  return kExitDefinite;
}

int run_render(const Options& o) {
  Problem p = load(o);
  HexagonConfig h = build_hexagon(p.spec.a, p.spec.b, p.tol);
  std::optional<RootLineFan> fan;
  if (p.spec.root || !o.role.empty()) {
    RootSpec r = root_of(o, p.spec, false);
    if (r.den > 1) fan = root_line_fan(h, r.role, r.den, r.den, p.tol);
  }
  std::string svg = render_svg(h, fan ? &*fan : nullptr);
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.out);
  f << svg;
  print({{"written", o.out}, {"fan_lines", fan ? fan->lines.size() : 0}});
  return kExitDefinite;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discreteness of two-generator groups after adjoining roots"};
  app.require_subcommand(1);
  Options o;
  auto add_in = [&](CLI::App* c) { c->add_option("--in", o.in, "group spec JSON (default stdin)"); };
  auto add_root = [&](CLI::App* c) {
    c->add_option("--role", o.role, "generator to take the root of")->check(CLI::IsMember({"A", "B"}));
    c->add_option("--num", o.num, "exponent numerator")->check(CLI::PositiveNumber);
    c->add_option("--den", o.den, "exponent denominator")->check(CLI::PositiveNumber);
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify A, B and A^-1B");
  CLI::App* hexagon_cmd = app.add_subcommand("hexagon", "build the hexagon and its stopping class");
  CLI::App* adjoin_cmd = app.add_subcommand("adjoin", "decide discreteness after adjoining a rational power");
  CLI::App* verify_cmd = app.add_subcommand("verify", "decide and cross-check the verdict");
  CLI::App* render_cmd = app.add_subcommand("render", "draw the hexagon (and fan) as SVG");
  for (CLI::App* c : {classify_cmd, hexagon_cmd, adjoin_cmd, verify_cmd, render_cmd}) add_in(c);
  for (CLI::App* c : {adjoin_cmd, verify_cmd, render_cmd}) add_root(c);
  render_cmd->add_option("--out", o.out, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*classify_cmd) return run_classify(o);
    if (*hexagon_cmd) return run_hexagon(o);
    if (*adjoin_cmd) return run_adjoin(o, false);
    if (*verify_cmd) return run_adjoin(o, true);
    if (*render_cmd) return run_render(o);
  } catch (const Error& e) {
    Json j = {{"error", to_string(e.code())}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
