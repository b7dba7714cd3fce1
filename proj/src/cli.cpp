#include "ospkw/cli.hpp"

#include "ospkw/serialize.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace ospkw {

namespace {

Check make_check(std::string name, const Algebra& alg, bool passed, std::string detail = {}) {
  return Check{std::move(name), alg.name(), passed, std::move(detail)};
}

// Runs body and turns any library error into a failed check.
template <class F>
Check guarded(const std::string& name, const Algebra& alg, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return make_check(name, alg, false, std::string(error_code_name(e.code())) + ": " + e.what());
  }
}

std::optional<long> euler_constant(const Algebra& alg) {
  if (alg.is_b() && alg.m == alg.n) return 1L << alg.n;
  if (alg.is_d() && alg.m == alg.n) return 1L << (alg.n - 1);
  if (alg.is_d() && alg.m == alg.n + 1) return 1L << alg.n;
  return std::nullopt;
}

constexpr std::int64_t kVerifySize = 4;

}  // namespace

std::vector<Check> verify_algebra(const Algebra& alg, const CharacterOptions& opt) {
  std::vector<Check> out;
  const LaurentPolynomial one = LaurentPolynomial::constant(alg.n, alg.m, 1);
  const HookPartition trivial = HookPartition::make({}, alg.n, alg.m);

  if (is_tame(trivial, alg).tame)
    out.push_back(guarded("trivial KW = 1", alg, [&] {
      const auto cr = kw_character(trivial, alg, false, opt);
      return make_check("trivial KW = 1", alg, cr.character == one, "j = " + std::to_string(cr.j_used));
    }));

  if (const auto c = euler_constant(alg))
    out.push_back(guarded("Euler constant", alg, [&] {
      const BorelData b = b_odd(alg);
      std::vector<Weight> levi;
      for (std::size_t i = 0; i + 1 < b.simple_roots.size(); ++i) levi.push_back(b.simple_roots[i].weight);
      const auto e = euler_char_character(levi, Weight::zero(alg.n, alg.m), b, opt);
      return make_check("Euler constant", alg, e == one.scaled(*c), "expected " + std::to_string(*c));
    }));

  out.push_back(guarded("Euler = KW", alg, [&] {
    std::size_t compared = 0;
    for (const auto& lam : hook_partitions(alg.n, alg.m, kVerifySize))
      for (bool minus : {false, true}) {
        if (minus && alg.is_b()) continue;
        const auto r = is_tame(lam, alg, minus);
        if (!r.tame) continue;
        const BorelData b = r.witness_borel ? *r.witness_borel : b_st(alg);
        if (euler_char_character(r.levi_simple_roots, r.highest_weight, b, opt) !=
            kw_character(lam, alg, minus, opt).character)
          return make_check("Euler = KW", alg, false, "mismatch at lambda = (" + lam.str() + ")");
        ++compared;
      }
    return make_check("Euler = KW", alg, true, std::to_string(compared) + " modules");
  }));

  out.push_back(guarded("denominators", alg, [&] {
    const auto [d0, d1] = denominators(b_st(alg));
    for (const auto& seq : all_sequences(alg)) {
      const auto [x0, x1] = denominators(borel_from_sequence(alg, seq));
      if (x1 != d1) return make_check("denominators", alg, false, "D_1 differs at " + seq.str());
      if (x0 != d0 && x0 != -d0) return make_check("denominators", alg, false, "D_0 differs at " + seq.str());
    }
    for (const auto& w : weyl_elements(alg))
      if (apply_weyl(w, d1) != d1) return make_check("denominators", alg, false, "D_1 not W-invariant");
    return make_check("denominators", alg, true);
  }));

  if (alg.is_d())
    out.push_back(guarded("sigma twist", alg, [&] {
      for (const auto& lam : hook_partitions(alg.n, alg.m, kVerifySize)) {
        const auto r = is_tame(lam, alg, true);
        if (!r.tame) continue;
        if (kw_character_on(r, opt) != sigma_twist(kw_character_on(is_tame(lam, alg), opt)))
          return make_check("sigma twist", alg, false, "mismatch at lambda = (" + lam.str() + ")");
      }
      return make_check("sigma twist", alg, true);
    }));

  out.push_back(guarded("Weyl sum strategies", alg, [&] {
    for (const auto& lam : hook_partitions(alg.n, alg.m, 2)) {
      const auto r = is_tame(lam, alg);
      if (!r.tame) continue;
      if (kw_character_on(r, {opt.threads, WeylSum::Naive}) != kw_character_on(r, {opt.threads, WeylSum::Orbit}))
        return make_check("Weyl sum strategies", alg, false, "mismatch at lambda = (" + lam.str() + ")");
    }
    return make_check("Weyl sum strategies", alg, true);
  }));
  return out;
}

namespace {

HookPartition request_partition(const Request& req) {
  return HookPartition::parse(req.partition, req.algebra->n, req.algebra->m);
}

std::string text_of(const TamenessReport& r) {
  std::ostringstream s;
  s << "algebra " << r.algebra.name() << "\nlambda (" << r.lambda.str() << ")" << (r.minus ? " minus" : "") << "\n";
  s << "k " << r.atypicality_k << "\ntame " << (r.tame ? "yes" : "no") << "\n";
  if (r.tame) {
    if (r.witness_borel) s << "borel " << r.witness_borel->sequence.str() << "\n";
    s << "hw " << display(r.highest_weight) << "\nT";
    for (const Root& t : r.distinguished_T) s << " " << root_string(t);
    s << "\n";
    if (r.e_lambda) s << "e " << *r.e_lambda << "\n";
    s << "j " << r.j_lambda << "\n";
  }
  return s.str();
}

std::string text_of(const BottomTrace& t) {
  std::ostringstream s;
  s << "(" << t.start.str() << ")\n";
  for (const BottomStep& st : t.steps)
    s << "  " << display(st.before) << "  b_j = " << to_string(st.b_j) << ", b~ = " << to_string(st.b_tilde)
      << "\n  -> " << display(st.after) << "  (" << st.partition.str() << ")\n";
  s << "bottom (" << t.result.str() << ")\n";
  return s.str();
}

std::string text_of(const CharacterResult& cr) {
  std::ostringstream s;
  s << "algebra " << cr.algebra.name() << "\nlambda (" << cr.lambda.str() << ")" << (cr.minus ? " minus" : "")
    << "\nk " << cr.atypicality_k << "\nborel " << cr.borel_used.sequence.str() << "\nhw " << display(cr.highest_weight)
    << "\nj " << cr.j_used << "\ndim " << cr.dimension.str() << "\n" << to_monomial_string(cr.character) << "\n";
  return s.str();
}

Response dispatch(const Request& req) {
  const CharacterOptions opt{std::max(1u, req.threads), req.weyl_sum};
  const bool json = req.output == OutputFormat::Json;
  if (req.command == "verify") {
    std::vector<Algebra> algs;
    if (req.algebra) {
      if (req.algebra->m > req.max_rank || req.algebra->n > req.max_rank)
        fail(ErrorCode::RankTooLarge, req.algebra->name() + " exceeds --max-rank " + std::to_string(req.max_rank));
      algs.push_back(*req.algebra);
    } else {
      for (std::size_t m = 1; m <= req.max_rank; ++m)
        for (std::size_t n = 1; n <= req.max_rank; ++n) {
          algs.push_back(Algebra::make(Family::B, m, n));
          if (m >= 2) algs.push_back(Algebra::make(Family::D, m, n));
        }
    }
    std::vector<Check> checks;
    for (const Algebra& a : algs)
      for (Check& c : verify_algebra(a, opt)) checks.push_back(std::move(c));
    bool ok = true;
    Json arr = Json::array();
    std::ostringstream text;
    for (const Check& c : checks) {
      ok = ok && c.passed;
      arr.push_back(Json{{"name", c.name}, {"algebra", c.algebra}, {"passed", c.passed}, {"detail", c.detail}});
      text << (c.passed ? "PASS " : "FAIL ") << c.algebra << " " << c.name << (c.detail.empty() ? "" : ": ")
           << c.detail << "\n";
    }
    return Response{ok ? 0 : 2, json ? Json{{"passed", ok}, {"checks", arr}}.dump(2) + "\n" : text.str()};
  }

  if (!req.algebra) fail(ErrorCode::ParseError, "--algebra is required");
  const Algebra& alg = *req.algebra;
  if (req.minus && !alg.is_d()) fail(ErrorCode::FamilyMismatch, "--minus applies to family D only");
  const HookPartition lam = request_partition(req);

  if (req.command == "classify") {
    const auto r = is_tame(lam, alg, req.minus);
    return Response{0, json ? to_json(r).dump(2) + "\n" : text_of(r)};
  }
  if (req.command == "bottom") {
    const auto t = bottom_of_block(lam, alg);
    return Response{0, json ? to_json(t, alg).dump(2) + "\n" : text_of(t)};
  }
  if (req.command == "character") {
    const auto cr = kw_character(lam, alg, req.minus, opt);
    return Response{0, json ? to_json(cr).dump(2) + "\n" : text_of(cr)};
  }
  if (req.command == "block-family") {
    const auto fam = lambda_x_family(lam, alg);
    if (json) return Response{0, to_json(fam, alg).dump(2) + "\n"};
    std::ostringstream s;
    for (const auto& [x, p] : fam) s << x << " (" << p.str() << ")\n";
    return Response{0, s.str()};
  }
  fail(ErrorCode::ParseError, "unknown command '" + req.command + "'");
}

Response error_response(ErrorCode code, const std::string& message, OutputFormat fmt) {
  const int status = is_internal_fault(code) ? 2 : 1;
  if (fmt == OutputFormat::Text) return Response{status, "error " + std::string(error_code_name(code)) + ": " + message + "\n"};
  return Response{status, error_json(code, message).dump(2) + "\n"};
}

}  // namespace

Response run(const Request& req) {
  try {
    return dispatch(req);
  } catch (const Error& e) {
    return error_response(e.code(), e.what(), req.output);
  } catch (const std::exception& e) {
    return error_response(ErrorCode::InternalError, e.what(), req.output);
  }
}

Response run_command_line(int argc, const char* const* argv) {
  CLI::App app{"Characters of tame modules over osp(2m+1|2n) and osp(2m|2n)", "ospkw"};
  app.require_subcommand(1);
  Request req;
  std::string algebra, output = "json", weyl = "orbit";

  auto add_common = [&](CLI::App* sub, bool needs_lambda) {
    sub->add_option("--algebra", algebra, "B:m:n or D:m:n")->required(needs_lambda);
    if (needs_lambda) sub->add_option("--partition", req.partition, "comma-separated parts");
    sub->add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--threads", req.threads, "worker threads for the Weyl sum")->check(CLI::PositiveNumber);
    sub->add_option("--weyl-sum", weyl, "naive or orbit")->check(CLI::IsMember({"naive", "orbit"}));
  };
  for (const char* name : {"classify", "character"}) {
    auto* sub = app.add_subcommand(name, name == std::string("classify") ? "tameness report" : "KW character");
    add_common(sub, true);
    sub->add_flag("--minus", req.minus, "use the sigma twin (family D)");
  }
  add_common(app.add_subcommand("bottom", "bottom-of-block trace"), true);
  add_common(app.add_subcommand("block-family", "lambda(x) family (family D, k = 1)"), true);
  auto* verify = app.add_subcommand("verify", "identity suite");
  add_common(verify, false);
  verify->add_option("--max-rank", req.max_rank, "largest m and n checked")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return Response{0, app.help()};
  } catch (const CLI::ParseError& e) {
    return error_response(ErrorCode::ParseError, e.what(), OutputFormat::Json);
  }
  req.command = app.get_subcommands().front()->get_name();
  req.output = output == "text" ? OutputFormat::Text : OutputFormat::Json;
  req.weyl_sum = weyl == "naive" ? WeylSum::Naive : WeylSum::Orbit;
  if (!algebra.empty()) {
    try {
      req.algebra = Algebra::parse(algebra);
    } catch (const Error& e) {
      return error_response(e.code(), e.what(), req.output);
    }
  }
  return run(req);
}

}  // namespace ospkw
