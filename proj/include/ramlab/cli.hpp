/**
 * @file ramlab/cli.hpp
 * @brief Command dispatch behind the `ramlab` executable.
 *
 * Exit codes: 0 success, 1 malformed input, 2 domain validation failure,
 * 3 a property check failed (`check` only).
 */
#pragma once

#include "ramlab/checks.hpp"
#include "ramlab/json_io.hpp"
#include "ramlab/plot.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace ramlab::cli {

using io::Json;

enum class Format { Json, Csv };

struct Command {
  std::string name;  // gauss | supnorm | proot | ram | breakdec | delta | newton | check
  Json input;        // parsed input document (ignored by `check`)
  Format format = Format::Json;
  std::optional<std::int64_t> p;
  std::uint64_t seed = 1;
  /// Suite run by `check`; empty means checks::run_all.
  std::function<CheckReport(std::uint64_t)> suite;
};

enum ExitCode { kOk = 0, kMalformed = 1, kDomain = 2, kCheckFailed = 3 };

namespace detail {

inline std::int64_t prime_from(const Json& in, const Command& cmd) {
  if (in.is_object() && in.contains("p")) return io::int_field(in, "p");
  if (cmd.p) return *cmd.p;
  throw io::SchemaError("a prime p is required (input field \"p\" or --p)");
}

/// A profile document, a generator ({"generator": "LQ" | "kummer_char", ...})
/// or a direct sum ({"sum": [...]}).
inline BreakProfile profile_input(const Json& in, const Command& cmd) {
  if (in.contains("sum")) {
    const auto& parts = in.at("sum");
    if (!parts.is_array() || parts.empty()) throw io::SchemaError("'sum' must be a non-empty array");
    BreakProfile acc = profile_input(parts.front(), cmd);
    for (std::size_t k = 1; k < parts.size(); ++k) {
      const auto next = profile_input(parts[k], cmd);
      acc.curves.insert(acc.curves.end(), next.curves.begin(), next.curves.end());
      acc.l = std::max(acc.l, next.l);
    }
    return acc;
  }
  if (in.contains("generator")) {
    const auto kind = io::field(in, "generator").get<std::string>();
    const std::int64_t l = in.contains("l") ? io::int_field(in, "l") : 1;
    if (kind == "LQ") return profile_LQ(io::int_field(in, "nq"), io::int_field(in, "mq"), prime_from(in, cmd), l);
    if (kind == "kummer_char")
      return profile_kummer_char(prime_from(in, cmd), static_cast<int>(io::int_field(in, "j")), l);
    throw io::SchemaError("unknown generator '" + kind + "'");
  }
  return io::profile_from_json(in);
}

inline RamPoint rampoint_input(const Json& in, const Command& cmd) {
  if (in.contains("kummer")) {
    const auto& k = in.at("kummer");
    const Rat rho = k.contains("rho") ? io::rat_from_json(k.at("rho")) : Rat(0);
    return ram_from_kummer(static_cast<int>(io::int_field(k, "n")), prime_from(k, cmd), rho);
  }
  return io::rampoint_from_json(in);
}

inline Json run_gauss(const Command& cmd) {
  const auto& in = cmd.input;
  const Side side = in.contains("side") ? io::side_from_json(in.at("side")) : Side::Inner;
  return io::to_json(gauss_val(io::laurent_from_json(io::field(in, "f")), io::rat_from_json(io::field(in, "rho")), side));
}

inline Json run_supnorm(const Command& cmd) {
  const auto& in = cmd.input;
  return io::to_json(sup_val(io::laurent_from_json(io::field(in, "f")), io::interval_from_json(io::field(in, "interval"))));
}

inline Json run_proot(const Command& cmd) {
  const auto& in = cmd.input;
  const auto iv = io::interval_from_json(io::field(in, "interval"));
  const auto p = prime_from(in, cmd);
  Json out = Json::object();
  LaurentVal h;
  if (in.contains("u")) {
    const auto dec = unit_decompose(io::laurent_from_json(in.at("u")), iv);
    if (!dec) return Json{{"result", "NotUnit"}};
    out["n"] = dec->n;
    out["c"] = io::to_json(dec->c);
    out["h"] = io::to_json(dec->h);
    h = dec->h;
  } else {
    h = io::laurent_from_json(io::field(in, "h"));
  }
  const auto shrink = pth_root_shrink(h, iv, p);
  if (!shrink) {
    out["result"] = "Impossible";
    return out;
  }
  out["result"] = "ok";
  out["sigma"] = io::to_json(shrink->sigma);
  out["strict"] = shrink->strict;
  return out;
}

inline Json run_ram(const Command& cmd) {
  const auto rp = rampoint_input(cmd.input, cmd);
  Json lower = Json::array(), upper = Json::array();
  for (const auto& w : jumps_lower(rp)) {
    lower.push_back(io::to_json(w));
    upper.push_back(io::to_json(phi_upper(rp, w)));
  }
  return Json{{"jumps_lower", lower},
              {"jumps_upper", upper},
              {"artin_flat", io::to_json(artin_flat(rp))},
              {"swan_nat", io::to_json(swan_nat(rp))},
              {"different", io::to_json(different_val(rp))},
              {"delta_value", io::to_json(delta_value(rp))}};
}

inline Json run_breakdec(const Command& cmd) {
  const auto rep = io::filtered_rep_from_json(cmd.input);
  const auto dec = break_decompose(rep);
  auto report = verify_break_props(rep, dec);
  report.merge(hom_vanishing_check(rep, dec));
  if (rep.ring().n >= 2) report.merge(base_change_check(rep));
  Json ranks = Json::array();
  for (const auto& c : dec.components) ranks.push_back(Json{{"index", c.index}, {"rank", c.rank}});
  return Json{{"ranks", ranks}, {"components", io::to_json(dec)}, {"verify", io::to_json(report)}};
}

inline Json run_newton(const BreakProfile& pr) {
  Json breaks = Json::array();
  for (const auto& b : newton_breaks(pr)) breaks.push_back(io::to_json(b));
  return Json{{"beta", io::to_json(beta_function(pr))},
              {"breaks", breaks},
              {"rank", pr.rank()},
              {"linearity_onset", io::to_json(linearity_onset(pr))}};
}

}  // namespace detail

/// Runs one command, writing its result to `out`. Errors go to `err`.
inline int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.format == Format::Csv && cmd.name != "delta" && cmd.name != "newton")
      throw io::SchemaError("csv output is only available for delta and newton");
    if (cmd.name != "check" && !cmd.input.is_object()) throw io::SchemaError("input must be a JSON object");

    Json result;
    if (cmd.name == "gauss") {
      result = detail::run_gauss(cmd);
    } else if (cmd.name == "supnorm") {
      result = detail::run_supnorm(cmd);
    } else if (cmd.name == "proot") {
      result = detail::run_proot(cmd);
    } else if (cmd.name == "ram") {
      result = detail::run_ram(cmd);
    } else if (cmd.name == "breakdec") {
      result = detail::run_breakdec(cmd);
    } else if (cmd.name == "delta") {
      const auto delta = delta_from_profile(detail::profile_input(cmd.input, cmd));
      if (cmd.format == Format::Csv) {
        write_plot_csv(delta, out);
        return kOk;
      }
      result = io::to_json(delta);
    } else if (cmd.name == "newton") {
      const auto pr = detail::profile_input(cmd.input, cmd);
      if (cmd.format == Format::Csv) {
        write_plot_csv(beta_function(pr), out);
        return kOk;
      }
      result = detail::run_newton(pr);
    } else if (cmd.name == "check") {
      const auto report = cmd.suite ? cmd.suite(cmd.seed) : checks::run_all(cmd.seed);
      for (const auto& it : report.items)
        err << (it.passed ? "PASS " : "FAIL ") << it.name << (it.detail.empty() ? "" : " (" + it.detail + ")") << '\n';
      auto doc = io::to_json(report);
      doc["seed"] = cmd.seed;
      out << doc.dump(2) << '\n';
      return report.ok() ? kOk : kCheckFailed;
    } else {
      throw io::SchemaError("unknown command '" + cmd.name + "'");
    }
    out << result.dump(2) << '\n';
    return kOk;
  } catch (const io::SchemaError& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const nlohmann::json::exception& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::invalid_argument& e) {
    err << "validation failed: " << e.what() << '\n';
    return kDomain;
  } catch (const std::domain_error& e) {
    err << "validation failed: " << e.what() << '\n';
    return kDomain;
  } catch (const std::out_of_range& e) {
    err << "validation failed: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace ramlab::cli
