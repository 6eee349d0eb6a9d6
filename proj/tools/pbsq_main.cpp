// pbsq: segment prime counts, sect search, ratchet analysis, estimators, and
// the modulator state machines, with JSON/CSV/text reports.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbsq/errors.hpp"
#include "pbsq/estimators.hpp"
#include "pbsq/modulator.hpp"
#include "pbsq/parallel.hpp"
#include "pbsq/prime_table.hpp"
#include "pbsq/ratchets.hpp"
#include "pbsq/report.hpp"
#include "pbsq/sects.hpp"
#include "pbsq/segments.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
  std::string format = "text";
  int threads = pbsq::default_thread_count();
  bool no_meta = false;
  bool extended = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format: json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--threads", opts.threads, "Worker threads for chunked scans");
  cmd->add_flag("--no-meta", opts.no_meta, "Omit runtime fields for byte-stable output");
  cmd->add_flag("--extended", opts.extended, "Allow long runs (j=10 scan, horizons past 1e7)");
}

// Guard large sieves behind --extended; cache dense tables under PBSQ_CACHE_DIR.
pbsq::PrimeTable make_table(uint64_t limit, const CommonOpts& opts) {
  if (limit > 200'000'000 && !opts.extended) {
    throw pbsq::CapacityError("sieve to " + std::to_string(limit) +
                              " needs --extended (guard at 2e8)");
  }
  const char* dir = std::getenv("PBSQ_CACHE_DIR");
  if (dir != nullptr && *dir != '\0' && limit <= pbsq::PrimeTable::kDefaultSegmentedThreshold) {
    std::filesystem::path path =
        std::filesystem::path(dir) / ("primes_" + std::to_string(limit) + ".pbsq");
    if (std::filesystem::exists(path)) {
      try {
        return pbsq::PrimeTable::load_cache(path);
      } catch (const std::exception& e) {
        std::cerr << "warning: ignoring bad cache " << path << ": " << e.what() << "\n";
      }
    }
    pbsq::PrimeTable table = pbsq::PrimeTable::sieve_upto(limit);
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    try {
      table.save_cache(path);
    } catch (const std::exception& e) {
      std::cerr << "warning: could not write cache " << path << ": " << e.what() << "\n";
    }
    return table;
  }
  return pbsq::PrimeTable::sieve_upto(limit);
}

json command_envelope(const std::string& command, json params, const CommonOpts& opts) {
  json j;
  j["command"] = command;
  j["params"] = std::move(params);
  if (!opts.no_meta) j["runtime_ms"] = nullptr;  // filled by emit_report
  return j;
}

int emit_report(const pbsq::VerificationReport& report, const std::string& command, json params,
                const CommonOpts& opts) {
  if (opts.format == "json") {
    json j = command_envelope(command, std::move(params), opts);
    json r = report.to_json(!opts.no_meta);
    j["horizon"] = report.range_hi;
    j["results"] = {{"claim", report.claim}, {"pass", report.pass()}};
    j["violations"] = r["violations"];
    j["witnesses"] = r["witnesses"];
    if (!opts.no_meta) j["runtime_ms"] = report.runtime_ms;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (report.pass() ? "PASS" : "FAIL") << " " << report.claim << " over ["
              << report.range_lo << ", " << report.range_hi << "]: " << report.violations.size()
              << " violation(s)\n";
    for (const auto& v : report.violations) {
      std::cout << "  violation: " << v.label << " at n=" << v.n
                << " value=" << pbsq::format_double(v.value) << "\n";
    }
    for (const auto& w : report.extremes) {
      std::cout << "  witness: " << w.label << " at n=" << w.n
                << " value=" << pbsq::format_double(w.value) << "\n";
    }
    if (!opts.no_meta) {
      std::cout << "  runtime_ms: " << pbsq::format_double(report.runtime_ms) << "\n";
    }
  }
  return report.pass() ? 0 : 2;
}

int run_segment_verify(const std::string& which, uint64_t max_n, bool real_mode,
                       const CommonOpts& opts) {
  uint64_t limit =
      real_mode ? (max_n + 2) * (max_n + 2) : (max_n + 1) * (max_n + 1);
  pbsq::PrimeTable table = make_table(limit, opts);
  if (opts.format == "csv" && which != "legendre-real") {
    pbsq::segment_table_csv(max_n, table, std::cout);
    return 0;
  }
  pbsq::VerificationReport report;
  if (which == "legendre") {
    report = pbsq::verify_theorem1(
        max_n, real_mode ? pbsq::Theorem1Mode::Real : pbsq::Theorem1Mode::Integer, table,
        opts.threads);
  } else if (which == "oppermann") {
    report = pbsq::verify_theorem2(max_n, table, opts.threads);
  } else {
    report = pbsq::verify_prime_limit_bounds(max_n, table, opts.threads);
  }
  return emit_report(report, "verify " + which, {{"max_n", max_n}, {"real", real_mode}}, opts);
}

json anchored_to_json(const pbsq::AnchoredSect& a) {
  json j;
  j["start"] = a.start;
  j["center"] = a.center;
  if (a.center_multiple != 0) j["center_multiple"] = a.center_multiple;
  j["reversed"] = a.reversed;
  j["labels"] = a.labels;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale prime verification: segments, sects, ratchets, estimators"};
  app.require_subcommand(1);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Run a verification driver");
  verify->require_subcommand(1);

  struct {
    uint64_t max_n = 10000;
    bool real_mode = false;
    uint64_t max_p = 1000000;
    size_t j_lo = 3, j_hi = 9;
    uint64_t horizon = 10000000;
    uint64_t lo = 2, hi = 1000000;
    uint64_t rosser_max = 1000000;
  } v;
  CommonOpts vc;

  auto* legendre = verify->add_subcommand("legendre", "Theorem 1: primes in every segment");
  legendre->add_option("--max-n", v.max_n, "Verify segments up to n");
  legendre->add_flag("--real", v.real_mode, "Verify the real-root form at all critical roots");
  add_common(legendre, vc);

  auto* oppermann = verify->add_subcommand("oppermann", "Theorem 2: primes in half segments");
  oppermann->add_option("--max-n", v.max_n, "Verify half segments up to n");
  add_common(oppermann, vc);

  auto* limits = verify->add_subcommand("limit-bounds", "A-(B-1) < t(n) < A+(B-1)");
  limits->add_option("--max-n", v.max_n, "Verify bounds up to n");
  add_common(limits, vc);

  auto* lemma3 = verify->add_subcommand("lemma3", "Exhaustive paradigm max vs mR/mQ formulas");
  lemma3->add_option("--j-lo", v.j_lo, "First prime index");
  lemma3->add_option("--j-hi", v.j_hi, "Last prime index (10 needs --extended)");
  add_common(lemma3, vc);

  auto* lemma4 = verify->add_subcommand("lemma4", "p_{j+1} <= 2 p_{j-1} + 1");
  lemma4->add_option("--max-p", v.max_p, "Check primes p_{j+1} up to this bound");
  add_common(lemma4, vc);

  auto* theorem1a = verify->add_subcommand("theorem1a", "Gaps never exceed 2 sqrt(p)");
  theorem1a->add_option("--horizon", v.horizon, "Largest p_j checked");
  add_common(theorem1a, vc);

  auto* corollary = verify->add_subcommand("corollary", "Both gaps < sqrt(p) past 127");
  corollary->add_option("--horizon", v.horizon, "Largest p_j checked");
  add_common(corollary, vc);

  auto* haploid = verify->add_subcommand("haploid", "Every n > 127 is diploid");
  haploid->add_option("--lo", v.lo, "Range start");
  haploid->add_option("--hi", v.hi, "Range end");
  add_common(haploid, vc);

  auto* rosser = verify->add_subcommand("rosser", "Totient lower bound, with the 23# exception");
  rosser->add_option("--max-n", v.rosser_max, "Check 3..n");
  add_common(rosser, vc);

  // ---- sects ----
  auto* sects = app.add_subcommand("sects", "Construct and search maximal sects");
  sects->require_subcommand(1);
  struct {
    size_t j = 6;
    std::string kind = "R";
    bool center_swapped = false;
    bool full = false;
    size_t count = 2;
    uint64_t limit = 0;
  } s;
  CommonOpts sc;

  auto* exhaustive = sects->add_subcommand("exhaustive", "Scan one paradigm period");
  exhaustive->add_option("--j", s.j, "Prime index (odd multisectors d2..dj)");
  exhaustive->add_flag("--full", s.full, "Scan the full period instead of the half");
  add_common(exhaustive, sc);

  auto* construct = sects->add_subcommand("construct", "Emit the mR/mQ label row");
  construct->add_option("--j", s.j, "Prime index");
  construct->add_option("--kind", s.kind, "R or Q")->check(CLI::IsMember({"R", "Q"}));
  construct->add_flag("--center-swapped", s.center_swapped, "Swap the R center pair");
  add_common(construct, sc);

  auto* occurrences = sects->add_subcommand("occurrences", "Locate sects on the number line");
  occurrences->add_option("--j", s.j, "Prime index");
  occurrences->add_option("--kind", s.kind, "R or Q")->check(CLI::IsMember({"R", "Q"}));
  occurrences->add_option("--count", s.count, "How many occurrences to find");
  occurrences->add_option("--limit", s.limit, "Scan limit (default chosen from j)");
  add_common(occurrences, sc);

  // ---- pyramid ----
  auto* pyramid = app.add_subcommand("pyramid", "Stable lines of the symmetric sieve tape");
  struct {
    size_t lines = 7;
    bool compact = false;
    bool centers = false;
  } py;
  CommonOpts pc;
  pyramid->add_option("--lines", py.lines, "Number of stable lines");
  pyramid->add_flag("--compact", py.compact, "Unspaced inner block, as charted");
  pyramid->add_flag("--centers", py.centers, "Emit center-state pairs instead of lines");
  add_common(pyramid, pc);

  // ---- ratchets ----
  auto* ratchets = app.add_subcommand("ratchets", "Gap records and ratchet candidates");
  struct {
    uint64_t horizon = 3000;
    bool candidates_only = false;
    std::optional<double> k;
  } r;
  CommonOpts rc;
  ratchets->add_option("--horizon", r.horizon, "Largest p_j scanned");
  ratchets->add_flag("--candidates-only", r.candidates_only, "List only ratchet candidates");
  ratchets->add_option("--k", r.k, "Also report the last violation of gap <= sqrt(p)/k");
  add_common(ratchets, rc);

  // ---- estimate ----
  auto* estimate = app.add_subcommand("estimate", "Li/Q/SB estimates vs pi(x)");
  struct {
    std::vector<double> xs{1000, 10000, 100000, 1000000};
    std::vector<std::string> methods{"li", "q", "sb"};
    double adjust = 0.5;
    bool with_pi = true;
  } e;
  CommonOpts ec;
  estimate->add_option("--x", e.xs, "Evaluation points");
  estimate->add_option("--methods", e.methods, "Any of li, q, sb");
  estimate->add_option("--adjust", e.adjust, "Q-estimator adjustor in (0,1)");
  estimate->add_flag("--pi,!--no-pi", e.with_pi, "Include the sieved reference column");
  add_common(estimate, ec);

  // ---- modulator ----
  auto* modulator = app.add_subcommand("modulator", "Chain runs and the E4 table");
  struct {
    size_t cells = 3;
    size_t steps = 16;
    bool e4 = false;
  } m;
  CommonOpts mc;
  modulator->add_option("--cells", m.cells, "Cells in the chain");
  modulator->add_option("--steps", m.steps, "Settled states to emit");
  modulator->add_flag("--e4", m.e4, "Print the E4 stable states, waveforms, and holes");
  add_common(modulator, mc);

  // ---- conjectures ----
  auto* conjectures = app.add_subcommand("conjectures", "Gap predicate suite");
  struct {
    uint64_t horizon = 100000;
  } cj;
  CommonOpts cc;
  conjectures->add_option("--horizon", cj.horizon, "Scan horizon");
  add_common(conjectures, cc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage/config errors are exit 1 regardless of CLI11's code
  }

  try {
    if (legendre->parsed()) return run_segment_verify("legendre", v.max_n, v.real_mode, vc);
    if (oppermann->parsed()) return run_segment_verify("oppermann", v.max_n, false, vc);
    if (limits->parsed()) return run_segment_verify("limit-bounds", v.max_n, false, vc);

    if (lemma3->parsed()) {
      auto report = pbsq::verify_lemma3(v.j_lo, v.j_hi, vc.threads, vc.extended);
      return emit_report(report, "verify lemma3", {{"j_lo", v.j_lo}, {"j_hi", v.j_hi}}, vc);
    }
    if (lemma4->parsed()) {
      pbsq::PrimeTable table = make_table(v.max_p + 16, vc);
      auto report = pbsq::verify_lemma4(v.max_p, table);
      return emit_report(report, "verify lemma4", {{"max_p", v.max_p}}, vc);
    }
    if (theorem1a->parsed() || corollary->parsed()) {
      pbsq::PrimeTable table = make_table(v.horizon + 2000, vc);
      pbsq::GapPredicateReport gap = theorem1a->parsed()
                                         ? pbsq::verify_theorem1A(v.horizon, table)
                                         : pbsq::corollary_violations(v.horizon, table);
      pbsq::VerificationReport report;
      report.claim = gap.predicate;
      report.range_lo = 2;
      report.range_hi = gap.horizon;
      report.violations = gap.violations;
      report.extremes = {gap.extremal};
      // the corollary expects violations only up to 127
      if (corollary->parsed()) {
        report.violations.clear();
        for (const auto& w : gap.violations) {
          if (w.n > 127) report.violations.push_back(w);
        }
        report.extremes.push_back(
            pbsq::Witness{"gap >= sqrt(p) occurrences at or below 127",
                          gap.violations.size() - report.violations.size(), 0.0});
      }
      return emit_report(report, theorem1a->parsed() ? "verify theorem1a" : "verify corollary",
                         {{"horizon", v.horizon}}, vc);
    }
    if (haploid->parsed()) {
      pbsq::PrimeTable table = make_table(v.hi + pbsq::isqrt(v.hi) + 16, vc);
      auto report = pbsq::verify_haploid(v.lo, v.hi, table);
      return emit_report(report, "verify haploid", {{"lo", v.lo}, {"hi", v.hi}}, vc);
    }
    if (rosser->parsed()) {
      pbsq::PrimeTable table = make_table(v.rosser_max, vc);
      auto report = pbsq::rosser_schoenfeld_check(v.rosser_max, table);
      auto pt = pbsq::rosser_check_23_primorial();
      report.extremes.push_back(pbsq::Witness{
          std::string("23#: 5/2 form ") + (pt.holds_52 ? "holds" : "fails") +
              ", 2.50637 form " + (pt.holds_alt ? "holds" : "fails"),
          pt.n, pt.ratio, {pt.holds_52, pt.holds_alt}});
      return emit_report(report, "verify rosser", {{"max_n", v.rosser_max}}, vc);
    }

    if (exhaustive->parsed()) {
      pbsq::ProgressFn progress;
      if (sc.extended) {
        progress = [](uint64_t done, uint64_t total) {
          std::fprintf(stderr, "\rscanning... %5.1f%%",
                       100.0 * static_cast<double>(done) / static_cast<double>(total));
          std::fflush(stderr);
        };
      }
      auto scan = pbsq::exhaustive_max_sect(s.j, !s.full, sc.extended, sc.threads, progress);
      if (sc.extended) std::fprintf(stderr, "\rscan complete.      \n");
      json j;
      j["j"] = scan.j;
      j["period"] = scan.period;
      j["formula_mR"] = pbsq::mR_length(s.j);
      j["formula_mQ"] = s.j >= 3 ? pbsq::mQ_length(s.j) : 0;
      j["exhaustive_max"] = scan.max_length;
      j["classes"] = json::array();
      for (const auto& c : scan.classes) {
        j["classes"].push_back({{"start_residue", c.start_residue}, {"labels", c.labels}});
      }
      j["anomaly"] = scan.max_length > std::max(pbsq::mR_length(s.j),
                                                s.j >= 3 ? pbsq::mQ_length(s.j) : 0);
      if (sc.format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "j=" << scan.j << " period=" << scan.period
                  << " exhaustive_max=" << scan.max_length << " classes=" << scan.classes.size()
                  << (j["anomaly"].get<bool>() ? " (anomaly)" : "") << "\n";
      }
      return 0;
    }
    if (construct->parsed()) {
      pbsq::Sect sect = s.kind == "R" ? pbsq::mR_construct(s.j, s.center_swapped)
                                      : pbsq::mQ_construct(s.j);
      if (sc.format == "json") {
        json j{{"j", s.j}, {"kind", s.kind}, {"length", sect.length()}, {"labels", sect.labels}};
        std::cout << j.dump(2) << "\n";
      } else {
        for (size_t i = 0; i < sect.labels.size(); ++i) {
          std::cout << (i ? " " : "") << sect.labels[i];
        }
        std::cout << "\n";
      }
      return 0;
    }
    if (occurrences->parsed()) {
      uint64_t limit = s.limit != 0 ? s.limit : 64 * pbsq::odd_primorial(s.j);
      pbsq::PrimeTable table = make_table(limit, sc);
      auto scan = pbsq::find_sect_occurrences(
          s.j, s.kind == "R" ? pbsq::SectKind::R : pbsq::SectKind::Q, s.count, table);
      json j{{"j", s.j}, {"kind", s.kind}, {"partial", scan.partial}};
      j["found"] = json::array();
      for (const auto& a : scan.found) j["found"].push_back(anchored_to_json(a));
      if (sc.format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& a : scan.found) {
          std::cout << "start=" << a.start << " center=" << a.center;
          if (a.center_multiple != 0) std::cout << " center_multiple=" << a.center_multiple;
          std::cout << (a.reversed ? " (mirrored)" : "") << "\n";
        }
        if (scan.partial) std::cout << "partial: table exhausted\n";
      }
      return scan.partial ? 2 : 0;
    }

    if (pyramid->parsed()) {
      if (py.centers) {
        auto states = pbsq::pyramid_center_states(py.lines);
        if (pc.format == "json") {
          json j = json::array();
          for (const auto& cs : states) {
            j.push_back({{"line", cs.line},
                         {"next", cs.next},
                         {"after", cs.after},
                         {"deep_on_left", cs.deep_on_left},
                         {"rendered", pbsq::render_center_state(cs)}});
          }
          std::cout << j.dump(2) << "\n";
        } else {
          for (const auto& cs : states) std::cout << pbsq::render_center_state(cs) << "\n";
        }
        return 0;
      }
      auto lines = pbsq::pyramid_lines(py.lines);
      if (pc.format == "json") {
        json j = json::array();
        for (const auto& line : lines) {
          j.push_back({{"line", line.line},
                       {"width", line.width},
                       {"rendered", pbsq::render_pyramid_line(line, py.compact)}});
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& line : lines) {
          std::cout << pbsq::render_pyramid_line(line, py.compact) << "\n";
        }
      }
      return 0;
    }

    if (ratchets->parsed()) {
      pbsq::PrimeTable table = make_table(r.horizon + 2000, rc);
      if (rc.format == "csv" && !r.candidates_only) {
        pbsq::ratchet_csv(r.horizon, table, std::cout);
        return 0;
      }
      auto records = r.candidates_only ? pbsq::ratchet_candidates(r.horizon, table)
                                       : pbsq::ratchet_scan(r.horizon, table);
      json j{{"command", "ratchets"}, {"horizon", r.horizon}};
      j["records"] = json::array();
      for (const auto& rec : records) {
        j["records"].push_back({{"p", rec.prime},
                                {"index", rec.index},
                                {"gap", rec.gap},
                                {"k", rec.k},
                                {"candidate", rec.is_candidate}});
      }
      if (r.k) {
        auto scan = pbsq::theorem1b_scan(*r.k, r.horizon, table);
        json t;
        t["k"] = *r.k;
        if (scan.last_violation_index) {
          t["last_violation_index"] = *scan.last_violation_index;
          t["last_violation_prime"] = *scan.last_violation_prime;
        } else {
          t["last_violation_index"] = nullptr;
        }
        t["min_k_prime"] = scan.min_k_prime;
        t["min_k"] = scan.min_k;
        j["theorem1b"] = t;
      }
      if (rc.format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& rec : records) {
          if (r.candidates_only || rec.is_candidate) {
            std::cout << rec.prime << " k=" << pbsq::format_k(rec.k) << " gap=" << rec.gap
                      << "\n";
          }
        }
        if (r.k && j.contains("theorem1b")) {
          const auto& t = j["theorem1b"];
          std::cout << "theorem1b k=" << pbsq::format_double(*r.k) << " last_violation=";
          if (t["last_violation_index"].is_null()) {
            std::cout << "none";
          } else {
            std::cout << "j" << t["last_violation_index"] << " (p="
                      << t["last_violation_prime"] << ")";
          }
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (estimate->parsed()) {
      double maxx = 0;
      for (double x : e.xs) maxx = std::max(maxx, x);
      std::optional<pbsq::PrimeTable> table;
      if (e.with_pi) table = make_table(static_cast<uint64_t>(maxx) + 1, ec);
      if (ec.format == "json") {
        json j = json::array();
        for (double x : e.xs) {
          for (const auto& method : e.methods) {
            auto rep = pbsq::make_estimate(x, method, table ? &*table : nullptr, e.adjust);
            json one{{"x", rep.x}, {"method", rep.method}, {"estimate", rep.estimate},
                     {"reliable", rep.reliable}};
            if (rep.reference) {
              one["pi"] = *rep.reference;
              one["abs_err"] = rep.abs_err;
              one["rel_err"] = rep.rel_err;
            }
            j.push_back(one);
          }
        }
        std::cout << j.dump(2) << "\n";
      } else {
        pbsq::estimate_csv(e.xs, e.methods, table ? &*table : nullptr, std::cout, e.adjust);
      }
      return 0;
    }

    if (modulator->parsed()) {
      if (m.e4) {
        std::cout << "stable states:\n";
        for (int row = 0; row < pbsq::E4Table::kRows; ++row) {
          std::cout << "  " << pbsq::E4Table::row_string(row) << "\n";
        }
        std::cout << "waveforms:\n";
        for (int marker = 1; marker <= pbsq::E4Table::kMarkers; ++marker) {
          std::cout << "  marker " << marker << " = " << pbsq::E4Table::waveform_string(marker)
                    << " -> " << pbsq::E4Table::numeric(marker) << "\n";
        }
        auto holes = pbsq::e4_sieve_holes();
        std::cout << "holes:";
        for (int h : holes.holes) std::cout << " " << h;
        std::cout << "\nspaces yield:";
        for (int p : holes.space_primes) std::cout << " " << p;
        std::cout << "\n";
        return 0;
      }
      for (const auto& line : pbsq::chain_run_rendered(m.cells, m.steps)) {
        std::cout << line << "\n";
      }
      return 0;
    }

    if (conjectures->parsed()) {
      uint64_t limit = std::max<uint64_t>(2 * cj.horizon + 16, 1000);
      pbsq::PrimeTable table = make_table(limit, cc);
      auto reports = pbsq::gap_conjecture_report(cj.horizon, table);
      bool all_pass = true;
      if (cc.format == "json") {
        json j = json::array();
        for (const auto& rep : reports) {
          j.push_back(rep.to_json(!cc.no_meta));
          all_pass = all_pass && rep.pass();
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& rep : reports) {
          all_pass = all_pass && rep.pass();
          std::cout << (rep.is_statistic ? "STAT" : rep.pass() ? "PASS" : "FAIL") << " "
                    << rep.predicate << " (horizon " << rep.horizon
                    << "): " << rep.violations.size() << " violation(s); " << rep.extremal.label
                    << " = " << pbsq::format_double(rep.extremal.value) << " at "
                    << rep.extremal.n << "\n";
        }
      }
      return all_pass ? 0 : 2;
    }
  } catch (const pbsq::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
