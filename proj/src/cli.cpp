#include "bierkit/cli.hpp"

#include <atomic>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bierkit/bier.hpp"
#include "bierkit/errors.hpp"
#include "bierkit/gvec.hpp"
#include "bierkit/multiplex.hpp"
#include "bierkit/polynomial.hpp"
#include "bierkit/poset.hpp"
#include "bierkit/poset_io.hpp"
#include "bierkit/shelling.hpp"
#include "bierkit/toric.hpp"
#include "bierkit/verify.hpp"

namespace bierkit {

namespace {

int exit_code_for(errc code) {
  switch (code) {
    case errc::too_large:
    case errc::too_many:
    case errc::degree_too_high:
      return 3;
    case errc::not_lower_eulerian:
    case errc::definition_mismatch:
    case errc::eulerian_violation:
    case errc::closed_form_mismatch:
    case errc::witness_mismatch:
    case errc::pattern_ambiguous:
      return 1;
    default:
      return 2;
  }
}

const char* verdict(bool ok) { return ok ? "ok" : "fail"; }
const char* boolean(bool b) { return b ? "true" : "false"; }

IdealSet load_ideal(const Poset& base, const std::string& path) {
  return validate_ideal(base, read_ideal_file(path));
}

int run_multiplex(int d, int n, bool with_top, const std::string& out_path, std::ostream& err) {
  MultiplexModel m = build_multiplex(d, n);
  std::string name = "M_" + std::to_string(d) + "_" + std::to_string(n);
  if (with_top)
    write_poset_file(out_path, name, m.lattice);
  else
    write_poset_file(out_path, "boundary_" + name, boundary(m));
  err << "wrote " << out_path << "\n";
  return 0;
}

int run_census(int d, int n, std::ostream& out) {
  MultiplexModel m = build_multiplex(d, n);
  out << "f =";
  for (int r = 1; r <= d; ++r) out << " " << m.lattice.elements_of_rank(r).size();
  out << "\n";
  out << "quads = " << quad_2faces(m).size() << "\n";
  const bool sd = verify_self_dual(m).isomorphic;
  out << "selfdual = " << verdict(sd) << "\n";
  const bool fp = verify_flag_pyramid(m);
  out << "flagpyramid = " << verdict(fp) << "\n";
  return (sd && fp) ? 0 : 1;
}

int run_toric_g(const std::string& path, std::ostream& out) {
  NamedPoset np = read_poset_file(path);
  out << "f = " << to_string(toric_f(np.poset)) << "\n";
  out << "h = " << to_string(toric_h(np.poset)) << "\n";
  out << "g = " << to_string(toric_g(np.poset)) << "\n";
  return 0;
}

int run_bier(const std::string& poset_path, const std::string& ideal_path,
             const std::string& out_path, std::ostream& err) {
  NamedPoset np = read_poset_file(poset_path);
  IdealSet ideal = load_ideal(np.poset, ideal_path);
  BierModel model = build_bier(np.poset, ideal);
  write_poset_file(out_path, "bier_" + np.name, model.poset);
  err << "wrote " << out_path << " (" << model.poset.size() << " elements)\n";
  return 0;
}

int run_ideals(const std::string& poset_path, int force_rank, bool count_only, bool enumerate,
               long long sample, std::uint64_t seed, std::size_t cap, std::ostream& out) {
  const int modes = (count_only ? 1 : 0) + (enumerate ? 1 : 0) + (sample >= 0 ? 1 : 0);
  require(modes == 1, errc::bad_parameters,
          "choose exactly one of --count, --enumerate, --sample");
  NamedPoset np = read_poset_file(poset_path);
  if (sample >= 0) {
    for (std::uint64_t mask :
         sample_forced_ideal_masks(np.poset, force_rank, static_cast<std::size_t>(sample), seed))
      out << mask_to_hex(mask) << "\n";
    return 0;
  }
  ForcedIdealFamily family = enumerate_forced_ideals(np.poset, force_rank, cap);
  if (count_only) {
    out << family.masks.size() << "\n";
    return 0;
  }
  for (std::uint64_t mask : family.masks) out << mask_to_hex(mask) << "\n";
  return 0;
}

int run_verify_eulerian(const std::string& path, std::ostream& out) {
  NamedPoset np = read_poset_file(path);
  EulerianReport rep = is_eulerian(np.poset);
  if (rep.ok) {
    out << "ok\n";
    return 0;
  }
  out << "fail: interval [" << np.poset.label(rep.witness.first) << ", "
      << np.poset.label(rep.witness.second) << "] is unbalanced\n";
  return 1;
}

int run_verify_gorenstein(const std::string& path, bool full_links, std::ostream& out) {
  NamedPoset np = read_poset_file(path);
  GorensteinReport rep = is_gorenstein_star(np.poset, 2, full_links);
  if (rep.ok) {
    out << "ok\n";
    return 0;
  }
  out << "fail: " << rep.detail << "\n";
  return 1;
}

int run_verify_selfdual(const std::string& path, std::ostream& out) {
  NamedPoset np = read_poset_file(path);
  IsoResult iso = is_isomorphic(np.poset, dual(np.poset));
  if (iso.isomorphic) {
    out << "ok\n";
    return 0;
  }
  out << "fail: poset is not isomorphic to its dual\n";
  return 1;
}

int run_verify_el(const std::string& path, const std::string& labels_path,
                  unsigned long long max_steps, std::ostream& out) {
  NamedPoset np = read_poset_file(path);
  EdgeLabeling labeling;
  labeling.labels = read_labels_file(labels_path);
  ELReport rep = verify_el(np.poset, labeling, max_steps);
  if (rep.ok) {
    out << "ok\n";
    return 0;
  }
  out << "fail: " << rep.detail << "\n";
  return 1;
}

int run_delta(int d, int n, const std::string& ideal_path, int element, std::ostream& out) {
  MultiplexModel m = build_multiplex(d, n);
  IdealSet ideal = load_ideal(boundary(m), ideal_path);
  DeltaReport dh = delta_h_check(m.lattice, ideal, element);
  out << "delta_h = " << to_string(dh.delta_h) << "\n";
  out << "product_rule = " << to_string(dh.rhs) << "\n";
  out << "match = " << boolean(dh.match) << "\n";
  DeltaGReport dg = delta_g_multiplex(m.lattice, ideal, element, true);
  out << "delta_g = " << to_string(dg.recursion) << "\n";
  if (dg.in_range) {
    out << "closed_form = " << to_string(dg.closed_form) << "\n";
    out << "closed_form_match = " << boolean(dg.match) << "\n";
  }
  return (dh.match && (!dg.in_range || dg.match)) ? 0 : 1;
}

int run_gbier(int d, int n, const std::string& ideal_path, bool closed_form, bool recursion,
              std::ostream& out) {
  MultiplexModel m = build_multiplex(d, n);
  IdealSet ideal = load_ideal(boundary(m), ideal_path);
  const bool both = (closed_form == recursion);
  if (recursion && !closed_form) {
    out << "g_recursion = " << to_string(toric_g(build_bier_topped(m.lattice, ideal).poset))
        << "\n";
    return 0;
  }
  ClosedFormReport rep = g_bier_closed_form(m, ideal);
  if (both) out << "g_recursion = " << to_string(rep.recursion) << "\n";
  out << "g_closed_form = " << to_string(rep.closed_form) << "\n";
  if (both) {
    out << "rank_condition = " << boolean(rep.rank_condition) << "\n";
    out << "match = " << boolean(rep.match) << "\n";
  }
  return (rep.match || !rep.rank_condition) ? 0 : 1;
}

int run_mseq(const std::string& vector_arg, std::ostream& out) {
  std::vector<BigInt> v;
  std::istringstream ss(vector_arg);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    require(first != std::string::npos, errc::parse_error, "empty entry in --vector");
    token = token.substr(first, last - first + 1);
    try {
      v.emplace_back(token);
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad integer in --vector: " + token);
    }
  }
  require(!v.empty(), errc::parse_error, "--vector is empty");
  const bool ok = is_m_sequence(v);
  out << "mseq = " << boolean(ok) << "\n";
  if (ok) return 0;
  if (v[0] != 1) {
    out << "violation: v[0] = " << v[0].str() << " (an M-sequence starts with 1)\n";
    return 1;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0) {
      out << "violation: v[" << i << "] = " << v[i].str() << " is negative\n";
      return 1;
    }
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    BigInt bound = macaulay_next_bound(v[i], static_cast<int>(i));
    if (v[i + 1] > bound) {
      out << "violation: v[" << (i + 1) << "] = " << v[i + 1].str() << " exceeds the bound "
          << bound.str() << " allowed after v[" << i << "] = " << v[i].str() << "\n";
      return 1;
    }
  }
  return 1;
}

int run_el_build(int d, int n, const std::string& ideal_path, const std::string& out_poset,
                 const std::string& out_labels, std::ostream& err) {
  MultiplexModel m = build_multiplex(d, n);
  const std::string name = "M_" + std::to_string(d) + "_" + std::to_string(n);
  if (ideal_path.empty()) {
    write_poset_file(out_poset, name, m.lattice);
    write_labels_file(out_labels, label_multiplex(m).labels);
  } else {
    QModel q = build_q(m, load_ideal(boundary(m), ideal_path));
    write_poset_file(out_poset, "Q_" + name, q.poset);
    write_labels_file(out_labels, q.labeling.labels);
  }
  err << "wrote " << out_poset << " and " << out_labels << "\n";
  return 0;
}

struct SweepLine {
  std::string text;
  bool ok = false;
  bool nonneg_ok = false, mseq_ok = false, cf_ok = false, eul_ok = false, meet_ok = false;
  bool has_error = false;
  errc code = errc::internal_check;
  std::string error;
};

SweepLine sweep_one(const MultiplexModel& m, const Poset& base, const ForcedIdealFamily& family,
                    std::uint64_t mask) {
  SweepLine line;
  try {
    IdealSet ideal = ideal_from_mask(base, family, mask);
    BierModel bier = build_bier_topped(m.lattice, ideal);
    IntPolynomial g;
    bool cf_ok = true;
    try {
      ClosedFormReport rep = g_bier_closed_form(m, ideal);
      g = rep.recursion;
      cf_ok = rep.match;
    } catch (const Error& e) {
      if (e.code() != errc::closed_form_mismatch) throw;
      cf_ok = false;
      g = toric_g(bier.poset);
    }
    line.nonneg_ok = nonneg(g);
    line.mseq_ok = is_m_sequence(g.coeffs());
    line.cf_ok = cf_ok;
    line.eul_ok = is_eulerian(adjoin_top(bier.poset, "1")).ok;
    line.meet_ok = is_meet_semilattice(bier.poset).ok;
    line.ok = line.nonneg_ok && line.mseq_ok && line.cf_ok && line.eul_ok && line.meet_ok;
    line.text = "ideal=" + mask_to_hex(mask) + " g=" + to_string(g) +
                " nonneg=" + boolean(line.nonneg_ok) + " mseq=" + boolean(line.mseq_ok) +
                " closedform=" + (cf_ok ? "ok" : "mismatch");
  } catch (const Error& e) {
    line.has_error = true;
    line.code = e.code();
    line.error = e.what();
  }
  return line;
}

int run_sweep(int d, int n, long long sample, std::uint64_t seed, const std::string& report_path,
              std::ostream& out) {
  MultiplexModel m = build_multiplex(d, n);
  Poset base = boundary(m);
  const int force_rank = (d + 1) / 2 + 1;
  ForcedIdealFamily family = enumerate_forced_ideals(base, force_rank);
  std::vector<std::uint64_t> masks =
      sample >= 0
          ? sample_forced_ideal_masks(base, force_rank, static_cast<std::size_t>(sample), seed)
          : family.masks;

  std::vector<SweepLine> results(masks.size());
  std::atomic<std::size_t> cursor{0};
  std::size_t nthreads = std::thread::hardware_concurrency();
  if (nthreads == 0) nthreads = 1;
  nthreads = std::min(std::min(nthreads, masks.size()), static_cast<std::size_t>(8));
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < nthreads; ++i)
    pool.emplace_back([&] {
      for (std::size_t k; (k = cursor.fetch_add(1)) < masks.size();)
        results[k] = sweep_one(m, base, family, masks[k]);
    });
  for (std::thread& t : pool) t.join();

  for (const SweepLine& line : results)
    if (line.has_error) throw Error(line.code, line.error);

  std::ofstream file(report_path);
  require(file.good(), errc::io_error, "cannot open report file: " + report_path);
  std::size_t ok = 0, nn = 0, ms = 0, cf = 0, eu = 0, me = 0;
  for (const SweepLine& line : results) {
    file << line.text << "\n";
    ok += line.ok;
    nn += line.nonneg_ok;
    ms += line.mseq_ok;
    cf += line.cf_ok;
    eu += line.eul_ok;
    me += line.meet_ok;
  }
  std::ostringstream summary;
  summary << "summary: ideals=" << results.size() << " nonneg=" << nn << " mseq=" << ms
          << " closedform=" << cf << " eulerian=" << eu << " meetsemilattice=" << me;
  file << summary.str() << "\n";
  file.flush();
  require(file.good(), errc::io_error, "failed writing report file: " + report_path);
  out << summary.str() << "\n";
  return ok == results.size() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"multiplex face lattices, Bier posets, toric g-vectors"};
  app.require_subcommand(1);

  int d = 0, n = 0, force_rank = 0, element = -1;
  bool with_top = false, count_only = false, enumerate = false;
  bool full_links = false, closed_form = false, recursion = false;
  long long sample = -1;
  std::uint64_t seed = 0;
  std::size_t ideal_cap = std::size_t{1} << 20;
  unsigned long long max_steps = 400000000ULL;
  std::string poset_path, ideal_path, labels_path, out_path, out_poset, out_labels, report_path;
  std::string vector_arg;

  CLI::App* sc_multiplex = app.add_subcommand("multiplex", "write a multiplex face poset");
  sc_multiplex->add_option("--d", d)->required();
  sc_multiplex->add_option("--n", n)->required();
  sc_multiplex->add_flag("--top", with_top, "include the top element");
  sc_multiplex->add_option("--out", out_path)->required();

  CLI::App* sc_census = app.add_subcommand("census", "face counts and structure verdicts");
  sc_census->add_option("--d", d)->required();
  sc_census->add_option("--n", n)->required();

  CLI::App* sc_toric = app.add_subcommand("toric-g", "toric f, h and g of a poset");
  sc_toric->add_option("--poset", poset_path)->required();

  CLI::App* sc_bier = app.add_subcommand("bier", "write the Bier poset of (poset, ideal)");
  sc_bier->add_option("--poset", poset_path)->required();
  sc_bier->add_option("--ideal", ideal_path)->required();
  sc_bier->add_option("--out", out_path)->required();

  CLI::App* sc_ideals = app.add_subcommand("ideals", "forced ideal families");
  sc_ideals->add_option("--poset", poset_path)->required();
  sc_ideals->add_option("--force-rank", force_rank)->required();
  sc_ideals->add_flag("--count", count_only, "print only the family size");
  sc_ideals->add_flag("--enumerate", enumerate, "print every mask");
  sc_ideals->add_option("--sample", sample, "print this many sampled masks");
  sc_ideals->add_option("--seed", seed);
  sc_ideals->add_option("--cap", ideal_cap, "enumeration cap");

  CLI::App* sc_verify = app.add_subcommand("verify", "property checks");
  sc_verify->require_subcommand(1);
  CLI::App* sv_eulerian = sc_verify->add_subcommand("eulerian", "interval balance");
  sv_eulerian->add_option("--poset", poset_path)->required();
  CLI::App* sv_gorenstein = sc_verify->add_subcommand("gorenstein", "sphere surrogate");
  sv_gorenstein->add_option("--poset", poset_path)->required();
  sv_gorenstein->add_flag("--full-links", full_links, "check links of all faces");
  CLI::App* sv_selfdual = sc_verify->add_subcommand("selfdual", "isomorphism with the dual");
  sv_selfdual->add_option("--poset", poset_path)->required();
  CLI::App* sv_el = sc_verify->add_subcommand("el", "lexicographic shelling conditions");
  sv_el->add_option("--poset", poset_path)->required();
  sv_el->add_option("--labels", labels_path)->required();
  sv_el->add_option("--max-steps", max_steps, "chain enumeration cap");

  CLI::App* sc_delta = app.add_subcommand("delta", "local-move difference polynomials");
  sc_delta->add_option("--d", d)->required();
  sc_delta->add_option("--n", n)->required();
  sc_delta->add_option("--ideal", ideal_path)->required();
  sc_delta->add_option("--element", element)->required();

  CLI::App* sc_gbier = app.add_subcommand("gbier", "g of a Bier poset over a multiplex");
  sc_gbier->add_option("--d", d)->required();
  sc_gbier->add_option("--n", n)->required();
  sc_gbier->add_option("--ideal", ideal_path)->required();
  sc_gbier->add_flag("--closed-form", closed_form, "print only the closed form");
  sc_gbier->add_flag("--recursion", recursion, "print only the recursion");

  CLI::App* sc_mseq = app.add_subcommand("mseq", "Macaulay growth test");
  sc_mseq->add_option("--vector", vector_arg, "comma-separated entries")->required();

  CLI::App* sc_el_build = app.add_subcommand("el-build", "write a labeled poset");
  sc_el_build->add_option("--d", d)->required();
  sc_el_build->add_option("--n", n)->required();
  sc_el_build->add_option("--ideal", ideal_path);
  sc_el_build->add_option("--out-poset", out_poset)->required();
  sc_el_build->add_option("--out-labels", out_labels)->required();

  CLI::App* sc_sweep = app.add_subcommand("sweep", "forced-ideal report over a multiplex");
  sc_sweep->add_option("--d", d)->required();
  sc_sweep->add_option("--n", n)->required();
  sc_sweep->add_option("--sample", sample, "sample size (default: exhaustive)");
  sc_sweep->add_option("--seed", seed);
  sc_sweep->add_option("--report", report_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sc_multiplex->parsed()) return run_multiplex(d, n, with_top, out_path, err);
    if (sc_census->parsed()) return run_census(d, n, out);
    if (sc_toric->parsed()) return run_toric_g(poset_path, out);
    if (sc_bier->parsed()) return run_bier(poset_path, ideal_path, out_path, err);
    if (sc_ideals->parsed())
      return run_ideals(poset_path, force_rank, count_only, enumerate, sample, seed, ideal_cap,
                        out);
    if (sv_eulerian->parsed()) return run_verify_eulerian(poset_path, out);
    if (sv_gorenstein->parsed()) return run_verify_gorenstein(poset_path, full_links, out);
    if (sv_selfdual->parsed()) return run_verify_selfdual(poset_path, out);
    if (sv_el->parsed()) return run_verify_el(poset_path, labels_path, max_steps, out);
    if (sc_delta->parsed()) return run_delta(d, n, ideal_path, element, out);
    if (sc_gbier->parsed()) return run_gbier(d, n, ideal_path, closed_form, recursion, out);
    if (sc_mseq->parsed()) return run_mseq(vector_arg, out);
    if (sc_el_build->parsed()) return run_el_build(d, n, ideal_path, out_poset, out_labels, err);
    if (sc_sweep->parsed()) return run_sweep(d, n, sample, seed, report_path, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    const int rc = exit_code_for(e.code());
    if (rc == 1)
      out << "fail: " << e.what() << "\n";
    else
      err << "error: " << e.what() << "\n";
    return rc;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bierkit
