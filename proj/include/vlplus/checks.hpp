#pragma once

// The verification suite behind both the CLI and the acceptance runner:
// eleven checks, each an exact integer comparison, grouped by subcommand.

#include <chrono>
#include <cstdint>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"
#include "codes.hpp"
#include "lattice.hpp"
#include "leech.hpp"
#include "qspace.hpp"
#include "voamod.hpp"

namespace vlplus::checks {

struct Options {
  int ld1_order2 = 6;  // truncation for the heavy rank-24 series identities
  lat::EnumBudget budget{};
  std::optional<std::filesystem::path> cache;
  int threads = 1;
};

struct CheckResult {
  std::string id;
  std::string name;
  std::string status;  // "pass" | "fail" | "skipped(resource)"
  std::string computed;
  std::string expected;
  double seconds = 0;
};

namespace detail {

// Shared immutable fixtures, built once per process.
struct Fixtures {
  leech::LeechContext lc;
  leech::USplit us;
  Fixtures() : us(leech::u_split(lc)) {}
};

inline const Fixtures& fix() {
  static Fixtures f;
  return f;
}

inline voa::ModuleContext module_context(const lat::Lattice& l,
                                         const Options& opt) {
  return voa::make_module_context(l, opt.budget, opt.cache);
}

class Check {
 public:
  Check(std::string id, std::string name)
      : res_{std::move(id), std::move(name), "pass", "", "", 0},
        start_(std::chrono::steady_clock::now()) {}

  template <class T>
  void eq(const T& computed, const T& expected, const std::string& what) {
    std::ostringstream c, e;
    c << what << "=" << computed;
    e << what << "=" << expected;
    append(res_.computed, c.str());
    append(res_.expected, e.str());
    if (!(computed == expected)) res_.status = "fail";
  }

  void require(bool ok, const std::string& what) {
    append(res_.computed, what + (ok ? "=true" : "=false"));
    append(res_.expected, what + "=true");
    if (!ok) res_.status = "fail";
  }

  CheckResult finish() {
    res_.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start_)
                       .count();
    return res_;
  }

  void skip_resource() { res_.status = "skipped(resource)"; }

 private:
  static void append(std::string& s, const std::string& part) {
    if (!s.empty()) s += "; ";
    s += part;
  }
  CheckResult res_;
  std::chrono::steady_clock::time_point start_;
};

template <class Body>
CheckResult run_check(const std::string& id, const std::string& name,
                      Body&& body) {
  Check ch(id, name);
  try {
    body(ch);
  } catch (const lat::BudgetExceeded&) {
    ch.skip_resource();
  }
  return ch.finish();
}

inline std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace detail

// 1. Golay code: weight distribution, self-duality, double evenness.
inline CheckResult check_golay(const Options&) {
  return detail::run_check("AC1", "golay code", [&](detail::Check& ch) {
    codes::BinaryCode g = codes::golay24();
    auto wd = codes::weight_enumerator(g);
    std::map<int, long> expect{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    ch.eq(wd.size(), expect.size(), "weight_classes");
    for (auto [w, n] : expect) ch.eq(wd.count(w) ? wd.at(w) : 0L, n, "w" + std::to_string(w));
    ch.require(codes::is_self_dual(g), "self_dual");
    ch.require(codes::is_doubly_even(g), "doubly_even");
  });
}

// 2. Leech lattice shape: det 1, even, rootless, 196560 norm-4 vectors.
inline CheckResult check_leech(const Options& opt) {
  return detail::run_check("AC2", "leech lattice", [&](detail::Check& ch) {
    const lat::Lattice& l = detail::fix().lc.leech;
    ch.eq(l.det(), exact::Rat(1), "det");
    ch.require(lat::is_even(l), "even");
    auto counts =
        lat::coset_norm_counts(l, exact::QVec(24, exact::Rat(0)), 4, opt.budget);
    ch.eq(counts.count(2) ? counts.at(2) : 0, std::uint64_t(0), "norm2");
    ch.eq(counts.at(4), std::uint64_t(196560), "norm4");
  });
}

// 3. Sublattice chain: indices, 2-elementary total evenness, the doubled
// companions both ways, and the dual generators of the index-16 member.
inline CheckResult check_chain(const Options&) {
  return detail::run_check("AC3", "sublattice chain", [&](detail::Check& ch) {
    const auto& c = detail::fix().lc;
    for (int i : {1, 2, 3, 5}) {
      lat::Lattice li = leech::lambda_sub(c, i);
      ch.eq(li.index_in(c.leech), exact::Int(1) << (i - 1),
            "index" + std::to_string(i));
      ch.require(lat::is_even(li) && lat::is_2elementary(li) &&
                     lat::is_totally_even(li),
                 "totally_even" + std::to_string(i));
      ch.require(li == leech::lambda_via_pairing(c, i) &&
                     li == leech::lambda_via_dual(c, i),
                 "both_ways" + std::to_string(i));
    }
    lat::Lattice l5 = leech::lambda_sub(c, 5);
    lat::Lattice dual = l5.dual();
    lat::Lattice expect =
        c.leech + lat::Lattice(leech::leech_frame(), {leech::alpha(1)});
    for (const auto& s : {c.triple.p1, c.triple.p2, c.triple.p3})
      expect = expect + lat::Lattice(leech::leech_frame(),
                                     {leech::alpha(s.tetrad[0], exact::Rat(1, 2))});
    ch.require(dual == expect, "dual_generators");
    ch.eq(l5.index_in(dual), exact::Int(256), "dual_index");
  });
}

// 4. Octad split: indices and the two theta fingerprints.
inline CheckResult check_usplit(const Options& opt) {
  return detail::run_check("AC4", "octad split", [&](detail::Check& ch) {
    const auto& f = detail::fix();
    ch.eq(f.us.u.index_in(f.lc.leech), exact::Int(256), "leech_over_u");
    ch.eq(f.lc.leech.scaled(2).index_in(f.us.u), exact::Int(65536), "u_over_2leech");
    exact::QVec z24(24, exact::Rat(0));
    for (const auto* p : {&f.us.u1, &f.us.u2}) {
      const lat::Lattice& u = *p;
      std::string tag = u.rank() == 8 ? "u1_" : "u2_";
      ch.eq(u.det(), exact::Rat(256), tag + "det");
      qs::QSeries th = lat::theta_series(u, z24, 4, opt.budget);
      ch.eq(th.coeff2(2), qs::Int(0), tag + "roots");
      ch.eq(th.coeff2(4), qs::Int(u.rank() == 8 ? 240 : 4320), tag + "norm4");
    }
    // reference sqrt2 E8 in a doubled frame
    exact::QMat rows{{1, 1, 0, 0, 0, 0, 0, 0}};
    for (int i = 0; i < 7; ++i) {
      exact::QVec r(8, exact::Rat(0));
      r[i] = 1;
      r[i + 1] = -1;
      rows.push_back(r);
    }
    rows.push_back(exact::QVec(8, exact::Rat(1, 2)));
    lat::Lattice se8(lat::Frame{8, 2}, rows);
    ch.require(lat::theta_series(f.us.u1, z24, 8, opt.budget) ==
                   lat::theta_series(se8, exact::QVec(8, exact::Rat(0)), 8,
                                     opt.budget),
               "u1_matches_reference");
    lat::Lattice bw = lat::construction_b(codes::reed_muller1(4),
                                          lat::Frame{16, exact::Rat(1, 32)});
    ch.require(lat::theta_series(f.us.u2, z24, 8, opt.budget) ==
                   lat::theta_series(bw, exact::QVec(16, exact::Rat(0)), 8,
                                     opt.budget),
               "u2_matches_construction_b");
  });
}

// 5. The ten-dimensional plus-type quadratic space: counts, transitivity,
// Dickson additivity, and the group order recursion.
inline CheckResult check_qspace(const Options&) {
  return detail::run_check("AC5", "quadratic space", [&](detail::Check& ch) {
    qspace::QuadSpace s = qspace::standard_space(10, +1);
    ch.eq(qspace::totally_singular_subspaces(s, 1).size(), std::size_t(527),
          "singular_lines");
    auto refl = qspace::reflection_generators(s);
    ch.eq(refl.size(), std::size_t(496), "reflections");
    cls::Census full = cls::extension_census(s, refl, 5);
    cls::Census half = cls::extension_census(s, qspace::omega_generators(s), 5);
    ch.eq(full.rows[5].subspaces, std::size_t(4590), "maximal_subspaces");
    for (int d = 1; d <= 5; ++d)
      ch.eq(full.rows[d].orbit_sizes.size(), std::size_t(1),
            "full_orbits_dim" + std::to_string(d));
    for (int d = 1; d <= 4; ++d)
      ch.eq(half.rows[d].orbit_sizes.size(), std::size_t(1),
            "half_orbits_dim" + std::to_string(d));
    ch.eq(detail::join_sizes(half.rows[5].orbit_sizes), std::string("2295,2295"),
          "half_orbits_dim5");
    // Dickson invariant is additive on 10^4 random pairs
    std::mt19937 rng(2024);
    auto nons = qspace::nonsingular_vectors(s);
    auto random_elt = [&] {
      f2::Matrix g = qspace::reflection(s, nons[rng() % nons.size()]);
      for (int k = 0; k < 4; ++k)
        g = f2::mul(g, qspace::reflection(s, nons[rng() % nons.size()]));
      return g;
    };
    bool additive = true;
    for (int t = 0; t < 10000; ++t) {
      f2::Matrix a = random_elt(), b = random_elt();
      if (qspace::dickson(f2::mul(a, b)) !=
          (qspace::dickson(a) ^ qspace::dickson(b)))
        additive = false;
    }
    ch.require(additive, "dickson_additive");
    // Witt-style recursion agrees with the closed-form order
    for (int m = 1; m <= 5; ++m)
      for (int eps : {+1, -1})
        ch.require(qspace::group_order_from_space(
                       qspace::standard_space(2 * m, eps)) ==
                       qspace::orthogonal_group_order(m, eps),
                   "order_m" + std::to_string(m) + (eps > 0 ? "p" : "m"));
  });
}

// 6. Module labels: counts, type, invariance of the grading, orbit shadow.
inline CheckResult check_labels(const Options& opt) {
  return detail::run_check("AC6", "module labels", [&](detail::Check& ch) {
    const auto& f = detail::fix();
    for (const auto* lp : {&f.us.u1, &f.us.u2}) {
      voa::ModuleContext c = detail::module_context(*lp, opt);
      std::string tag = c.n == 8 ? "u1_" : "u2_";
      voa::LabeledQSpace ls = voa::labeled_space(c);
      ch.eq(ls.labels.size(), std::size_t(1024), tag + "labels");
      ch.eq(ls.singular_count, std::size_t(528), tag + "singular");
      ch.eq(ls.type, +1, tag + "type");
      std::mt19937 rng(5);
      bool inv = true;
      for (int t = 0; t < 50 && inv; ++t) {
        exact::QVec beta(c.l.dim(), exact::Rat(0));
        for (int i = 0; i < c.n; ++i)
          if (rng() & 1)
            for (int j = 0; j < c.l.dim(); ++j)
              beta[j] += c.disc.dual.basis()[i][j];
        auto p = voa::shift_action(c, beta);
        for (std::size_t idx = 0; idx < p.size(); ++idx)
          if (ls.qval[p[idx]] != ls.qval[idx]) inv = false;
      }
      ch.require(inv, tag + "shift_invariance");
    }
    // committed generators and the orbit shadow on the rank-8 side
    voa::ModuleContext c8 = detail::module_context(f.us.u1, opt);
    voa::LabeledQSpace l8 = voa::labeled_space(c8);
    std::vector<lat::Isometry> refl;
    for (const auto& v : lat::vectors_of_norm(
             c8.l, exact::QVec(24, exact::Rat(0)), 4, opt.budget))
      refl.push_back(lat::reflection_in(c8.l.frame(), v));
    bool iso_inv = true;
    for (std::size_t k = 0; k < refl.size(); k += 37) {
      auto p = voa::isometry_action(c8, refl[k]);
      for (std::size_t idx = 0; idx < p.size(); ++idx)
        if (l8.qval[p[idx]] != l8.qval[idx]) iso_inv = false;
    }
    ch.require(iso_inv, "isometry_invariance");
    voa::OrbitShadow sh = voa::orbit_shadow(c8, l8, refl);
    ch.eq(detail::join_sizes(sh.shadow_sizes), std::string("1,527,496"),
          "shadow_sizes");
    ch.require(sh.refines, "orbits_refine_shadow");
    ch.require(sh.under_generated, "under_generation_reported");
  });
}

// 7. Leading terms of the four distinguished characters.
inline CheckResult check_characters(const Options& opt) {
  return detail::run_check("AC7", "leading terms", [&](detail::Check& ch) {
    const auto& f = detail::fix();
    voa::ModuleContext c8 = detail::module_context(f.us.u1, opt);
    voa::ModuleContext c16 = detail::module_context(f.us.u2, opt);
    qs::QSeries a = voa::character(c8, {0, -1, false}, 6);
    ch.eq(a.leading_exp2(), 2, "rank8_minus_lead");
    ch.eq(a.coeff2(2), qs::Int(8), "rank8_minus_coeff");
    qs::QSeries b = voa::character(c8, {0, +1, true}, 6);
    ch.eq(b.leading_exp2(), 1, "rank8_twisted_lead");
    ch.eq(b.coeff2(1), qs::Int(1), "rank8_twisted_coeff");
    qs::QSeries c = voa::character(c16, {0, -1, false}, 6);
    ch.eq(c.leading_exp2(), 2, "rank16_minus_lead");
    ch.eq(c.coeff2(2), qs::Int(16), "rank16_minus_coeff");
    qs::QSeries d = voa::character(c16, {0, -1, true}, 6);
    ch.eq(d.leading_exp2(), 3, "rank16_twisted_lead");
    ch.eq(d.coeff2(3), qs::Int(256), "rank16_twisted_coeff");
  });
}

// 8. Decomposition identities over the sublattice chain and the octad split.
inline CheckResult check_decompositions(const Options& opt) {
  return detail::run_check("AC8", "decompositions", [&](detail::Check& ch) {
    const auto& f = detail::fix();
    auto untw = [&](int i) {
      return voa::untwisted_decomposition(f.lc, i, opt.ld1_order2, opt.budget,
                                          opt.cache);
    };
    if (opt.threads > 1) {
      std::vector<std::future<voa::DecompReport>> futs;
      for (int i : {2, 3, 5})
        futs.push_back(std::async(std::launch::async, untw, i));
      int idx = 0;
      for (int i : {2, 3, 5})
        ch.require(futs[idx++].get().ok, "untwisted_i" + std::to_string(i));
    } else {
      for (int i : {2, 3, 5})
        ch.require(untw(i).ok, "untwisted_i" + std::to_string(i));
    }
    for (int i : {2, 3, 5})
      ch.require(voa::twisted_decomposition(f.lc, i, 8).ok,
                 "twisted_i" + std::to_string(i));
    voa::ModuleContext c8 = detail::module_context(f.us.u1, opt);
    voa::ModuleContext c16 = detail::module_context(f.us.u2, opt);
    ch.require(voa::split_decomposition(f.lc, f.us, c8, c16, 4).ok,
               "octad_split");
  });
}

// 9. Pair labels of the octad split.
inline CheckResult check_pairs(const Options& opt) {
  return detail::run_check("AC9", "pair labels", [&](detail::Check& ch) {
    const auto& f = detail::fix();
    voa::ModuleContext c8 = detail::module_context(f.us.u1, opt);
    voa::ModuleContext c16 = detail::module_context(f.us.u2, opt);
    voa::PairedLabels pl = voa::paired_labels(f.lc, f.us, c8, c16);
    ch.eq(pl.labels.size(), std::size_t(1024), "labels");
    ch.require(pl.q_consistent, "gradings_agree");
    ch.eq(pl.singular_count, std::size_t(528), "singular");
    ch.eq(pl.type, +1, "type");
  });
}

// 10. Extension census: 6 classes under the full group, 7 under the
// index-two subgroup, matching the overlattice fingerprints.
inline CheckResult check_census(const Options&) {
  return detail::run_check("AC10", "extension census", [&](detail::Check& ch) {
    const auto& f = detail::fix();
    qspace::QuadSpace s = qspace::standard_space(10, +1);
    cls::Census full = cls::extension_census(s, qspace::reflection_generators(s), 5);
    cls::Census half = cls::extension_census(s, qspace::omega_generators(s), 5);
    std::vector<std::size_t> fc, hc;
    for (const auto& row : full.rows) fc.push_back(row.orbit_sizes.size());
    for (const auto& row : half.rows) hc.push_back(row.orbit_sizes.size());
    ch.eq(detail::join_sizes(fc), std::string("1,1,1,1,1,1"), "full_per_dim");
    ch.eq(full.total_orbits, std::size_t(6), "full_total");
    ch.eq(detail::join_sizes(hc), std::string("1,1,1,1,1,2"), "half_per_dim");
    ch.eq(half.total_orbits, std::size_t(7), "half_total");
    ch.eq(detail::join_sizes(half.rows[5].orbit_sizes), std::string("2295,2295"),
          "half_dim5_sizes");
    auto fp1 = cls::fingerprint_classes(cls::even_overlattices(f.us.u1, 4));
    auto fp2 = cls::fingerprint_classes(cls::even_overlattices(f.us.u2, 4));
    ch.eq(fp1.size(), std::size_t(1), "rank8_overlattice_classes");
    ch.eq(fp1.count("det=1|E8"), std::size_t(1), "rank8_all_e8");
    ch.eq(fp2.size(), std::size_t(2), "rank16_overlattice_classes");
    ch.eq(fp2.count("det=1|E8|E8") + fp2.count("det=1|D16"), std::size_t(2),
          "rank16_e8e8_and_d16");
  });
}

// Census restricted to one side, for the classify subcommand.
inline CheckResult check_census_side(const Options&, const std::string& side) {
  return detail::run_check("AC10." + side, "extension census (" + side + ")",
                           [&](detail::Check& ch) {
    const auto& f = detail::fix();
    qspace::QuadSpace s = qspace::standard_space(10, +1);
    bool full = side == "sqrt2e8";
    cls::Census c = cls::extension_census(
        s, full ? qspace::reflection_generators(s) : qspace::omega_generators(s),
        5);
    std::vector<std::size_t> per_dim;
    for (const auto& row : c.rows) per_dim.push_back(row.orbit_sizes.size());
    ch.eq(detail::join_sizes(per_dim),
          std::string(full ? "1,1,1,1,1,1" : "1,1,1,1,1,2"), "per_dim");
    ch.eq(c.total_orbits, std::size_t(full ? 6 : 7), "total");
    auto fp = cls::fingerprint_classes(
        cls::even_overlattices(full ? f.us.u1 : f.us.u2, 4));
    ch.eq(fp.size(), std::size_t(full ? 1 : 2), "overlattice_classes");
  });
}

// 11. Amalgam indices over F2.
inline CheckResult check_amalgam(const Options&) {
  return detail::run_check("AC11", "amalgam indices", [&](detail::Check& ch) {
    ch.eq(detail::join_sizes(cls::amalgam_indices()), std::string("3,7,7,21"),
          "indices");
  });
}

inline std::vector<CheckResult> run_golay(const Options& opt) {
  return {check_golay(opt)};
}

inline std::vector<CheckResult> run_leechlab(const Options& opt) {
  return {check_leech(opt), check_chain(opt), check_usplit(opt)};
}

inline std::vector<CheckResult> run_qspace(const Options& opt) {
  return {check_qspace(opt)};
}

inline std::vector<CheckResult> run_voamod(const Options& opt) {
  return {check_labels(opt), check_characters(opt), check_decompositions(opt),
          check_pairs(opt)};
}

inline std::vector<CheckResult> run_classify(const Options& opt) {
  return {check_census(opt), check_amalgam(opt)};
}

inline std::vector<CheckResult> run_all(const Options& opt) {
  std::vector<CheckResult> out;
  for (auto&& batch : {run_golay(opt), run_leechlab(opt), run_qspace(opt),
                       run_voamod(opt), run_classify(opt)})
    out.insert(out.end(), batch.begin(), batch.end());
  return out;
}

}  // namespace vlplus::checks
